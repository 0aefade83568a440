#include "tracealg/cli.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "tracealg/gl2.hpp"
#include "tracealg/hilbert.hpp"
#include "tracealg/parser.hpp"
#include "tracealg/relations.hpp"
#include "tracealg/rewriter.hpp"

namespace tracealg::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Input rejected before any computation; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

const std::vector<std::string> kSuites{"all", "cayley-hamilton", "lemmas", "defining-relation", "groebner"};
const std::vector<std::string> kAlgebras{"C32", "T32", "C0", "T0"};

std::vector<std::string> suite_members(const std::string& suite) {
  if (suite == "cayley-hamilton") return {"cayley-hamilton", "degree-3-linearizations"};
  if (suite == "lemmas") return {"hwv-31", "hwv-22", "hwv-41", "hwv-32", "hwv-43", "degree-4", "degree-6"};
  if (suite == "defining-relation") return {"defining-relation", "w3pp-delta-sum"};
  if (suite == "groebner") return {"groebner"};
  std::vector<std::string> all;
  for (const auto& s : {"cayley-hamilton", "lemmas", "defining-relation", "groebner"}) {
    for (auto& m : suite_members(s)) all.push_back(std::move(m));
  }
  return all;
}

Json bidegree_json(const Bidegree& b) { return Json::array({b.x, b.y}); }

Json modules_json(const ModuleMultiset& m) {
  Json out = Json::array();
  for (auto it = m.entries().rbegin(); it != m.entries().rend(); ++it) {
    out.push_back({{"partition", Json::array({it->first.l1, it->first.l2})}, {"multiplicity", it->second}});
  }
  return out;
}

Json groebner_check(const GroebnerReport& r, std::ostringstream& log) {
  Json j;
  j["name"] = "groebner";
  j["status"] = r.pass ? "pass" : "fail";
  std::string residual = "0";
  if (!r.nonzero_images.empty()) {
    residual = "nonzero image of " + r.nonzero_images.front();
  } else if (r.first_mismatch) {
    residual = "census " + to_string(r.census_count) + " vs series " + to_string(r.series_count) + " at " +
               to_string(*r.first_mismatch);
  }
  j["residual"] = residual;
  j["nonzero_images"] = r.nonzero_images;
  j["census_ok"] = r.census_ok;
  j["first_mismatch"] = r.first_mismatch ? bidegree_json(*r.first_mismatch) : Json(nullptr);
  j["normal_word_count"] = r.normal_word_count;
  j["details"] = r.details;
  log << "groebner: " << (r.pass ? "pass" : "fail") << "\n";
  for (const auto& d : r.details) log << "  " << d << "\n";
  return j;
}

Outcome cmd_verify(const std::string& suite, int max_degree, std::ostringstream& log) {
  Outcome out;
  Json checks = Json::array();
  bool pass = true;
  std::string residual = "0";
  for (const auto& name : suite_members(suite)) {
    Json check;
    bool ok = false;
    if (name == "groebner") {
      const auto report = verify_groebner(max_degree);
      check = groebner_check(report, log);
      ok = report.pass;
    } else {
      const auto r = run_relation_suite(name);
      ok = r.pass;
      check["name"] = r.name;
      check["status"] = r.pass ? "pass" : "fail";
      check["residual"] = r.residual;
      check["details"] = r.details;
      log << r.name << ": " << (r.pass ? "pass" : "fail") << "\n";
      for (const auto& d : r.details) log << "  " << d << "\n";
    }
    if (!ok && pass) residual = check["residual"].get<std::string>();
    pass = pass && ok;
    checks.push_back(std::move(check));
  }
  out.doc["status"] = pass ? "pass" : "fail";
  out.doc["suite"] = suite;
  out.doc["residual"] = residual;
  out.doc["checks"] = std::move(checks);
  out.exit_code = pass ? 0 : 1;
  return out;
}

Outcome cmd_nf(const std::string& text, std::ostringstream& log) {
  const TraceExpr e = parse(text);
  const auto parts = decompose_in_free_basis(e);
  std::vector<NCWord> words;
  for (const auto& [w, c] : parts) words.push_back(w);
  std::sort(words.begin(), words.end(), [](const NCWord& a, const NCWord& b) { return compare_words(a, b) > 0; });
  Json table = Json::array();
  for (const auto& w : words) {
    table.push_back({{"word", word_to_string(w)}, {"coefficient", parts.at(w).to_string()}});
    log << word_to_string(w) << ": " << parts.at(w).to_string() << "\n";
  }
  Outcome out;
  out.doc["status"] = "value";
  out.doc["input"] = render(e);
  out.doc["normal_form"] = assemble(parts).to_string();
  out.doc["basis"] = std::move(table);
  return out;
}

Outcome cmd_hilbert(const std::string& algebra, int max_degree, bool schur, std::ostringstream& log) {
  const BiSeries s = expand(closed_form(algebra), max_degree);
  Json series = Json::array();
  for (int k = 0; k <= max_degree; ++k) {
    for (int i = k; i >= 0; --i) {
      const Rational c = s.coeff(i, k - i);
      if (c != 0) series.push_back({{"bidegree", Json::array({i, k - i})}, {"coefficient", to_string(c)}});
    }
    log << "degree " << k << ": " << s.homogeneous_component(k).to_string() << "\n";
  }
  Outcome out;
  out.doc["status"] = "value";
  out.doc["algebra"] = algebra;
  out.doc["max_degree"] = max_degree;
  out.doc["series"] = std::move(series);
  if (schur) {
    Json parts = Json::array();
    for (int k = 0; k <= max_degree; ++k) {
      Json entry{{"degree", k}};
      try {
        const auto m = schur_decompose(s.homogeneous_component(k));
        entry["decomposition"] = m.to_string();
        entry["modules"] = modules_json(m);
        log << "h" << k << " = " << m.to_string() << "\n";
      } catch (const NotSchurPositive& err) {
        entry["decomposition"] = nullptr;
        entry["error"] = err.what();
      }
      parts.push_back(std::move(entry));
    }
    out.doc["schur"] = std::move(parts);
  }
  return out;
}

Outcome cmd_schur(const std::string& text, std::ostringstream& log) {
  const MultiPoly p = parse_bivariate(text);
  Outcome out;
  out.doc["input"] = p.to_string();
  try {
    const auto m = schur_decompose(p);
    out.doc["status"] = "value";
    out.doc["decomposition"] = m.to_string();
    out.doc["modules"] = modules_json(m);
    log << m.to_string() << "\n";
  } catch (const NotSchurPositive& err) {
    out.doc["status"] = "fail";
    out.doc["residual"] = err.what();
    out.exit_code = 1;
  }
  return out;
}

Outcome cmd_tensor(const std::vector<std::string>& pieces, std::ostringstream& log) {
  std::string text;
  for (const auto& p : pieces) text += p + " ";
  static const std::regex pattern(R"(^\s*(\d+)\s*,\s*(\d+)\s*x\s*(\d+)\s*,\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("expected \"a,b x c,d\", got \"" + text + "\"");
  const Partition2 lambda(std::stoi(m[1]), std::stoi(m[2]));
  const Partition2 mu(std::stoi(m[3]), std::stoi(m[4]));
  const auto product = lr_tensor(lambda, mu);
  log << "W" << to_string(lambda) << " x W" << to_string(mu) << " = " << product.to_string() << "\n";
  Outcome out;
  out.doc["status"] = "value";
  out.doc["lambda"] = Json::array({lambda.l1, lambda.l2});
  out.doc["mu"] = Json::array({mu.l1, mu.l2});
  out.doc["decomposition"] = product.to_string();
  out.doc["modules"] = modules_json(product);
  return out;
}

Outcome cmd_hwv(const std::string& text, std::ostringstream& log) {
  const TraceExpr e = parse(text);
  const auto b = e.bidegree();
  if (!b) throw UsageError("expression is not homogeneous");
  const bool hwv = is_hwv(e);
  const std::string result =
      hwv ? "highest weight vector of weight " + to_string(*b) : "not a highest weight vector";
  log << render(e) << ": " << result << "\n";
  Outcome out;
  out.doc["status"] = "value";
  out.doc["input"] = render(e);
  out.doc["hwv"] = hwv;
  out.doc["weight"] = bidegree_json(*b);
  out.doc["result"] = result;
  return out;
}

Outcome cmd_basis(bool list, int max_degree, std::ostringstream& log) {
  Outcome out;
  if (list) {
    Json rules = Json::array();
    for (const auto& r : groebner_basis()) {
      rules.push_back({{"name", r.name},
                       {"lead", r.lead.to_string()},
                       {"rule", r.element().to_string()},
                       {"integral_form", r.integral_form().to_string()}});
      log << r.name << ": " << r.integral_form().to_string() << "\n";
    }
    Json words = Json::array();
    for (const auto& w : normal_words()) words.push_back(word_to_string(w));
    out.doc["status"] = "value";
    out.doc["basis"] = std::move(rules);
    out.doc["normal_words"] = std::move(words);
    return out;
  }
  const auto report = verify_groebner(max_degree);
  const Json check = groebner_check(report, log);
  out.doc["status"] = check["status"];
  out.doc["suite"] = "groebner";
  out.doc["residual"] = check["residual"];
  out.doc["checks"] = Json::array({check});
  out.exit_code = report.pass ? 0 : 1;
  return out;
}

Outcome error_doc(const std::string& kind, const std::string& message, std::optional<std::size_t> offset,
                  const std::string& usage) {
  Outcome out;
  out.doc["status"] = "error";
  Json err{{"kind", kind}, {"message", message}};
  if (offset) err["offset"] = *offset;
  out.doc["error"] = std::move(err);
  if (!usage.empty()) out.doc["usage"] = usage;
  out.exit_code = 2;
  return out;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Trace algebras of two generic 3x3 matrices", "tracealg"};
  app.require_subcommand(1, 1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Human-readable output on stderr");

  std::string suite = "all";
  int verify_degree = 12;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(kSuites));
  verify->add_option("--max-degree", verify_degree, "Census degree for the groebner suite")
      ->check(CLI::Range(0, 40));

  std::string expr_text;
  auto* nf = app.add_subcommand("nf", "Normal form in the free-module basis");
  nf->add_option("expr", expr_text, "Trace expression")->required();

  std::string algebra;
  int hilbert_degree = 12;
  bool schur_flag = false;
  auto* hilbert = app.add_subcommand("hilbert", "Truncated Hilbert series");
  hilbert->add_option("--algebra", algebra, "Algebra")->required()->check(CLI::IsMember(kAlgebras));
  hilbert->add_option("--max-degree", hilbert_degree, "Total degree cap")->check(CLI::Range(0, 40));
  hilbert->add_flag("--schur", schur_flag, "Schur decomposition per degree");

  std::string poly_text;
  auto* schur = app.add_subcommand("schur", "Schur decomposition of a polynomial in t1, t2");
  schur->add_option("poly", poly_text, "Bivariate polynomial")->required();

  std::vector<std::string> tensor_args;
  auto* tensor = app.add_subcommand("tensor", "Tensor product W(a,b) x W(c,d)");
  tensor->add_option("spec", tensor_args, "\"a,b x c,d\"")->required();

  std::string hwv_text;
  auto* hwv = app.add_subcommand("hwv", "Highest weight vector test");
  hwv->add_option("expr", hwv_text, "Trace expression")->required();

  bool list = false;
  bool check = false;
  int basis_degree = 12;
  auto* basis = app.add_subcommand("basis", "Rewriting rules of T32");
  auto* list_opt = basis->add_flag("--list", list, "Print the rules and normal words");
  auto* check_opt = basis->add_flag("--check", check, "Verify the rules");
  list_opt->excludes(check_opt);
  basis->add_option("--max-degree", basis_degree, "Census degree for --check")->check(CLI::Range(0, 40));

  std::vector<std::string> argv_store{"tracealg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    Outcome out;
    out.doc["status"] = "value";
    out.doc["usage"] = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    return error_doc("usage", e.what(), std::nullopt, app.help());
  }

  std::ostringstream log;
  Outcome out;
  try {
    if (*verify) {
      out = cmd_verify(suite, verify_degree, log);
    } else if (*nf) {
      out = cmd_nf(expr_text, log);
    } else if (*hilbert) {
      out = cmd_hilbert(algebra, hilbert_degree, schur_flag, log);
    } else if (*schur) {
      out = cmd_schur(poly_text, log);
    } else if (*tensor) {
      out = cmd_tensor(tensor_args, log);
    } else if (*hwv) {
      out = cmd_hwv(hwv_text, log);
    } else {
      if (!list && !check) return error_doc("usage", "basis needs --list or --check", std::nullopt, basis->help());
      out = cmd_basis(list, basis_degree, log);
    }
  } catch (const ParseError& e) {
    return error_doc("parse", e.detail(), e.offset(), "");
  } catch (const SortError& e) {
    return error_doc("parse", e.what(), std::nullopt, "");
  } catch (const Error& e) {
    return error_doc("input", e.what(), std::nullopt, "");
  }

  Json doc{{"command", app.get_subcommands().front()->get_name()}};
  for (auto& [k, v] : out.doc.items()) {
    if (k != "command") doc[k] = v;
  }
  out.doc = std::move(doc);
  if (verbose) out.log = log.str();
  return out;
}

}  // namespace tracealg::cli
