#include <doctest.h>

#include "tracealg/cli.hpp"

using tracealg::cli::run;

TEST_CASE("verify a passing suite") {
  const auto out = run({"verify", "--suite", "defining-relation"});
  CHECK(out.exit_code == 0);
  CHECK(out.doc["status"] == "pass");
  CHECK(out.doc["suite"] == "defining-relation");
  CHECK(out.doc["residual"] == "0");
  CHECK(out.doc["checks"].size() == 2);
  CHECK(out.log.empty());
}

TEST_CASE("verify cayley-hamilton and groebner") {
  CHECK(run({"verify", "--suite", "cayley-hamilton"}).exit_code == 0);
  const auto g = run({"verify", "--suite", "groebner"});
  CHECK(g.exit_code == 0);
  CHECK(g.doc["checks"][0]["normal_word_count"] == 18);
}

TEST_CASE("verify lemmas reports the failing degree-6 identity") {
  const auto out = run({"verify", "--suite", "lemmas"});
  CHECK(out.exit_code == 1);
  CHECK(out.doc["status"] == "fail");
  CHECK(out.doc["residual"] != "0");
  int failed = 0;
  for (const auto& c : out.doc["checks"]) {
    if (c["status"] == "fail") {
      ++failed;
      CHECK(c["name"] == "degree-6");
    }
  }
  CHECK(failed == 1);
}

TEST_CASE("hwv") {
  const auto out = run({"hwv", "[x,y]^2"});
  CHECK(out.exit_code == 0);
  CHECK(out.doc["status"] == "value");
  CHECK(out.doc["result"] == "highest weight vector of weight (2,2)");
  CHECK(run({"hwv", "y"}).doc["hwv"] == false);
  CHECK(run({"hwv", "x + x*y"}).exit_code == 2);
}

TEST_CASE("nf") {
  const auto out = run({"nf", "x^3"});
  CHECK(out.exit_code == 0);
  CHECK(out.doc["normal_form"] == "1/2*u20*x1 + 1/3*u30");
  REQUIRE(out.doc["basis"].size() == 2);
  CHECK(out.doc["basis"][0]["word"] == "x1");
  CHECK(out.doc["basis"][0]["coefficient"] == "1/2*u20");
  CHECK(out.doc["basis"][1]["word"] == "1");
  CHECK(out.doc["basis"][1]["coefficient"] == "1/3*u30");
}

TEST_CASE("hilbert") {
  const auto out = run({"hilbert", "--algebra", "T32", "--max-degree", "2"});
  CHECK(out.exit_code == 0);
  bool found = false;
  for (const auto& t : out.doc["series"]) {
    if (t["bidegree"] == nlohmann::json::array({1, 1})) {
      CHECK(t["coefficient"] == "6");
      found = true;
    }
  }
  CHECK(found);
  const auto s = run({"hilbert", "--algebra", "C0", "--max-degree", "4", "--schur"});
  CHECK(s.doc["schur"][4]["decomposition"] == "W(4,0) + 2W(2,2)");
  CHECK(run({"hilbert", "--algebra", "C33"}).exit_code == 2);
  CHECK(run({"hilbert"}).exit_code == 2);
}

TEST_CASE("schur and tensor") {
  const auto s = run({"schur", "t1^2 + t1*t2 + t2^2"});
  CHECK(s.doc["decomposition"] == "W(2,0)");
  CHECK(run({"schur", "t1^2"}).exit_code == 1);
  CHECK(run({"tensor", "1,0 x 1,0"}).doc["decomposition"] == "W(2,0) + W(1,1)");
  CHECK(run({"tensor", "2,1", "x", "1,1"}).doc["decomposition"] == "W(3,2)");
  CHECK(run({"tensor", "1,2 x 1,0"}).exit_code == 2);
  CHECK(run({"tensor", "1,0 * 1,0"}).exit_code == 2);
}

TEST_CASE("basis") {
  const auto l = run({"basis", "--list"});
  CHECK(l.exit_code == 0);
  CHECK(l.doc["basis"].size() == 11);
  CHECK(l.doc["normal_words"].size() == 18);
  CHECK(run({"basis", "--check"}).exit_code == 0);
  CHECK(run({"basis"}).exit_code == 2);
  CHECK(run({"basis", "--list", "--check"}).exit_code == 2);
}

TEST_CASE("parse errors exit with 2 and a position") {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"tr(tr(x))", 7}, {"(x + y", 6}, {"x + q", 4}, {"x + tr(x)", 2}, {"", 0}, {"[x,y", 4},
  };
  for (const auto& [text, offset] : cases) {
    const auto out = run({"nf", text});
    CHECK(out.exit_code == 2);
    CHECK(out.doc["status"] == "error");
    CHECK(out.doc["error"]["kind"] == "parse");
    CHECK(out.doc["error"]["offset"] == offset);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"verify", "--suite", "nope"}).exit_code == 2);
  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.doc.contains("usage"));
}

TEST_CASE("verbose text and deterministic output") {
  const auto a = run({"--verbose", "hilbert", "--algebra", "C32", "--max-degree", "6", "--schur"});
  const auto b = run({"--verbose", "hilbert", "--algebra", "C32", "--max-degree", "6", "--schur"});
  CHECK_FALSE(a.log.empty());
  CHECK(a.doc.dump() == b.doc.dump());
  CHECK(run({"basis", "--list"}).doc.dump() == run({"basis", "--list"}).doc.dump());
}
