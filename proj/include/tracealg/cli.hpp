#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tracealg::cli {

struct Outcome {
  /// The single machine-readable document for stdout.
  nlohmann::ordered_json doc;
  /// 0 pass or value, 1 verification failure, 2 usage or parse error.
  int exit_code = 0;
  /// Human-readable text, only filled under --verbose.
  std::string log;
};

/// Runs one invocation; args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace tracealg::cli
