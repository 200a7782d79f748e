#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace qherglotz::cli {

enum ExitStatus : int {
  kOk = 0,
  kInputError = 1,
  kNegativeVerdict = 2,
};

struct RunReport {
  std::string subcommand;
  std::string inputs_digest;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> violations;
  int exit_status = kOk;

  nlohmann::json to_json() const;
  // key: value lines, numbers with 17 significant digits.
  std::string to_text() const;
};

// 64-bit FNV-1a, as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex_digest(std::uint64_t h);

/// Runs one command line (args exclude the program name) and returns the
/// exit status. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qherglotz::cli
