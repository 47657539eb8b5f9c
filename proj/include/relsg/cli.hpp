#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace relsg::cli {

enum class OutputFormat { text, structured };

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;  // mathematical negative under --strict
inline constexpr int exit_usage = 2;     // usage or input format error
inline constexpr int exit_budget = 3;

struct Budgets {
  std::size_t max_variables = 6;  // user-declared variables of a system
  std::size_t max_universe = 8;   // base structure order for solving
  std::size_t max_exponent = 4;
  std::size_t max_order = 4;      // survey order
};

struct Invocation {
  std::string command;  // check, rees, kernel, predicatize, solve, reduce, chain, survey
  std::string input;    // positional table or spec path
  std::string structure;
  std::string system;
  std::string words;
  bool group = false;
  std::optional<std::size_t> exponent;
  std::vector<std::string> project;
  bool count_only = false;
  std::size_t order = 0;
  bool iso = false;
  bool strict = false;
  std::size_t sample_limit = 10;
  Budgets budgets;
};

struct Report {
  std::string command;
  nlohmann::json payload;
  int exit_status = exit_ok;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Executes one command.  Failures are reported in the payload under
/// "error" with the matching exit status rather than thrown.
Report run(const Invocation& inv);

/// Structured output is a JSON document with sorted keys; text output is
/// one `path: value` line per payload leaf.
std::string emit_report(const Report& report, OutputFormat format);

/// Inverse of emit_report(..., structured).
Report parse_report(std::string_view structured);

/// Full command-line entry point.  Returns the process exit status.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relsg::cli
