#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "relsg/rees.hpp"
#include "relsg/semigroup.hpp"

namespace relsg::io {

/// Cayley table text: the order n on the first line, then n lines of n
/// whitespace-separated ids.  Errors are ParseError with line and column
/// (1-based).  No associativity check.
CayleyTable parse_table(std::string_view text);

/// parse_table followed by the associativity check; an AssociativityError
/// is rethrown as ParseError naming the triple.
Semigroup parse_semigroup(std::string_view text);

std::string format_table(const CayleyTable& t);

std::string read_file(const std::filesystem::path& path);

/// Reads and parses a Cayley table file.
Semigroup parse_table_file(const std::filesystem::path& path);

/// Rees spec object with keys "group_table" (rows), "lambda_size",
/// "i_size" and "sandwich" (|I| rows of |Lambda| ids).  Throws ParseError
/// for malformed text, NotAGroupError, ReesSpecError.
ReesSpec parse_rees_spec(std::string_view text);

nlohmann::json rees_spec_to_json(const ReesSpec& spec);

}  // namespace relsg::io
