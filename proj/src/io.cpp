#include "relsg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace relsg::io {

namespace {

struct NumberToken {
  long long value;
  std::size_t line;
  std::size_t column;
};

/// Splits into numbers, remembering their positions.
std::vector<std::vector<NumberToken>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<NumberToken>> lines;
  std::size_t line = 1, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(pos, end - pos);
    std::vector<NumberToken> tokens;
    std::size_t k = 0;
    while (k < row.size()) {
      if (std::isspace(static_cast<unsigned char>(row[k]))) {
        ++k;
        continue;
      }
      const std::size_t start = k;
      bool negative = false;
      if (row[k] == '-') {
        negative = true;
        ++k;
      }
      if (k >= row.size() || !std::isdigit(static_cast<unsigned char>(row[k]))) {
        throw ParseError("malformed number", line, start + 1);
      }
      long long v = 0;
      while (k < row.size() && std::isdigit(static_cast<unsigned char>(row[k]))) {
        v = v * 10 + (row[k] - '0');
        if (v > (1ll << 40)) throw ParseError("number too large", line, start + 1);
        ++k;
      }
      if (k < row.size() && !std::isspace(static_cast<unsigned char>(row[k]))) {
        throw ParseError("malformed number", line, start + 1);
      }
      tokens.push_back({negative ? -v : v, line, start + 1});
    }
    lines.push_back(std::move(tokens));
    pos = end + 1;
    ++line;
  }
  return lines;
}

}  // namespace

CayleyTable parse_table(std::string_view text) {
  auto lines = tokenize_lines(text);
  std::erase_if(lines, [](const auto& l) { return l.empty(); });
  if (lines.empty()) throw ParseError("missing order line", 1, 1);
  if (lines[0].size() != 1) throw ParseError("first line must hold only the order", lines[0][0].line, lines[0][1].column);
  const long long n = lines[0][0].value;
  if (n < 1) throw ParseError("order must be positive", lines[0][0].line, lines[0][0].column);
  if (n > 4096) throw ParseError("order too large", lines[0][0].line, lines[0][0].column);
  const auto order = static_cast<std::size_t>(n);
  if (lines.size() - 1 < order) {
    const auto& last = lines.back();
    throw ParseError("expected " + std::to_string(order) + " table rows, found " +
                         std::to_string(lines.size() - 1),
                     last.front().line + 1, 1);
  }
  if (lines.size() - 1 > order) {
    throw ParseError("unexpected extra row", lines[order + 1].front().line, 1);
  }
  std::vector<ElementId> cells;
  cells.reserve(order * order);
  for (std::size_t r = 0; r < order; ++r) {
    const auto& row = lines[r + 1];
    if (row.size() != order) {
      const auto col = row.size() > order ? row[order].column : row.back().column;
      throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(order),
                       row.front().line, col);
    }
    for (const auto& tok : row) {
      if (tok.value < 0 || tok.value >= n) {
        throw ParseError("entry " + std::to_string(tok.value) + " out of range [0, " +
                             std::to_string(n) + ")",
                         tok.line, tok.column);
      }
      cells.push_back(static_cast<ElementId>(tok.value));
    }
  }
  return CayleyTable(order, std::move(cells));
}

Semigroup parse_semigroup(std::string_view text) {
  auto table = parse_table(text);
  try {
    return Semigroup(std::move(table));
  } catch (const AssociativityError& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

std::string format_table(const CayleyTable& t) {
  std::ostringstream os;
  os << t.size() << '\n';
  for (ElementId a = 0; a < t.size(); ++a) {
    for (ElementId b = 0; b < t.size(); ++b) {
      if (b) os << ' ';
      os << t(a, b);
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Semigroup parse_table_file(const std::filesystem::path& path) {
  return parse_semigroup(read_file(path));
}

ReesSpec parse_rees_spec(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0, e.byte);
  }
  try {
    const auto rows = j.at("group_table").get<std::vector<std::vector<long long>>>();
    GroupView group = as_group(Semigroup(CayleyTable::from_rows(rows)));
    const auto lambda_size = j.at("lambda_size").get<std::size_t>();
    const auto i_size = j.at("i_size").get<std::size_t>();
    const auto raw = j.at("sandwich").get<std::vector<std::vector<long long>>>();
    std::vector<std::vector<ElementId>> sandwich;
    for (const auto& row : raw) {
      std::vector<ElementId> r;
      for (auto v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= group.size()) {
          throw ReesSpecError("sandwich entry " + std::to_string(v) + " is not a group element");
        }
        r.push_back(static_cast<ElementId>(v));
      }
      sandwich.push_back(std::move(r));
    }
    ReesSpec spec{std::move(group), lambda_size, i_size, std::move(sandwich)};
    validate_shape(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed Rees spec: ") + e.what(), 0, 0);
  }
}

nlohmann::json rees_spec_to_json(const ReesSpec& spec) {
  return {{"group_table", spec.group.base().table().rows()},
          {"lambda_size", spec.lambda_size},
          {"i_size", spec.i_size},
          {"sandwich", spec.sandwich}};
}

}  // namespace relsg::io
