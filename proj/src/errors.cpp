#include "relsg/errors.hpp"

#include <sstream>

namespace relsg {

namespace {
std::string associativity_message(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  std::ostringstream os;
  os << "associativity fails for (a, b, c) = (" << a << ", " << b << ", " << c << ")";
  return os.str();
}
}  // namespace

AssociativityError::AssociativityError(std::uint32_t a, std::uint32_t b, std::uint32_t c)
    : Error(associativity_message(a, b, c)), a_(a), b_(b), c_(c) {}

const char* to_string(GroupFailure f) noexcept {
  switch (f) {
    case GroupFailure::none:
      return "none";
    case GroupFailure::no_identity:
      return "no identity";
    case GroupFailure::missing_inverse:
      return "missing inverse";
    case GroupFailure::not_latin_square:
      return "not a Latin square";
  }
  return "unknown";
}

NotAGroupError::NotAGroupError(GroupFailure reason)
    : Error(std::string("not a group: ") + to_string(reason)), reason_(reason) {}

NormalizationError::NormalizationError(std::size_t row, std::size_t column)
    : ReesSpecError("sandwich matrix is not normalized at row " + std::to_string(row) +
                    ", column " + std::to_string(column)),
      row_(row),
      column_(column) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      message_(message),
      line_(line),
      column_(column) {}

BudgetExceededError::BudgetExceededError(std::string bound, std::uint64_t limit,
                                         std::uint64_t requested)
    : Error("budget exceeded: " + bound + " = " + std::to_string(requested) + " > limit " +
            std::to_string(limit)),
      bound_(std::move(bound)),
      limit_(limit),
      requested_(requested) {}

}  // namespace relsg
