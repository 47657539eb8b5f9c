#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace relsg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Cayley table that is not square or holds an out-of-range entry.
class MalformedTableError : public Error {
 public:
  MalformedTableError(const std::string& what, std::size_t row, std::size_t column)
      : Error(what), row_(row), column_(column) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Raised by the semigroup constructor on the first triple with
/// (a*b)*c != a*(b*c).
class AssociativityError : public Error {
 public:
  AssociativityError(std::uint32_t a, std::uint32_t b, std::uint32_t c);

  std::uint32_t a() const noexcept { return a_; }
  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t c() const noexcept { return c_; }

 private:
  std::uint32_t a_, b_, c_;
};

class ElementRangeError : public Error {
 public:
  using Error::Error;
};

enum class GroupFailure { none, no_identity, missing_inverse, not_latin_square };

const char* to_string(GroupFailure f) noexcept;

class NotAGroupError : public Error {
 public:
  explicit NotAGroupError(GroupFailure reason);
  GroupFailure reason() const noexcept { return reason_; }

 private:
  GroupFailure reason_;
};

class ReesSpecError : public Error {
 public:
  using Error::Error;
};

/// Sandwich matrix whose first row or first column is not the identity.
class NormalizationError : public ReesSpecError {
 public:
  NormalizationError(std::size_t row, std::size_t column);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_, column_;
};

class NotSimpleError : public Error {
 public:
  using Error::Error;
};

class NotHomogroupError : public Error {
 public:
  using Error::Error;
};

/// Text input that does not match one of the documented formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_, column_;
};

class UnknownRelationError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UnknownVariableError : public Error {
 public:
  using Error::Error;
};

class LanguageError : public Error {
 public:
  using Error::Error;
};

/// Power constant whose length differs from the exponent.
class RaggedConstantError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::string bound, std::uint64_t limit, std::uint64_t requested);
  const std::string& bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::string bound_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

class OrderTooLargeError : public BudgetExceededError {
 public:
  OrderTooLargeError(std::uint64_t limit, std::uint64_t requested)
      : BudgetExceededError("order", limit, requested) {}
};

}  // namespace relsg
