#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relsg/semigroup.hpp"

namespace relsg {

/// An element of a direct power: one base id per coordinate.
struct PowerTuple {
  std::vector<ElementId> coords;

  friend bool operator==(const PowerTuple&, const PowerTuple&) = default;
  friend auto operator<=>(const PowerTuple&, const PowerTuple&) = default;
};

/// A constant is either a base element or a power element.  Base constants
/// used in a system over a power denote the diagonal element [k, k, ...].
using ElementRef = std::variant<ElementId, PowerTuple>;

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

struct Constant {
  ElementRef value;
  friend bool operator==(const Constant&, const Constant&) = default;
  friend auto operator<=>(const Constant&, const Constant&) = default;
};

using Term = std::variant<Variable, Constant>;

inline Term var(std::string name) { return Variable{std::move(name)}; }
inline Term constant(ElementId id) { return Constant{id}; }
inline Term constant(std::vector<ElementId> coords) { return Constant{PowerTuple{std::move(coords)}}; }

inline bool is_variable(const Term& t) { return std::holds_alternative<Variable>(t); }

/// A relation application R(t1, ..., tk) or an equality t1 = t2.
class Atom {
 public:
  enum class Kind { relation, equality };

  static Atom relation(std::string name, std::vector<Term> args);
  static Atom equality(Term lhs, Term rhs);

  Kind kind() const noexcept { return kind_; }
  bool is_equality() const noexcept { return kind_ == Kind::equality; }
  /// Relation name; empty for equalities.
  const std::string& name() const noexcept { return name_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  Atom(Kind kind, std::string name, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Term> args_;
};

/// Atoms in order plus a finite ordered variable set covering them.
class EquationSystem {
 public:
  EquationSystem() = default;
  /// Variables in order of first occurrence.
  explicit EquationSystem(std::vector<Atom> atoms);
  /// Throws UnknownVariableError if an atom mentions a variable not listed,
  /// Error on duplicate names.
  EquationSystem(std::vector<Atom> atoms, std::vector<std::string> variables);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }

  /// Atoms at the given positions, same variable set.
  EquationSystem subsystem(const std::vector<std::size_t>& positions) const;

  /// Same atoms, variable list extended by `extra` names not yet present.
  EquationSystem with_variables(const std::vector<std::string>& extra) const;

  friend bool operator==(const EquationSystem&, const EquationSystem&) = default;

 private:
  std::vector<Atom> atoms_;
  std::vector<std::string> variables_;
};

/// Variables of `atoms` in order of first occurrence.
std::vector<std::string> variables_of(const std::vector<Atom>& atoms);

std::string to_string(const ElementRef& ref);
std::string to_string(const Term& term);
std::string to_string(const Atom& atom);
/// One atom per line, each terminated by a newline.
std::string to_string(const EquationSystem& sys);

/// Equation DSL, one atom per line:
///   M(x, y, z)     relation atom
///   x = #1         equality atom
///   [0,1,1]        power constant
/// `#` followed by a digit is a constant; any other `#` starts a comment.
EquationSystem parse_system(std::string_view text);

/// Parses a single atom (no comments).
Atom parse_atom(std::string_view text);

}  // namespace relsg
