#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "relsg/equation.hpp"

namespace relsg {

/// One factor of a word: a variable, a constant, or the identity `1`,
/// optionally inverted (`^-1`).
struct WordToken {
  enum class Kind { variable, constant, identity };

  Kind kind = Kind::variable;
  std::string name;      // variable name
  ElementRef value{};    // constant
  bool inverted = false;

  static WordToken variable(std::string name, bool inverted = false) {
    return {Kind::variable, std::move(name), ElementId{0}, inverted};
  }
  static WordToken constant(ElementRef value, bool inverted = false) {
    return {Kind::constant, {}, std::move(value), inverted};
  }
  static WordToken identity() { return {Kind::identity, {}, ElementId{0}, false}; }

  friend bool operator==(const WordToken&, const WordToken&) = default;
};

using Word = std::vector<WordToken>;

struct WordEquation {
  Word lhs;
  Word rhs;
  friend bool operator==(const WordEquation&, const WordEquation&) = default;
};

struct WordEquationSystem {
  std::vector<WordEquation> equations;
};

enum class Language { semigroup, group };

struct CompiledWords {
  EquationSystem system;
  /// Variables of the word system in order of first occurrence.
  std::vector<std::string> projection;
};

/// Rewrites functional equations as relational atoms.  Inverses become
/// I-atoms, products are chained left to right through fresh variables
/// `_t1, _t2, ...` with M-atoms, an identity side becomes an E-atom.  When
/// one side is a single variable or constant, the last product of the other
/// side lands on it directly; two single terms give an equality atom.
///
/// Throws LanguageError for inverse or identity tokens in the semigroup
/// language and Error for an empty word.
CompiledWords compile_word_equations(const WordEquationSystem& w, Language lang);

/// Word DSL, one equation per line: `x^-1 * y^-1 * x * y = 1`.  Factors are
/// identifiers, `#k`, `[i0,i1,...]` or `1`, each optionally followed by
/// `^-1`.  `#` not followed by a digit starts a comment.
WordEquationSystem parse_word_equations(std::string_view text);

std::string to_string(const Word& w);

}  // namespace relsg
