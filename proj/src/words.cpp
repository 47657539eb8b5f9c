#include "relsg/words.hpp"

#include <optional>
#include <set>

#include "lexer.hpp"

namespace relsg {

namespace {

class WordCompiler {
 public:
  WordCompiler(const WordEquationSystem& w, Language lang) : lang_(lang) {
    for (const auto& eq : w.equations) {
      for (const Word* side : {&eq.lhs, &eq.rhs}) {
        for (const auto& tok : *side) {
          if (tok.kind == WordToken::Kind::variable && used_.insert(tok.name).second) {
            projection_.push_back(tok.name);
          }
        }
      }
    }
  }

  void equation(const WordEquation& eq) {
    check(eq.lhs);
    check(eq.rhs);
    const bool lhs_identity = is_identity(eq.lhs);
    const bool rhs_identity = is_identity(eq.rhs);
    if (lhs_identity && rhs_identity) return;
    if (rhs_identity || lhs_identity) {
      const Term t = word(lhs_identity ? eq.rhs : eq.lhs, std::nullopt);
      atoms_.push_back(Atom::relation("E", {t}));
      return;
    }
    const bool lhs_single = is_plain(eq.lhs);
    const bool rhs_single = is_plain(eq.rhs);
    if (lhs_single && rhs_single) {
      atoms_.push_back(Atom::equality(plain(eq.lhs.front()), plain(eq.rhs.front())));
    } else if (rhs_single) {
      word(eq.lhs, plain(eq.rhs.front()));
    } else if (lhs_single) {
      word(eq.rhs, plain(eq.lhs.front()));
    } else {
      const Term l = word(eq.lhs, std::nullopt);
      const Term r = word(eq.rhs, std::nullopt);
      atoms_.push_back(Atom::equality(l, r));
    }
  }

  CompiledWords finish() {
    return {EquationSystem(std::move(atoms_)), std::move(projection_)};
  }

 private:
  void check(const Word& w) const {
    if (w.empty()) throw Error("empty word");
    if (lang_ == Language::group) return;
    for (const auto& tok : w) {
      if (tok.kind == WordToken::Kind::identity) {
        throw LanguageError("identity token requires the group language");
      }
      if (tok.inverted) throw LanguageError("inverse token requires the group language");
    }
  }

  static bool is_identity(const Word& w) {
    return w.size() == 1 && w.front().kind == WordToken::Kind::identity;
  }

  static bool is_plain(const Word& w) {
    return w.size() == 1 && w.front().kind != WordToken::Kind::identity && !w.front().inverted;
  }

  static Term plain(const WordToken& tok) {
    if (tok.kind == WordToken::Kind::variable) return Variable{tok.name};
    return Constant{tok.value};
  }

  Term fresh() {
    std::string name;
    do {
      name = "_t" + std::to_string(++counter_);
    } while (used_.count(name));
    used_.insert(name);
    return Variable{name};
  }

  Term factor(const WordToken& tok) {
    if (tok.kind == WordToken::Kind::identity) {
      Term t = fresh();
      atoms_.push_back(Atom::relation("E", {t}));
      return t;
    }
    const Term base = plain(tok);
    if (!tok.inverted) return base;
    Term t = fresh();
    atoms_.push_back(Atom::relation("I", {base, t}));
    return t;
  }

  /// Emits the atoms for `w` and returns the term holding its value; the
  /// last product is written into `target` when given.
  Term word(const Word& w, std::optional<Term> target) {
    if (w.size() == 1 && target && w.front().inverted) {
      atoms_.push_back(Atom::relation("I", {plain(w.front()), *target}));
      return *target;
    }
    Term acc = factor(w.front());
    for (std::size_t k = 1; k < w.size(); ++k) {
      const Term rhs = factor(w[k]);
      const bool last = k + 1 == w.size();
      Term result = last && target ? *target : fresh();
      atoms_.push_back(Atom::relation("M", {acc, rhs, result}));
      acc = std::move(result);
    }
    if (w.size() == 1 && target) atoms_.push_back(Atom::equality(acc, *target));
    return acc;
  }

  Language lang_;
  std::set<std::string> used_;
  std::vector<std::string> projection_;
  std::vector<Atom> atoms_;
  std::size_t counter_ = 0;
};

}  // namespace

CompiledWords compile_word_equations(const WordEquationSystem& w, Language lang) {
  WordCompiler c(w, lang);
  for (const auto& eq : w.equations) c.equation(eq);
  return c.finish();
}

namespace {

WordToken parse_factor(detail::Cursor& cur) {
  WordToken tok;
  if (cur.at_constant()) {
    tok = WordToken::constant(cur.element_ref());
  } else if (cur.at_identifier()) {
    tok = WordToken::variable(cur.identifier());
  } else if (cur.peek() == '1') {
    const ElementId one = cur.number();
    if (one != 1) cur.fail("unknown token; write constants as #k");
    tok = WordToken::identity();
  } else {
    cur.fail("unknown token");
  }
  if (cur.accept('^')) {
    if (!cur.accept("-1")) cur.fail("only the exponent ^-1 is supported");
    if (tok.kind != WordToken::Kind::identity) tok.inverted = true;
  }
  return tok;
}

Word parse_word(detail::Cursor& cur) {
  Word w;
  do {
    w.push_back(parse_factor(cur));
  } while (cur.accept('*'));
  return w;
}

}  // namespace

WordEquationSystem parse_word_equations(std::string_view text) {
  WordEquationSystem sys;
  const auto lines = detail::split_lines(text);
  for (std::size_t k = 0; k < lines.size(); ++k) {
    detail::Cursor cur(detail::strip_comment(lines[k]), k + 1);
    if (cur.at_end()) continue;
    WordEquation eq;
    eq.lhs = parse_word(cur);
    cur.expect('=');
    eq.rhs = parse_word(cur);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += " * ";
    const auto& tok = w[k];
    switch (tok.kind) {
      case WordToken::Kind::variable:
        out += tok.name;
        break;
      case WordToken::Kind::constant:
        out += to_string(tok.value);
        break;
      case WordToken::Kind::identity:
        out += "1";
        break;
    }
    if (tok.inverted) out += "^-1";
  }
  return out;
}

}  // namespace relsg
