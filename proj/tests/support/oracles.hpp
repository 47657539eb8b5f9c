#pragma once

// Independent reference implementations used only by tests.  They work on
// raw tables and never call the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relsg/catalog.hpp"
#include "relsg/equation.hpp"
#include "relsg/semigroup.hpp"

namespace oracle {

using relsg::ElementId;
using Grid = std::vector<std::vector<ElementId>>;

inline Grid grid_of(const relsg::Semigroup& s) { return s.table().rows(); }

inline relsg::Semigroup to_semigroup(const Grid& g) {
  std::vector<ElementId> cells;
  for (const auto& r : g) cells.insert(cells.end(), r.begin(), r.end());
  return relsg::Semigroup(relsg::CayleyTable(g.size(), std::move(cells)));
}

inline bool associative(const Grid& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

/// Runs over all n^(n*n) tables like an odometer.
inline void for_each_table(std::size_t n, const std::function<void(const Grid&)>& visit) {
  std::vector<ElementId> cells(n * n, 0);
  Grid g(n, std::vector<ElementId>(n));
  while (true) {
    for (std::size_t k = 0; k < n * n; ++k) g[k / n][k % n] = cells[k];
    visit(g);
    std::size_t k = n * n;
    while (k > 0) {
      --k;
      if (++cells[k] < n) break;
      cells[k] = 0;
      if (k == 0) return;
    }
    if (n * n == 0) return;
  }
}

/// Associative tables of order n in lexicographic order, by exhaustive filter.
inline std::vector<Grid> naive_semigroups(std::size_t n) {
  std::vector<Grid> out;
  for_each_table(n, [&](const Grid& g) {
    if (associative(g)) out.push_back(g);
  });
  return out;
}

inline Grid relabel(const Grid& t, const std::vector<ElementId>& p) {
  const std::size_t n = t.size();
  Grid r(n, std::vector<ElementId>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) r[p[a]][p[b]] = p[t[a][b]];
  return r;
}

/// A bijection p with p(x*y) = p(x)*p(y), if one exists.
inline std::optional<std::vector<ElementId>> find_isomorphism(const Grid& x, const Grid& y) {
  if (x.size() != y.size()) return std::nullopt;
  std::vector<ElementId> p(x.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel(x, p) == y) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

inline bool isomorphic(const Grid& x, const Grid& y) { return find_isomorphism(x, y).has_value(); }

inline bool is_ideal(const Grid& t, const std::vector<bool>& in) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!in[a]) continue;
    for (std::size_t s = 0; s < n; ++s)
      if (!in[t[a][s]] || !in[t[s][a]]) return false;
  }
  return true;
}

/// Smallest nonempty ideal, by subset enumeration.
inline std::vector<ElementId> minimal_ideal(const Grid& t) {
  const std::size_t n = t.size();
  std::vector<ElementId> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<bool> in(n);
    std::vector<ElementId> members;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) {
        in[a] = true;
        members.push_back(static_cast<ElementId>(a));
      }
    if (is_ideal(t, in) && (best.empty() || members.size() < best.size())) best = members;
  }
  return best;
}

inline bool left_qi(const Grid& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (t[a][x] == t[a][y] && t[b][x] != t[b][y]) return false;
  return true;
}

inline bool right_qi(const Grid& t) {
  const std::size_t n = t.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (t[x][a] == t[y][a] && t[x][b] != t[y][b]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Atom evaluation straight from the table.

struct Algebra {
  Grid table;
  std::optional<ElementId> identity;  // set for groups
  std::vector<ElementId> inverse;

  static Algebra semigroup(const relsg::Semigroup& s) { return {grid_of(s), std::nullopt, {}}; }

  static Algebra group(const relsg::Semigroup& s) {
    Algebra g{grid_of(s), std::nullopt, {}};
    const std::size_t n = g.table.size();
    for (ElementId e = 0; e < n; ++e) {
      bool ok = true;
      for (ElementId a = 0; a < n && ok; ++a) ok = g.table[e][a] == a && g.table[a][e] == a;
      if (ok) g.identity = e;
    }
    g.inverse.assign(n, 0);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (g.table[a][b] == *g.identity) g.inverse[a] = b;
    return g;
  }

  std::size_t size() const { return table.size(); }
};

/// Values per coordinate for one point: value[var][coordinate].
using PowerPoint = std::vector<std::vector<ElementId>>;

inline ElementId term_value(const relsg::Term& term, const std::vector<std::string>& vars,
                            const PowerPoint& point, std::size_t i) {
  if (const auto* v = std::get_if<relsg::Variable>(&term)) {
    const auto k = std::find(vars.begin(), vars.end(), v->name) - vars.begin();
    return point[k][i];
  }
  const auto& ref = std::get<relsg::Constant>(term).value;
  if (const auto* id = std::get_if<ElementId>(&ref)) return *id;
  return std::get<relsg::PowerTuple>(ref).coords.at(i);
}

inline bool atom_holds(const Algebra& alg, const relsg::Atom& atom, const std::vector<std::string>& vars,
                       const PowerPoint& point, std::size_t exponent) {
  for (std::size_t i = 0; i < exponent; ++i) {
    std::vector<ElementId> v;
    for (const auto& t : atom.args()) v.push_back(term_value(t, vars, point, i));
    bool ok = false;
    if (atom.is_equality()) {
      ok = v[0] == v[1];
    } else if (atom.name() == "M") {
      ok = alg.table[v[0]][v[1]] == v[2];
    } else if (atom.name() == "I") {
      ok = alg.identity && v[0] == alg.inverse[v[1]];
    } else if (atom.name() == "E") {
      ok = alg.identity && v[0] == *alg.identity;
    }
    if (!ok) return false;
  }
  return true;
}

/// Counts the points of the power A^exponent satisfying every atom, by
/// running over every assignment of tuples to `vars`.
inline std::uint64_t brute_power_count(const Algebra& alg, const std::vector<relsg::Atom>& atoms,
                                       const std::vector<std::string>& vars, std::size_t exponent,
                                       std::vector<PowerPoint>* points = nullptr) {
  const std::size_t n = alg.size();
  const std::size_t slots = vars.size() * exponent;
  std::vector<ElementId> digits(slots, 0);
  std::uint64_t count = 0;
  PowerPoint point(vars.size(), std::vector<ElementId>(exponent));
  while (true) {
    for (std::size_t k = 0; k < slots; ++k) point[k / exponent][k % exponent] = digits[k];
    bool ok = true;
    for (const auto& a : atoms) {
      if (!atom_holds(alg, a, vars, point, exponent)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++count;
      if (points) points->push_back(point);
    }
    std::size_t k = slots;
    while (k > 0) {
      --k;
      if (++digits[k] < n) break;
      digits[k] = 0;
      if (k == 0) return count;
    }
    if (slots == 0) return count;
  }
}

// ---------------------------------------------------------------------------
// Word evaluation in a group.

struct Factor {
  std::string variable;  // empty for a constant or the identity
  std::optional<ElementId> constant;
  bool inverted = false;
};
using FactorWord = std::vector<Factor>;

inline ElementId eval_word(const Algebra& g, const FactorWord& w,
                           const std::function<ElementId(const std::string&)>& value) {
  ElementId acc = *g.identity;
  for (const auto& f : w) {
    ElementId x = f.variable.empty() ? f.constant.value_or(*g.identity) : value(f.variable);
    if (f.inverted) x = g.inverse[x];
    acc = g.table[acc][x];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Generators.

inline std::vector<relsg::Semigroup> groups_up_to_6() {
  using namespace relsg::catalog;
  std::vector<relsg::Semigroup> out;
  for (std::size_t n = 1; n <= 6; ++n) out.push_back(cyclic(n));
  out.push_back(direct_product(cyclic(2), cyclic(2)));
  out.push_back(direct_product(cyclic(2), cyclic(3)));
  out.push_back(symmetric(3));
  return out;
}

inline relsg::Term random_constant(std::mt19937& rng, std::size_t n, std::size_t exponent) {
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  std::vector<ElementId> coords(exponent);
  for (auto& c : coords) c = pick(rng);
  return relsg::constant(std::move(coords));
}

inline relsg::Term random_term(std::mt19937& rng, std::size_t n, std::size_t exponent,
                               const std::vector<std::string>& vars, double constant_bias) {
  std::bernoulli_distribution is_const(constant_bias);
  if (is_const(rng)) return random_constant(rng, n, exponent);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  return relsg::var(vars[pick(rng)]);
}

/// M-atoms and equalities over the given variables, with tuple constants.
inline relsg::Atom random_atom(std::mt19937& rng, std::size_t n, std::size_t exponent,
                               const std::vector<std::string>& vars, double constant_bias = 0.5) {
  std::bernoulli_distribution equality(0.15);
  if (equality(rng)) {
    return relsg::Atom::equality(random_term(rng, n, exponent, vars, constant_bias),
                                 random_term(rng, n, exponent, vars, constant_bias));
  }
  return relsg::Atom::relation("M", {random_term(rng, n, exponent, vars, constant_bias),
                                     random_term(rng, n, exponent, vars, constant_bias),
                                     random_term(rng, n, exponent, vars, constant_bias)});
}

/// Random point of the power: one tuple per variable.
inline PowerPoint random_point(std::mt19937& rng, std::size_t n, std::size_t vars, std::size_t exponent) {
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  PowerPoint p(vars, std::vector<ElementId>(exponent));
  for (auto& v : p)
    for (auto& c : v) c = pick(rng);
  return p;
}

/// Atoms that hold at `planted`, found by rejection.  Constants in the
/// M-positions that the planted values determine are filled in so that the
/// atom holds, keeping constant-bearing patterns frequent.
inline std::vector<relsg::Atom> planted_system(std::mt19937& rng, const Algebra& alg, std::size_t exponent,
                                               const std::vector<std::string>& vars,
                                               const PowerPoint& planted, std::size_t atoms) {
  std::vector<relsg::Atom> out;
  std::size_t tries = 0;
  while (out.size() < atoms && tries < 100000) {
    ++tries;
    auto a = random_atom(rng, alg.size(), exponent, vars, 0.5);
    if (!a.is_equality() && !relsg::is_variable(a.args()[2]) && std::bernoulli_distribution(0.7)(rng)) {
      // Make the product position agree with the planted values.
      std::vector<ElementId> coords(exponent);
      for (std::size_t i = 0; i < exponent; ++i) {
        const auto x = term_value(a.args()[0], vars, planted, i);
        const auto y = term_value(a.args()[1], vars, planted, i);
        coords[i] = alg.table[x][y];
      }
      a = relsg::Atom::relation("M", {a.args()[0], a.args()[1], relsg::constant(coords)});
    }
    if (atom_holds(alg, a, vars, planted, exponent)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace oracle
