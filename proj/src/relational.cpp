#include "relsg/relational.hpp"

#include <algorithm>
#include <limits>

namespace relsg {

namespace {
constexpr std::size_t dense_limit = std::size_t{1} << 24;

std::size_t index_space(std::size_t universe, std::size_t arity) {
  std::size_t space = 1;
  for (std::size_t k = 0; k < arity; ++k) {
    if (universe != 0 && space > dense_limit / universe) return dense_limit + 1;
    space *= universe;
  }
  return space;
}

std::size_t flat_index(std::span<const ElementId> args, std::size_t universe) {
  std::size_t idx = 0;
  for (auto v : args) idx = idx * universe + v;
  return idx;
}
}  // namespace

Relation::Relation(std::size_t arity, std::size_t universe, std::vector<Tuple> tuples)
    : arity_(arity), universe_(universe), tuples_(std::move(tuples)) {
  for (const auto& t : tuples_) {
    if (t.size() != arity_) {
      throw ArityError("tuple of length " + std::to_string(t.size()) + " in a relation of arity " +
                       std::to_string(arity_));
    }
    for (auto v : t) {
      if (v >= universe_) {
        throw ElementRangeError("tuple entry " + std::to_string(v) + " outside universe of size " +
                                std::to_string(universe_));
      }
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  const std::size_t space = index_space(universe_, arity_);
  if (space <= dense_limit) {
    dense_.assign(space, false);
    for (const auto& t : tuples_) dense_[flat_index(t, universe_)] = true;
  }
}

bool Relation::contains(std::span<const ElementId> args) const {
  if (!dense_.empty()) return dense_[flat_index(args, universe_)];
  Tuple key(args.begin(), args.end());
  return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

RelationalStructure::RelationalStructure(std::size_t universe_size,
                                         std::map<std::string, Relation> relations)
    : universe_size_(universe_size), relations_(std::move(relations)) {
  if (universe_size_ == 0) throw Error("relational structure must have a nonempty universe");
}

const Relation& RelationalStructure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw UnknownRelationError("unknown relation '" + name + "'");
  return it->second;
}

namespace {
Relation multiplication_graph(const Semigroup& s) {
  std::vector<Tuple> m;
  m.reserve(s.size() * s.size());
  for (ElementId a = 0; a < s.size(); ++a) {
    for (ElementId b = 0; b < s.size(); ++b) m.push_back({a, b, s(a, b)});
  }
  return Relation(3, s.size(), std::move(m));
}
}  // namespace

RelationalStructure predicatize_semigroup(const Semigroup& s) {
  std::map<std::string, Relation> rel;
  rel.emplace("M", multiplication_graph(s));
  return RelationalStructure(s.size(), std::move(rel));
}

RelationalStructure predicatize_group(const GroupView& g) {
  std::map<std::string, Relation> rel;
  rel.emplace("M", multiplication_graph(g.base()));
  std::vector<Tuple> inv;
  for (ElementId a = 0; a < g.size(); ++a) inv.push_back({a, g.inverse(a)});
  rel.emplace("I", Relation(2, g.size(), std::move(inv)));
  rel.emplace("E", Relation(1, g.size(), {{g.identity()}}));
  return RelationalStructure(g.size(), std::move(rel));
}

Semigroup semigroup_of(const RelationalStructure& a) {
  const auto& m = a.relation("M");
  if (m.arity() != 3) throw ArityError("relation M must be ternary");
  const std::size_t n = a.universe_size();
  constexpr ElementId unset = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> cells(n * n, unset);
  for (const auto& t : m.tuples()) {
    auto& cell = cells[t[0] * n + t[1]];
    if (cell != unset) throw Error("relation M is not the graph of a function");
    cell = t[2];
  }
  if (std::find(cells.begin(), cells.end(), unset) != cells.end()) {
    throw Error("relation M is not total");
  }
  return Semigroup(CayleyTable(n, std::move(cells)));
}

}  // namespace relsg
