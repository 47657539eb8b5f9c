#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "relsg/semigroup.hpp"

namespace relsg {

using Tuple = std::vector<ElementId>;

/// A finite relation of fixed arity over [0, universe).
class Relation {
 public:
  Relation(std::size_t arity, std::size_t universe, std::vector<Tuple> tuples);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  /// Sorted, duplicate-free.
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

  /// `args` must have length arity() with entries in range.
  bool contains(std::span<const ElementId> args) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.arity_ == b.arity_ && a.tuples_ == b.tuples_;
  }

 private:
  std::size_t arity_;
  std::size_t universe_;
  std::vector<Tuple> tuples_;
  std::vector<bool> dense_;  // empty when the index space is too large
};

class RelationalStructure {
 public:
  RelationalStructure(std::size_t universe_size, std::map<std::string, Relation> relations);

  std::size_t universe_size() const noexcept { return universe_size_; }
  bool has_relation(const std::string& name) const { return relations_.count(name) != 0; }
  /// Throws UnknownRelationError.
  const Relation& relation(const std::string& name) const;
  const std::map<std::string, Relation>& relations() const noexcept { return relations_; }

  friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;

 private:
  std::size_t universe_size_;
  std::map<std::string, Relation> relations_;
};

/// M = {(a, b, a*b)}.
RelationalStructure predicatize_semigroup(const Semigroup& s);

/// M as above, I = {(a, a^-1)}, E = {(e)}.
RelationalStructure predicatize_group(const GroupView& g);

/// Reads the multiplication back from a functional ternary relation M.
/// Throws Error when M is missing or is not the graph of an associative
/// operation.
Semigroup semigroup_of(const RelationalStructure& a);

}  // namespace relsg
