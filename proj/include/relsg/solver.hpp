#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relsg/equation.hpp"
#include "relsg/relational.hpp"

namespace relsg {

struct SolveOptions {
  /// Forward checking: an atom with a single unassigned variable filters
  /// that variable's domain.  Never changes the answer.
  bool propagate = true;
  std::size_t max_variables = 32;
  std::size_t max_universe = 4096;
  std::uint64_t max_nodes = 200'000'000;
};

/// A point assigns one base element per variable, in variable order.
using Assignment = std::vector<ElementId>;

/// Exact, explicitly enumerated solution set over a base structure.
class SolutionSet {
 public:
  SolutionSet() = default;
  /// Points are sorted and deduplicated.
  SolutionSet(std::vector<std::string> variables, std::vector<Assignment> points);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Assignment>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  /// The originating system has no solution.
  bool inconsistent() const noexcept { return points_.empty(); }
  bool contains(const Assignment& point) const;
  /// Throws UnknownVariableError.
  std::size_t index_of(const std::string& variable) const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Assignment> points_;
};

/// All assignments of the system's variables satisfying every atom.
/// Constants must be base ids.  Throws BudgetExceededError,
/// UnknownRelationError, ArityError, ElementRangeError.
SolutionSet solve(const RelationalStructure& a, const EquationSystem& sys,
                  const SolveOptions& options = {});

/// True iff `point` (one value per system variable) satisfies every atom.
bool satisfies(const RelationalStructure& a, const EquationSystem& sys, const Assignment& point);

/// Pointwise restriction to `vars`, duplicates collapsed.
SolutionSet project_solutions(const SolutionSet& sol, std::span<const std::string> vars);

/// Solution sets compared over the union of both variable lists.
bool systems_equivalent(const RelationalStructure& a, const EquationSystem& s1,
                        const EquationSystem& s2, const SolveOptions& options = {});

}  // namespace relsg
