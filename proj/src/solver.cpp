#include "relsg/solver.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace relsg {

SolutionSet::SolutionSet(std::vector<std::string> variables, std::vector<Assignment> points)
    : variables_(std::move(variables)), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool SolutionSet::contains(const Assignment& point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

std::size_t SolutionSet::index_of(const std::string& variable) const {
  auto it = std::find(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end()) throw UnknownVariableError("unknown variable '" + variable + "'");
  return static_cast<std::size_t>(it - variables_.begin());
}

namespace {

struct Slot {
  bool is_var;
  std::uint32_t value;  // variable index or element id
};

struct CompiledAtom {
  const Relation* relation = nullptr;  // null for equality
  std::vector<Slot> slots;
  std::vector<std::uint32_t> vars;  // distinct variable indices
};

ElementId base_constant(const Constant& c, std::size_t universe) {
  const auto* id = std::get_if<ElementId>(&c.value);
  if (!id) {
    throw ElementRangeError("power constant " + to_string(c.value) +
                            " used over a base structure; solve over the power instead");
  }
  if (*id >= universe) {
    throw ElementRangeError("constant " + to_string(c.value) + " outside universe of size " +
                            std::to_string(universe));
  }
  return *id;
}

std::vector<CompiledAtom> compile(const RelationalStructure& a, const EquationSystem& sys) {
  std::map<std::string, std::uint32_t> index;
  for (std::size_t k = 0; k < sys.variables().size(); ++k) {
    index[sys.variables()[k]] = static_cast<std::uint32_t>(k);
  }
  std::vector<CompiledAtom> out;
  out.reserve(sys.size());
  for (const auto& atom : sys.atoms()) {
    CompiledAtom c;
    if (!atom.is_equality()) {
      c.relation = &a.relation(atom.name());
      if (c.relation->arity() != atom.args().size()) {
        throw ArityError("relation " + atom.name() + " has arity " +
                         std::to_string(c.relation->arity()) + " but atom " + to_string(atom) +
                         " has " + std::to_string(atom.args().size()) + " arguments");
      }
    } else if (atom.args().size() != 2) {
      throw ArityError("equality needs exactly two arguments");
    }
    for (const auto& t : atom.args()) {
      if (auto v = std::get_if<Variable>(&t)) {
        auto it = index.find(v->name);
        if (it == index.end()) throw UnknownVariableError("variable '" + v->name + "' is not declared");
        c.slots.push_back({true, it->second});
        if (std::find(c.vars.begin(), c.vars.end(), it->second) == c.vars.end()) {
          c.vars.push_back(it->second);
        }
      } else {
        c.slots.push_back({false, base_constant(std::get<Constant>(t), a.universe_size())});
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

class Search {
 public:
  Search(const RelationalStructure& a, std::vector<CompiledAtom> atoms, std::size_t nvars,
         const SolveOptions& options)
      : atoms_(std::move(atoms)),
        universe_(a.universe_size()),
        nvars_(nvars),
        options_(options),
        by_var_(nvars),
        value_(nvars, 0),
        assigned_(nvars, 0) {
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      for (auto v : atoms_[k].vars) by_var_[v].push_back(k);
    }
  }

  std::vector<Assignment> run() {
    using Domains = std::vector<std::vector<char>>;
    Domains domains(nvars_, std::vector<char>(universe_, 1));
    for (std::size_t k = 0; k < atoms_.size(); ++k) {
      if (atoms_[k].vars.empty()) {
        if (!holds(atoms_[k])) return {};
      } else if (options_.propagate && atoms_[k].vars.size() == 1) {
        if (!filter(atoms_[k], atoms_[k].vars.front(), domains[atoms_[k].vars.front()])) return {};
      }
    }
    descend(0, domains);
    return std::move(found_);
  }

 private:
  bool holds(const CompiledAtom& atom) {
    buffer_.clear();
    for (const auto& s : atom.slots) buffer_.push_back(s.is_var ? value_[s.value] : s.value);
    if (!atom.relation) return buffer_[0] == buffer_[1];
    return atom.relation->contains(buffer_);
  }

  /// Restricts `domain` of `var` to values satisfying `atom`, all other
  /// variables of which are assigned.  False if the domain empties.
  bool filter(const CompiledAtom& atom, std::uint32_t v, std::vector<char>& domain) {
    bool any = false;
    for (ElementId x = 0; x < universe_; ++x) {
      if (!domain[x]) continue;
      value_[v] = x;
      if (holds(atom)) {
        any = true;
      } else {
        domain[x] = 0;
      }
    }
    return any;
  }

  void descend(std::size_t depth, const std::vector<std::vector<char>>& domains) {
    if (depth == nvars_) {
      found_.push_back(value_);
      return;
    }
    const auto v = static_cast<std::uint32_t>(depth);
    for (ElementId x = 0; x < universe_; ++x) {
      if (!domains[v][x]) continue;
      if (++nodes_ > options_.max_nodes) {
        throw BudgetExceededError("search nodes", options_.max_nodes, nodes_);
      }
      value_[v] = x;
      assigned_[v] = 1;
      auto next = domains;
      if (consistent(v, next)) descend(depth + 1, next);
      assigned_[v] = 0;
    }
  }

  bool consistent(std::uint32_t v, std::vector<std::vector<char>>& domains) {
    for (auto k : by_var_[v]) {
      const auto& atom = atoms_[k];
      std::uint32_t free_var = 0;
      std::size_t free_count = 0;
      for (auto u : atom.vars) {
        if (!assigned_[u]) {
          free_var = u;
          ++free_count;
        }
      }
      if (free_count == 0) {
        if (!holds(atom)) return false;
      } else if (free_count == 1 && options_.propagate) {
        const ElementId saved = value_[free_var];
        const bool ok = filter(atom, free_var, domains[free_var]);
        value_[free_var] = saved;
        if (!ok) return false;
      }
    }
    return true;
  }

  std::vector<CompiledAtom> atoms_;
  std::size_t universe_;
  std::size_t nvars_;
  SolveOptions options_;
  std::vector<std::vector<std::size_t>> by_var_;
  Assignment value_;
  std::vector<char> assigned_;
  std::vector<ElementId> buffer_;
  std::vector<Assignment> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolutionSet solve(const RelationalStructure& a, const EquationSystem& sys,
                  const SolveOptions& options) {
  if (sys.variables().size() > options.max_variables) {
    throw BudgetExceededError("variables", options.max_variables, sys.variables().size());
  }
  if (a.universe_size() > options.max_universe) {
    throw BudgetExceededError("universe size", options.max_universe, a.universe_size());
  }
  Search search(a, compile(a, sys), sys.variables().size(), options);
  return SolutionSet(sys.variables(), search.run());
}

bool satisfies(const RelationalStructure& a, const EquationSystem& sys, const Assignment& point) {
  if (point.size() != sys.variables().size()) {
    throw Error("point has " + std::to_string(point.size()) + " coordinates, expected " +
                std::to_string(sys.variables().size()));
  }
  const auto atoms = compile(a, sys);
  std::vector<ElementId> buf;
  for (const auto& atom : atoms) {
    buf.clear();
    for (const auto& s : atom.slots) buf.push_back(s.is_var ? point.at(s.value) : s.value);
    const bool ok = atom.relation ? atom.relation->contains(buf) : buf[0] == buf[1];
    if (!ok) return false;
  }
  return true;
}

SolutionSet project_solutions(const SolutionSet& sol, std::span<const std::string> vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) idx.push_back(sol.index_of(v));
  std::vector<Assignment> points;
  points.reserve(sol.size());
  for (const auto& p : sol.points()) {
    Assignment q;
    q.reserve(idx.size());
    for (auto k : idx) q.push_back(p[k]);
    points.push_back(std::move(q));
  }
  return SolutionSet(std::vector<std::string>(vars.begin(), vars.end()), std::move(points));
}

bool systems_equivalent(const RelationalStructure& a, const EquationSystem& s1,
                        const EquationSystem& s2, const SolveOptions& options) {
  const auto lhs = s1.with_variables(s2.variables());
  const EquationSystem rhs(s2.atoms(), lhs.variables());
  return solve(a, lhs, options).points() == solve(a, rhs, options).points();
}

}  // namespace relsg
