#include "relsg/powers.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace relsg {

PowerStructure::PowerStructure(RelationalStructure base, std::size_t exponent)
    : base_(std::move(base)), exponent_(exponent) {
  if (exponent_ == 0) throw Error("power exponent must be at least 1");
}

bool PowerStructure::holds(const std::string& relation, std::span<const PowerTuple> args) const {
  const auto& rel = base_.relation(relation);
  if (rel.arity() != args.size()) {
    throw ArityError("relation " + relation + " has arity " + std::to_string(rel.arity()));
  }
  std::vector<ElementId> column(args.size());
  for (std::size_t i = 0; i < exponent_; ++i) {
    for (std::size_t k = 0; k < args.size(); ++k) {
      if (args[k].coords.size() != exponent_) {
        throw RaggedConstantError("power element of length " +
                                  std::to_string(args[k].coords.size()) + " in a power of exponent " +
                                  std::to_string(exponent_));
      }
      column[k] = args[k].coords[i];
    }
    if (!rel.contains(column)) return false;
  }
  return true;
}

ElementId coordinate_of(const ElementRef& ref, std::size_t i, std::size_t exponent) {
  if (i >= exponent) {
    throw ElementRangeError("coordinate " + std::to_string(i) + " outside exponent " +
                            std::to_string(exponent));
  }
  if (auto id = std::get_if<ElementId>(&ref)) return *id;
  const auto& t = std::get<PowerTuple>(ref);
  if (t.coords.size() != exponent) {
    throw RaggedConstantError("constant " + to_string(ref) + " has length " +
                              std::to_string(t.coords.size()) + ", expected " +
                              std::to_string(exponent));
  }
  return t.coords[i];
}

Atom project_equation(const Atom& atom, std::size_t i, std::size_t exponent) {
  std::vector<Term> args;
  args.reserve(atom.args().size());
  for (const auto& t : atom.args()) {
    if (auto c = std::get_if<Constant>(&t)) {
      args.push_back(Constant{coordinate_of(c->value, i, exponent)});
    } else {
      args.push_back(t);
    }
  }
  if (atom.is_equality()) return Atom::equality(std::move(args[0]), std::move(args[1]));
  return Atom::relation(atom.name(), std::move(args));
}

EquationSystem project_system(const EquationSystem& sys, std::size_t i, std::size_t exponent) {
  std::vector<Atom> atoms;
  atoms.reserve(sys.size());
  for (const auto& a : sys.atoms()) atoms.push_back(project_equation(a, i, exponent));
  return EquationSystem(std::move(atoms), sys.variables());
}

void validate_constants(const EquationSystem& sys, std::size_t exponent) {
  for (const auto& a : sys.atoms()) {
    for (const auto& t : a.args()) {
      if (auto c = std::get_if<Constant>(&t)) coordinate_of(c->value, 0, exponent);
    }
  }
}

ProductSolutionSet::ProductSolutionSet(std::vector<std::string> variables,
                                       std::vector<SolutionSet> coordinates)
    : variables_(std::move(variables)), coordinates_(std::move(coordinates)) {
  for (const auto& c : coordinates_) {
    if (c.variables() != variables_) throw Error("coordinate solution sets disagree on variables");
  }
}

bool ProductSolutionSet::empty() const {
  return std::any_of(coordinates_.begin(), coordinates_.end(),
                     [](const SolutionSet& s) { return s.empty(); });
}

std::uint64_t ProductSolutionSet::count() const {
  std::uint64_t total = 1;
  for (const auto& c : coordinates_) {
    const std::uint64_t k = c.size();
    if (k == 0) return 0;
    if (total > std::numeric_limits<std::uint64_t>::max() / k) {
      throw std::overflow_error("solution count exceeds 64 bits");
    }
    total *= k;
  }
  return total;
}

bool ProductSolutionSet::contains(std::span<const PowerTuple> point) const {
  if (point.size() != variables_.size()) return false;
  Assignment column(point.size());
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    for (std::size_t k = 0; k < point.size(); ++k) {
      if (point[k].coords.size() != coordinates_.size()) return false;
      column[k] = point[k].coords[i];
    }
    if (!coordinates_[i].contains(column)) return false;
  }
  return true;
}

void ProductSolutionSet::for_each(
    const std::function<bool(const std::vector<PowerTuple>&)>& visit) const {
  if (empty()) return;
  const std::size_t N = coordinates_.size();
  std::vector<std::size_t> digit(N, 0);
  std::vector<PowerTuple> point(variables_.size(), PowerTuple{std::vector<ElementId>(N)});
  while (true) {
    for (std::size_t i = 0; i < N; ++i) {
      const auto& p = coordinates_[i].points()[digit[i]];
      for (std::size_t k = 0; k < p.size(); ++k) point[k].coords[i] = p[k];
    }
    if (!visit(point)) return;
    std::size_t i = N;
    while (i > 0) {
      --i;
      if (++digit[i] < coordinates_[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<std::vector<PowerTuple>> ProductSolutionSet::points(std::size_t limit) const {
  std::vector<std::vector<PowerTuple>> out;
  if (limit == 0) return out;
  for_each([&](const std::vector<PowerTuple>& p) {
    out.push_back(p);
    return out.size() < limit;
  });
  return out;
}

ProductSolutionSet ProductSolutionSet::project(std::span<const std::string> vars) const {
  std::vector<SolutionSet> projected;
  projected.reserve(coordinates_.size());
  for (const auto& c : coordinates_) projected.push_back(project_solutions(c, vars));
  if (coordinates_.empty()) {
    for (const auto& v : vars) {
      if (std::find(variables_.begin(), variables_.end(), v) == variables_.end()) {
        throw UnknownVariableError("unknown variable '" + v + "'");
      }
    }
  }
  return ProductSolutionSet(std::vector<std::string>(vars.begin(), vars.end()),
                            std::move(projected));
}

ProductSolutionSet solve_power(const PowerStructure& p, const EquationSystem& sys,
                               const PowerSolveOptions& options) {
  validate_constants(sys, p.exponent());
  const std::size_t N = p.exponent();
  std::vector<SolutionSet> coords(N);
  if (options.parallel && N > 1) {
    std::vector<std::future<SolutionSet>> jobs;
    jobs.reserve(N);
    for (std::size_t i = 0; i < N; ++i) {
      jobs.push_back(std::async(std::launch::async, [&, i] {
        return solve(p.base(), project_system(sys, i, N), options.base);
      }));
    }
    for (std::size_t i = 0; i < N; ++i) coords[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < N; ++i) {
      coords[i] = solve(p.base(), project_system(sys, i, N), options.base);
    }
  }
  return ProductSolutionSet(sys.variables(), std::move(coords));
}

bool satisfies(const PowerStructure& p, const EquationSystem& sys,
               std::span<const PowerTuple> point) {
  if (point.size() != sys.variables().size()) {
    throw Error("point has " + std::to_string(point.size()) + " coordinates, expected " +
                std::to_string(sys.variables().size()));
  }
  const std::size_t N = p.exponent();
  for (std::size_t i = 0; i < N; ++i) {
    Assignment column(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) column[k] = coordinate_of(point[k], i, N);
    if (!satisfies(p.base(), project_system(sys, i, N), column)) return false;
  }
  return true;
}

ConsistencyReport check_consistency(const PowerStructure& p, const EquationSystem& sys,
                                    const SolveOptions& options) {
  validate_constants(sys, p.exponent());
  const std::size_t N = p.exponent();
  for (std::size_t i = 0; i < N; ++i) {
    const auto projected = project_system(sys, i, N);
    if (!solve(p.base(), projected, options).empty()) continue;

    std::vector<std::size_t> keep(sys.size());
    for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      std::vector<std::size_t> trial;
      for (auto pos : keep) {
        if (pos != k) trial.push_back(pos);
      }
      if (solve(p.base(), projected.subsystem(trial), options).empty()) keep = std::move(trial);
    }
    ConsistencyReport report;
    report.consistent = false;
    report.coordinate = i;
    report.witness = sys.subsystem(keep);
    report.witness_positions = std::move(keep);
    return report;
  }
  return {};
}

const char* to_string(BucketTag tag) noexcept {
  switch (tag) {
    case BucketTag::cij:
      return "S_cij";
    case BucketTag::icj:
      return "S_icj";
    case BucketTag::ijc:
      return "S_ijc";
    case BucketTag::cci:
      return "S_cci";
    case BucketTag::cic:
      return "S_cic";
    case BucketTag::icc:
      return "S_icc";
    case BucketTag::zero:
      return "S_0";
    case BucketTag::ccc:
      return "S_ccc";
    case BucketTag::inverse_ic:
      return "I_ic";
    case BucketTag::inverse_ci:
      return "I_ci";
    case BucketTag::inverse_cc:
      return "I_cc";
    case BucketTag::identity_c:
      return "E_c";
  }
  return "unknown";
}

namespace {

std::pair<BucketTag, std::vector<std::string>> classify_atom(const Atom& atom) {
  std::string pattern;
  std::vector<std::string> vars;
  for (const auto& t : atom.args()) {
    if (auto v = std::get_if<Variable>(&t)) {
      pattern += 'x';
      vars.push_back(v->name);
    } else {
      pattern += 'c';
    }
  }
  if (atom.is_equality()) return {BucketTag::zero, {}};
  if (atom.name() == "M" && pattern.size() == 3) {
    static const std::map<std::string, BucketTag> m = {
        {"cxx", BucketTag::cij}, {"xcx", BucketTag::icj}, {"xxc", BucketTag::ijc},
        {"ccx", BucketTag::cci}, {"cxc", BucketTag::cic}, {"xcc", BucketTag::icc},
        {"ccc", BucketTag::ccc}};
    if (auto it = m.find(pattern); it != m.end()) return {it->second, vars};
    return {BucketTag::zero, {}};
  }
  if (atom.name() == "I" && pattern.size() == 2) {
    if (pattern == "xc") return {BucketTag::inverse_ic, vars};
    if (pattern == "cx") return {BucketTag::inverse_ci, vars};
    if (pattern == "cc") return {BucketTag::inverse_cc, vars};
    return {BucketTag::zero, {}};
  }
  if (atom.name() == "E" && pattern == "c") return {BucketTag::identity_c, vars};
  return {BucketTag::zero, {}};
}

}  // namespace

std::vector<Bucket> decompose(const EquationSystem& sys) {
  std::vector<Bucket> buckets;
  std::map<std::pair<BucketTag, std::vector<std::string>>, std::size_t> index;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    const auto& atom = sys.atoms()[k];
    auto key = classify_atom(atom);
    auto [it, inserted] = index.emplace(key, buckets.size());
    if (inserted) buckets.push_back(Bucket{key.first, key.second, {}, {}});
    auto& b = buckets[it->second];
    b.positions.push_back(k);
    b.atoms.push_back(atom);
  }
  return buckets;
}

QiViolatedError::QiViolatedError(QiResult result)
    : Error(std::string("the ") + to_string(result.side) +
            " quasi-identity fails; finite reduction is unsound"),
      result_(std::move(result)) {}

namespace {

QiResult failing_qi(const Semigroup& s) {
  auto left = check_left_qi(s);
  if (!left.holds) return left;
  return check_right_qi(s);
}

}  // namespace

ReductionResult reduce_to_finite(const PowerStructure& p, const EquationSystem& sys,
                                 const PowerSolveOptions& options) {
  const Semigroup s = semigroup_of(p.base());
  if (auto qi = failing_qi(s); !qi.holds) throw QiViolatedError(std::move(qi));

  ReductionResult result;
  result.consistency = check_consistency(p, sys, options.base);
  if (!result.consistency.consistent) {
    result.inconsistent = true;
    result.kept_positions = result.consistency.witness_positions;
    result.reduced = result.consistency.witness;
    return result;
  }

  std::vector<std::size_t> keep;
  for (const auto& bucket : decompose(sys)) {
    if (bucket.tag != BucketTag::zero) {
      ++result.bucket_count;
      keep.push_back(bucket.positions.front());
      continue;
    }
    std::set<Atom> seen;
    for (std::size_t k = 0; k < bucket.atoms.size(); ++k) {
      if (seen.insert(bucket.atoms[k]).second) keep.push_back(bucket.positions[k]);
    }
    result.zero_distinct = seen.size();
  }
  std::sort(keep.begin(), keep.end());
  result.reduced = sys.subsystem(keep);
  result.kept_positions = std::move(keep);
  return result;
}

ChainReport counterexample_chain(const Semigroup& s, std::size_t exponent,
                                 const PowerSolveOptions& options) {
  if (exponent == 0) throw Error("chain exponent must be at least 1");
  const QiResult qi = failing_qi(s);
  if (qi.holds) throw QiHoldsError();

  ChainReport report;
  report.side = qi.side;
  report.witness = *qi.witness;
  report.exponent = exponent;
  const auto& w = report.witness;
  report.c = w.premise_alpha;
  const ElementId target = w.conclusion_alpha;  // b*alpha (left) or alpha*b (right)

  for (std::size_t n = 1; n <= exponent; ++n) {
    std::vector<ElementId> factor(exponent, w.a), value(exponent, report.c);
    for (std::size_t k = 0; k < n; ++k) {
      factor[k] = w.b;
      value[k] = target;
    }
    if (qi.side == QiSide::left) {
      report.equations.push_back(Atom::relation("M", {constant(factor), var("x"), constant(value)}));
    } else {
      report.equations.push_back(Atom::relation("M", {var("x"), constant(factor), constant(value)}));
    }
  }

  const PowerStructure power(predicatize_semigroup(s), exponent);
  for (std::size_t n = 1; n <= exponent; ++n) {
    EquationSystem prefix(
        std::vector<Atom>(report.equations.begin(), report.equations.begin() + n));
    report.counts.push_back(solve_power(power, prefix, options).count());
  }
  report.strictly_decreasing = report.counts.back() > 0;
  for (std::size_t k = 1; k < report.counts.size(); ++k) {
    if (!(report.counts[k] < report.counts[k - 1])) report.strictly_decreasing = false;
  }

  for (std::size_t n = 1; n < exponent; ++n) {
    std::vector<ElementId> coords(exponent, w.beta);
    for (std::size_t k = 0; k < n; ++k) coords[k] = w.alpha;
    PowerTuple point{coords};
    const EquationSystem first_n(
        std::vector<Atom>(report.equations.begin(), report.equations.begin() + n));
    const std::vector<PowerTuple> args{point};
    if (!satisfies(power, first_n, args)) {
      throw std::logic_error("chain point does not satisfy its prefix");
    }
    // Equation n+1 fails exactly at coordinate n.
    const auto& next = report.equations[n];
    const EquationSystem single(std::vector<Atom>{next});
    if (satisfies(power.base(), project_system(single, n, exponent), {coords[n]})) {
      throw std::logic_error("chain point satisfies the next equation");
    }
    report.points.push_back({n, std::move(point), n});
  }
  return report;
}

}  // namespace relsg
