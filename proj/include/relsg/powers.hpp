#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relsg/equation.hpp"
#include "relsg/qi.hpp"
#include "relsg/relational.hpp"
#include "relsg/solver.hpp"

namespace relsg {

/// A relational structure raised to a finite exponent N.  Relations hold
/// coordinatewise and are evaluated on demand; tuples of the power are never
/// materialized.
class PowerStructure {
 public:
  /// Throws Error when exponent is 0.
  PowerStructure(RelationalStructure base, std::size_t exponent);

  const RelationalStructure& base() const noexcept { return base_; }
  std::size_t exponent() const noexcept { return exponent_; }

  /// R(t1, ..., tk) iff R(t1[i], ..., tk[i]) in the base for every i.
  bool holds(const std::string& relation, std::span<const PowerTuple> args) const;

 private:
  RelationalStructure base_;
  std::size_t exponent_;
};

/// The coordinate-`i` value of a constant; base ids are diagonal.  Throws
/// RaggedConstantError when a tuple's length is not `exponent`.
ElementId coordinate_of(const ElementRef& ref, std::size_t i, std::size_t exponent);

/// Replaces every power constant by its i-th entry.
Atom project_equation(const Atom& atom, std::size_t i, std::size_t exponent);
EquationSystem project_system(const EquationSystem& sys, std::size_t i, std::size_t exponent);

/// Checks that every tuple constant has length `exponent`.
void validate_constants(const EquationSystem& sys, std::size_t exponent);

struct PowerSolveOptions {
  SolveOptions base;
  /// Solve coordinates concurrently.  Results are joined in coordinate order.
  bool parallel = true;
};

/// Solution set over a power held as the product of the per-coordinate
/// solution sets.  A point is one PowerTuple per variable.
class ProductSolutionSet {
 public:
  ProductSolutionSet(std::vector<std::string> variables, std::vector<SolutionSet> coordinates);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t exponent() const noexcept { return coordinates_.size(); }
  const SolutionSet& coordinate(std::size_t i) const { return coordinates_.at(i); }
  const std::vector<SolutionSet>& coordinates() const noexcept { return coordinates_; }

  bool empty() const;
  /// Product of the coordinate counts.  Throws std::overflow_error past 2^64.
  std::uint64_t count() const;

  bool contains(std::span<const PowerTuple> point) const;

  /// Visits points in lexicographic order of coordinate indices until the
  /// visitor returns false.
  void for_each(const std::function<bool(const std::vector<PowerTuple>&)>& visit) const;

  /// At most `limit` points, in for_each order.
  std::vector<std::vector<PowerTuple>> points(std::size_t limit) const;

  ProductSolutionSet project(std::span<const std::string> vars) const;

 private:
  std::vector<std::string> variables_;
  std::vector<SolutionSet> coordinates_;
};

/// Solves each projection over the base and keeps the product.
ProductSolutionSet solve_power(const PowerStructure& p, const EquationSystem& sys,
                               const PowerSolveOptions& options = {});

/// True iff the point satisfies every atom of `sys` over the power.
bool satisfies(const PowerStructure& p, const EquationSystem& sys,
               std::span<const PowerTuple> point);

struct ConsistencyReport {
  bool consistent = true;
  std::size_t coordinate = 0;             // first inconsistent projection
  std::vector<std::size_t> witness_positions;  // atom positions in the input
  EquationSystem witness;                  // inconsistent finite subsystem
};

/// Finds the first coordinate whose projection is inconsistent and shrinks
/// the system to an irreducible subsystem whose projection there is still
/// inconsistent (each atom is dropped in turn when that keeps it so).
ConsistencyReport check_consistency(const PowerStructure& p, const EquationSystem& sys,
                                    const SolveOptions& options = {});

/// Bucket tags.  The first seven cover M-atoms and equalities; the
/// remaining ones hold ground M-atoms and the group relations I and E with
/// constants.
enum class BucketTag {
  cij,   // M(c, x_i, x_j)
  icj,   // M(x_i, c, x_j)
  ijc,   // M(x_i, x_j, c)
  cci,   // M(c, d, x_i)
  cic,   // M(c, x_i, d)
  icc,   // M(x_i, c, d)
  zero,  // x_i = x_j, x_i = c, c = d, M(x_i, x_j, x_k), other relations
  ccc,   // M(c, d, f)
  inverse_ic,  // I(x_i, c)
  inverse_ci,  // I(c, x_i)
  inverse_cc,  // I(c, d)
  identity_c,  // E(c)
};

const char* to_string(BucketTag tag) noexcept;

struct Bucket {
  BucketTag tag;
  std::vector<std::string> variables;  // pattern variables, in argument order
  std::vector<std::size_t> positions;  // positions of the members in the input
  std::vector<Atom> atoms;
};

/// Groups every atom by its constant/variable pattern and its variables.
/// Buckets appear in order of their first member; all zero-tagged atoms
/// share one bucket.
std::vector<Bucket> decompose(const EquationSystem& sys);

class QiViolatedError : public Error {
 public:
  explicit QiViolatedError(QiResult result);
  const QiResult& result() const noexcept { return result_; }

 private:
  QiResult result_;
};

struct ReductionResult {
  EquationSystem reduced;
  std::vector<std::size_t> kept_positions;  // ascending positions in the input
  std::size_t bucket_count = 0;             // constant-bearing buckets
  std::size_t zero_distinct = 0;            // distinct zero-bucket atoms
  bool inconsistent = false;
  ConsistencyReport consistency;
};

/// Replaces a system over a power of a predicatized semigroup (or group) by
/// a finite subsystem with the same solutions: the first atom of every
/// constant-bearing bucket plus the distinct zero-bucket atoms.  An
/// inconsistent input yields its inconsistent witness subsystem instead.
/// Throws QiViolatedError when the base semigroup fails either law.
ReductionResult reduce_to_finite(const PowerStructure& p, const EquationSystem& sys,
                                 const PowerSolveOptions& options = {});

class QiHoldsError : public Error {
 public:
  QiHoldsError() : Error("both quasi-identities hold; there is no counterexample chain") {}
};

struct ChainPoint {
  std::size_t n;                   // satisfies equations 1..n
  PowerTuple point;
  std::size_t failing_coordinate;  // 0-based coordinate where equation n+1 fails
};

struct ChainReport {
  QiSide side = QiSide::left;
  QiWitness witness{};
  ElementId c = 0;  // common premise value
  std::size_t exponent = 0;
  std::vector<Atom> equations;         // equation n at index n-1
  std::vector<std::uint64_t> counts;   // solutions of the prefix {eq_1..eq_n}
  std::vector<ChainPoint> points;      // n = 1..exponent-1
  bool strictly_decreasing = false;
};

/// Builds, over the power of exponent N, the equations
///   M([b x n, a, a, ...], x, [b*alpha x n, c, c, ...])    n = 1..N
/// from a witness of the failing left law (mirrored with x on the left for
/// the right law), together with the prefix solution counts and the points
/// [alpha x n, beta, beta, ...] that satisfy exactly the first n equations.
/// Throws QiHoldsError.
ChainReport counterexample_chain(const Semigroup& s, std::size_t exponent,
                                 const PowerSolveOptions& options = {});

}  // namespace relsg
