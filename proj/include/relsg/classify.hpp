#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "relsg/qi.hpp"
#include "relsg/semigroup.hpp"

namespace relsg {

enum class Verdict { simple, hard };

const char* to_string(Verdict v) noexcept;

/// Everything the survey and the `check` command report about a semigroup.
struct ClassificationReport {
  QiResult qi_left;
  QiResult qi_right;
  SubsetReport kernel;
  SubsetReport reducible;
  bool is_homogroup = false;
  std::optional<ElementId> kernel_identity;
  bool is_rect_band_kernel = false;
  /// simple iff both laws hold: then every direct power of Pr(S) is
  /// equationally Noetherian.
  Verdict verdict = Verdict::hard;

  bool kernel_equals_reducible() const { return kernel.members == reducible.members; }
};

ClassificationReport classify(const Semigroup& s);

/// Whether the kernel, viewed as a semigroup, is a rectangular band of groups.
bool kernel_is_rectangular_band_of_groups(const Semigroup& s);

// ---------------------------------------------------------------------------
// Enumeration

enum class EnumerationMode { labeled, up_to_isomorphism };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::labeled;
  std::size_t max_order = 4;
  /// Split the search by the value of the (0, 0) cell and run the parts
  /// concurrently; output order is unchanged.
  bool parallel = true;
};

/// Order 5 can be enumerated when explicitly allowed; beyond that the
/// search is refused whatever the options say.
inline constexpr std::size_t hard_max_order = 5;

/// Lexicographically least relabelling of the table over all n!
/// permutations.
CayleyTable canonical_form(const CayleyTable& t);

/// Every associative table of order n, in lexicographic order of the
/// row-major cells.  In isomorphism mode only tables equal to their
/// canonical form are kept.  Throws OrderTooLargeError.
std::vector<Semigroup> enumerate_semigroups(std::size_t n, const EnumerationOptions& options = {});

/// Streaming variant; the visitor runs on the calling thread.
void for_each_semigroup(std::size_t n, const EnumerationOptions& options,
                        const std::function<void(const Semigroup&)>& visit);

// ---------------------------------------------------------------------------
// Survey

/// Per-semigroup outcome of the checks run by the survey.
struct TheoremChecks {
  bool qi_pass = false;
  bool homogroup = false;
  bool ker_eq_red = false;
  bool kernel_rect_band = false;
  bool theorem3_violated = false;  // homogroup whose kernel identity is not idempotent and central
  bool theorem4_violated = false;  // both laws hold but Ker != Red or the kernel is no rectangular band of groups
  bool theorem5_violated = false;  // homogroup with Ker = Red failing a law
  bool conjecture_premise = false;  // Ker = Red and the kernel is a rectangular band of groups
  bool conjecture_counterexample = false;  // premise holds but a law fails
};

TheoremChecks check_theorems(const Semigroup& s);

struct SurveyOutcome {
  std::size_t order = 0;
  std::size_t total_tables = 0;
  std::size_t qi_pass_count = 0;
  std::size_t homogroup_count = 0;
  std::size_t conjecture_premise_count = 0;
  std::vector<CayleyTable> theorem3_violations;
  std::vector<CayleyTable> theorem4_violations;
  std::vector<CayleyTable> theorem5_violations;
  std::vector<CayleyTable> conjecture_counterexamples;
};

SurveyOutcome survey(std::size_t n, const EnumerationOptions& options = {});

}  // namespace relsg
