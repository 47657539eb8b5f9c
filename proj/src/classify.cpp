#include "relsg/classify.hpp"

#include "relsg/rees.hpp"

namespace relsg {

const char* to_string(Verdict v) noexcept { return v == Verdict::simple ? "simple" : "hard"; }

bool kernel_is_rectangular_band_of_groups(const Semigroup& s) {
  const auto k = kernel(s);
  return is_rectangular_band_of_groups(subsemigroup(s, k.members).semigroup);
}

ClassificationReport classify(const Semigroup& s) {
  const auto hg = is_homogroup(s);
  ClassificationReport r{check_left_qi(s), check_right_qi(s), kernel(s), reducible(s), hg.homogroup,
                         hg.kernel_identity};
  r.is_rect_band_kernel = kernel_is_rectangular_band_of_groups(s);
  r.verdict = r.qi_left.holds && r.qi_right.holds ? Verdict::simple : Verdict::hard;
  return r;
}

TheoremChecks check_theorems(const Semigroup& s) {
  const auto report = classify(s);
  TheoremChecks t;
  t.qi_pass = report.verdict == Verdict::simple;
  t.homogroup = report.is_homogroup;
  t.ker_eq_red = report.kernel_equals_reducible();
  t.kernel_rect_band = report.is_rect_band_kernel;
  if (t.homogroup) t.theorem3_violated = !verify_homogroup_center(s).holds;
  t.theorem4_violated = t.qi_pass && !(t.ker_eq_red && t.kernel_rect_band);
  t.theorem5_violated = t.homogroup && t.ker_eq_red && !t.qi_pass;
  t.conjecture_premise = t.ker_eq_red && t.kernel_rect_band;
  t.conjecture_counterexample = t.conjecture_premise && !t.qi_pass;
  return t;
}

SurveyOutcome survey(std::size_t n, const EnumerationOptions& options) {
  SurveyOutcome out;
  out.order = n;
  for_each_semigroup(n, options, [&](const Semigroup& s) {
    const auto t = check_theorems(s);
    ++out.total_tables;
    out.qi_pass_count += t.qi_pass;
    out.homogroup_count += t.homogroup;
    out.conjecture_premise_count += t.conjecture_premise;
    if (t.theorem3_violated) out.theorem3_violations.push_back(s.table());
    if (t.theorem4_violated) out.theorem4_violations.push_back(s.table());
    if (t.theorem5_violated) out.theorem5_violations.push_back(s.table());
    if (t.conjecture_counterexample) out.conjecture_counterexamples.push_back(s.table());
  });
  return out;
}

}  // namespace relsg
