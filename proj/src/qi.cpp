#include "relsg/qi.hpp"

#include <utility>

namespace relsg {

const char* to_string(QiSide side) noexcept { return side == QiSide::left ? "left" : "right"; }

QiWitness QiWitness::canonical() const {
  if (alpha <= beta) return *this;
  return {a, b, beta, alpha, premise_beta, premise_alpha, conclusion_beta, conclusion_alpha};
}

namespace {

/// `mul(x, y)` is the product with x on the "acting" side: x*y for the
/// left law, y*x for the right law.
template <class Mul>
QiResult scan(const Semigroup& s, QiSide side, Mul mul) {
  const auto n = static_cast<ElementId>(s.size());
  QiResult result{side, true, std::nullopt};
  for (ElementId alpha = 0; alpha < n; ++alpha) {
    for (ElementId beta = alpha + 1; beta < n; ++beta) {
      std::optional<ElementId> premise;
      for (ElementId a = 0; a < n && !premise; ++a) {
        if (mul(a, alpha) == mul(a, beta)) premise = a;
      }
      if (!premise) continue;
      for (ElementId b = 0; b < n; ++b) {
        if (mul(b, alpha) != mul(b, beta)) {
          const ElementId a = *premise;
          result.holds = false;
          result.witness =
              QiWitness{a, b, alpha, beta, mul(a, alpha), mul(a, beta), mul(b, alpha), mul(b, beta)};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

QiResult check_left_qi(const Semigroup& s) {
  return scan(s, QiSide::left, [&s](ElementId x, ElementId y) { return s(x, y); });
}

QiResult check_right_qi(const Semigroup& s) {
  return scan(s, QiSide::right, [&s](ElementId x, ElementId y) { return s(y, x); });
}

}  // namespace relsg
