#pragma once

#include <optional>

#include "relsg/semigroup.hpp"

namespace relsg {

/// Which cancellation-transfer law a result refers to.
///   left:  a*alpha = a*beta  ->  b*alpha = b*beta
///   right: alpha*a = beta*a  ->  alpha*b = beta*b
enum class QiSide { left, right };

const char* to_string(QiSide side) noexcept;

/// Elements (a, b, alpha, beta) falsifying a law, with the four products in
/// the order they appear in the law: for the left law a*alpha, a*beta,
/// b*alpha, b*beta; for the right law alpha*a, beta*a, alpha*b, beta*b.
struct QiWitness {
  ElementId a, b, alpha, beta;
  ElementId premise_alpha, premise_beta, conclusion_alpha, conclusion_beta;

  /// Same witness with alpha and beta ordered ascending.  The laws are
  /// symmetric in alpha and beta.
  QiWitness canonical() const;

  friend bool operator==(const QiWitness&, const QiWitness&) = default;
};

struct QiResult {
  QiSide side = QiSide::left;
  bool holds = true;
  std::optional<QiWitness> witness;
};

/// Scans pairs alpha < beta; for each pair with some a*alpha = a*beta it
/// requires b*alpha = b*beta for every b.  The first failure is returned.
QiResult check_left_qi(const Semigroup& s);
QiResult check_right_qi(const Semigroup& s);

inline bool qis_hold(const Semigroup& s) {
  return check_left_qi(s).holds && check_right_qi(s).holds;
}

}  // namespace relsg
