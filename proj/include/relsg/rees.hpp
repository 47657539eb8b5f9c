#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "relsg/semigroup.hpp"

namespace relsg {

/// Group G, index sets Lambda and I, and the |I| x |Lambda| sandwich matrix
/// P over G.  Row index comes from I and column index from Lambda, so the
/// entry used by (lambda, g, i)(mu, h, j) is sandwich[i][mu].
struct ReesSpec {
  GroupView group;
  std::size_t lambda_size = 1;
  std::size_t i_size = 1;
  std::vector<std::vector<ElementId>> sandwich;

  ElementId entry(std::size_t i, std::size_t mu) const { return sandwich.at(i).at(mu); }
};

/// An element (lambda, g, i) of a Rees matrix semigroup.
struct ReesTriple {
  std::size_t lambda;
  ElementId g;
  std::size_t i;

  friend bool operator==(const ReesTriple&, const ReesTriple&) = default;
  friend auto operator<=>(const ReesTriple&, const ReesTriple&) = default;
};

/// A semigroup whose elements carry Rees coordinates; `labels` is a
/// bijection from ids onto Lambda x G x I.
struct LabeledSemigroup {
  Semigroup semigroup;
  std::vector<ReesTriple> labels;

  ElementId id_of(const ReesTriple& t) const;
};

/// Checks matrix shape and entry range; throws ReesSpecError.
void validate_shape(const ReesSpec& spec);

/// Checks that row 0 and column 0 of the sandwich are the identity; throws
/// NormalizationError at the first offending entry.
void validate_normalized(const ReesSpec& spec);

/// Id assigned to (lambda, g, i) by rees_construct:
/// (lambda * |G| + g) * |I| + i.
ElementId rees_id(const ReesSpec& spec, const ReesTriple& t);

/// Builds the semigroup on Lambda x G x I with
/// (lambda, g, i)(mu, h, j) = (lambda, g p[i][mu] h, j).
LabeledSemigroup rees_construct(const ReesSpec& spec);

struct Coordinatization {
  ReesSpec spec;
  LabeledSemigroup labeled;  // the input semigroup with its Rees labels
};

/// Recovers a normalized Rees description of a finite simple semigroup.
/// The basepoint is the smallest idempotent; its R-class is lambda 0 and its
/// L-class is i 0, and the maximal subgroup around it becomes G with the
/// basepoint as identity 0.  Throws NotSimpleError.
Coordinatization coordinatize_simple(const Semigroup& s);

/// True iff the products of idempotents are idempotent.
bool idempotents_closed(const Semigroup& s);

/// True iff every sandwich entry is the group identity.
bool sandwich_is_trivial(const ReesSpec& spec);

struct RectangularBandCheck {
  bool simple = false;
  bool by_sandwich = false;
  bool by_idempotents = false;
};

/// Both criteria, evaluated independently.  Non-simple input reports false
/// for both.
RectangularBandCheck rectangular_band_check(const Semigroup& s);

/// Throws std::logic_error if the two criteria ever disagree.
bool is_rectangular_band_of_groups(const Semigroup& s);

}  // namespace relsg
