#include "doctest.h"

#include "oracles.hpp"
#include "rees_corpus.hpp"
#include "relsg/catalog.hpp"
#include "relsg/errors.hpp"
#include "relsg/rees.hpp"

using namespace relsg;

namespace {

ReesSpec spec(const Semigroup& group, std::size_t lam, std::size_t is,
              std::vector<std::vector<ElementId>> p) {
  return ReesSpec{as_group(group), lam, is, std::move(p)};
}

ReesSpec twisted() { return spec(catalog::cyclic(2), 2, 2, {{0, 0}, {0, 1}}); }

/// Direct evaluation of the triple product.
ReesTriple rees_product(const ReesSpec& s, const ReesTriple& x, const ReesTriple& y) {
  const auto& g = s.group;
  return {x.lambda, g(g(x.g, s.entry(x.i, y.lambda)), y.g), y.i};
}

}  // namespace

TEST_CASE("Rees construction") {
  SUBCASE("trivial group, one class each") {
    const auto l = rees_construct(spec(catalog::trivial(), 1, 1, {{0}}));
    CHECK(l.semigroup.size() == 1);
  }
  SUBCASE("a single cell is the group itself") {
    const auto l = rees_construct(spec(catalog::cyclic(2), 1, 1, {{0}}));
    CHECK(oracle::isomorphic(oracle::grid_of(l.semigroup), oracle::grid_of(catalog::cyclic(2))));
  }
  SUBCASE("twisted Z2 example") {
    const auto s = twisted();
    const auto l = rees_construct(s);
    CHECK(l.semigroup.size() == 8);
    const auto x = l.id_of({0, 0, 1});
    const auto y = l.id_of({1, 0, 0});
    CHECK(l.labels[l.semigroup(x, y)] == ReesTriple{0, 1, 0});
    CHECK(oracle::associative(oracle::grid_of(l.semigroup)));
    CHECK(is_simple(l.semigroup));
  }
  SUBCASE("ids follow (lambda * |G| + g) * |I| + i") {
    const auto s = twisted();
    CHECK(rees_id(s, {1, 1, 0}) == 6);
    CHECK(rees_id(s, {0, 0, 1}) == 1);
    const auto l = rees_construct(s);
    for (ElementId k = 0; k < l.semigroup.size(); ++k) CHECK(l.id_of(l.labels[k]) == k);
  }
  SUBCASE("rejected specs") {
    CHECK_THROWS_AS(rees_construct(spec(catalog::cyclic(2), 2, 2, {{0, 1}, {0, 0}})), NormalizationError);
    CHECK_THROWS_AS(rees_construct(spec(catalog::cyclic(2), 2, 2, {{0, 0}, {1, 0}})), NormalizationError);
    CHECK_THROWS_AS(rees_construct(spec(catalog::cyclic(2), 2, 2, {{0, 0}})), ReesSpecError);
    CHECK_THROWS_AS(rees_construct(spec(catalog::cyclic(2), 0, 1, {})), ReesSpecError);
    try {
      validate_normalized(spec(catalog::cyclic(2), 2, 2, {{0, 0}, {1, 0}}));
      FAIL("expected NormalizationError");
    } catch (const NormalizationError& e) {
      CHECK(e.row() == 1);
      CHECK(e.column() == 0);
    }
  }
}

TEST_CASE("every corpus spec builds a simple semigroup with the triple product") {
  const auto corpus = oracle::rees_corpus(8);
  CHECK(corpus.size() > 20);
  for (const auto& s : corpus) {
    const auto l = rees_construct(s);
    REQUIRE(l.semigroup.size() == s.lambda_size * s.group.size() * s.i_size);
    CHECK(is_simple(l.semigroup));
    for (ElementId x = 0; x < l.semigroup.size(); ++x)
      for (ElementId y = 0; y < l.semigroup.size(); ++y)
        CHECK(l.labels[l.semigroup(x, y)] == rees_product(s, l.labels[x], l.labels[y]));
  }
}

TEST_CASE("coordinatization") {
  SUBCASE("Z2") {
    const auto c = coordinatize_simple(catalog::cyclic(2));
    CHECK(c.spec.lambda_size == 1);
    CHECK(c.spec.i_size == 1);
    CHECK(c.spec.group.size() == 2);
  }
  SUBCASE("rectangular band") {
    const auto rb = catalog::rectangular_band(2, 2);
    const auto c = coordinatize_simple(rb);
    CHECK(c.spec.lambda_size == 2);
    CHECK(c.spec.i_size == 2);
    CHECK(c.spec.group.size() == 1);
    CHECK(sandwich_is_trivial(c.spec));
    CHECK(oracle::isomorphic(oracle::grid_of(rees_construct(c.spec).semigroup), oracle::grid_of(rb)));
  }
  SUBCASE("not simple") { CHECK_THROWS_AS(coordinatize_simple(catalog::min_semilattice(2)), NotSimpleError); }
  SUBCASE("round trip over the corpus") {
    for (const auto& s : oracle::rees_corpus(8)) {
      const auto built = rees_construct(s);
      const auto c = coordinatize_simple(built.semigroup);
      CHECK(c.spec.lambda_size == s.lambda_size);
      CHECK(c.spec.i_size == s.i_size);
      CHECK(c.spec.group.size() == s.group.size());
      CHECK_NOTHROW(validate_normalized(c.spec));
      CHECK(oracle::isomorphic(oracle::grid_of(rees_construct(c.spec).semigroup),
                               oracle::grid_of(built.semigroup)));
      // The labels themselves realize the isomorphism.
      const auto& lab = c.labeled;
      for (ElementId x = 0; x < built.semigroup.size(); ++x)
        for (ElementId y = 0; y < built.semigroup.size(); ++y)
          CHECK(lab.labels[built.semigroup(x, y)] == rees_product(c.spec, lab.labels[x], lab.labels[y]));
    }
  }
  SUBCASE("twisted example round trips") {
    const auto built = rees_construct(twisted());
    const auto c = coordinatize_simple(built.semigroup);
    CHECK_FALSE(sandwich_is_trivial(c.spec));
    CHECK(oracle::isomorphic(oracle::grid_of(rees_construct(c.spec).semigroup),
                             oracle::grid_of(built.semigroup)));
  }
}

TEST_CASE("rectangular bands of groups") {
  CHECK(is_rectangular_band_of_groups(catalog::rectangular_band(2, 2)));
  CHECK_FALSE(is_rectangular_band_of_groups(rees_construct(twisted()).semigroup));
  for (const auto& g : oracle::groups_up_to_6()) CHECK(is_rectangular_band_of_groups(g));
  CHECK_FALSE(is_rectangular_band_of_groups(catalog::min_semilattice(2)));
  CHECK(rectangular_band_check(catalog::min_semilattice(2)).simple == false);

  SUBCASE("both criteria agree over the corpus") {
    for (const auto& s : oracle::rees_corpus(8)) {
      const auto r = rectangular_band_check(rees_construct(s).semigroup);
      CHECK(r.simple);
      CHECK(r.by_sandwich == r.by_idempotents);
      CHECK(r.by_sandwich == sandwich_is_trivial(s));
    }
  }
  SUBCASE("idempotent closure") {
    CHECK(idempotents_closed(catalog::min_semilattice(3)));
    CHECK_FALSE(idempotents_closed(rees_construct(twisted()).semigroup));
  }
}
