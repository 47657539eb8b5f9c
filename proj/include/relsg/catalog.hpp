#pragma once

#include <cstddef>

#include "relsg/semigroup.hpp"

// Small named semigroups and groups used by the tools and tests.
namespace relsg::catalog {

Semigroup trivial();
/// {0, ..., n-1} under min.
Semigroup min_semilattice(std::size_t n);
/// x * y = x.
Semigroup left_zero(std::size_t n);
/// x * y = y.
Semigroup right_zero(std::size_t n);
/// x * y = 0.
Semigroup null_semigroup(std::size_t n);
/// Elements (r, c) with id r * cols + c, product (r, c)(r', c') = (r, c').
Semigroup rectangular_band(std::size_t rows, std::size_t cols);
/// Addition mod n.
Semigroup cyclic(std::size_t n);
/// Permutations of {0..k-1} in lexicographic order; product is "apply the
/// left factor first", i.e. (p * q)(x) = q(p(x)).
Semigroup symmetric(std::size_t k);
/// Pairs (x, y) with id x * |b| + y.
Semigroup direct_product(const Semigroup& a, const Semigroup& b);
/// Group Z2 = {0, 1} with an extra element t, t*t = 0 and t acting as the
/// identity on Z2 (a homogroup of order 3 whose kernel is Z2).
Semigroup homogroup3();

}  // namespace relsg::catalog
