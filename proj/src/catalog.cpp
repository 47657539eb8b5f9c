#include "relsg/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace relsg::catalog {

namespace {

template <class F>
Semigroup from_function(std::size_t n, F&& f) {
  std::vector<ElementId> cells(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) cells[a * n + b] = static_cast<ElementId>(f(a, b));
  }
  return Semigroup(CayleyTable(n, std::move(cells)));
}

}  // namespace

Semigroup trivial() { return null_semigroup(1); }

Semigroup min_semilattice(std::size_t n) {
  return from_function(n, [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

Semigroup left_zero(std::size_t n) {
  return from_function(n, [](std::size_t a, std::size_t) { return a; });
}

Semigroup right_zero(std::size_t n) {
  return from_function(n, [](std::size_t, std::size_t b) { return b; });
}

Semigroup null_semigroup(std::size_t n) {
  return from_function(n, [](std::size_t, std::size_t) { return 0; });
}

Semigroup rectangular_band(std::size_t rows, std::size_t cols) {
  return from_function(rows * cols, [cols](std::size_t x, std::size_t y) {
    return (x / cols) * cols + y % cols;
  });
}

Semigroup cyclic(std::size_t n) {
  return from_function(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Semigroup symmetric(std::size_t k) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<std::size_t>& q) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) -
                                    perms.begin());
  };
  return from_function(perms.size(), [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> r(k);
    for (std::size_t x = 0; x < k; ++x) r[x] = perms[b][perms[a][x]];
    return index_of(r);
  });
}

Semigroup direct_product(const Semigroup& a, const Semigroup& b) {
  const std::size_t m = b.size();
  return from_function(a.size() * m, [&](std::size_t x, std::size_t y) {
    const auto l = a(static_cast<ElementId>(x / m), static_cast<ElementId>(y / m));
    const auto r = b(static_cast<ElementId>(x % m), static_cast<ElementId>(y % m));
    return l * m + r;
  });
}

Semigroup homogroup3() {
  // 0, 1: Z2; 2: t.
  return Semigroup(CayleyTable(3, {0, 1, 0,  //
                                   1, 0, 1,  //
                                   0, 1, 0}));
}

}  // namespace relsg::catalog
