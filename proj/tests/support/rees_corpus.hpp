#pragma once

#include <vector>

#include "relsg/catalog.hpp"
#include "relsg/rees.hpp"

namespace oracle {

/// Every normalized Rees spec over the groups Z1, Z2, Z3, Z4, Z2xZ2 with
/// |Lambda|*|G|*|I| <= max_order.
inline std::vector<relsg::ReesSpec> rees_corpus(std::size_t max_order = 8) {
  using namespace relsg;
  const std::vector<Semigroup> groups{catalog::trivial(), catalog::cyclic(2), catalog::cyclic(3),
                                      catalog::cyclic(4),
                                      catalog::direct_product(catalog::cyclic(2), catalog::cyclic(2))};
  std::vector<ReesSpec> out;
  for (const auto& base : groups) {
    const auto g = as_group(base);
    for (std::size_t lam = 1; lam * g.size() <= max_order; ++lam) {
      for (std::size_t is = 1; lam * g.size() * is <= max_order; ++is) {
        // Free entries are those off row 0 and column 0.
        const std::size_t free = (is - 1) * (lam - 1);
        std::size_t combos = 1;
        for (std::size_t k = 0; k < free; ++k) combos *= g.size();
        for (std::size_t code = 0; code < combos; ++code) {
          std::vector<std::vector<ElementId>> p(is, std::vector<ElementId>(lam, g.identity()));
          std::size_t c = code;
          for (std::size_t i = 1; i < is; ++i)
            for (std::size_t mu = 1; mu < lam; ++mu) {
              p[i][mu] = static_cast<ElementId>(c % g.size());
              c /= g.size();
            }
          out.push_back(ReesSpec{g, lam, is, std::move(p)});
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
