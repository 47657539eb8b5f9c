#include "relsg/rees.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace relsg {

void validate_shape(const ReesSpec& spec) {
  if (spec.lambda_size == 0 || spec.i_size == 0) {
    throw ReesSpecError("index sets must be nonempty");
  }
  if (spec.sandwich.size() != spec.i_size) {
    throw ReesSpecError("sandwich matrix has " + std::to_string(spec.sandwich.size()) +
                        " rows, expected |I| = " + std::to_string(spec.i_size));
  }
  for (std::size_t i = 0; i < spec.i_size; ++i) {
    if (spec.sandwich[i].size() != spec.lambda_size) {
      throw ReesSpecError("sandwich row " + std::to_string(i) + " has " +
                          std::to_string(spec.sandwich[i].size()) +
                          " columns, expected |Lambda| = " + std::to_string(spec.lambda_size));
    }
    for (std::size_t mu = 0; mu < spec.lambda_size; ++mu) {
      if (spec.sandwich[i][mu] >= spec.group.size()) {
        throw ReesSpecError("sandwich entry (" + std::to_string(i) + ", " + std::to_string(mu) +
                            ") is not a group element");
      }
    }
  }
}

void validate_normalized(const ReesSpec& spec) {
  const ElementId e = spec.group.identity();
  for (std::size_t mu = 0; mu < spec.lambda_size; ++mu) {
    if (spec.sandwich[0][mu] != e) throw NormalizationError(0, mu);
  }
  for (std::size_t i = 0; i < spec.i_size; ++i) {
    if (spec.sandwich[i][0] != e) throw NormalizationError(i, 0);
  }
}

ElementId rees_id(const ReesSpec& spec, const ReesTriple& t) {
  return static_cast<ElementId>((t.lambda * spec.group.size() + t.g) * spec.i_size + t.i);
}

ElementId LabeledSemigroup::id_of(const ReesTriple& t) const {
  auto it = std::find(labels.begin(), labels.end(), t);
  if (it == labels.end()) throw ElementRangeError("no element carries the requested label");
  return static_cast<ElementId>(it - labels.begin());
}

LabeledSemigroup rees_construct(const ReesSpec& spec) {
  validate_shape(spec);
  validate_normalized(spec);
  const std::size_t g_size = spec.group.size();
  const std::size_t n = spec.lambda_size * g_size * spec.i_size;

  std::vector<ReesTriple> labels(n);
  for (std::size_t lambda = 0; lambda < spec.lambda_size; ++lambda) {
    for (ElementId g = 0; g < g_size; ++g) {
      for (std::size_t i = 0; i < spec.i_size; ++i) {
        const ReesTriple t{lambda, g, i};
        labels[rees_id(spec, t)] = t;
      }
    }
  }

  const auto& G = spec.group;
  std::vector<ElementId> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& l = labels[x];
      const auto& r = labels[y];
      const ElementId middle = G(G(l.g, spec.entry(l.i, r.lambda)), r.g);
      cells[x * n + y] = rees_id(spec, {l.lambda, middle, r.i});
    }
  }
  // The Semigroup constructor re-verifies associativity.
  return {Semigroup(CayleyTable(n, std::move(cells))), std::move(labels)};
}

namespace {

/// Partition of the elements by a per-element key; the class of `first`
/// gets index 0, the others are numbered by their smallest member.
std::vector<std::size_t> classes_by_key(const std::vector<std::vector<char>>& keys,
                                        ElementId first, std::size_t& count) {
  std::map<std::vector<char>, std::size_t> index;
  index.emplace(keys[first], 0);
  std::vector<std::size_t> cls(keys.size());
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [it, inserted] = index.emplace(keys[x], index.size());
    cls[x] = it->second;
  }
  count = index.size();
  return cls;
}

}  // namespace

Coordinatization coordinatize_simple(const Semigroup& s) {
  if (!is_simple(s)) throw NotSimpleError("semigroup is not simple");
  const auto n = static_cast<ElementId>(s.size());

  const ElementId e = idempotents(s).members.front();

  // x S and S x as membership masks.
  std::vector<std::vector<char>> right_sets(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> left_sets(n, std::vector<char>(n, 0));
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      right_sets[x][s(x, y)] = 1;
      left_sets[x][s(y, x)] = 1;
    }
  }
  std::size_t lambda_size = 0, i_size = 0;
  const auto lambda_of = classes_by_key(right_sets, e, lambda_size);
  const auto i_of = classes_by_key(left_sets, e, i_size);

  // Maximal subgroup at e, with e relabelled to 0.
  std::vector<ElementId> h_members{e};
  for (ElementId x = 0; x < n; ++x) {
    if (x != e && lambda_of[x] == 0 && i_of[x] == 0) h_members.push_back(x);
  }
  constexpr ElementId absent = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> gid(n, absent);
  for (std::size_t k = 0; k < h_members.size(); ++k) gid[h_members[k]] = static_cast<ElementId>(k);
  const std::size_t g_size = h_members.size();
  if (lambda_size * i_size * g_size != n) {
    throw std::logic_error("Rees class sizes do not multiply to the order");
  }
  std::vector<ElementId> gcells(g_size * g_size);
  for (std::size_t a = 0; a < g_size; ++a) {
    for (std::size_t b = 0; b < g_size; ++b) {
      const ElementId p = gid[s(h_members[a], h_members[b])];
      if (p == absent) throw std::logic_error("maximal subgroup is not closed");
      gcells[a * g_size + b] = p;
    }
  }
  GroupView group = as_group(Semigroup(CayleyTable(g_size, std::move(gcells))));
  if (group.identity() != 0) throw std::logic_error("basepoint is not the group identity");
  auto h_inverse = [&](ElementId x) { return h_members[group.inverse(gid[x])]; };

  // Row representatives r[lambda] in H(lambda, 0) with e r = e, column
  // representatives q[i] in H(0, i) with q e = e.
  std::vector<ElementId> r(lambda_size, absent), q(i_size, absent);
  for (ElementId x = 0; x < n; ++x) {
    if (r[lambda_of[x]] == absent) {
      const ElementId base = s(x, e);
      r[lambda_of[x]] = s(base, h_inverse(s(e, base)));
    }
    if (q[i_of[x]] == absent) {
      const ElementId base = s(e, x);
      q[i_of[x]] = s(h_inverse(s(base, e)), base);
    }
  }

  std::vector<std::vector<ElementId>> sandwich(i_size, std::vector<ElementId>(lambda_size));
  for (std::size_t i = 0; i < i_size; ++i) {
    for (std::size_t mu = 0; mu < lambda_size; ++mu) {
      const ElementId p = gid[s(q[i], r[mu])];
      if (p == absent) throw std::logic_error("sandwich entry outside the maximal subgroup");
      sandwich[i][mu] = p;
    }
  }

  std::vector<ReesTriple> labels(n);
  std::vector<char> hit(n, 0);
  for (std::size_t lambda = 0; lambda < lambda_size; ++lambda) {
    for (ElementId g = 0; g < g_size; ++g) {
      for (std::size_t i = 0; i < i_size; ++i) {
        const ElementId x = s(s(r[lambda], h_members[g]), q[i]);
        if (hit[x]++) throw std::logic_error("Rees labelling is not injective");
        labels[x] = {lambda, g, i};
      }
    }
  }

  ReesSpec spec{std::move(group), lambda_size, i_size, std::move(sandwich)};
  // The labelling must carry the Rees product.
  const auto& G = spec.group;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const auto& l = labels[x];
      const auto& rr = labels[y];
      const ReesTriple expect{l.lambda, G(G(l.g, spec.entry(l.i, rr.lambda)), rr.g), rr.i};
      if (labels[s(x, y)] != expect) throw std::logic_error("Rees labelling is not a homomorphism");
    }
  }
  return {std::move(spec), {s, std::move(labels)}};
}

bool idempotents_closed(const Semigroup& s) {
  const auto idem = idempotents(s);
  for (auto a : idem.members) {
    for (auto b : idem.members) {
      const ElementId p = s(a, b);
      if (s(p, p) != p) return false;
    }
  }
  return true;
}

bool sandwich_is_trivial(const ReesSpec& spec) {
  for (const auto& row : spec.sandwich) {
    for (auto v : row) {
      if (v != spec.group.identity()) return false;
    }
  }
  return true;
}

RectangularBandCheck rectangular_band_check(const Semigroup& s) {
  RectangularBandCheck check;
  check.simple = is_simple(s);
  if (!check.simple) return check;
  check.by_sandwich = sandwich_is_trivial(coordinatize_simple(s).spec);
  check.by_idempotents = idempotents_closed(s);
  return check;
}

bool is_rectangular_band_of_groups(const Semigroup& s) {
  const auto check = rectangular_band_check(s);
  if (check.by_sandwich != check.by_idempotents) {
    throw std::logic_error("rectangular band criteria disagree");
  }
  return check.by_sandwich;
}

}  // namespace relsg
