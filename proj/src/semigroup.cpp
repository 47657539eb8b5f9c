#include "relsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace relsg {

CayleyTable::CayleyTable(std::size_t n, std::vector<ElementId> cells)
    : n_(n), cells_(std::move(cells)) {
  if (n_ == 0) {
    throw MalformedTableError("table must have at least one element", 0, 0);
  }
  if (cells_.size() != n_ * n_) {
    throw MalformedTableError("expected " + std::to_string(n_ * n_) + " cells, got " +
                                  std::to_string(cells_.size()),
                              0, 0);
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] >= n_) {
      throw MalformedTableError("entry " + std::to_string(cells_[k]) + " at cell (" +
                                    std::to_string(k / n_) + ", " + std::to_string(k % n_) +
                                    ") is out of range",
                                k / n_, k % n_);
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) {
    throw MalformedTableError("table must have at least one element", 0, 0);
  }
  std::vector<ElementId> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw MalformedTableError("row " + std::to_string(r) + " has " +
                                    std::to_string(rows[r].size()) + " entries, expected " +
                                    std::to_string(n),
                                r, std::min(rows[r].size(), n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      const long long v = rows[r][c];
      if (v < 0 || static_cast<unsigned long long>(v) >= n) {
        throw MalformedTableError("entry " + std::to_string(v) + " at cell (" +
                                      std::to_string(r) + ", " + std::to_string(c) +
                                      ") is out of range",
                                  r, c);
      }
      cells.push_back(static_cast<ElementId>(v));
    }
  }
  return CayleyTable(n, std::move(cells));
}

std::vector<std::vector<ElementId>> CayleyTable::rows() const {
  std::vector<std::vector<ElementId>> out(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    auto r = row(static_cast<ElementId>(a));
    out[a].assign(r.begin(), r.end());
  }
  return out;
}

std::optional<Triple> find_associativity_violation(const CayleyTable& t) {
  const auto n = static_cast<ElementId>(t.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = t(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (t(ab, c) != t(a, t(b, c))) {
          return Triple{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

Semigroup::Semigroup(CayleyTable table) : table_(std::move(table)) {
  if (table_.size() == 0) {
    throw MalformedTableError("table must have at least one element", 0, 0);
  }
  if (auto bad = find_associativity_violation(table_)) {
    throw AssociativityError(bad->a, bad->b, bad->c);
  }
}

ElementId Semigroup::multiply(ElementId a, ElementId b) const {
  if (!contains(a) || !contains(b)) {
    throw ElementRangeError("element id out of range: multiply(" + std::to_string(a) + ", " +
                            std::to_string(b) + ") in a semigroup of order " +
                            std::to_string(size()));
  }
  return table_(a, b);
}

Semigroup semigroup_from_table(std::size_t n, const std::vector<std::vector<long long>>& grid) {
  if (n == 0) {
    throw MalformedTableError("table must have at least one element", 0, 0);
  }
  if (grid.size() != n) {
    throw MalformedTableError("expected " + std::to_string(n) + " rows, got " +
                                  std::to_string(grid.size()),
                              std::min(grid.size(), n), 0);
  }
  return Semigroup(CayleyTable::from_rows(grid));
}

const char* to_string(SubsetKind kind) noexcept {
  switch (kind) {
    case SubsetKind::kernel:
      return "kernel";
    case SubsetKind::reducible:
      return "reducible";
    case SubsetKind::idempotents:
      return "idempotents";
  }
  return "unknown";
}

bool SubsetReport::contains(ElementId a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

namespace {

std::vector<ElementId> members_of(const std::vector<char>& mask) {
  std::vector<ElementId> out;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k]) out.push_back(static_cast<ElementId>(k));
  }
  return out;
}

}  // namespace

SubsetReport idempotents(const Semigroup& s) {
  SubsetReport r{SubsetKind::idempotents, {}};
  for (ElementId a = 0; a < s.size(); ++a) {
    if (s(a, a) == a) r.members.push_back(a);
  }
  return r;
}

std::vector<ElementId> principal_ideal(const Semigroup& s, ElementId a) {
  const auto n = static_cast<ElementId>(s.size());
  std::vector<char> in(n, 0);
  in[a] = 1;
  for (ElementId x = 0; x < n; ++x) {
    in[s(x, a)] = 1;
    in[s(a, x)] = 1;
  }
  for (ElementId x = 0; x < n; ++x) {
    const ElementId xa = s(x, a);
    for (ElementId y = 0; y < n; ++y) in[s(xa, y)] = 1;
  }
  return members_of(in);
}

bool is_ideal(const Semigroup& s, std::span<const ElementId> members) {
  if (members.empty()) return false;
  std::vector<char> in(s.size(), 0);
  for (auto m : members) in.at(m) = 1;
  for (auto m : members) {
    for (ElementId x = 0; x < s.size(); ++x) {
      if (!in[s(x, m)] || !in[s(m, x)]) return false;
    }
  }
  return true;
}

SubsetReport kernel(const Semigroup& s) {
  const auto n = static_cast<ElementId>(s.size());
  std::vector<std::vector<ElementId>> ideals(n);
  ElementId best = 0;
  for (ElementId a = 0; a < n; ++a) {
    ideals[a] = principal_ideal(s, a);
    if (ideals[a].size() < ideals[best].size()) best = a;
  }
  // The kernel lies inside every principal ideal.
  for (ElementId a = 0; a < n; ++a) {
    if (!std::includes(ideals[a].begin(), ideals[a].end(), ideals[best].begin(),
                       ideals[best].end())) {
      throw std::logic_error("minimal principal ideal is not contained in J(" +
                             std::to_string(a) + ")");
    }
  }
  return {SubsetKind::kernel, std::move(ideals[best])};
}

SubsetReport reducible(const Semigroup& s) {
  std::vector<char> in(s.size(), 0);
  for (auto v : s.table().cells()) in[v] = 1;
  return {SubsetKind::reducible, members_of(in)};
}

bool is_simple(const Semigroup& s) { return kernel(s).size() == s.size(); }

bool is_quasigroup(const CayleyTable& t) {
  const auto n = static_cast<ElementId>(t.size());
  std::vector<char> seen(n);
  for (ElementId a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId b = 0; b < n; ++b) {
      if (seen[t(a, b)]++) return false;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (ElementId b = 0; b < n; ++b) {
      if (seen[t(b, a)]++) return false;
    }
  }
  return true;
}

GroupCheck check_group(const Semigroup& s) {
  const auto n = static_cast<ElementId>(s.size());
  std::optional<ElementId> identity;
  for (ElementId e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (ElementId a = 0; a < n && ok; ++a) ok = s(e, a) == a && s(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) return {std::nullopt, GroupFailure::no_identity};

  std::vector<ElementId> inverse(n);
  for (ElementId a = 0; a < n; ++a) {
    bool found = false;
    for (ElementId b = 0; b < n && !found; ++b) {
      if (s(a, b) == *identity && s(b, a) == *identity) {
        inverse[a] = b;
        found = true;
      }
    }
    if (!found) return {std::nullopt, GroupFailure::missing_inverse};
  }
  if (!is_quasigroup(s.table())) return {std::nullopt, GroupFailure::not_latin_square};
  return {GroupView(s, *identity, std::move(inverse)), GroupFailure::none};
}

GroupView as_group(const Semigroup& s) {
  auto check = check_group(s);
  if (!check.view) throw NotAGroupError(check.failure);
  return std::move(*check.view);
}

Subsemigroup subsemigroup(const Semigroup& s, std::span<const ElementId> members) {
  std::vector<ElementId> parent(members.begin(), members.end());
  std::sort(parent.begin(), parent.end());
  parent.erase(std::unique(parent.begin(), parent.end()), parent.end());
  if (parent.empty()) throw Error("subsemigroup of an empty subset");
  constexpr ElementId absent = std::numeric_limits<ElementId>::max();
  std::vector<ElementId> local(s.size(), absent);
  for (std::size_t k = 0; k < parent.size(); ++k) local.at(parent[k]) = static_cast<ElementId>(k);

  const std::size_t m = parent.size();
  std::vector<ElementId> cells(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const ElementId p = s(parent[x], parent[y]);
      if (local[p] == absent) {
        throw Error("subset is not closed: " + std::to_string(parent[x]) + " * " +
                    std::to_string(parent[y]) + " = " + std::to_string(p));
      }
      cells[x * m + y] = local[p];
    }
  }
  return {Semigroup(CayleyTable(m, std::move(cells))), std::move(parent)};
}

HomogroupInfo is_homogroup(const Semigroup& s) {
  const auto k = kernel(s);
  const auto sub = subsemigroup(s, k.members);
  const auto check = check_group(sub.semigroup);
  if (!check.view) return {};
  return {true, sub.to_parent[check.view->identity()]};
}

CenterCheck verify_homogroup_center(const Semigroup& s) {
  const auto info = is_homogroup(s);
  if (!info.homogroup) throw NotHomogroupError("kernel is not a group");
  const ElementId e = *info.kernel_identity;
  if (s(e, e) != e) return {false, e};
  for (ElementId x = 0; x < s.size(); ++x) {
    if (s(e, x) != s(x, e)) return {false, x};
  }
  return {};
}

}  // namespace relsg
