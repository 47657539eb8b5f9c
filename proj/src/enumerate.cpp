#include <algorithm>
#include <future>
#include <numeric>

#include "relsg/classify.hpp"

namespace relsg {

CayleyTable canonical_form(const CayleyTable& t) {
  const std::size_t n = t.size();
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ElementId> best = t.cells();
  std::vector<ElementId> inv(n), cand(n * n);
  do {
    for (std::size_t a = 0; a < n; ++a) inv[perm[a]] = static_cast<ElementId>(a);
    // cand[x][y] = perm(t[inv x][inv y]), compared lazily in row-major order.
    bool smaller = false, decided = false;
    for (std::size_t k = 0; k < n * n && !decided; ++k) {
      const ElementId v = perm[t(inv[k / n], inv[k % n])];
      cand[k] = v;
      if (v != best[k]) {
        smaller = v < best[k];
        decided = true;
        if (smaller) {
          for (std::size_t j = k + 1; j < n * n; ++j) cand[j] = perm[t(inv[j / n], inv[j % n])];
        }
      }
    }
    if (smaller) best = cand;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CayleyTable(n, std::move(best));
}

namespace {

/// Row-major backtracking over table cells; a partial table is abandoned as
/// soon as a fully determined triple breaks associativity.
class TableFiller {
 public:
  explicit TableFiller(std::size_t n) : n_(n), cells_(n * n, unset()) {}

  std::vector<CayleyTable> run_with_first(ElementId first) {
    cells_[0] = first;
    if (n_ == 1 || consistent_at(0, 0)) fill(1);
    return std::move(found_);
  }

 private:
  ElementId unset() const { return static_cast<ElementId>(n_); }
  ElementId at(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }

  bool triple_ok(std::size_t a, std::size_t b, std::size_t c) const {
    const ElementId ab = at(a, b), bc = at(b, c);
    if (ab == unset() || bc == unset()) return true;
    const ElementId l = at(ab, c), r = at(a, bc);
    return l == unset() || r == unset() || l == r;
  }

  /// Triples that involve cell (x, y) in any of their four products.
  bool consistent_at(std::size_t x, std::size_t y) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (!triple_ok(x, y, k) || !triple_ok(k, x, y)) return false;
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (at(a, b) == x && !triple_ok(a, b, y)) return false;
        if (at(a, b) == y && !triple_ok(x, a, b)) return false;
      }
    }
    return true;
  }

  void fill(std::size_t k) {
    if (k == n_ * n_) {
      found_.emplace_back(n_, cells_);
      return;
    }
    const std::size_t x = k / n_, y = k % n_;
    for (ElementId v = 0; v < n_; ++v) {
      cells_[k] = v;
      if (consistent_at(x, y)) fill(k + 1);
    }
    cells_[k] = unset();
  }

  std::size_t n_;
  std::vector<ElementId> cells_;
  std::vector<CayleyTable> found_;
};

std::vector<CayleyTable> partition(std::size_t n, ElementId first, EnumerationMode mode) {
  auto tables = TableFiller(n).run_with_first(first);
  if (mode == EnumerationMode::up_to_isomorphism) {
    std::erase_if(tables, [](const CayleyTable& t) { return canonical_form(t) != t; });
  }
  return tables;
}

}  // namespace

void for_each_semigroup(std::size_t n, const EnumerationOptions& options,
                        const std::function<void(const Semigroup&)>& visit) {
  const std::size_t limit = std::min(options.max_order, hard_max_order);
  if (n > limit) throw OrderTooLargeError(limit, n);
  if (n == 0) throw Error("order must be at least 1");

  std::vector<std::vector<CayleyTable>> parts(n);
  if (options.parallel && n > 1) {
    std::vector<std::future<std::vector<CayleyTable>>> jobs;
    for (std::size_t v = 0; v < n; ++v) {
      jobs.push_back(std::async(std::launch::async, partition, n, static_cast<ElementId>(v),
                                options.mode));
    }
    for (std::size_t v = 0; v < n; ++v) parts[v] = jobs[v].get();
  } else {
    for (std::size_t v = 0; v < n; ++v) parts[v] = partition(n, static_cast<ElementId>(v), options.mode);
  }
  for (auto& part : parts) {
    for (auto& t : part) visit(Semigroup(std::move(t)));
  }
}

std::vector<Semigroup> enumerate_semigroups(std::size_t n, const EnumerationOptions& options) {
  std::vector<Semigroup> out;
  for_each_semigroup(n, options, [&](const Semigroup& s) { out.push_back(s); });
  return out;
}

}  // namespace relsg
