#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "relsg/errors.hpp"

namespace relsg {

/// Elements of a finite magma are the integers [0, n).
using ElementId = std::uint32_t;

/// A square multiplication table with every entry in range.  Nothing else is
/// assumed; in particular the operation need not be associative.
class CayleyTable {
 public:
  CayleyTable() = default;

  /// `cells` is row-major, `cells[a * n + b] = a * b`.
  CayleyTable(std::size_t n, std::vector<ElementId> cells);

  /// Builds from a grid of raw integers, reporting the first bad cell.
  static CayleyTable from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t size() const noexcept { return n_; }

  ElementId operator()(ElementId a, ElementId b) const noexcept { return cells_[a * n_ + b]; }

  std::span<const ElementId> row(ElementId a) const noexcept {
    return {cells_.data() + a * n_, n_};
  }

  const std::vector<ElementId>& cells() const noexcept { return cells_; }

  std::vector<std::vector<ElementId>> rows() const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementId> cells_;
};

struct Triple {
  ElementId a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// First triple in lexicographic order that breaks associativity, if any.
std::optional<Triple> find_associativity_violation(const CayleyTable& table);

/// A Cayley table whose operation has been verified associative.
class Semigroup {
 public:
  /// Throws AssociativityError naming the first violating triple.
  explicit Semigroup(CayleyTable table);

  std::size_t size() const noexcept { return table_.size(); }
  const CayleyTable& table() const noexcept { return table_; }

  /// Unchecked product.
  ElementId operator()(ElementId a, ElementId b) const noexcept { return table_(a, b); }

  /// Checked product; throws ElementRangeError.
  ElementId multiply(ElementId a, ElementId b) const;

  bool contains(ElementId a) const noexcept { return a < size(); }

  friend bool operator==(const Semigroup& x, const Semigroup& y) { return x.table_ == y.table_; }

 private:
  CayleyTable table_;
};

Semigroup semigroup_from_table(std::size_t n, const std::vector<std::vector<long long>>& grid);

enum class SubsetKind { kernel, reducible, idempotents };

const char* to_string(SubsetKind kind) noexcept;

struct SubsetReport {
  SubsetKind kind;
  std::vector<ElementId> members;  // sorted ascending

  bool contains(ElementId a) const;
  std::size_t size() const noexcept { return members.size(); }
};

SubsetReport idempotents(const Semigroup& s);
SubsetReport kernel(const Semigroup& s);
SubsetReport reducible(const Semigroup& s);

/// Smallest two-sided ideal containing `a`: {a} u Sa u aS u SaS.
std::vector<ElementId> principal_ideal(const Semigroup& s, ElementId a);

bool is_ideal(const Semigroup& s, std::span<const ElementId> members);
bool is_simple(const Semigroup& s);

/// True iff every row and every column is a permutation.
bool is_quasigroup(const CayleyTable& table);
inline bool is_quasigroup(const Semigroup& s) { return is_quasigroup(s.table()); }

/// A semigroup together with its identity and inverse map.
class GroupView {
 public:
  const Semigroup& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  ElementId identity() const noexcept { return identity_; }
  ElementId inverse(ElementId a) const { return inverse_.at(a); }
  const std::vector<ElementId>& inverses() const noexcept { return inverse_; }
  ElementId operator()(ElementId a, ElementId b) const noexcept { return base_(a, b); }

 private:
  GroupView(Semigroup base, ElementId identity, std::vector<ElementId> inverse)
      : base_(std::move(base)), identity_(identity), inverse_(std::move(inverse)) {}

  friend struct GroupCheck check_group(const Semigroup& s);

  Semigroup base_;
  ElementId identity_;
  std::vector<ElementId> inverse_;
};

struct GroupCheck {
  std::optional<GroupView> view;
  GroupFailure failure = GroupFailure::none;
};

/// Non-throwing group recognition.
GroupCheck check_group(const Semigroup& s);

/// Throws NotAGroupError with the reason.
GroupView as_group(const Semigroup& s);

/// A subset closed under multiplication, relabelled to [0, k) in ascending
/// order of the parent ids.
struct Subsemigroup {
  Semigroup semigroup;
  std::vector<ElementId> to_parent;
};

/// Throws Error when `members` is not closed.
Subsemigroup subsemigroup(const Semigroup& s, std::span<const ElementId> members);

struct HomogroupInfo {
  bool homogroup = false;
  std::optional<ElementId> kernel_identity;  // id in the parent semigroup
};

/// A homogroup is a semigroup whose kernel is a group.
HomogroupInfo is_homogroup(const Semigroup& s);

struct CenterCheck {
  bool holds = true;
  std::optional<ElementId> witness;  // element failing e*s = s*e, or e itself if e*e != e
};

/// Checks that the kernel identity is idempotent and central.  Throws
/// NotHomogroupError when `s` is not a homogroup.
CenterCheck verify_homogroup_center(const Semigroup& s);

}  // namespace relsg
