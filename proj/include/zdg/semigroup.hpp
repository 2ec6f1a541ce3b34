#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zdg/element_set.hpp"
#include "zdg/errors.hpp"

namespace zdg {

/// Raw multiplication table on {0, ..., order-1}. Index 0 is the zero.
///
/// Nothing about the algebra is checked here; see Semigroup::validate.
struct CayleyTable {
  std::size_t order = 0;
  std::vector<Element> entries;  // row-major, entries[i * order + j] = i*j
  std::optional<std::vector<std::string>> names;

  CayleyTable() = default;
  explicit CayleyTable(std::size_t n) : order(n), entries(n * n, 0) {}
  CayleyTable(std::size_t n, std::vector<Element> cells,
              std::optional<std::vector<std::string>> labels = std::nullopt)
      : order(n), entries(std::move(cells)), names(std::move(labels)) {}

  Element at(Element x, Element y) const { return entries[x * order + y]; }
  Element& at(Element x, Element y) { return entries[x * order + y]; }

  /// Sets both x*y and y*x.
  void set_symmetric(Element x, Element y, Element value) {
    at(x, y) = value;
    at(y, x) = value;
  }

  /// Equality ignores display names.
  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.order == b.order && a.entries == b.entries;
  }
  friend bool operator<(const CayleyTable& a, const CayleyTable& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.entries < b.entries;
  }
};

struct ValidationOptions {
  /// Stop collecting violations after this many.
  std::size_t max_violations = 16;
};

/// Throws MalformedTable when the table is not square, has an entry out of
/// range, or carries the wrong number of (or duplicate) names.
void check_well_formed(const CayleyTable& table);

/// Every violated law, up to the cap: absorbing zero, then commutativity,
/// then associativity. Empty iff the table is a commutative semigroup with
/// zero at index 0. The table must be well formed.
std::vector<Violation> find_violations(const CayleyTable& table,
                                       const ValidationOptions& opts = {});

/// A finite commutative semigroup with absorbing zero at index 0.
/// Immutable once constructed.
class Semigroup {
 public:
  /// Throws MalformedTable or InvalidTable.
  static Semigroup validate(CayleyTable table, const ValidationOptions& opts = {});

  std::size_t order() const { return table_.order; }
  const CayleyTable& table() const { return table_; }

  Element product(Element x, Element y) const {
    return table_.entries[x * table_.order + y];
  }

  /// Display label of x: the table's name when present, else the index.
  std::string name(Element x) const;
  bool has_names() const { return table_.names.has_value(); }

  ElementSet all() const { return ElementSet::full(order()); }
  ElementSet empty_set() const { return ElementSet(order(), std::uint64_t{0}); }
  ElementSet zero_set() const { return ElementSet(order(), std::uint64_t{1}); }

  /// { x * s : s in S } for x in the given set.
  ElementSet times_all(Element x) const;

 private:
  explicit Semigroup(CayleyTable table) : table_(std::move(table)) {}
  CayleyTable table_;
};

}  // namespace zdg
