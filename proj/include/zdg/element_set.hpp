#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace zdg {

using Element = std::uint32_t;

/// Largest supported semigroup order; element sets are 64-bit masks.
inline constexpr std::size_t kMaxOrder = 64;

enum class SetRole {
  kGeneric,
  kIdeal,
  kPrimeIdeal,
  kAnnihilator,
  kZeroDivisors,
  kNilpotents,
  kPart,
};

std::string_view to_string(SetRole role);

/// Subset of the elements {0, ..., order-1} of a semigroup.
///
/// The role is a descriptive tag only. Equality and ordering look at the
/// members alone, so an annihilator and an ideal with the same members
/// compare equal.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t order, std::uint64_t bits,
             SetRole role = SetRole::kGeneric);
  ElementSet(std::size_t order, std::initializer_list<Element> members,
             SetRole role = SetRole::kGeneric);
  ElementSet(std::size_t order, const std::vector<Element>& members,
             SetRole role = SetRole::kGeneric);

  static ElementSet full(std::size_t order, SetRole role = SetRole::kGeneric);

  std::size_t order() const { return order_; }
  std::uint64_t bits() const { return bits_; }
  SetRole role() const { return role_; }
  ElementSet with_role(SetRole role) const;

  bool contains(Element x) const { return x < 64 && ((bits_ >> x) & 1U); }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }

  void insert(Element x);
  void erase(Element x);

  /// Members in ascending order.
  std::vector<Element> members() const;

  bool is_subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  ElementSet operator&(const ElementSet& other) const;
  ElementSet operator|(const ElementSet& other) const;
  /// Set difference.
  ElementSet operator-(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  /// Lexicographic order on the ascending member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t order_ = 0;
  std::uint64_t bits_ = 0;
  SetRole role_ = SetRole::kGeneric;
};

bool lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace zdg
