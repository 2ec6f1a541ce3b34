#include "zdg/element_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdg {

namespace {

std::uint64_t order_mask(std::size_t order) {
  return order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
}

}  // namespace

std::string_view to_string(SetRole role) {
  switch (role) {
    case SetRole::kGeneric:
      return "generic";
    case SetRole::kIdeal:
      return "ideal";
    case SetRole::kPrimeIdeal:
      return "prime-ideal";
    case SetRole::kAnnihilator:
      return "annihilator";
    case SetRole::kZeroDivisors:
      return "zero-divisors";
    case SetRole::kNilpotents:
      return "nilpotents";
    case SetRole::kPart:
      return "part";
  }
  return "generic";
}

ElementSet::ElementSet(std::size_t order, std::uint64_t bits, SetRole role)
    : order_(order), bits_(bits), role_(role) {
  if (order > kMaxOrder) throw std::invalid_argument("element set order exceeds 64");
  if ((bits & ~order_mask(order)) != 0) {
    throw std::out_of_range("element set member out of range");
  }
}

ElementSet::ElementSet(std::size_t order, std::initializer_list<Element> members,
                       SetRole role)
    : ElementSet(order, std::vector<Element>(members), role) {}

ElementSet::ElementSet(std::size_t order, const std::vector<Element>& members,
                       SetRole role)
    : ElementSet(order, std::uint64_t{0}, role) {
  for (Element x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t order, SetRole role) {
  return ElementSet(order, order_mask(order), role);
}

ElementSet ElementSet::with_role(SetRole role) const {
  ElementSet copy = *this;
  copy.role_ = role;
  return copy;
}

void ElementSet::insert(Element x) {
  if (x >= order_) throw std::out_of_range("element set member out of range");
  bits_ |= std::uint64_t{1} << x;
}

void ElementSet::erase(Element x) {
  if (x < order_) bits_ &= ~(std::uint64_t{1} << x);
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Element>(std::countr_zero(rest)));
  }
  return out;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  return ElementSet(std::max(order_, other.order_), bits_ & other.bits_, role_);
}

ElementSet ElementSet::operator|(const ElementSet& other) const {
  return ElementSet(std::max(order_, other.order_), bits_ | other.bits_, role_);
}

ElementSet ElementSet::operator-(const ElementSet& other) const {
  return ElementSet(order_, bits_ & ~other.bits_, role_);
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace zdg
