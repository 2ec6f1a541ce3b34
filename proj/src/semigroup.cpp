#include "zdg/semigroup.hpp"

#include <set>
#include <sstream>

namespace zdg {

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kZeroNotAbsorbing:
      out << "ZeroNotAbsorbing(" << x << ")";
      break;
    case Kind::kNotCommutative:
      out << "NotCommutative(" << x << "," << y << ")";
      break;
    case Kind::kNotAssociative:
      out << "NotAssociative(" << x << "," << y << "," << z << ")";
      break;
  }
  return out.str();
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string text = "table is not a commutative semigroup with zero:";
  for (const auto& v : violations) text += " " + v.describe();
  return text;
}

}  // namespace

InvalidTable::InvalidTable(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

void check_well_formed(const CayleyTable& table) {
  const std::size_t n = table.order;
  if (n == 0) throw MalformedTable("order must be positive");
  if (n > kMaxOrder) {
    throw MalformedTable("order " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(kMaxOrder));
  }
  if (table.entries.size() != n * n) {
    throw MalformedTable("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(table.entries.size()));
  }
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    if (table.entries[k] >= n) {
      throw MalformedTable("entry at row " + std::to_string(k / n) + ", column " +
                           std::to_string(k % n) + " is out of range");
    }
  }
  if (table.names) {
    if (table.names->size() != n) {
      throw MalformedTable("expected " + std::to_string(n) + " names, got " +
                           std::to_string(table.names->size()));
    }
    std::set<std::string> seen;
    for (const auto& label : *table.names) {
      if (label.empty()) throw MalformedTable("empty element name");
      if (!seen.insert(label).second) throw MalformedTable("duplicate element name '" + label + "'");
    }
  }
}

std::vector<Violation> find_violations(const CayleyTable& table, const ValidationOptions& opts) {
  const auto n = static_cast<Element>(table.order);
  std::vector<Violation> found;
  auto full = [&] { return found.size() >= opts.max_violations; };

  for (Element x = 0; x < n && !full(); ++x) {
    if (table.at(0, x) != 0 || table.at(x, 0) != 0) {
      found.push_back({Violation::Kind::kZeroNotAbsorbing, x, 0, 0});
    }
  }
  for (Element x = 0; x < n && !full(); ++x) {
    for (Element y = x + 1; y < n && !full(); ++y) {
      if (table.at(x, y) != table.at(y, x)) {
        found.push_back({Violation::Kind::kNotCommutative, x, y, 0});
      }
    }
  }
  for (Element x = 0; x < n && !full(); ++x) {
    for (Element y = 0; y < n && !full(); ++y) {
      const Element xy = table.at(x, y);
      for (Element z = 0; z < n && !full(); ++z) {
        if (table.at(xy, z) != table.at(x, table.at(y, z))) {
          found.push_back({Violation::Kind::kNotAssociative, x, y, z});
        }
      }
    }
  }
  return found;
}

Semigroup Semigroup::validate(CayleyTable table, const ValidationOptions& opts) {
  check_well_formed(table);
  auto violations = find_violations(table, opts);
  if (!violations.empty()) throw InvalidTable(std::move(violations));
  return Semigroup(std::move(table));
}

std::string Semigroup::name(Element x) const {
  if (table_.names) return (*table_.names)[x];
  return std::to_string(x);
}

ElementSet Semigroup::times_all(Element x) const {
  ElementSet out = empty_set();
  for (Element s = 0; s < order(); ++s) out.insert(product(x, s));
  return out;
}

}  // namespace zdg
