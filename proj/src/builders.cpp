#include "zdg/builders.hpp"

#include <charconv>

namespace zdg {

Semigroup orthogonal_union(const std::vector<Semigroup>& parts) {
  if (parts.size() < 2) throw EmptyPartList();

  std::size_t order = 1;
  for (const auto& part : parts) order += part.order() - 1;
  if (order > kMaxOrder) throw OrderTooLarge("orthogonal union is too large");

  CayleyTable table(order);
  std::vector<std::string> names(order);
  names[0] = "0";
  std::size_t offset = 1;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    // Local nonzero index i maps to global index offset + i - 1.
    auto global = [&](Element i) { return i == 0 ? Element{0} : static_cast<Element>(offset + i - 1); };
    for (Element i = 1; i < part.order(); ++i) {
      names[global(i)] = part.name(i) + "_" + std::to_string(p + 1);
      for (Element j = 1; j < part.order(); ++j) {
        table.at(global(i), global(j)) = global(part.product(i, j));
      }
    }
    offset += part.order() - 1;
  }
  table.names = std::move(names);
  return Semigroup::validate(std::move(table));
}

Semigroup powerset_semigroup(std::size_t n) {
  if (n < 1) throw std::invalid_argument("powerset semigroup needs n >= 1");
  if (n > 5) throw OrderTooLarge("powerset semigroup supports n <= 5 (order 32)");
  const std::size_t order = std::size_t{1} << n;
  CayleyTable table(order);
  std::vector<std::string> names(order);
  for (Element a = 0; a < order; ++a) {
    std::string label = "{";
    for (std::size_t bit = 0; bit < n; ++bit) {
      if ((a >> bit) & 1U) {
        if (label.size() > 1) label += ',';
        label += std::to_string(bit + 1);
      }
    }
    names[a] = label + "}";
    for (Element b = 0; b < order; ++b) table.at(a, b) = a & b;
  }
  table.names = std::move(names);
  return Semigroup::validate(std::move(table));
}

Semigroup null_semigroup(std::size_t n) {
  if (n < 1) throw std::invalid_argument("null semigroup needs n >= 1");
  if (n > kMaxOrder) throw OrderTooLarge("null semigroup is too large");
  return Semigroup::validate(CayleyTable(n));
}

Semigroup cyclic_group_with_zero(std::size_t k) {
  if (k < 1) throw std::invalid_argument("cyclic group needs k >= 1");
  if (k + 1 > kMaxOrder) throw OrderTooLarge("cyclic group is too large");
  CayleyTable table(k + 1);
  std::vector<std::string> names(k + 1);
  names[0] = "0";
  for (Element i = 1; i <= k; ++i) {
    names[i] = i == 1 ? "e" : i == 2 ? "g" : "g" + std::to_string(i - 1);
    for (Element j = 1; j <= k; ++j) {
      table.at(i, j) = static_cast<Element>((i - 1 + j - 1) % k + 1);
    }
  }
  table.names = std::move(names);
  return Semigroup::validate(std::move(table));
}

Semigroup nilpotent_cyclic(std::size_t k) {
  if (k < 1) throw std::invalid_argument("nilpotent cyclic semigroup needs k >= 1");
  if (k > kMaxOrder) throw OrderTooLarge("nilpotent cyclic semigroup is too large");
  CayleyTable table(k);
  std::vector<std::string> names(k);
  names[0] = "0";
  for (Element i = 1; i < k; ++i) {
    names[i] = i == 1 ? "c" : "c" + std::to_string(i);
    for (Element j = 1; j < k; ++j) table.at(i, j) = i + j < k ? i + j : 0;
  }
  table.names = std::move(names);
  return Semigroup::validate(std::move(table));
}

namespace {

CayleyTable named_table(std::vector<std::string> names) {
  CayleyTable table(names.size());
  table.names = std::move(names);
  return table;
}

}  // namespace

Semigroup example_path5() {
  enum : Element { zero, a, b, c, d };
  CayleyTable t = named_table({"0", "a", "b", "c", "d"});
  // b^2 = ab = bc = cd = 0 are the zero entries already present.
  t.set_symmetric(a, c, c);
  t.set_symmetric(c, c, c);
  t.set_symmetric(a, a, c);
  t.set_symmetric(d, d, d);
  t.set_symmetric(a, d, b);
  t.set_symmetric(b, d, b);
  return Semigroup::validate(std::move(t));
}

Semigroup example_star_idempotent() {
  enum : Element { zero, x, y, z };
  CayleyTable t = named_table({"0", "x", "y", "z"});
  t.set_symmetric(y, x, x);
  t.set_symmetric(x, x, x);
  t.set_symmetric(y, y, y);
  return Semigroup::validate(std::move(t));
}

Semigroup example_star_nilpotent() {
  enum : Element { zero, a, b, c };
  CayleyTable t = named_table({"0", "a", "b", "c"});
  t.set_symmetric(b, c, a);
  t.set_symmetric(c, c, a);
  t.set_symmetric(b, b, a);
  return Semigroup::validate(std::move(t));
}

Semigroup example_wheel7() {
  enum : Element { zero, a, b, c, d, e, f };
  CayleyTable t = named_table({"0", "a", "b", "c", "d", "e", "f"});
  for (auto [x, y] : {std::pair{a, c}, {a, d}, {b, d}, {b, e}, {c, e}}) t.set_symmetric(x, y, f);
  return Semigroup::validate(std::move(t));
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view id) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw UnknownExample("bad numeric argument in example id '" + std::string(id) + "'");
  }
  return value;
}

}  // namespace

Semigroup builtin_example(std::string_view id) {
  if (id == "ex3.4") return example_path5();
  if (id == "ex3.5") return example_star_idempotent();
  if (id == "ex3.8") return example_star_nilpotent();
  if (id == "ex4.5") return example_wheel7();

  const auto colon = id.find(':');
  if (colon == std::string_view::npos) throw UnknownExample("unknown example '" + std::string(id) + "'");
  const std::string_view kind = id.substr(0, colon);
  const std::string_view arg = id.substr(colon + 1);

  try {
    if (kind == "ortho") {
      std::vector<Semigroup> parts;
      std::size_t start = 0;
      while (start <= arg.size()) {
        const auto plus = arg.find('+', start);
        const auto piece = arg.substr(start, plus == std::string_view::npos ? arg.npos : plus - start);
        parts.push_back(builtin_example(piece));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
      }
      return orthogonal_union(parts);
    }
    if (kind == "powerset") return powerset_semigroup(parse_size(arg, id));
    if (kind == "null") return null_semigroup(parse_size(arg, id));
    if (kind == "group0") return cyclic_group_with_zero(parse_size(arg, id));
    if (kind == "nilcyclic") return nilpotent_cyclic(parse_size(arg, id));
  } catch (const std::invalid_argument& e) {
    throw UnknownExample("example '" + std::string(id) + "': " + e.what());
  }
  throw UnknownExample("unknown example '" + std::string(id) + "'");
}

std::vector<std::pair<std::string, std::string>> builtin_catalog() {
  return {
      {"ex3.4", "{0,a,b,c,d}: graph is the path a-b-c-d"},
      {"ex3.5", "{0,x,y,z}: z annihilates S, x and y idempotent, yx = x"},
      {"ex3.8", "{0,a,b,c}: a annihilates S, bc = b^2 = c^2 = a"},
      {"ex4.5", "{0,a,...,f}: wheel graph with chi = 4, omega = 3"},
      {"powerset:N", "subsets of an N-set under intersection, 1 <= N <= 5"},
      {"null:N", "order N, every product zero"},
      {"group0:K", "cyclic group of order K with zero adjoined"},
      {"nilcyclic:K", "{0, c, ..., c^(K-1)} with c^K = 0"},
      {"ortho:A+B[+...]", "0-orthogonal union of the listed builtins"},
  };
}

}  // namespace zdg
