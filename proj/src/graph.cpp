#include "zdg/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdg/errors.hpp"
#include "zdg/ideals.hpp"

namespace zdg {

std::vector<Vertex> mask_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

VertexMask vertices_mask(const std::vector<Vertex>& vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) mask |= vertex_bit(v);
  return mask;
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<Element> elements(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    elements[i] = static_cast<Element>(i);
    labels[i] = std::to_string(i);
  }
  return Graph(std::move(elements), std::move(labels), edges);
}

Graph::Graph(std::vector<Element> elements, std::vector<std::string> labels,
             const std::vector<Edge>& edges)
    : elements_(std::move(elements)), labels_(std::move(labels)) {
  if (elements_.size() > 64) throw std::invalid_argument("graphs are limited to 64 vertices");
  if (labels_.size() != elements_.size()) throw std::invalid_argument("label count mismatch");
  adjacency_.assign(elements_.size(), 0);
  for (const auto& [u, v] : edges) {
    if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adjacency_[u] |= vertex_bit(v);
    adjacency_[v] |= vertex_bit(u);
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : mask_vertices(adjacency_[u] >> u >> 1)) out.push_back({u, u + 1 + v});
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adjacency_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::optional<Vertex> Graph::vertex_of(Element x) const {
  auto it = std::find(elements_.begin(), elements_.end(), x);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<Vertex>(it - elements_.begin());
}

ElementSet Graph::element_set(VertexMask vertices, std::size_t semigroup_order) const {
  ElementSet out(semigroup_order, std::uint64_t{0}, SetRole::kPart);
  for (Vertex v : mask_vertices(vertices)) out.insert(elements_[v]);
  return out;
}

namespace {

template <typename Adjacent>
Graph build_on_zero_divisors(const Semigroup& s, Adjacent adjacent) {
  const auto members = nonzero_zero_divisors(s).members();
  std::vector<std::string> labels;
  for (Element x : members) labels.push_back(s.name(x));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < members.size(); ++i) {
    for (Vertex j = i + 1; j < members.size(); ++j) {
      if (adjacent(members[i], members[j])) edges.push_back({i, j});
    }
  }
  return Graph(members, std::move(labels), edges);
}

}  // namespace

Graph gamma(const Semigroup& s) {
  return build_on_zero_divisors(s, [&](Element x, Element y) { return s.product(x, y) == 0; });
}

Graph gamma_bar(const Semigroup& s) {
  return build_on_zero_divisors(s, [&](Element x, Element y) {
    for (Element r = 0; r < s.order(); ++r) {
      if (s.product(s.product(x, r), y) != 0) return false;
    }
    return true;
  });
}

Graph induced(const Graph& g, VertexMask vertices) {
  if ((vertices & ~g.all()) != 0) {
    throw UnknownVertex("vertex " + std::to_string(std::countr_zero(vertices & ~g.all())) +
                        " is not in the graph");
  }
  const auto kept = mask_vertices(vertices);
  std::vector<Element> elements;
  std::vector<std::string> labels;
  for (Vertex v : kept) {
    elements.push_back(g.element(v));
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < kept.size(); ++i) {
    for (Vertex j = i + 1; j < kept.size(); ++j) {
      if (g.adjacent(kept[i], kept[j])) edges.push_back({i, j});
    }
  }
  return Graph(std::move(elements), std::move(labels), edges);
}

Graph induced(const Graph& g, const std::vector<Vertex>& vertices) {
  VertexMask mask = 0;
  for (Vertex v : vertices) {
    if (v >= g.order()) throw UnknownVertex("vertex " + std::to_string(v) + " is not in the graph");
    mask |= vertex_bit(v);
  }
  return induced(g, mask);
}

}  // namespace zdg
