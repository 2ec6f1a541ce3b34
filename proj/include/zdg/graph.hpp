#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdg/element_set.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

using Vertex = std::uint32_t;
/// Bit v set means vertex v is a member. Graphs have at most 64 vertices.
using VertexMask = std::uint64_t;

inline VertexMask vertex_bit(Vertex v) { return VertexMask{1} << v; }
std::vector<Vertex> mask_vertices(VertexMask mask);
VertexMask vertices_mask(const std::vector<Vertex>& vertices);

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph whose vertices stand for semigroup elements.
/// Vertex i carries element elements()[i] and a display label.
class Graph {
 public:
  Graph() = default;

  /// Vertices 0..n-1 stand for elements 0..n-1, labelled by index.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  /// Throws std::invalid_argument on loops, out-of-range endpoints, more than
  /// 64 vertices, or mismatched label count.
  Graph(std::vector<Element> elements, std::vector<std::string> labels,
        const std::vector<Edge>& edges);

  std::size_t order() const { return elements_.size(); }
  VertexMask all() const {
    return order() >= 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
  }
  bool adjacent(Vertex u, Vertex v) const { return (adjacency_[u] >> v) & 1U; }
  VertexMask neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(std::popcount(adjacency_[v]));
  }

  /// Every edge once, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  Element element(Vertex v) const { return elements_[v]; }
  const std::vector<Element>& elements() const { return elements_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> vertex_of(Element x) const;

  /// Elements of the given vertices as a set over a semigroup of the given
  /// order.
  ElementSet element_set(VertexMask vertices, std::size_t semigroup_order) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.elements_ == b.elements_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<Element> elements_;
  std::vector<std::string> labels_;
  std::vector<VertexMask> adjacency_;
};

/// Zero-divisor graph: vertices Z(S)*, edge {x,y} iff x != y and xy = 0.
Graph gamma(const Semigroup& s);

/// Same vertices; edge {x,y} iff x != y and x*r*y = 0 for every r in S.
Graph gamma_bar(const Semigroup& s);

/// Subgraph induced by the given vertices, renumbered in ascending order and
/// keeping their elements and labels. Throws UnknownVertex.
Graph induced(const Graph& g, const std::vector<Vertex>& vertices);
Graph induced(const Graph& g, VertexMask vertices);

}  // namespace zdg
