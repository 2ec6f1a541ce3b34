#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

/// Hop count; kInfinity marks "unreachable" or "no cycle".
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

struct ComponentMetrics {
  std::vector<Vertex> vertices;
  Distance radius = 0;
  Distance diameter = 0;
};

/// All-pairs distances and the quantities derived from them.
///
/// On a disconnected (or empty) graph the eccentricities, distance sums,
/// radius and diameter are kInfinity; per-component radius and diameter are
/// still reported.
struct GraphMetrics {
  std::vector<std::vector<Distance>> dist;
  std::vector<Distance> eccentricity;
  std::vector<Distance> distance_sum;
  Distance radius = kInfinity;
  Distance diameter = kInfinity;
  Distance girth = kInfinity;
  bool connected = false;
  std::vector<ComponentMetrics> components;
};

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);
GraphMetrics metrics(const Graph& g);

/// Length of a shortest cycle, kInfinity for forests.
Distance girth(const Graph& g);

/// Connected components as vertex masks, ordered by least vertex.
std::vector<VertexMask> components(const Graph& g, VertexMask within);
std::vector<VertexMask> components(const Graph& g);

/// True iff the graph has at least one vertex and a single component.
bool is_connected(const Graph& g);

/// Vertices of minimum eccentricity. Throws Disconnected.
std::vector<Vertex> center(const Graph& g);
/// Vertices of minimum distance sum. Throws Disconnected.
std::vector<Vertex> median(const Graph& g);

/// Articulation points, ascending. Throws Disconnected.
std::vector<Vertex> cut_vertices(const Graph& g);
/// Bridges, sorted. Throws Disconnected.
std::vector<Edge> bridges(const Graph& g);

inline constexpr std::size_t kDefaultVertexCutsetCap = 4;
inline constexpr std::size_t kDefaultEdgeCutsetCap = 4;

/// Inclusion-minimal vertex sets T, |T| <= size_cap, whose removal leaves a
/// disconnected graph; sorted by size then lexicographically. Throws
/// Disconnected, or TooFewVertices below 3 vertices.
std::vector<std::vector<Vertex>> minimal_vertex_cutsets(
    const Graph& g, std::size_t size_cap = kDefaultVertexCutsetCap);

/// A minimal edge cutset and the two components left after deleting it.
struct EdgeCut {
  std::vector<Edge> edges;
  VertexMask side_a = 0;  // holds the least vertex
  VertexMask side_b = 0;
};

/// Inclusion-minimal edge sets U, |U| <= size_cap, with G \ U disconnected;
/// sorted by size then lexicographically. Every result leaves exactly two
/// components. Throws Disconnected, or TooFewVertices below 2 vertices.
std::vector<EdgeCut> minimal_edge_cutsets(const Graph& g,
                                          std::size_t size_cap = kDefaultEdgeCutsetCap);

struct Partition {
  std::vector<std::vector<Vertex>> parts;
};

/// Parts of a complete multipartite graph (the components of its
/// complement), sorted by size then least vertex; nullopt if the graph is
/// not complete multipartite or has no vertices.
std::optional<Partition> complete_multipartite_partition(const Graph& g);

/// The complete multipartite graph on the given parts.
Graph complete_multipartite_graph(std::size_t order, const Partition& partition);

bool is_bipartite(const Graph& g);

}  // namespace zdg
