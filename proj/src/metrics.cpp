#include "zdg/metrics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "zdg/errors.hpp"

namespace zdg {

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> dist(g.order(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : mask_vertices(g.neighbors(u))) {
      if (dist[w] == kInfinity) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexMask> components(const Graph& g, VertexMask within) {
  std::vector<VertexMask> out;
  VertexMask unseen = within & g.all();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);  // least remaining vertex
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (Vertex v : mask_vertices(frontier)) next |= g.neighbors(v);
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::vector<VertexMask> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

Distance girth(const Graph& g) {
  // A non-tree edge {u,w} met during BFS from a root closes a walk of length
  // dist[u] + dist[w] + 1 that contains a cycle; from a root lying on a
  // shortest cycle the bound is attained.
  Distance best = kInfinity;
  for (Vertex root = 0; root < g.order(); ++root) {
    std::vector<Distance> dist(g.order(), kInfinity);
    std::vector<int> parent(g.order(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : mask_vertices(g.neighbors(u))) {
        if (dist[w] == kInfinity) {
          dist[w] = dist[u] + 1;
          parent[w] = static_cast<int>(u);
          queue.push_back(w);
        } else if (parent[u] != static_cast<int>(w)) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  const std::size_t n = g.order();
  m.dist.reserve(n);
  for (Vertex v = 0; v < n; ++v) m.dist.push_back(bfs_distances(g, v));
  m.connected = is_connected(g);
  m.eccentricity.assign(n, kInfinity);
  m.distance_sum.assign(n, kInfinity);
  if (m.connected) {
    for (Vertex v = 0; v < n; ++v) {
      m.eccentricity[v] = *std::max_element(m.dist[v].begin(), m.dist[v].end());
      Distance sum = 0;
      for (Distance d : m.dist[v]) sum += d;
      m.distance_sum[v] = sum;
    }
    m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
  }
  for (VertexMask comp : components(g)) {
    ComponentMetrics cm;
    cm.vertices = mask_vertices(comp);
    cm.radius = kInfinity;
    cm.diameter = 0;
    for (Vertex v : cm.vertices) {
      Distance ecc = 0;
      for (Vertex w : cm.vertices) ecc = std::max(ecc, m.dist[v][w]);
      cm.radius = std::min(cm.radius, ecc);
      cm.diameter = std::max(cm.diameter, ecc);
    }
    m.components.push_back(std::move(cm));
  }
  m.girth = girth(g);
  return m;
}

namespace {

template <typename Score>
std::vector<Vertex> argmin_vertices(const Graph& g, Score score) {
  if (!is_connected(g)) throw Disconnected();
  const GraphMetrics m = metrics(g);
  const auto& values = score(m);
  const Distance best = *std::min_element(values.begin(), values.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (values[v] == best) out.push_back(v);
  }
  return out;
}

struct LowLink {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<bool> articulation;
  std::vector<Edge> bridges;
  int timer = 0;

  explicit LowLink(const Graph& graph)
      : g(graph), disc(graph.order(), -1), low(graph.order(), 0), articulation(graph.order(), false) {
    visit(0, -1);
  }

  void visit(Vertex u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : mask_vertices(g.neighbors(u))) {
      if (static_cast<int>(w) == parent) continue;
      if (disc[w] >= 0) {
        low[u] = std::min(low[u], disc[w]);
        continue;
      }
      ++children;
      visit(w, static_cast<int>(u));
      low[u] = std::min(low[u], low[w]);
      if (parent >= 0 && low[w] >= disc[u]) articulation[u] = true;
      if (low[w] > disc[u]) bridges.push_back({std::min(u, w), std::max(u, w)});
    }
    if (parent < 0 && children > 1) articulation[u] = true;
  }
};

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Disconnected();
}

/// Calls visit(mask) for every k-subset of the items, in lexicographic order
/// of item indices. Stops early when visit returns false.
void for_each_combination(std::size_t items, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > items) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    if (!visit(pick)) return;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vertex> center(const Graph& g) {
  return argmin_vertices(g, [](const GraphMetrics& m) -> const auto& { return m.eccentricity; });
}

std::vector<Vertex> median(const Graph& g) {
  return argmin_vertices(g, [](const GraphMetrics& m) -> const auto& { return m.distance_sum; });
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  require_connected(g);
  LowLink ll(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ll.articulation[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g);
  LowLink ll(g);
  std::sort(ll.bridges.begin(), ll.bridges.end());
  return ll.bridges;
}

std::vector<std::vector<Vertex>> minimal_vertex_cutsets(const Graph& g, std::size_t size_cap) {
  require_connected(g);
  if (g.order() < 3) throw TooFewVertices("vertex cutsets need at least 3 vertices");
  std::vector<VertexMask> found;
  const std::size_t largest = std::min(size_cap, g.order() - 2);
  for (std::size_t k = 1; k <= largest; ++k) {
    for_each_combination(g.order(), k, [&](const std::vector<std::size_t>& pick) {
      VertexMask removed = 0;
      for (auto v : pick) removed |= vertex_bit(static_cast<Vertex>(v));
      // Any cut set properly inside this one was found at a smaller size.
      for (VertexMask earlier : found) {
        if ((earlier & ~removed) == 0) return true;
      }
      if (components(g, g.all() & ~removed).size() >= 2) found.push_back(removed);
      return true;
    });
  }
  std::vector<std::vector<Vertex>> out;
  for (VertexMask mask : found) out.push_back(mask_vertices(mask));
  return out;
}

namespace {

/// Components of the graph given by raw adjacency rows.
std::vector<VertexMask> mask_components(const std::vector<VertexMask>& adjacency) {
  const std::size_t n = adjacency.size();
  VertexMask unseen = n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
  std::vector<VertexMask> out;
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= adjacency[std::countr_zero(f)];
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

std::size_t components_without(std::vector<VertexMask> adjacency, const std::vector<Edge>& edges,
                               const std::vector<std::size_t>& removed, std::size_t skip) {
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (i == skip) continue;
    const Edge& e = edges[removed[i]];
    adjacency[e.u] &= ~vertex_bit(e.v);
    adjacency[e.v] &= ~vertex_bit(e.u);
  }
  return mask_components(adjacency).size();
}

}  // namespace

std::vector<EdgeCut> minimal_edge_cutsets(const Graph& g, std::size_t size_cap) {
  require_connected(g);
  if (g.order() < 2) throw TooFewVertices("edge cutsets need at least 2 vertices");
  const auto all_edges = g.edges();
  std::vector<VertexMask> adjacency(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adjacency[v] = g.neighbors(v);
  const std::size_t none = all_edges.size();

  std::vector<EdgeCut> out;
  for (std::size_t k = 1; k <= std::min(size_cap, all_edges.size()); ++k) {
    for_each_combination(all_edges.size(), k, [&](const std::vector<std::size_t>& pick) {
      if (components_without(adjacency, all_edges, pick, none) < 2) return true;
      // Putting back any single edge must reconnect the graph; deleting a
      // superset of a cut only deletes more, so this decides minimality.
      for (std::size_t i = 0; i < pick.size(); ++i) {
        if (components_without(adjacency, all_edges, pick, i) >= 2) return true;
      }
      auto cut_adjacency = adjacency;
      EdgeCut cut;
      for (auto i : pick) {
        const Edge& e = all_edges[i];
        cut.edges.push_back(e);
        cut_adjacency[e.u] &= ~vertex_bit(e.v);
        cut_adjacency[e.v] &= ~vertex_bit(e.u);
      }
      const auto comps = mask_components(cut_adjacency);
      if (comps.size() != 2) {
        throw std::logic_error("minimal edge cutset left more than two components");
      }
      cut.side_a = comps[0];
      cut.side_b = comps[1];
      out.push_back(std::move(cut));
      return true;
    });
  }
  return out;
}

std::optional<Partition> complete_multipartite_partition(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  std::vector<Edge> complement_edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) complement_edges.push_back({u, v});
    }
  }
  const Graph complement = Graph::from_edges(g.order(), complement_edges);
  Partition partition;
  for (VertexMask part : components(complement)) {
    for (Vertex v : mask_vertices(part)) {
      if ((g.neighbors(v) & part) != 0) return std::nullopt;
    }
    partition.parts.push_back(mask_vertices(part));
  }
  std::stable_sort(partition.parts.begin(), partition.parts.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.front() < b.front();
                   });
  return partition;
}

Graph complete_multipartite_graph(std::size_t order, const Partition& partition) {
  std::vector<std::size_t> part_of(order, 0);
  for (std::size_t p = 0; p < partition.parts.size(); ++p) {
    for (Vertex v : partition.parts[p]) part_of[v] = p;
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(order, edges);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : mask_vertices(g.neighbors(u))) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace zdg
