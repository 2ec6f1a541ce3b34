#include "zdg/exact_search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace zdg {

namespace {

/// Number of colour classes a greedy sequential colouring of the candidate
/// set needs; an upper bound on any clique inside it.
std::size_t colour_bound(const Graph& g, VertexMask candidates) {
  std::size_t classes = 0;
  while (candidates != 0) {
    ++classes;
    VertexMask open = candidates;
    while (open != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(open));
      candidates &= ~vertex_bit(v);
      open &= ~vertex_bit(v) & ~g.neighbors(v);
    }
  }
  return classes;
}

/// Largest clique size, MCQ style: candidates are processed from the highest
/// colour class down, pruning when no class count can beat the incumbent.
class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

  std::size_t run() {
    best_ = 0;
    expand(0, g_.all());
    return best_;
  }

 private:
  void expand(std::size_t depth, VertexMask candidates) {
    // Sequential colouring: order[i] gets colour colour[i], non-decreasing.
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    VertexMask uncoloured = candidates;
    for (std::size_t k = 1; uncoloured != 0; ++k) {
      VertexMask open = uncoloured;
      while (open != 0) {
        const auto v = static_cast<Vertex>(std::countr_zero(open));
        uncoloured &= ~vertex_bit(v);
        open &= ~vertex_bit(v) & ~g_.neighbors(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colour[i] <= best_) return;
      const Vertex v = order[i];
      const VertexMask next = candidates & g_.neighbors(v);
      if (next == 0) {
        best_ = std::max(best_, depth + 1);
      } else {
        expand(depth + 1, next);
      }
      candidates &= ~vertex_bit(v);
    }
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

/// First clique of exactly `target` vertices in lexicographic order of the
/// ascending vertex lists.
bool lex_first_clique(const Graph& g, std::size_t target, std::vector<Vertex>& clique,
                      VertexMask candidates) {
  if (clique.size() == target) return true;
  while (candidates != 0) {
    if (clique.size() + colour_bound(g, candidates) < target) return false;
    const auto v = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= ~vertex_bit(v);
    clique.push_back(v);
    // Later members are larger than v, keeping the list ascending.
    if (lex_first_clique(g, target, clique, candidates & g.neighbors(v))) return true;
    clique.pop_back();
  }
  return clique.size() == target;
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

Coloring canonical_colours(const Coloring& coloring) {
  std::vector<std::uint32_t> renamed(coloring.size() + 1, UINT32_MAX);
  std::uint32_t next = 0;
  Coloring out(coloring.size());
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    auto& slot = renamed[coloring[v]];
    if (slot == UINT32_MAX) slot = next++;
    out[v] = slot;
  }
  return out;
}

/// Backtracking k-colouring over a fixed vertex order with forward checking.
class KColouring {
 public:
  KColouring(const Graph& g, std::size_t k) : g_(g), k_(k), order_(degree_order(g)) {}

  bool solve(Coloring& out) {
    colour_.assign(g_.order(), kNone);
    forbidden_.assign(g_.order(), 0);
    if (!place(0, 0)) return false;
    out = colour_;
    return true;
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;

  bool place(std::size_t index, std::size_t used) {
    if (index == order_.size()) return true;
    const Vertex v = order_[index];
    // A fresh colour beyond `used` is interchangeable with any other fresh one.
    const std::size_t limit = std::min(k_, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      if ((forbidden_[v] >> c) & 1U) continue;
      colour_[v] = c;
      std::vector<Vertex> touched;
      bool wiped = false;
      for (Vertex w : mask_vertices(g_.neighbors(v))) {
        if (colour_[w] != kNone || ((forbidden_[w] >> c) & 1U)) continue;
        forbidden_[w] |= std::uint64_t{1} << c;
        touched.push_back(w);
        if (std::popcount(forbidden_[w]) >= static_cast<int>(k_)) wiped = true;
      }
      if (!wiped && place(index + 1, std::max<std::size_t>(used, c + 1))) return true;
      for (Vertex w : touched) forbidden_[w] &= ~(std::uint64_t{1} << c);
      colour_[v] = kNone;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<Vertex> order_;
  Coloring colour_;
  std::vector<std::uint64_t> forbidden_;
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
  CliqueResult result;
  if (g.order() == 0) return result;
  result.size = MaxCliqueSearch(g).run();
  lex_first_clique(g, result.size, result.vertices, g.all());
  return result;
}

bool has_clique_of_size(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("clique size must be at least 1");
  if (k > g.order()) return false;
  std::vector<Vertex> clique;
  return lex_first_clique(g, k, clique, g.all());
}

Coloring greedy_coloring(const Graph& g) {
  Coloring colour(g.order(), 0);
  std::vector<bool> done(g.order(), false);
  for (Vertex v : degree_order(g)) {
    std::uint64_t taken = 0;
    for (Vertex w : mask_vertices(g.neighbors(v))) {
      if (done[w]) taken |= std::uint64_t{1} << colour[w];
    }
    colour[v] = static_cast<std::uint32_t>(std::countr_one(taken));
    done[v] = true;
  }
  return colour;
}

bool is_proper_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.order()) return false;
  for (const auto& e : g.edges()) {
    if (coloring[e.u] == coloring[e.v]) return false;
  }
  return true;
}

std::size_t color_count(const Coloring& coloring) {
  if (coloring.empty()) return 0;
  return *std::max_element(coloring.begin(), coloring.end()) + std::size_t{1};
}

ColoringResult chromatic_number(const Graph& g) {
  ColoringResult result;
  if (g.order() == 0) return result;
  Coloring best = greedy_coloring(g);
  const std::size_t upper = color_count(best);
  for (std::size_t k = clique_number(g).size; k < upper; ++k) {
    Coloring attempt;
    if (KColouring(g, k).solve(attempt)) {
      best = std::move(attempt);
      break;
    }
  }
  result.coloring = canonical_colours(best);
  result.colors = color_count(result.coloring);
  return result;
}

}  // namespace zdg
