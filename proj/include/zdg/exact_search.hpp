#pragma once

#include <cstdint>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Vertex> vertices;  // lexicographically least maximum clique
};

/// Exact maximum clique by branch and bound with greedy-colouring bounds.
CliqueResult clique_number(const Graph& g);

/// True iff the graph contains a clique on k vertices. Requires k >= 1.
bool has_clique_of_size(const Graph& g, std::size_t k);

/// Colour per vertex, numbered from 0.
using Coloring = std::vector<std::uint32_t>;

struct ColoringResult {
  std::size_t colors = 0;
  /// Colours renumbered by first appearance in vertex order.
  Coloring coloring;
};

/// Exact chromatic number. Tries k = omega, omega+1, ... below the greedy
/// bound, backtracking over vertices in descending-degree order.
ColoringResult chromatic_number(const Graph& g);

/// Smallest-available-colour greedy over vertices in descending-degree order.
Coloring greedy_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const Coloring& coloring);
std::size_t color_count(const Coloring& coloring);

}  // namespace zdg
