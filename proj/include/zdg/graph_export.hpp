#pragma once

#include <string>

#include "zdg/graph.hpp"

namespace zdg {

/// Undirected dot text; vertices are quoted element labels.
std::string to_dot(const Graph& g, const std::string& name = "G");

/// One line per vertex: "label: neighbour neighbour ...".
std::string adjacency_listing(const Graph& g);

}  // namespace zdg
