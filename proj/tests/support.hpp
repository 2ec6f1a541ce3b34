#pragma once

#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "zdg/builders.hpp"
#include "zdg/graph.hpp"
#include "zdg/semigroup.hpp"

namespace testing_support {

inline oracle::Table to_oracle(const zdg::Semigroup& s) {
  oracle::Table t(s.order(), std::vector<unsigned>(s.order(), 0));
  for (zdg::Element x = 0; x < s.order(); ++x) {
    for (zdg::Element y = 0; y < s.order(); ++y) t[x][y] = s.product(x, y);
  }
  return t;
}

inline zdg::Semigroup from_oracle(const oracle::Table& t) {
  zdg::CayleyTable table(t.size());
  for (zdg::Element x = 0; x < t.size(); ++x) {
    for (zdg::Element y = 0; y < t.size(); ++y) table.at(x, y) = t[x][y];
  }
  return zdg::Semigroup::validate(table);
}

inline oracle::AdjMatrix to_oracle(const zdg::Graph& g) {
  oracle::AdjMatrix a(g.order(), std::vector<bool>(g.order(), false));
  for (zdg::Vertex u = 0; u < g.order(); ++u) {
    for (zdg::Vertex v = 0; v < g.order(); ++v) a[u][v] = g.adjacent(u, v);
  }
  return a;
}

inline zdg::Graph from_oracle(const oracle::AdjMatrix& a) {
  std::vector<zdg::Edge> edges;
  for (zdg::Vertex u = 0; u < a.size(); ++u) {
    for (zdg::Vertex v = u + 1; v < a.size(); ++v) {
      if (a[u][v]) edges.push_back({u, v});
    }
  }
  return zdg::Graph::from_edges(a.size(), edges);
}

/// Elements of a named semigroup, looked up by label.
inline zdg::Element element(const zdg::Semigroup& s, const std::string& label) {
  for (zdg::Element x = 0; x < s.order(); ++x) {
    if (s.name(x) == label) return x;
  }
  throw std::invalid_argument("no element " + label);
}

inline zdg::ElementSet set_of(const zdg::Semigroup& s, const std::vector<std::string>& labels) {
  zdg::ElementSet out(s.order(), std::uint64_t{0});
  for (const auto& l : labels) out.insert(element(s, l));
  return out;
}

inline std::vector<std::string> labels(const zdg::Graph& g, const std::vector<zdg::Vertex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

inline zdg::Vertex vertex(const zdg::Graph& g, const std::string& label) {
  for (zdg::Vertex v = 0; v < g.order(); ++v) {
    if (g.label(v) == label) return v;
  }
  throw std::invalid_argument("no vertex " + label);
}

}  // namespace testing_support
