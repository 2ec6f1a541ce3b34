#include "zdg/graph_export.hpp"

#include <sstream>

namespace zdg {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << quoted(name) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << quoted(g.label(v)) << ";\n";
  for (const auto& e : g.edges()) {
    out << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string adjacency_listing(const Graph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.order(); ++v) {
    out << g.label(v) << ':';
    for (Vertex w : mask_vertices(g.neighbors(v))) out << ' ' << g.label(w);
    out << '\n';
  }
  return out.str();
}

}  // namespace zdg
