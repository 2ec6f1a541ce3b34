#include "zdg/report.hpp"

namespace zdg {

namespace {

Report elements_of(const Graph& g, const std::vector<Vertex>& vertices) {
  Report out = Report::array();
  for (Vertex v : vertices) out.push_back(g.element(v));
  return out;
}

Report edge_report(const Graph& g, const Edge& e) { return {g.element(e.u), g.element(e.v)}; }

Report witnessed(const std::vector<WitnessedSet>& sets) {
  Report out = Report::array();
  for (const auto& [x, set] : sets) out.push_back({{"witness", x}, {"set", set.members()}});
  return out;
}

Report decomposition(const std::optional<PrimeDecomposition>& d) {
  if (!d) return nullptr;
  Report primes = Report::array();
  for (const auto& p : d->primes) primes.push_back(p.members());
  return {{"primes", primes}, {"minimal", d->minimal}};
}

}  // namespace

Report distance_report(Distance d) { return d == kInfinity ? Report("inf") : Report(d); }

Report to_report(const CayleyTable& table) {
  Report rows = Report::array();
  for (Element i = 0; i < table.order; ++i) {
    Report row = Report::array();
    for (Element j = 0; j < table.order; ++j) row.push_back(table.at(i, j));
    rows.push_back(row);
  }
  Report out = {{"order", table.order}, {"table", rows}};
  if (table.names) out["names"] = *table.names;
  return out;
}

Report to_report(const ElementSet& set) {
  return {{"members", set.members()}, {"role", std::string(to_string(set.role()))}};
}

Report to_report(const Graph& g) {
  Report vertices = Report::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    Report neighbours = Report::array();
    for (Vertex w : mask_vertices(g.neighbors(v))) neighbours.push_back(g.element(w));
    vertices.push_back({{"element", g.element(v)}, {"label", g.label(v)}, {"neighbors", neighbours}});
  }
  Report edges = Report::array();
  for (const auto& e : g.edges()) edges.push_back(edge_report(g, e));
  return {{"vertices", vertices}, {"edges", edges}};
}

Report to_report(const GraphMetrics& m) {
  auto distances = [](const std::vector<Distance>& row) {
    Report out = Report::array();
    for (Distance d : row) out.push_back(distance_report(d));
    return out;
  };
  Report dist = Report::array();
  for (const auto& row : m.dist) dist.push_back(distances(row));
  Report components = Report::array();
  for (const auto& c : m.components) {
    components.push_back({{"vertices", c.vertices},
                          {"radius", distance_report(c.radius)},
                          {"diameter", distance_report(c.diameter)}});
  }
  return {{"distances", dist},
          {"eccentricity", distances(m.eccentricity)},
          {"distance_sum", distances(m.distance_sum)},
          {"radius", distance_report(m.radius)},
          {"diameter", distance_report(m.diameter)},
          {"girth", distance_report(m.girth)},
          {"connected", m.connected},
          {"components", components}};
}

Report to_report(const Verdict& v) {
  Report out = {{"id", v.id},
                {"theorem", v.theorem},
                {"status", std::string(to_string(v.status))},
                {"applicable", v.applicable()},
                {"witness", v.witness},
                {"notes", v.notes}};
  out["holds"] = v.applicable() ? Report(v.holds()) : Report(nullptr);
  return out;
}

Report to_report(const std::vector<Verdict>& verdicts) {
  Report out = Report::array();
  for (const auto& v : verdicts) out.push_back(to_report(v));
  return out;
}

Report to_report(const AuditReport& audit) {
  Report tallies = Report::array();
  for (const auto& [id, t] : audit.tallies) {
    tallies.push_back({{"id", id}, {"applicable", t.applicable}, {"holds", t.holds}, {"fails", t.fails}});
  }
  Report candidates = Report::array();
  for (const auto& c : audit.counterexample_candidates) {
    candidates.push_back({{"table", to_report(c.table)}, {"verdict", to_report(c.verdict)}});
  }
  Report structure = Report::array();
  for (const auto& t : audit.structure_violations) structure.push_back(to_report(t));
  return {{"orders", audit.orders},
          {"up_to_iso", audit.up_to_iso},
          {"total_examined", audit.total_examined},
          {"tallies", tallies},
          {"counterexample_candidates", candidates},
          {"structure_violations", structure}};
}

Report invariants_report(const Semigroup& s) {
  Report out;
  out["order"] = s.order();
  out["reduced"] = is_reduced(s);
  out["zero_divisors"] = zero_divisors(s).members();
  out["nilpotents"] = nilpotents(s).members();

  Report annihilators = Report::array();
  for (Element x = 1; x < s.order(); ++x) {
    annihilators.push_back({{"element", x}, {"set", annihilator(s, x).members()}});
  }
  out["annihilators"] = annihilators;
  out["associated_primes"] = witnessed(associated_primes(s));
  out["maximal_annihilators"] = witnessed(maximal_annihilators(s));
  Report minimal = Report::array();
  for (const auto& m : minimal_ideals(s)) minimal.push_back(m.members());
  out["minimal_ideals"] = minimal;

  out["decomposition_fast"] = decomposition(zero_prime_decomposition(s, DecompositionMode::kFast));
  out["decomposition_exhaustive"] =
      s.order() <= kExhaustiveOrderCap
          ? decomposition(zero_prime_decomposition(s, DecompositionMode::kExhaustive))
          : Report(nullptr);

  const Graph g = gamma(s);
  const GraphMetrics m = metrics(g);
  Report labels = Report::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  out["graph"] = {{"vertices", g.elements()},
                  {"labels", labels},
                  {"edge_count", g.edge_count()},
                  {"edges", to_report(g)["edges"]},
                  {"bar_edge_count", gamma_bar(s).edge_count()}};

  Report eccentricity = Report::array();
  Report distance_sum = Report::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    eccentricity.push_back(distance_report(m.eccentricity[v]));
    distance_sum.push_back(distance_report(m.distance_sum[v]));
  }
  out["metrics"] = {{"connected", m.connected},
                    {"radius", distance_report(m.radius)},
                    {"diameter", distance_report(m.diameter)},
                    {"girth", distance_report(m.girth)},
                    {"eccentricity", eccentricity},
                    {"distance_sum", distance_sum}};

  const bool connected = m.connected;
  out["center"] = connected ? elements_of(g, center(g)) : Report(nullptr);
  out["median"] = connected ? elements_of(g, median(g)) : Report(nullptr);
  out["cut_vertices"] = connected ? elements_of(g, cut_vertices(g)) : Report(nullptr);
  if (connected) {
    Report bridge_list = Report::array();
    for (const auto& e : bridges(g)) bridge_list.push_back(edge_report(g, e));
    out["bridges"] = bridge_list;
  } else {
    out["bridges"] = nullptr;
  }

  const CliqueResult clique = clique_number(g);
  out["clique"] = {{"size", clique.size}, {"vertices", elements_of(g, clique.vertices)}};
  const ColoringResult colouring = chromatic_number(g);
  out["chromatic"] = {{"colors", colouring.colors}, {"coloring", colouring.coloring}};

  if (auto partition = complete_multipartite_partition(g)) {
    Report parts = Report::array();
    for (const auto& part : partition->parts) parts.push_back(elements_of(g, part));
    out["complete_multipartite"] = parts;
  } else {
    out["complete_multipartite"] = nullptr;
  }
  out["bipartite"] = is_bipartite(g);
  return out;
}

std::string dump(const Report& report) { return report.dump(2) + "\n"; }

}  // namespace zdg
