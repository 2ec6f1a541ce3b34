#include "zdg/theorems.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "zdg/errors.hpp"
#include "zdg/exact_search.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideals.hpp"

namespace zdg {

using json = nlohmann::json;

namespace {

json set_json(const ElementSet& set) { return set.members(); }

json vertices_json(const Graph& g, VertexMask mask) {
  json out = json::array();
  for (Vertex v : mask_vertices(mask)) out.push_back(g.element(v));
  return out;
}

json edge_json(const Graph& g, const Edge& e) { return {g.element(e.u), g.element(e.v)}; }

json distance_json(Distance d) { return d == kInfinity ? json("inf") : json(d); }

std::string set_text(const Semigroup& s, const ElementSet& set) {
  std::string out = "{";
  for (Element x : set.members()) {
    if (out.size() > 1) out += ',';
    out += s.name(x);
  }
  return out + "}";
}

/// Vertex set plus zero, as elements of S.
ElementSet with_zero(const Semigroup& s, const Graph& g, VertexMask mask) {
  return g.element_set(mask, s.order()) | s.zero_set();
}

/// [x, r] with x in the set and x*r outside it, or null.
json ideal_failure(const Semigroup& s, const ElementSet& set) {
  auto bad = ideal_violation(s, set);
  if (!bad) return nullptr;
  return {bad->first, bad->second};
}

Verdict make(std::string id, std::string theorem) {
  Verdict v;
  v.id = std::move(id);
  v.theorem = std::move(theorem);
  return v;
}

void settle(Verdict& v, bool ok) { v.status = ok ? Verdict::Status::kHolds : Verdict::Status::kFails; }

/// Vertices reachable from `from` once the edge from-to is deleted.
VertexMask side_without_edge(const Graph& g, Vertex from, Vertex to) {
  VertexMask seen = vertex_bit(from);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (Vertex v : mask_vertices(frontier)) {
      VertexMask nbrs = g.neighbors(v);
      if (v == from) nbrs &= ~vertex_bit(to);
      if (v == to) nbrs &= ~vertex_bit(from);
      next |= nbrs;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

void not_connected(Verdict& v) {
  v.status = Verdict::Status::kFails;
  v.notes = "zero-divisor graph is disconnected";
}

struct RpartiteConclusion {
  bool ok = true;
  json failures = json::array();
};

/// Every part plus zero is an ideal, and Z(S) minus every part is prime.
RpartiteConclusion part_ideals_and_primes(const Semigroup& s, const Graph& g,
                                          const Partition& partition) {
  RpartiteConclusion out;
  const ElementSet z = zero_divisors(s);
  for (std::size_t t = 0; t < partition.parts.size(); ++t) {
    const VertexMask mask = vertices_mask(partition.parts[t]);
    const ElementSet part = with_zero(s, g, mask);
    if (auto bad = ideal_failure(s, part); !bad.is_null()) {
      out.ok = false;
      out.failures.push_back({{"part", t}, {"kind", "part-ideal"}, {"set", set_json(part)},
                              {"violation", bad}});
    }
    const ElementSet p = z - g.element_set(mask, s.order());
    if (auto bad = prime_violation(s, p)) {
      out.ok = false;
      const bool not_ideal = bad->reason == PrimeViolation::Reason::kNotIdeal;
      out.failures.push_back({{"part", t},
                              {"kind", not_ideal ? "complement-not-ideal" : "complement-not-prime"},
                              {"set", set_json(p)},
                              {"violation", {bad->x, bad->y}}});
    }
  }
  return out;
}

json partition_json(const Graph& g, const Partition& partition) {
  json out = json::array();
  for (const auto& part : partition.parts) out.push_back(vertices_json(g, vertices_mask(part)));
  return out;
}

}  // namespace

std::string_view to_string(Verdict::Status status) {
  switch (status) {
    case Verdict::Status::kVacuous: return "vacuous";
    case Verdict::Status::kHolds: return "holds";
    case Verdict::Status::kFails: return "fails";
  }
  return "?";
}

std::vector<Verdict> check_nilpotent_subgraph(const Semigroup& s) {
  Verdict v = make("prop-2.1", "2.1");
  const ElementSet nil = nilpotents(s) - s.zero_set();
  if (nil.empty()) return {v};
  const Graph g = gamma(s);
  VertexMask mask = 0;
  for (Element x : nil.members()) {
    if (auto vx = g.vertex_of(x)) mask |= vertex_bit(*vx);
  }
  const GraphMetrics m = metrics(induced(g, mask));
  v.witness = {{"nilpotents", set_json(nil)},
               {"connected", m.connected},
               {"diameter", distance_json(m.diameter)}};
  settle(v, std::popcount(mask) == static_cast<int>(nil.size()) && m.connected && m.diameter <= 2);
  return {v};
}

std::vector<Verdict> check_median_center_ideals(const Semigroup& s) {
  Verdict med = make("thm-2.2-median", "2.2");
  Verdict cen = make("thm-2.4-center", "2.4");
  const Graph g = gamma(s);
  if (g.order() == 0) return {med, cen};
  if (!is_connected(g)) {
    not_connected(med);
    not_connected(cen);
    return {med, cen};
  }
  auto check = [&](Verdict& v, const std::vector<Vertex>& chosen) {
    const ElementSet set = with_zero(s, g, vertices_mask(chosen));
    const json bad = ideal_failure(s, set);
    v.witness = {{"set", set_json(set)}, {"violation", bad}};
    settle(v, bad.is_null());
    if (!v.holds()) v.notes = set_text(s, set) + " is not an ideal";
  };
  check(med, median(g));
  check(cen, center(g));
  return {med, cen};
}

std::vector<Verdict> check_cut_structures(const Semigroup& s, const CheckOptions& opts) {
  Verdict cutset = make("thm-2.2-cutset", "2.2");
  Verdict cut_vertex = make("cor-2.3", "2.3");
  Verdict inner = make("cor-2.6a", "2.6");
  Verdict outer = make("cor-2.6b", "2.6");
  const Graph g = gamma(s);
  if (g.order() < 2) return {cutset, cut_vertex, inner, outer};
  if (!is_connected(g)) {
    for (Verdict* v : {&cutset, &cut_vertex, &inner, &outer}) not_connected(*v);
    return {cutset, cut_vertex, inner, outer};
  }

  if (g.order() >= 3) {
    const auto sets = minimal_vertex_cutsets(g, opts.vertex_cutset_cap);
    if (!sets.empty()) {
      json failures = json::array();
      for (const auto& t : sets) {
        const ElementSet set = with_zero(s, g, vertices_mask(t));
        if (auto bad = ideal_failure(s, set); !bad.is_null()) {
          failures.push_back({{"set", set_json(set)}, {"violation", bad}});
        }
      }
      cutset.witness = {{"checked", sets.size()},
                        {"size_cap", opts.vertex_cutset_cap},
                        {"failures", failures}};
      settle(cutset, failures.empty());
    }

    const auto cuts = cut_vertices(g);
    if (!cuts.empty()) {
      json rows = json::array();
      bool ok = true;
      for (Vertex v : cuts) {
        const Element x = g.element(v);
        const ElementSet pair = s.zero_set() | ElementSet(s.order(), {x});
        const bool ideal = is_ideal(s, pair);
        const bool adjacent_to_all = g.degree(v) + 1 == g.order();
        const bool in_sx = s.times_all(x).contains(x);
        ok = ok && ideal && (adjacent_to_all || in_sx);
        rows.push_back({{"vertex", x},
                        {"ideal", ideal},
                        {"adjacent_to_all", adjacent_to_all},
                        {"in_Sx", in_sx}});
      }
      cut_vertex.witness = {{"cut_vertices", rows}};
      settle(cut_vertex, ok);
    }
  }

  const auto edge_cuts = minimal_edge_cutsets(g, opts.edge_cutset_cap);
  json inner_failures = json::array();
  json outer_failures = json::array();
  std::size_t inner_checked = 0;
  std::size_t outer_checked = 0;
  for (const auto& cut : edge_cuts) {
    VertexMask touched = 0;
    json edges = json::array();
    for (const auto& e : cut.edges) {
      touched |= vertex_bit(e.u) | vertex_bit(e.v);
      edges.push_back(edge_json(g, e));
    }
    for (VertexMask side : {cut.side_a, cut.side_b}) {
      if (std::popcount(side) < 2) continue;
      ++inner_checked;
      const ElementSet set = with_zero(s, g, side & touched);
      if (auto bad = ideal_failure(s, set); !bad.is_null()) {
        inner_failures.push_back({{"edges", edges}, {"set", set_json(set)}, {"violation", bad}});
      }
    }
    if (std::popcount(cut.side_a) == 1 || std::popcount(cut.side_b) == 1) {
      ++outer_checked;
      const ElementSet set = with_zero(s, g, touched);
      if (auto bad = ideal_failure(s, set); !bad.is_null()) {
        outer_failures.push_back({{"edges", edges}, {"set", set_json(set)}, {"violation", bad}});
      }
    }
  }
  if (inner_checked > 0) {
    inner.witness = {{"checked", inner_checked},
                     {"size_cap", opts.edge_cutset_cap},
                     {"failures", inner_failures}};
    settle(inner, inner_failures.empty());
  }
  if (outer_checked > 0) {
    outer.witness = {{"checked", outer_checked},
                     {"size_cap", opts.edge_cutset_cap},
                     {"failures", outer_failures}};
    settle(outer, outer_failures.empty());
  }
  return {cutset, cut_vertex, inner, outer};
}

std::vector<Verdict> check_bridge(const Semigroup& s) {
  Verdict inner = make("thm-2.5-inner", "2.5");
  Verdict leaf = make("thm-2.5-leaf", "2.5");
  const Graph g = gamma(s);
  if (g.order() < 2) return {inner, leaf};
  if (!is_connected(g)) {
    not_connected(inner);
    not_connected(leaf);
    return {inner, leaf};
  }
  const auto minimal = minimal_ideals(s);
  auto is_minimal = [&](const ElementSet& set) {
    return std::find(minimal.begin(), minimal.end(), set) != minimal.end();
  };
  json inner_rows = json::array();
  json leaf_rows = json::array();
  bool inner_ok = true;
  bool leaf_ok = true;
  for (const auto& e : bridges(g)) {
    const VertexMask side_u = side_without_edge(g, e.u, e.v);
    const VertexMask side_v = g.all() & ~side_u;
    const Element x = g.element(e.u);
    const Element y = g.element(e.v);
    if (std::popcount(side_u) >= 2 && std::popcount(side_v) >= 2) {
      json ends = json::array();
      for (Element end : {x, y}) {
        const ElementSet pair = s.zero_set() | ElementSet(s.order(), {end});
        const bool principal = s.times_all(end) == pair;
        const bool min_ideal = is_minimal(pair);
        inner_ok = inner_ok && principal && min_ideal;
        ends.push_back({{"vertex", end}, {"Sx_is_0x", principal}, {"minimal_ideal", min_ideal}});
      }
      inner_rows.push_back({{"bridge", edge_json(g, e)}, {"ends", ends}});
      continue;
    }
    const ElementSet triple = s.zero_set() | ElementSet(s.order(), {x, y});
    const json bad = ideal_failure(s, triple);
    leaf_ok = leaf_ok && bad.is_null();
    json row = {{"bridge", edge_json(g, e)}, {"set", set_json(triple)}, {"violation", bad}};
    // When one end is a leaf and the other is not, record whether the
    // non-leaf end alone spans an ideal with zero.
    for (auto [end, side] : {std::pair{x, side_u}, std::pair{y, side_v}}) {
      if (std::popcount(side) >= 2) {
        row["non_leaf"] = end;
        row["non_leaf_pair_ideal"] = is_ideal(s, s.zero_set() | ElementSet(s.order(), {end}));
      }
    }
    if (!bad.is_null() && leaf.notes.empty()) {
      leaf.notes = set_text(s, triple) + " is not an ideal: " + s.name(bad[0].get<Element>()) +
                   "*" + s.name(bad[1].get<Element>()) + " leaves it";
    }
    leaf_rows.push_back(row);
  }
  if (!inner_rows.empty()) {
    inner.witness = {{"bridges", inner_rows}};
    settle(inner, inner_ok);
  }
  if (!leaf_rows.empty()) {
    leaf.witness = {{"bridges", leaf_rows}};
    settle(leaf, leaf_ok);
  }
  return {inner, leaf};
}

std::vector<Verdict> check_ass_properties(const Semigroup& s) {
  Verdict lemma = make("lem-2.8", "2.8");
  Verdict chain = make("prop-2.7", "2.7");
  Verdict pairs = make("prop-2.9a", "2.9");
  Verdict triangle = make("prop-2.9b", "2.9");
  Verdict k5 = make("prop-2.9c", "2.9");

  const auto maximal = maximal_annihilators(s);
  if (!maximal.empty()) {
    json rows = json::array();
    bool ok = true;
    for (const auto& [a, set] : maximal) {
      const bool prime = is_prime_ideal(s, set);
      ok = ok && prime;
      rows.push_back({{"witness", a}, {"set", set_json(set)}, {"prime", prime}});
    }
    lemma.witness = {{"maximal_annihilators", rows}};
    settle(lemma, ok);
  }

  const Graph g = gamma(s);
  if (s.order() >= 2 && is_reduced(s)) {
    const std::size_t length = longest_annihilator_chain(s);
    const std::size_t omega = clique_number(g).size;
    chain.witness = {{"chain_length", length}, {"clique_number", omega}};
    settle(chain, length <= omega + 1);
  }

  const auto ass = associated_primes(s);
  if (ass.size() >= 2) {
    std::size_t checked = 0;
    json failure = nullptr;
    for (std::size_t i = 0; i < ass.size() && failure.is_null(); ++i) {
      for (std::size_t j = i + 1; j < ass.size() && failure.is_null(); ++j) {
        for (Element x : annihilator_witnesses(s, ass[i].set)) {
          for (Element y : annihilator_witnesses(s, ass[j].set)) {
            ++checked;
            if (s.product(x, y) != 0 && failure.is_null()) failure = {x, y};
          }
        }
      }
    }
    pairs.witness = {{"associated_primes", ass.size()},
                     {"witness_pairs_checked", checked},
                     {"failure", failure}};
    settle(pairs, failure.is_null());
  }
  if (ass.size() >= 3) {
    const Distance gth = girth(g);
    triangle.witness = {{"associated_primes", ass.size()}, {"girth", distance_json(gth)}};
    settle(triangle, gth == 3);
  }
  if (ass.size() >= 5) {
    const bool found = has_clique_of_size(g, 5);
    k5.witness = {{"associated_primes", ass.size()}, {"has_k5", found}};
    settle(k5, found);
  }
  return {lemma, chain, pairs, triangle, k5};
}

std::vector<Verdict> check_rpartite(const Semigroup& s) {
  Verdict main = make("thm-3.1", "3.1");
  Verdict weaker = make("rem-3.2a", "3.2");
  Verdict bipartite = make("rem-3.2b", "3.2");
  Verdict large_parts = make("thm-3.6", "3.6");
  Verdict two_primes = make("cor-3.3", "3.3");

  const Graph g = gamma(s);
  const bool reduced = is_reduced(s);
  const auto partition = complete_multipartite_partition(g);

  if (partition) {
    const json parts = partition_json(g, *partition);
    auto conclude = [&](Verdict& v) {
      const auto result = part_ideals_and_primes(s, g, *partition);
      v.witness = {{"parts", parts}, {"failures", result.failures}};
      settle(v, result.ok);
    };
    if (reduced) conclude(main);
    if (has_no_nonzero_square_zero(s)) conclude(weaker);

    const bool large = std::all_of(partition->parts.begin(), partition->parts.end(),
                                   [](const auto& part) { return part.size() > 1; });
    if (large) {
      large_parts.witness = {{"parts", parts},
                             {"nonzero_nilpotents", set_json(nilpotents(s) - s.zero_set())}};
      settle(large_parts, reduced);
    }
  }

  if (reduced && g.edge_count() > 0 && is_bipartite(g)) {
    const bool complete = partition && partition->parts.size() == 2;
    bipartite.witness = {{"complete_bipartite", complete}};
    if (partition) bipartite.witness["parts"] = partition_json(g, *partition);
    settle(bipartite, complete);
  }

  const auto ass = associated_primes(s);
  if (ass.size() == 2 && ass[0].set.size() >= 3 && ass[1].set.size() >= 3 &&
      (ass[0].set & ass[1].set) == s.zero_set()) {
    const Distance gth = girth(g);
    two_primes.witness = {{"primes", {set_json(ass[0].set), set_json(ass[1].set)}},
                          {"girth", distance_json(gth)}};
    settle(two_primes, gth == 4);
  }
  return {main, weaker, bipartite, large_parts, two_primes};
}

std::vector<Verdict> check_chromatic(const Semigroup& s) {
  Verdict bound = make("thm-4.1", "4.1");
  Verdict equal = make("cor-4.2", "4.2");
  Verdict small = make("thm-4.4", "4.4");

  const Graph g = gamma(s);
  const bool reduced = is_reduced(s);
  const auto chi = chromatic_number(g);
  const std::size_t omega = clique_number(g).size;

  if (g.order() > 0) {
    bool ok = omega <= chi.colors;
    for (std::size_t m : {1, 2}) ok = ok && ((chi.colors == m) == (omega == m));
    small.witness = {{"chi", chi.colors}, {"omega", omega}};
    settle(small, ok);
  }
  if (!reduced) return {bound, equal, small};

  const auto fast = zero_prime_decomposition(s, DecompositionMode::kFast);
  std::optional<PrimeDecomposition> exhaustive;
  if (s.order() <= kExhaustiveOrderCap) {
    exhaustive = zero_prime_decomposition(s, DecompositionMode::kExhaustive);
  }

  bound.witness = {{"chi", chi.colors}, {"omega", omega}};
  if (!fast) {
    bound.status = Verdict::Status::kFails;
    bound.notes = "maximal annihilators do not intersect to zero";
    return {bound, equal, small};
  }
  // Colour each vertex by the first prime that misses it.
  Coloring construction(g.order(), 0);
  bool complete = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& primes = fast->primes;
    auto it = std::find_if(primes.begin(), primes.end(),
                           [&](const ElementSet& p) { return !p.contains(g.element(v)); });
    if (it == primes.end()) {
      complete = false;
    } else {
      construction[v] = static_cast<std::uint32_t>(it - primes.begin());
    }
  }
  const std::size_t k = fast->primes.size();
  const bool proper = complete && is_proper_coloring(g, construction);
  bool ok = proper && omega <= chi.colors && chi.colors <= k;
  bound.witness["primes"] = k;
  bound.witness["construction_proper"] = proper;
  if (exhaustive) {
    bound.witness["primes_exhaustive"] = exhaustive->primes.size();
    ok = ok && chi.colors <= exhaustive->primes.size();
  }
  settle(bound, ok);

  if (g.order() > 0) {
    bool same = chi.colors == k && omega == k;
    equal.witness = {{"chi", chi.colors}, {"omega", omega}, {"primes", k}};
    if (exhaustive) {
      same = same && exhaustive->primes.size() == k;
      equal.witness["primes_exhaustive"] = exhaustive->primes.size();
    }
    settle(equal, same);
  }
  return {bound, equal, small};
}

namespace {

using Checker = std::function<std::vector<Verdict>(const Semigroup&, const CheckOptions&)>;

const std::array<Checker, 7>& checkers() {
  static const std::array<Checker, 7> table = {
      [](const Semigroup& s, const CheckOptions&) { return check_nilpotent_subgraph(s); },
      [](const Semigroup& s, const CheckOptions&) { return check_median_center_ideals(s); },
      [](const Semigroup& s, const CheckOptions& o) { return check_cut_structures(s, o); },
      [](const Semigroup& s, const CheckOptions&) { return check_bridge(s); },
      [](const Semigroup& s, const CheckOptions&) { return check_ass_properties(s); },
      [](const Semigroup& s, const CheckOptions&) { return check_rpartite(s); },
      [](const Semigroup& s, const CheckOptions&) { return check_chromatic(s); },
  };
  return table;
}

struct Clause {
  std::string id;
  std::string theorem;
  std::size_t checker;
};

const std::vector<Clause>& clauses() {
  static const std::vector<Clause> table = {
      {"prop-2.1", "2.1", 0},      {"thm-2.2-median", "2.2", 1}, {"thm-2.4-center", "2.4", 1},
      {"thm-2.2-cutset", "2.2", 2}, {"cor-2.3", "2.3", 2},        {"cor-2.6a", "2.6", 2},
      {"cor-2.6b", "2.6", 2},       {"thm-2.5-inner", "2.5", 3},  {"thm-2.5-leaf", "2.5", 3},
      {"lem-2.8", "2.8", 4},        {"prop-2.7", "2.7", 4},       {"prop-2.9a", "2.9", 4},
      {"prop-2.9b", "2.9", 4},      {"prop-2.9c", "2.9", 4},      {"thm-3.1", "3.1", 5},
      {"rem-3.2a", "3.2", 5},       {"rem-3.2b", "3.2", 5},       {"thm-3.6", "3.6", 5},
      {"cor-3.3", "3.3", 5},        {"thm-4.1", "4.1", 6},        {"cor-4.2", "4.2", 6},
      {"thm-4.4", "4.4", 6},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& clause_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& c : clauses()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

std::vector<Verdict> run_all(const Semigroup& s, const CheckOptions& opts) {
  std::vector<Verdict> out;
  for (const auto& checker : checkers()) {
    auto part = checker(s, opts);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Verdict> run_selected(const Semigroup& s, std::string_view selector,
                                  const CheckOptions& opts) {
  if (selector == "all") return run_all(s, opts);
  std::vector<bool> wanted_checker(checkers().size(), false);
  bool any = false;
  for (const auto& c : clauses()) {
    if (c.id == selector || c.theorem == selector) {
      wanted_checker[c.checker] = true;
      any = true;
    }
  }
  if (!any) throw UnknownTheorem("unknown theorem selector '" + std::string(selector) + "'");
  std::vector<Verdict> out;
  for (std::size_t i = 0; i < checkers().size(); ++i) {
    if (!wanted_checker[i]) continue;
    for (auto& v : checkers()[i](s, opts)) {
      if (v.id == selector || v.theorem == selector) out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace zdg
