#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zdg/metrics.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Outcome of checking one clause of a result against one semigroup.
struct Verdict {
  enum class Status { kVacuous, kHolds, kFails };

  std::string id;       // stable clause identifier, e.g. "thm-2.5-leaf"
  std::string theorem;  // number used by the selector, e.g. "2.5"
  Status status = Status::kVacuous;
  /// Element indices, vertex sets and numbers backing the outcome.
  nlohmann::json witness = nlohmann::json::object();
  std::string notes;

  bool applicable() const { return status != Status::kVacuous; }
  bool holds() const { return status == Status::kHolds; }
  bool fails() const { return status == Status::kFails; }
};

std::string_view to_string(Verdict::Status status);

struct CheckOptions {
  std::size_t vertex_cutset_cap = kDefaultVertexCutsetCap;
  std::size_t edge_cutset_cap = kDefaultEdgeCutsetCap;
};

/// prop-2.1: the nonzero nilpotents induce a connected subgraph of diameter
/// at most 2.
std::vector<Verdict> check_nilpotent_subgraph(const Semigroup& s);

/// thm-2.2-median, thm-2.4-center: median and center plus zero are ideals.
std::vector<Verdict> check_median_center_ideals(const Semigroup& s);

/// thm-2.2-cutset: minimal vertex cutsets plus zero are ideals.
/// cor-2.3: {0,x} is an ideal for each cut vertex x, and x is adjacent to
///   every other vertex or lies in Sx.
/// cor-2.6a: for a minimal edge cutset U and a side G_i with two or more
///   vertices, (V(G_i) n V(U)) plus zero is an ideal.
/// cor-2.6b: V(U) plus zero is an ideal when a side is a single vertex.
std::vector<Verdict> check_cut_structures(const Semigroup& s, const CheckOptions& opts = {});

/// thm-2.5-inner: bridge xy with both sides of two or more vertices gives
///   Sx = {0,x} and Sy = {0,y}, both minimal ideals.
/// thm-2.5-leaf: bridge xy with a one-vertex side gives the ideal {0,x,y}.
std::vector<Verdict> check_bridge(const Semigroup& s);

/// lem-2.8: maximal annihilators are prime.
/// prop-2.7: on reduced S, a strictly increasing annihilator chain of length
///   L yields a clique of size L-1.
/// prop-2.9a: witnesses of distinct associated primes multiply to zero.
/// prop-2.9b: three or more associated primes give girth 3.
/// prop-2.9c: five or more associated primes give a K5.
std::vector<Verdict> check_ass_properties(const Semigroup& s);

/// thm-3.1: reduced S with complete multipartite graph: every part plus
///   zero is an ideal and Z(S) minus each part is prime.
/// rem-3.2a: the same conclusion when only x*x != 0 for x != 0 is assumed.
/// rem-3.2b: reduced S with bipartite graph (at least one edge) has a
///   complete bipartite graph.
/// thm-3.6: complete multipartite graph with every part of size two or more
///   forces S reduced.
/// cor-3.3: Ass(S) = {p1, p2}, |pi| >= 3, p1 n p2 = {0} gives girth 4.
std::vector<Verdict> check_rpartite(const Semigroup& s);

/// thm-4.1: reduced S has a prime decomposition of zero (from the maximal
///   annihilators); a k-prime decomposition gives a proper k-colouring,
///   and omega <= chi.
/// cor-4.2: reduced S, nonempty graph, irredundant decomposition into n
///   primes gives chi = omega = n.
/// thm-4.4: chi = m iff omega = m for m in {1, 2}.
std::vector<Verdict> check_chromatic(const Semigroup& s);

/// Every checker, in the order above.
std::vector<Verdict> run_all(const Semigroup& s, const CheckOptions& opts = {});

/// Verdicts picked by a selector: "all", a number such as "2.5", or a
/// clause id such as "thm-2.5-leaf". Throws UnknownTheorem.
std::vector<Verdict> run_selected(const Semigroup& s, std::string_view selector,
                                  const CheckOptions& opts = {});

/// Every clause id, in run_all order.
const std::vector<std::string>& clause_ids();

}  // namespace zdg
