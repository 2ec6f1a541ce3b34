// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zdg/builders.hpp"
#include "zdg/cli.hpp"
#include "zdg/enumeration.hpp"
#include "zdg/exact_search.hpp"
#include "zdg/ideals.hpp"
#include "zdg/metrics.hpp"
#include "zdg/theorems.hpp"

using namespace zdg;
using testing_support::set_of;
using testing_support::to_oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::map<std::string, Verdict> verdicts(const Semigroup& s) {
  std::map<std::string, Verdict> out;
  for (auto& v : run_all(s)) out.emplace(v.id, v);
  return out;
}

Outcome criterion_wheel() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto s = builtin_example("ex4.5");
  const Graph g = gamma(s);
  o.require(g.order() == 6, "vertices " + std::to_string(g.order()));
  o.require(g.edge_count() == 10, "edges " + std::to_string(g.edge_count()));
  const auto chi = chromatic_number(g).colors;
  const auto omega = clique_number(g).size;
  o.require(chi == 4, "chi " + std::to_string(chi));
  o.require(omega == 3, "omega " + std::to_string(omega));
  o.require(seconds_since(start) < 1.0, "slower than 1 s");
  return o;
}

Outcome criterion_path() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto s = builtin_example("ex3.4");
  const Graph g = gamma(s);
  const auto v = [&](const char* l) { return testing_support::vertex(g, l); };
  o.require(g.order() == 4 && g.edge_count() == 3 && g.adjacent(v("a"), v("b")) &&
                g.adjacent(v("b"), v("c")) && g.adjacent(v("c"), v("d")),
            "graph is not the path a-b-c-d");
  o.require(!is_ideal(s, set_of(s, {"0", "a", "c"})), "{0,a,c} reported as an ideal");
  const auto all = verdicts(s);
  for (const char* id : {"thm-2.2-median", "thm-2.2-cutset", "thm-2.5-inner", "thm-2.5-leaf", "cor-2.3"}) {
    const auto& verdict = all.at(id);
    if (verdict.applicable()) o.require(verdict.holds(), std::string(id) + " fails: " + verdict.notes);
  }
  o.require(seconds_since(start) < 1.0, "slower than 1 s");
  return o;
}

Outcome criterion_idempotent_star() {
  Outcome o;
  const auto s = builtin_example("ex3.5");
  const auto p = set_of(s, {"0", "x", "y"});
  o.require(is_ideal(s, p), "{0,x,y} not an ideal");
  o.require(!is_prime_ideal(s, p), "{0,x,y} reported prime");
  return o;
}

Outcome criterion_powerset() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto s = powerset_semigroup(n);
    const Graph g = gamma(s);
    const auto tag = "n=" + std::to_string(n) + " ";
    o.require(chromatic_number(g).colors == n, tag + "chi");
    o.require(clique_number(g).size == n, tag + "omega");
    const auto d = zero_prime_decomposition(s, DecompositionMode::kExhaustive);
    o.require(d && d->primes.size() == n, tag + "decomposition size");
    for (std::size_t x = 0; x < n; ++x) {
      ElementSet p(s.order(), std::uint64_t{0});
      for (Element a = 0; a < s.order(); ++a) {
        if (((a >> x) & 1U) == 0) p.insert(a);
      }
      o.require(is_prime_ideal(s, p), tag + "P(X-{x}) not prime");
    }
    if (n == 4) o.require(seconds_since(start) < 5.0, "n=4 slower than 5 s");
  }
  return o;
}

Outcome criterion_associated_primes_scale() {
  Outcome o;
  const auto p3 = powerset_semigroup(3);
  o.require(girth(gamma(p3)) == 3, "powerset:3 girth");
  o.require(associated_primes(p3).size() == 3, "powerset:3 |Ass|");
  o.require(has_clique_of_size(gamma(powerset_semigroup(5)), 5), "powerset:5 has no K5");
  return o;
}

Outcome criterion_orthogonal_union() {
  Outcome o;
  const auto s = orthogonal_union({cyclic_group_with_zero(2), cyclic_group_with_zero(2)});
  const Graph g = gamma(s);
  const auto parts = complete_multipartite_partition(g);
  o.require(g.order() == 4 && parts && parts->parts.size() == 2 && parts->parts[0].size() == 2 &&
                parts->parts[1].size() == 2,
            "graph is not K(2,2)");
  o.require(girth(g) == 4, "girth " + std::to_string(girth(g)));
  return o;
}

Outcome criterion_oracle_equivalence() {
  Outcome o;
  auto compare = [&](const Graph& g, const std::string& what) {
    const auto a = to_oracle(g);
    if (clique_number(g).size != oracle::max_clique(a).size()) o.require(false, what + " clique");
    const std::size_t chi = g.order() == 0 ? 0 : oracle::chromatic(a);
    if (chromatic_number(g).colors != chi) o.require(false, what + " chromatic");
    const unsigned gir = oracle::girth(a);
    if (girth(g) != (gir == oracle::kNone ? kInfinity : gir)) o.require(false, what + " girth");
  };
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const unsigned n = 1 + static_cast<unsigned>(i % 8);
    compare(testing_support::from_oracle(oracle::random_graph(rng, n, 0.15 + 0.07 * (i % 11))),
            "random graph " + std::to_string(i));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& s : enumerate({.order = n})) compare(gamma(s), "corpus order " + std::to_string(n));
  }
  return o;
}

Outcome criterion_corpus_audit() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  AuditReport total;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto part = audit({.order = n, .up_to_iso = true, .workers = 4});
    if (n == 2) {
      total = part;
    } else {
      merge(total, part);
    }
  }
  std::map<std::string, std::size_t> fails;
  std::set<CayleyTable> failing;
  for (const auto& c : total.counterexample_candidates) {
    ++fails[c.verdict.id];
    failing.insert(c.table);
  }
  std::string summary;
  for (const auto& [id, k] : fails) summary += (summary.empty() ? "" : ", ") + id + " x" + std::to_string(k);
  o.require(total.counterexample_candidates.empty(),
            std::to_string(total.counterexample_candidates.size()) + " failing verdicts on " +
                std::to_string(failing.size()) + " of " + std::to_string(total.total_examined) +
                " semigroups (" + summary + ")");
  o.require(total.structure_violations.empty(),
            std::to_string(total.structure_violations.size()) + " structure violations");
  o.require(seconds_since(start) <= 600.0, "slower than 10 minutes");
  return o;
}

Outcome criterion_enumeration_counts() {
  Outcome o;
  for (unsigned n = 2; n <= 4; ++n) {
    const auto ours = enumerate({.order = n}).size();
    const auto naive = oracle::naive_semigroups(n).size();
    o.require(ours == naive, "order " + std::to_string(n) + ": " + std::to_string(ours) +
                                 " vs " + std::to_string(naive));
  }
  return o;
}

std::string capture(const std::string& binary, const std::vector<std::string>& args) {
  if (binary.empty()) {
    std::istringstream in;
    std::ostringstream out, err;
    run_cli(args, in, out, err);
    return out.str() + "\x1f" + err.str();
  }
  std::string command = binary;
  for (const auto& a : args) command += " '" + a + "'";
  command += " 2>&1";
  std::string text;
  if (FILE* pipe = popen(command.c_str(), "r")) {
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) text.append(buffer.data(), got);
    text += "\x1f" + std::to_string(pclose(pipe));
  }
  return text;
}

Outcome determinism(const std::string& binary) {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "ex3.4"},
      {"graph", "ex4.5", "--format", "dot"},
      {"graph", "ex3.5", "--bar", "--format", "report"},
      {"invariants", "powerset:4", "--format", "report"},
      {"invariants", "ex4.5"},
      {"check", "ex3.4", "--theorem", "all"},
      {"check", "ortho:group0:2+group0:2", "--format", "report"},
      {"enumerate", "--order", "5", "--up-to-iso", "--jobs", "4"},
      {"search", "--order", "5", "--predicate", "complete-rpartite:2", "--jobs", "4"},
      {"audit", "--order", "5", "--up-to-iso", "--format", "report", "--jobs", "4"},
      {"example", "ex4.5", "--format", "sgt"},
  };
  for (const auto& c : commands) {
    if (capture(binary, c) != capture(binary, c)) o.require(false, c[0] + " " + c[1] + " differs");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"wheel example: 6 vertices, 10 edges, chi 4, omega 3", criterion_wheel},
      {"path example: a-b-c-d, {0,a,c} not an ideal, 2.2/2.3/2.5 hold", criterion_path},
      {"idempotent star: {0,x,y} ideal but not prime", criterion_idempotent_star},
      {"powerset n=2..4: chi = omega = n, n primes", criterion_powerset},
      {"powerset: girth 3 with three associated primes, K5 at n=5", criterion_associated_primes_scale},
      {"orthogonal union of two groups with zero: K(2,2), girth 4", criterion_orthogonal_union},
      {"clique, chromatic number and girth match brute force", criterion_oracle_equivalence},
      {"audit of orders 2..5 up to isomorphism: no failing clause", criterion_corpus_audit},
      {"raw enumeration counts for orders 2..4 match naive filter", criterion_enumeration_counts},
      {"repeated commands give identical output", [&] { return determinism(binary); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double elapsed = seconds_since(start);
    failed += !o.pass;
    std::printf("%s %2zu  %-62s %8.3fs%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                elapsed, o.detail.empty() ? "" : "  ", o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
