#include "zdg/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "zdg/errors.hpp"
#include "zdg/exact_search.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideals.hpp"
#include "zdg/metrics.hpp"

namespace zdg {

namespace {

constexpr Element kUnset = UINT32_MAX;

/// Backtracking over the cells (i, j), 1 <= i <= j < n, in row-major order
/// with values ascending, so complete tables come out in lexicographic order.
class TableSearch {
 public:
  explicit TableSearch(std::size_t n) : n_(n), cells_(n * n, kUnset) {
    for (Element i = 0; i < n; ++i) {
      at(0, i) = 0;
      at(i, 0) = 0;
    }
    for (Element i = 1; i < n; ++i) {
      for (Element j = i; j < n; ++j) order_.push_back({i, j});
    }
  }

  std::size_t branch_count() const { return order_.empty() ? 1 : n_; }

  /// Explores the subtree where the first cell holds `branch`. Returns false
  /// once emit asks to stop.
  bool run_branch(Element branch, const std::function<bool(const CayleyTable&)>& emit) {
    if (order_.empty()) return emit(CayleyTable(n_, cells_));
    assign(0, branch);
    const bool go_on = !consistent() || extend(1, emit);
    assign(0, kUnset);
    return go_on;
  }

 private:
  Element& at(Element x, Element y) { return cells_[x * n_ + y]; }
  Element get(Element x, Element y) const { return cells_[x * n_ + y]; }

  void assign(std::size_t index, Element value) {
    const auto [i, j] = order_[index];
    at(i, j) = value;
    at(j, i) = value;
  }

  /// (xy)z = x(yz) wherever all four products are already known.
  bool consistent() const {
    for (Element x = 1; x < n_; ++x) {
      for (Element y = 1; y < n_; ++y) {
        const Element xy = get(x, y);
        if (xy == kUnset) continue;
        for (Element z = 1; z < n_; ++z) {
          const Element yz = get(y, z);
          if (yz == kUnset) continue;
          const Element left = get(xy, z);
          const Element right = get(x, yz);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t index, const std::function<bool(const CayleyTable&)>& emit) {
    if (index == order_.size()) return emit(CayleyTable(n_, cells_));
    for (Element v = 0; v < n_; ++v) {
      assign(index, v);
      if (consistent() && !extend(index + 1, emit)) {
        assign(index, kUnset);
        return false;
      }
    }
    assign(index, kUnset);
    return true;
  }

  std::size_t n_;
  std::vector<Element> cells_;
  std::vector<std::pair<Element, Element>> order_;
};

void check_order(std::size_t order) {
  if (order > kMaxEnumerationOrder) {
    throw OrderTooLarge("enumeration supports orders up to " +
                        std::to_string(kMaxEnumerationOrder));
  }
  if (order < kMinEnumerationOrder) {
    throw std::invalid_argument("enumeration needs order at least " +
                                std::to_string(kMinEnumerationOrder));
  }
}

/// Table entries after relabelling by perm; perm[0] = 0.
bool relabeled_less(const CayleyTable& t, const std::vector<Element>& perm,
                    const std::vector<Element>& inverse, const CayleyTable& than) {
  const std::size_t n = t.order;
  for (Element u = 1; u < n; ++u) {
    for (Element v = 1; v < n; ++v) {
      const Element mine = perm[t.at(inverse[u], inverse[v])];
      const Element theirs = than.at(u, v);
      if (mine != theirs) return mine < theirs;
    }
  }
  return false;
}

void check_canonical_order(std::size_t order) {
  if (order > kCanonicalOrderCap) {
    throw OrderTooLarge("canonical forms are limited to order " +
                        std::to_string(kCanonicalOrderCap));
  }
}

template <typename Visit>
void for_each_relabeling(std::size_t n, Visit visit) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::vector<Element> inverse(n);
  do {
    for (Element x = 0; x < n; ++x) inverse[perm[x]] = x;
    if (!visit(perm, inverse)) return;
  } while (n > 1 && std::next_permutation(perm.begin() + 1, perm.end()));
}

bool accepted(const CayleyTable& table, const EnumerationOptions& opts, std::optional<Semigroup>& out) {
  if (opts.up_to_iso && !is_canonical(table)) return false;
  Semigroup s = Semigroup::validate(table);
  if (opts.require_reduced && !is_reduced(s)) return false;
  out.emplace(std::move(s));
  return true;
}

template <typename Work>
void run_workers(std::size_t workers, std::size_t jobs, Work work) {
  workers = std::max<std::size_t>(1, std::min(workers, jobs));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs; i = next++) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

void enumerate(const EnumerationOptions& opts, const SemigroupSink& sink) {
  check_order(opts.order);
  const std::size_t limit = opts.limit.value_or(SIZE_MAX);
  if (limit == 0) return;
  TableSearch root(opts.order);
  const std::size_t branches = root.branch_count();

  if (opts.workers <= 1) {
    std::size_t emitted = 0;
    for (Element b = 0; b < branches; ++b) {
      const bool go_on = root.run_branch(b, [&](const CayleyTable& table) {
        std::optional<Semigroup> s;
        if (!accepted(table, opts, s)) return true;
        ++emitted;
        return sink(*s) && emitted < limit;
      });
      if (!go_on) return;
    }
    return;
  }

  std::vector<std::vector<Semigroup>> found(branches);
  run_workers(opts.workers, branches, [&](std::size_t b) {
    TableSearch local(opts.order);
    local.run_branch(static_cast<Element>(b), [&](const CayleyTable& table) {
      std::optional<Semigroup> s;
      if (accepted(table, opts, s)) found[b].push_back(std::move(*s));
      return found[b].size() < limit;
    });
  });
  std::size_t emitted = 0;
  for (const auto& branch : found) {
    for (const auto& s : branch) {
      if (emitted == limit || !sink(s)) return;
      ++emitted;
    }
  }
}

std::vector<Semigroup> enumerate(const EnumerationOptions& opts) {
  std::vector<Semigroup> out;
  enumerate(opts, [&](const Semigroup& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

bool is_canonical(const CayleyTable& table) {
  check_canonical_order(table.order);
  bool canonical = true;
  for_each_relabeling(table.order, [&](const auto& perm, const auto& inverse) {
    if (relabeled_less(table, perm, inverse, table)) canonical = false;
    return canonical;
  });
  return canonical;
}

CayleyTable canonical_form(const Semigroup& s) {
  check_canonical_order(s.order());
  const CayleyTable& t = s.table();
  CayleyTable best(t.order, t.entries);
  for_each_relabeling(t.order, [&](const auto& perm, const auto& inverse) {
    if (relabeled_less(t, perm, inverse, best)) {
      for (Element u = 0; u < t.order; ++u) {
        for (Element v = 0; v < t.order; ++v) best.at(u, v) = perm[t.at(inverse[u], inverse[v])];
      }
    }
    return true;
  });
  return best;
}

namespace {

bool structure_ok(const Semigroup& s) {
  const Graph g = gamma(s);
  if (g.order() == 0) return true;
  const GraphMetrics m = metrics(g);
  return m.connected && m.diameter <= 3 &&
         (m.girth == 3 || m.girth == 4 || m.girth == kInfinity);
}

AuditReport empty_report(const EnumerationOptions& opts) {
  AuditReport report;
  report.orders = {opts.order};
  report.up_to_iso = opts.up_to_iso;
  for (const auto& id : clause_ids()) report.tallies.push_back({id, {}});
  return report;
}

}  // namespace

AuditReport audit(const EnumerationOptions& opts, const CheckOptions& checks) {
  const auto corpus = enumerate(opts);
  AuditReport report = empty_report(opts);

  struct Outcome {
    std::vector<Verdict> verdicts;
    bool structure = true;
  };
  std::vector<Outcome> outcomes(corpus.size());
  run_workers(opts.workers, corpus.size(), [&](std::size_t i) {
    outcomes[i].verdicts = run_all(corpus[i], checks);
    outcomes[i].structure = structure_ok(corpus[i]);
  });

  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < report.tallies.size(); ++i) slot[report.tallies[i].first] = i;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++report.total_examined;
    for (const auto& v : outcomes[i].verdicts) {
      auto& tally = report.tallies[slot.at(v.id)].second;
      if (!v.applicable()) continue;
      ++tally.applicable;
      if (v.holds()) {
        ++tally.holds;
      } else {
        ++tally.fails;
        report.counterexample_candidates.push_back({corpus[i].table(), v});
      }
    }
    if (!outcomes[i].structure) report.structure_violations.push_back(corpus[i].table());
  }
  return report;
}

void merge(AuditReport& into, const AuditReport& other) {
  into.orders.insert(into.orders.end(), other.orders.begin(), other.orders.end());
  into.total_examined += other.total_examined;
  for (const auto& [id, tally] : other.tallies) {
    auto it = std::find_if(into.tallies.begin(), into.tallies.end(),
                           [&](const auto& entry) { return entry.first == id; });
    if (it == into.tallies.end()) {
      into.tallies.push_back({id, tally});
      continue;
    }
    it->second.applicable += tally.applicable;
    it->second.holds += tally.holds;
    it->second.fails += tally.fails;
  }
  into.counterexample_candidates.insert(into.counterexample_candidates.end(),
                                        other.counterexample_candidates.begin(),
                                        other.counterexample_candidates.end());
  into.structure_violations.insert(into.structure_violations.end(),
                                   other.structure_violations.begin(),
                                   other.structure_violations.end());
}

namespace {

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) return std::nullopt;
  return value;
}

bool connected_graph(const Graph& g) { return g.order() >= 2 && is_connected(g); }

}  // namespace

Predicate parse_predicate(std::string_view spec) {
  const std::string original(spec);
  std::string_view name = spec;
  std::optional<std::string_view> arg;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  } else if (auto paren = spec.find('('); paren != std::string_view::npos && spec.back() == ')') {
    name = spec.substr(0, paren);
    arg = spec.substr(paren + 1, spec.size() - paren - 2);
  }
  auto unknown = [&] { return UnknownPredicate("unknown predicate '" + original + "'"); };
  // Both spellings share the "name:arg" id.
  const std::string id = arg ? std::string(name) + ":" + std::string(*arg) : std::string(name);

  if (name == "complete-rpartite") {
    const auto r = arg ? parse_count(*arg) : std::nullopt;
    if (!r || *r == 0) throw unknown();
    return {id, [r = *r](const Semigroup& s) {
              const auto partition = complete_multipartite_partition(gamma(s));
              return partition && partition->parts.size() == r;
            }};
  }
  if (name == "girth") {
    if (!arg) throw unknown();
    Distance want = kInfinity;
    if (*arg != "inf") {
      const auto k = parse_count(*arg);
      if (!k) throw unknown();
      want = static_cast<Distance>(*k);
    }
    return {id, [want](const Semigroup& s) { return girth(gamma(s)) == want; }};
  }
  if (arg) throw unknown();
  if (name == "has-bridge") {
    return {id, [](const Semigroup& s) {
              const Graph g = gamma(s);
              return connected_graph(g) && !bridges(g).empty();
            }};
  }
  if (name == "has-cut-vertex") {
    return {id, [](const Semigroup& s) {
              const Graph g = gamma(s);
              return connected_graph(g) && !cut_vertices(g).empty();
            }};
  }
  if (name == "chi-omega-gap") {
    return {id, [](const Semigroup& s) {
              const Graph g = gamma(s);
              return chromatic_number(g).colors > clique_number(g).size;
            }};
  }
  if (name == "reduced") return {id, [](const Semigroup& s) { return is_reduced(s); }};
  throw unknown();
}

std::vector<std::pair<std::string, std::string>> predicate_catalog() {
  return {
      {"complete-rpartite:R", "graph is complete multipartite with exactly R parts"},
      {"has-bridge", "graph is connected and has a bridge"},
      {"has-cut-vertex", "graph is connected and has a cut vertex"},
      {"girth:K", "graph has girth K (use inf for acyclic)"},
      {"chi-omega-gap", "chromatic number exceeds clique number"},
      {"reduced", "no nonzero nilpotent elements"},
  };
}

void search(const EnumerationOptions& opts, const Predicate& predicate,
            const SemigroupSink& sink) {
  EnumerationOptions all = opts;
  all.limit.reset();
  const std::size_t limit = opts.limit.value_or(SIZE_MAX);
  if (limit == 0) return;
  std::size_t matched = 0;
  enumerate(all, [&](const Semigroup& s) {
    if (!predicate.test(s)) return true;
    ++matched;
    return sink(s) && matched < limit;
  });
}

}  // namespace zdg
