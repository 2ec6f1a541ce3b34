#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zdg/semigroup.hpp"
#include "zdg/theorems.hpp"

namespace zdg {

inline constexpr std::size_t kMinEnumerationOrder = 2;
inline constexpr std::size_t kMaxEnumerationOrder = 6;
/// Largest order canonical_form will try all (n-1)! relabelings for.
inline constexpr std::size_t kCanonicalOrderCap = 10;

struct EnumerationOptions {
  std::size_t order = 2;
  bool up_to_iso = false;
  bool require_reduced = false;
  std::optional<std::size_t> limit;
  /// Parallel workers; the search splits on the value of the first cell.
  std::size_t workers = 1;
};

/// Return false to stop the stream.
using SemigroupSink = std::function<bool(const Semigroup&)>;

/// Every commutative semigroup table on {0..n-1} with absorbing zero 0, in
/// lexicographic order of the row-major table. With up_to_iso only the
/// lexicographically least member of each isomorphism class is emitted.
/// Throws OrderTooLarge above kMaxEnumerationOrder and std::invalid_argument
/// below kMinEnumerationOrder.
void enumerate(const EnumerationOptions& opts, const SemigroupSink& sink);
std::vector<Semigroup> enumerate(const EnumerationOptions& opts);

/// Least table over all relabelings fixing 0. Names are dropped. Throws
/// OrderTooLarge above kCanonicalOrderCap.
CayleyTable canonical_form(const Semigroup& s);

/// True iff no zero-fixing relabeling gives a lexicographically smaller
/// table. Same cap as canonical_form.
bool is_canonical(const CayleyTable& table);

struct ClauseTally {
  std::size_t applicable = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
};

struct Counterexample {
  CayleyTable table;
  Verdict verdict;
};

/// Results of run_all over an enumerated corpus, plus the structural facts
/// every zero-divisor graph should satisfy (connected, diameter at most 3,
/// girth 3, 4 or none).
struct AuditReport {
  std::vector<std::size_t> orders;
  bool up_to_iso = false;
  std::size_t total_examined = 0;
  /// In clause order.
  std::vector<std::pair<std::string, ClauseTally>> tallies;
  std::vector<Counterexample> counterexample_candidates;
  std::vector<CayleyTable> structure_violations;
};

/// Runs run_all on every semigroup the options enumerate.
AuditReport audit(const EnumerationOptions& opts, const CheckOptions& checks = {});

/// Folds another report into this one.
void merge(AuditReport& into, const AuditReport& other);

/// Graph and ideal predicates for search.
struct Predicate {
  std::string id;
  std::function<bool(const Semigroup&)> test;
};

/// Accepts complete-rpartite:R, has-bridge, has-cut-vertex, girth:K,
/// girth:inf, chi-omega-gap, reduced. "name(arg)" is accepted for
/// "name:arg". Throws UnknownPredicate.
Predicate parse_predicate(std::string_view spec);

/// Registered predicate names with a short description.
std::vector<std::pair<std::string, std::string>> predicate_catalog();

/// Enumerated semigroups satisfying the predicate; limit counts matches.
void search(const EnumerationOptions& opts, const Predicate& predicate,
            const SemigroupSink& sink);

}  // namespace zdg
