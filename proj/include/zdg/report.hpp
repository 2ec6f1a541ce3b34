#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "zdg/enumeration.hpp"
#include "zdg/exact_search.hpp"
#include "zdg/graph.hpp"
#include "zdg/ideals.hpp"
#include "zdg/metrics.hpp"
#include "zdg/semigroup.hpp"
#include "zdg/theorems.hpp"

// Structured-report serialization. Objects have sorted keys, element sets are
// ascending index lists and the infinite distance is the string "inf", so a
// dump of the same value is byte-identical across runs.

namespace zdg {

using Report = nlohmann::json;

Report to_report(const CayleyTable& table);
Report to_report(const ElementSet& set);
Report to_report(const Graph& g);
Report to_report(const GraphMetrics& m);
Report to_report(const Verdict& v);
Report to_report(const std::vector<Verdict>& verdicts);
Report to_report(const AuditReport& audit);
Report distance_report(Distance d);

/// Every invariant the library computes for S: zero divisors, nilpotents,
/// annihilator data, decompositions, graph metrics, clique and colouring.
/// Exhaustive-only items are null above kExhaustiveOrderCap.
Report invariants_report(const Semigroup& s);

/// Two-space indented dump ending in a newline.
std::string dump(const Report& report);

}  // namespace zdg
