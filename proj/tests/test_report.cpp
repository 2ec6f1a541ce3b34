#include <gtest/gtest.h>

#include "zdg/builders.hpp"
#include "zdg/metrics.hpp"
#include "zdg/report.hpp"

using namespace zdg;

TEST(Report, InvariantsOfWheel) {
  const auto r = invariants_report(builtin_example("ex4.5"));
  EXPECT_EQ(r["order"], 7);
  EXPECT_EQ(r["reduced"], false);
  EXPECT_EQ(r["graph"]["edge_count"], 10);
  EXPECT_EQ(r["chromatic"]["colors"], 4);
  EXPECT_EQ(r["clique"]["size"], 3);
  EXPECT_EQ(r["metrics"]["girth"], 3);
  EXPECT_EQ(r["metrics"]["diameter"], 2);
  EXPECT_EQ(r["center"], Report({6}));
  EXPECT_EQ(r["decomposition_fast"], nullptr);
  EXPECT_TRUE(r["bipartite"] == false);
}

TEST(Report, InfinityIsAString) {
  EXPECT_EQ(distance_report(kInfinity), "inf");
  EXPECT_EQ(distance_report(3), 3);
  const auto r = invariants_report(builtin_example("ex3.4"));
  EXPECT_EQ(r["metrics"]["girth"], "inf");
  EXPECT_EQ(r["cut_vertices"], Report({2, 3}));
}

TEST(Report, ExhaustiveItemsNullAboveCap) {
  const auto r = invariants_report(powerset_semigroup(5));
  EXPECT_TRUE(r["decomposition_exhaustive"].is_null());
  EXPECT_EQ(r["decomposition_fast"]["primes"].size(), 5u);
  EXPECT_EQ(r["clique"]["size"], 5);
}

TEST(Report, TableRoundTripsThroughJson) {
  const auto s = builtin_example("ex3.5");
  const auto r = to_report(s.table());
  EXPECT_EQ(r["order"], 4);
  EXPECT_EQ(r["names"], Report({"0", "x", "y", "z"}));
  EXPECT_EQ(r["table"][1][2], 1);
  const auto parsed = Report::parse(dump(r));
  EXPECT_EQ(parsed, r);
}

TEST(Report, VerdictShape) {
  const auto verdicts = run_all(builtin_example("ex3.4"));
  const auto r = to_report(verdicts);
  ASSERT_EQ(r.size(), verdicts.size());
  for (const auto& v : r) {
    EXPECT_TRUE(v.contains("id"));
    EXPECT_TRUE(v.contains("witness"));
    if (v["status"] == "vacuous") {
      EXPECT_TRUE(v["holds"].is_null());
      EXPECT_EQ(v["applicable"], false);
    } else {
      EXPECT_EQ(v["holds"], v["status"] == "holds");
    }
  }
}

TEST(Report, DumpIsStable) {
  const auto s = builtin_example("powerset:3");
  EXPECT_EQ(dump(invariants_report(s)), dump(invariants_report(s)));
  const std::string text = dump(to_report(gamma(builtin_example("ex3.8"))));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_NE(text.find("\n  \"edges\""), std::string::npos);
}

TEST(Report, AuditShape) {
  const auto r = to_report(audit({.order = 4, .up_to_iso = true}));
  EXPECT_EQ(r["total_examined"], 39);
  EXPECT_EQ(r["tallies"].size(), clause_ids().size());
  EXPECT_EQ(r["counterexample_candidates"].size(), 9u + 3u + 9u);
  EXPECT_TRUE(r["structure_violations"].empty());
}
