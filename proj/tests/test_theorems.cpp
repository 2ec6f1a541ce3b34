#include <gtest/gtest.h>

#include <map>

#include "support.hpp"
#include "zdg/builders.hpp"
#include "zdg/ideals.hpp"
#include "zdg/theorems.hpp"

using namespace zdg;
using testing_support::element;

namespace {

std::map<std::string, Verdict> by_id(const std::vector<Verdict>& verdicts) {
  std::map<std::string, Verdict> out;
  for (const auto& v : verdicts) out.emplace(v.id, v);
  return out;
}

std::map<std::string, Verdict> all_of(const Semigroup& s) { return by_id(run_all(s)); }

// Order 5: 3 and 4 are idempotents with 3*2 = 2 and 4*1 = 1, while 1 and 2
// square to zero. The graph is K(2,2) on parts {1,4} and {2,3}, both of size
// two, yet the semigroup is not reduced.
Semigroup reduced_clause_counterexample() {
  CayleyTable t(5, {0, 0, 0, 0, 0,
                    0, 0, 0, 0, 1,
                    0, 0, 0, 2, 0,
                    0, 0, 2, 3, 0,
                    0, 1, 0, 0, 4});
  return Semigroup::validate(t);
}

}  // namespace

TEST(Theorems, ClauseIdsAreStable) {
  const std::vector<std::string> expected = {
      "prop-2.1",     "thm-2.2-median", "thm-2.4-center", "thm-2.2-cutset", "cor-2.3",
      "cor-2.6a",     "cor-2.6b",       "thm-2.5-inner",  "thm-2.5-leaf",   "lem-2.8",
      "prop-2.7",     "prop-2.9a",      "prop-2.9b",      "prop-2.9c",      "thm-3.1",
      "rem-3.2a",     "rem-3.2b",       "thm-3.6",        "cor-3.3",        "thm-4.1",
      "cor-4.2",      "thm-4.4"};
  EXPECT_EQ(clause_ids(), expected);
  const auto verdicts = run_all(builtin_example("ex4.5"));
  ASSERT_EQ(verdicts.size(), expected.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) EXPECT_EQ(verdicts[i].id, expected[i]);
}

TEST(Theorems, NilpotentSubgraph) {
  EXPECT_TRUE(all_of(builtin_example("ex4.5")).at("prop-2.1").holds());
  EXPECT_FALSE(all_of(powerset_semigroup(3)).at("prop-2.1").applicable());
  EXPECT_TRUE(all_of(null_semigroup(4)).at("prop-2.1").holds());
}

TEST(Theorems, MedianAndCenter) {
  for (const char* id : {"ex3.4", "ex4.5", "null:4"}) {
    const auto v = all_of(builtin_example(id));
    EXPECT_TRUE(v.at("thm-2.2-median").holds()) << id;
    EXPECT_TRUE(v.at("thm-2.4-center").holds()) << id;
  }
  const auto wheel = all_of(builtin_example("ex4.5"));
  EXPECT_EQ(wheel.at("thm-2.4-center").witness["set"], nlohmann::json({0, 6}));
}

TEST(Theorems, CutVertices) {
  for (const char* id : {"ex3.4", "ex3.8"}) {
    const auto v = all_of(builtin_example(id));
    EXPECT_TRUE(v.at("cor-2.3").holds()) << id;
    EXPECT_TRUE(v.at("thm-2.2-cutset").holds()) << id;
  }
  // The wheel has no separating vertex.
  EXPECT_FALSE(all_of(builtin_example("ex4.5")).at("cor-2.3").applicable());
}

TEST(Theorems, InnerBridgeHoldsOnPath) {
  const auto v = all_of(builtin_example("ex3.4"));
  EXPECT_TRUE(v.at("thm-2.5-inner").holds());
  EXPECT_TRUE(all_of(builtin_example("ex3.8")).at("thm-2.5-leaf").holds());
  EXPECT_FALSE(all_of(builtin_example("ex4.5")).at("thm-2.5-inner").applicable());
  EXPECT_FALSE(all_of(builtin_example("ex4.5")).at("thm-2.5-leaf").applicable());
}

// The leaf clause claims {0,x,y} is an ideal for a bridge xy with a leaf end.
// On the path a-b-c-d the bridge a-b has leaf a, but a*a = c leaves {0,a,b}.
TEST(Counterexamples, LeafBridgeOnPath) {
  const auto s = builtin_example("ex3.4");
  EXPECT_FALSE(is_ideal(s, testing_support::set_of(s, {"0", "a", "b"})));
  const auto v = all_of(s);
  EXPECT_TRUE(v.at("thm-2.5-leaf").fails());
  EXPECT_EQ(v.at("thm-2.5-leaf").notes, "{0,a,b} is not an ideal: a*a leaves it");
  EXPECT_TRUE(v.at("cor-2.6b").fails());
  EXPECT_TRUE(v.at("cor-2.6a").holds());
}

TEST(Counterexamples, LeafBridgeOnIdempotentStar) {
  const auto v = all_of(builtin_example("ex3.5"));
  EXPECT_TRUE(v.at("thm-2.5-leaf").fails());
  EXPECT_TRUE(v.at("cor-2.6b").fails());
}

TEST(Counterexamples, LeafBridgeOnNilpotentCyclic) {
  // c, c^2, c^3 with c^4 = 0: the graph is the path c - c^3 - c^2, and
  // c*c = c^2 leaves {0,c,c^3}.
  const auto v = all_of(nilpotent_cyclic(4));
  EXPECT_TRUE(v.at("thm-2.5-leaf").fails());
}

TEST(Counterexamples, EdgeCutSideOnOrthogonalGroups) {
  const auto v = all_of(builtin_example("ortho:group0:2+group0:2"));
  EXPECT_TRUE(v.at("cor-2.6a").fails());
  // The union is reduced with graph K(2,2); the structural clauses hold.
  EXPECT_TRUE(v.at("thm-3.1").holds());
  EXPECT_TRUE(v.at("cor-3.3").holds());
  EXPECT_TRUE(v.at("thm-4.1").holds());
  EXPECT_TRUE(v.at("cor-4.2").holds());
}

// Removing a-b, a-f, d-e and e-f from the wheel leaves the side {a,e}, but
// a*c = f leaves {0,a,e}.
TEST(Counterexamples, EdgeCutSideOnWheel) {
  const auto s = builtin_example("ex4.5");
  EXPECT_FALSE(is_ideal(s, testing_support::set_of(s, {"0", "a", "e"})));
  for (const auto& v : run_all(s)) EXPECT_EQ(v.fails(), v.id == "cor-2.6a") << v.id;
}

TEST(Counterexamples, MultipartiteWithoutReduced) {
  const auto s = reduced_clause_counterexample();
  EXPECT_FALSE(is_reduced(s));
  const auto v = all_of(s);
  EXPECT_TRUE(v.at("thm-3.6").fails());
}

TEST(Theorems, AnnihilatorClauses) {
  const auto ps3 = all_of(powerset_semigroup(3));
  EXPECT_TRUE(ps3.at("lem-2.8").holds());
  EXPECT_TRUE(ps3.at("prop-2.9a").holds());
  EXPECT_TRUE(ps3.at("prop-2.9b").holds());
  EXPECT_FALSE(ps3.at("prop-2.9c").applicable());
  EXPECT_TRUE(ps3.at("prop-2.7").holds());
  EXPECT_TRUE(all_of(powerset_semigroup(5)).at("prop-2.9c").holds());
  const auto null3 = all_of(null_semigroup(3));
  EXPECT_FALSE(null3.at("prop-2.9a").applicable());
  EXPECT_FALSE(null3.at("prop-2.9b").applicable());
}

TEST(Theorems, Rpartite) {
  // Not reduced, so thm-3.1 does not apply even though {0,x,y} is not prime.
  const auto v = all_of(builtin_example("ex3.5"));
  EXPECT_FALSE(v.at("thm-3.1").applicable());
  const auto ps2 = all_of(powerset_semigroup(2));
  EXPECT_TRUE(ps2.at("thm-3.1").holds());
  EXPECT_TRUE(ps2.at("rem-3.2a").holds());
}

TEST(Theorems, Chromatic) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto v = all_of(powerset_semigroup(n));
    EXPECT_TRUE(v.at("thm-4.1").holds()) << n;
    EXPECT_TRUE(v.at("cor-4.2").holds()) << n;
    EXPECT_EQ(v.at("cor-4.2").witness["chi"], n);
  }
  const auto wheel = all_of(builtin_example("ex4.5"));
  EXPECT_FALSE(wheel.at("thm-4.1").applicable());
  EXPECT_TRUE(wheel.at("thm-4.4").holds());
  EXPECT_EQ(wheel.at("thm-4.4").witness["chi"], 4);
  EXPECT_EQ(wheel.at("thm-4.4").witness["omega"], 3);
  EXPECT_TRUE(all_of(builtin_example("ex3.5")).at("thm-4.4").holds());
}

TEST(Theorems, FullRunsOnExamples) {
  for (const auto& v : run_all(builtin_example("ex3.8"))) EXPECT_FALSE(v.fails()) << v.id;
  for (const auto& v : run_all(null_semigroup(2))) EXPECT_FALSE(v.fails()) << v.id;
  std::size_t failing = 0;
  for (const auto& v : run_all(builtin_example("ex3.4"))) failing += v.fails();
  EXPECT_EQ(failing, 2u);
}

TEST(Theorems, Selector) {
  const auto s = builtin_example("ex3.4");
  EXPECT_EQ(run_selected(s, "all").size(), clause_ids().size());
  const auto bridge = run_selected(s, "2.5");
  ASSERT_EQ(bridge.size(), 2u);
  EXPECT_EQ(bridge[0].id, "thm-2.5-inner");
  EXPECT_EQ(bridge[1].id, "thm-2.5-leaf");
  const auto one = run_selected(s, "cor-2.3");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].id, "cor-2.3");
  EXPECT_EQ(run_selected(s, "2.2").size(), 2u);
  EXPECT_THROW(run_selected(s, "9.9"), UnknownTheorem);
  EXPECT_THROW(run_selected(s, "thm-x"), UnknownTheorem);
}

TEST(Theorems, CutsetCapLimitsSearch) {
  const auto s = builtin_example("ex4.5");
  // The wheel has no separating set of fewer than three vertices.
  const auto narrow = by_id(run_all(s, {.vertex_cutset_cap = 2, .edge_cutset_cap = 2}));
  EXPECT_FALSE(narrow.at("thm-2.2-cutset").applicable());
  const auto wide = by_id(run_all(s));
  EXPECT_EQ(wide.at("thm-2.2-cutset").witness["size_cap"], 4);
  EXPECT_EQ(wide.at("thm-2.2-cutset").witness["checked"], 5);
}

TEST(Theorems, WitnessesAreDeterministic) {
  const auto s = builtin_example("ex3.4");
  const auto a = run_all(s);
  const auto b = run_all(s);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].witness.dump(), b[i].witness.dump());
    EXPECT_EQ(a[i].notes, b[i].notes);
  }
}
