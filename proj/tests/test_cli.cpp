#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zdg/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = zdg::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class TempFile {
 public:
  explicit TempFile(const std::string& text)
      : path_(std::filesystem::temp_directory_path() /
              ("zdg_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".sgt")) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, ExampleRoundTripsThroughStdin) {
  const auto table = run({"example", "ex4.5"});
  ASSERT_EQ(table.code, 0);
  const auto inv = run({"invariants", "-"}, table.out);
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_TRUE(contains(inv.out, "chi: 4"));
  EXPECT_TRUE(contains(inv.out, "omega: 3"));
  EXPECT_TRUE(contains(inv.out, "girth: 3"));
  EXPECT_TRUE(contains(inv.out, "diameter: 2"));
  EXPECT_EQ(inv.out, run({"invariants", "ex4.5"}).out);
}

TEST(Cli, EveryBuiltinRoundTrips) {
  for (const char* id : {"ex3.4", "ex3.5", "ex3.8", "ex4.5", "powerset:3", "null:4",
                         "ortho:group0:2+group0:2"}) {
    const auto table = run({"example", id, "--format", "sgt"});
    ASSERT_EQ(table.code, 0) << id;
    const auto direct = run({"invariants", id, "--format", "report"});
    const auto piped = run({"invariants", "-", "--format", "report"}, table.out);
    EXPECT_EQ(direct.out, piped.out) << id;
    EXPECT_TRUE(nlohmann::json::accept(direct.out));
  }
}

TEST(Cli, ValidateReportsViolation) {
  TempFile bad("3\n0 0 0\n0 2 1\n0 1 0\n");
  const auto r = run({"validate", bad.path()});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out + r.err, "invalid: NotAssociative("));
  TempFile good("2\n0 0\n0 1\n");
  const auto ok = run({"validate", good.path()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "valid: order 2\n");
}

TEST(Cli, ValidateCorpus) {
  const auto r = run({"validate", "-"}, "2\n0 0\n0 0\n\n2\n0 1\n1 1\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "record 1: valid: order 2"));
  EXPECT_TRUE(contains(r.out, "record 2: invalid: ZeroNotAbsorbing(1)"));
}

TEST(Cli, GraphFormats) {
  const auto dot = run({"graph", "ex3.4", "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_TRUE(contains(dot.out, "\"a\" -- \"b\""));
  const auto text = run({"graph", "ex3.4"});
  EXPECT_TRUE(contains(text.out, "b: a c"));
  const auto bar = run({"graph", "ex4.5", "--bar", "--format", "report"});
  EXPECT_EQ(bar.code, 0);
  EXPECT_TRUE(nlohmann::json::accept(bar.out));
}

TEST(Cli, CheckTable) {
  const auto r = run({"check", "ex3.4", "--theorem", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "thm-2.5-leaf    fails"));
  EXPECT_TRUE(contains(r.out, "thm-2.5-inner   holds"));
  EXPECT_TRUE(contains(r.out, "22 clauses, 12 applicable, 10 hold, 2 fail"));
  const auto one = run({"check", "ex3.4", "--theorem", "2.3", "--format", "report"});
  EXPECT_EQ(one.code, 0);
  const auto parsed = nlohmann::json::parse(one.out);
  ASSERT_EQ(parsed.size(), 1u);
  EXPECT_EQ(parsed[0]["status"], "holds");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"check", "ex3.4", "--theorem", "9.9"}).code, 2);
  EXPECT_EQ(run({"search", "--order", "3", "--predicate", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"enumerate"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--order", "7"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrorsExitOne) {
  EXPECT_EQ(run({"invariants", "ex9.9"}).code, 1);
  EXPECT_EQ(run({"invariants", "-"}, "2\nx y\n").code, 1);
}

TEST(Cli, EnumerateAndSearch) {
  const auto count = run({"enumerate", "--order", "4", "--up-to-iso", "--count"});
  EXPECT_EQ(count.code, 0);
  EXPECT_EQ(count.out, "39\n");
  const auto raw = run({"enumerate", "--order", "3", "--count", "--jobs", "3"});
  EXPECT_EQ(raw.out, "14\n");
  const auto two = run({"enumerate", "--order", "2"});
  EXPECT_EQ(two.out, "2\n0 0\n0 0\n\n2\n0 0\n0 1\n");
  const auto found = run({"search", "--order", "5", "--predicate", "girth:4", "--count"});
  EXPECT_EQ(found.code, 0);
  EXPECT_NE(found.out, "0\n");
}

TEST(Cli, AuditText) {
  const auto r = run({"audit", "--order", "4", "--up-to-iso"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "thm-2.5-leaf"));
  const auto report = nlohmann::json::parse(run({"audit", "--order", "3", "--up-to-iso", "--format", "report"}).out);
  EXPECT_EQ(report["total_examined"], 2 + 8);
}

TEST(Cli, ExampleList) {
  const auto r = run({"example", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ex4.5"));
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"invariants", "ex4.5", "--format", "report"},
      {"check", "powerset:3"},
      {"enumerate", "--order", "4", "--up-to-iso", "--jobs", "4"},
      {"search", "--order", "5", "--predicate", "has-bridge", "--jobs", "4"},
      {"audit", "--order", "4", "--up-to-iso", "--format", "report", "--jobs", "4"},
      {"graph", "ex4.5", "--format", "dot"}};
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << c[0];
  }
}
