#include "zdg/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "zdg/builders.hpp"
#include "zdg/enumeration.hpp"
#include "zdg/errors.hpp"
#include "zdg/graph_export.hpp"
#include "zdg/report.hpp"
#include "zdg/sgt_format.hpp"
#include "zdg/theorems.hpp"

namespace zdg {

namespace {

/// A flag value the parser accepted but the command cannot use.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// "-" is standard input, then a file path, then a builtin id.
std::string read_input(const std::string& input, std::istream& in) {
  if (input == "-") return read_all(in);
  std::ifstream file(input);
  if (!file) throw UnknownExample("no file or builtin example named '" + input + "'");
  return read_all(file);
}

bool is_file(const std::string& input) {
  std::error_code ec;
  return input != "-" && std::filesystem::is_regular_file(input, ec);
}

Semigroup load(const std::string& input, std::istream& in) {
  if (input != "-" && !is_file(input)) return builtin_example(input);
  return Semigroup::validate(parse_sgt(read_input(input, in)));
}

std::string names(const Semigroup& s, const Report& indices) {
  std::string out = "{";
  for (const auto& x : indices) {
    if (out.size() > 1) out += ',';
    out += s.name(x.get<Element>());
  }
  return out + "}";
}

std::string name_list(const Semigroup& s, const Report& sets) {
  if (sets.empty()) return "none";
  std::string out;
  for (const auto& set : sets) {
    if (!out.empty()) out += ' ';
    out += names(s, set);
  }
  return out;
}

std::string scalar(const Report& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void render_table(std::ostream& out, const Semigroup& s) {
  std::size_t width = 1;
  for (Element x = 0; x < s.order(); ++x) width = std::max(width, s.name(x).size());
  out << std::setw(static_cast<int>(width)) << "*" << " |";
  for (Element y = 0; y < s.order(); ++y) out << ' ' << std::setw(static_cast<int>(width)) << s.name(y);
  out << '\n' << std::string(width + 1, '-') << '+'
      << std::string(s.order() * (width + 1), '-') << '\n';
  for (Element x = 0; x < s.order(); ++x) {
    out << std::setw(static_cast<int>(width)) << s.name(x) << " |";
    for (Element y = 0; y < s.order(); ++y) {
      out << ' ' << std::setw(static_cast<int>(width)) << s.name(s.product(x, y));
    }
    out << '\n';
  }
}

void render_invariants(std::ostream& out, const Semigroup& s, const Report& r) {
  const Report& m = r["metrics"];
  out << "order: " << s.order() << '\n'
      << "reduced: " << yes_no(r["reduced"].get<bool>()) << '\n'
      << "zero divisors: " << names(s, r["zero_divisors"]) << '\n'
      << "nilpotents: " << names(s, r["nilpotents"]) << '\n'
      << "vertices: " << r["graph"]["vertices"].size() << '\n'
      << "edges: " << r["graph"]["edge_count"].get<std::size_t>() << '\n'
      << "chi: " << r["chromatic"]["colors"].get<std::size_t>() << '\n'
      << "omega: " << r["clique"]["size"].get<std::size_t>() << '\n'
      << "max clique: " << names(s, r["clique"]["vertices"]) << '\n'
      << "girth: " << scalar(m["girth"]) << '\n'
      << "radius: " << scalar(m["radius"]) << '\n'
      << "diameter: " << scalar(m["diameter"]) << '\n'
      << "connected: " << yes_no(m["connected"].get<bool>()) << '\n';
  auto optional_set = [&](const char* label, const Report& value) {
    out << label << ": " << (value.is_null() ? std::string("n/a") : names(s, value)) << '\n';
  };
  optional_set("center", r["center"]);
  optional_set("median", r["median"]);
  optional_set("cut vertices", r["cut_vertices"]);
  out << "bridges: " << (r["bridges"].is_null() ? std::string("n/a") : name_list(s, r["bridges"]))
      << '\n';
  const Report& parts = r["complete_multipartite"];
  out << "complete multipartite: " << (parts.is_null() ? std::string("no") : name_list(s, parts))
      << '\n'
      << "bipartite: " << yes_no(r["bipartite"].get<bool>()) << '\n';
  auto witnessed = [&](const char* label, const Report& list) {
    out << label << ":";
    if (list.empty()) out << " none";
    for (const auto& entry : list) {
      out << " Ann(" << s.name(entry["witness"].get<Element>()) << ")=" << names(s, entry["set"]);
    }
    out << '\n';
  };
  witnessed("associated primes", r["associated_primes"]);
  witnessed("maximal annihilators", r["maximal_annihilators"]);
  out << "minimal ideals: " << name_list(s, r["minimal_ideals"]) << '\n';
  auto decomposition = [&](const char* label, const Report& d, const char* missing) {
    out << label << ": " << (d.is_null() ? std::string(missing) : name_list(s, d["primes"])) << '\n';
  };
  decomposition("zero decomposition (fast)", r["decomposition_fast"], "not found");
  decomposition("zero decomposition (exhaustive)", r["decomposition_exhaustive"],
                s.order() > kExhaustiveOrderCap ? "skipped (order too large)" : "not found");
}

std::string clip(std::string text, std::size_t width) {
  if (text.size() > width) text = text.substr(0, width - 3) + "...";
  return text;
}

void render_verdicts(std::ostream& out, const std::vector<Verdict>& verdicts) {
  std::size_t applicable = 0;
  std::size_t failing = 0;
  out << std::left << std::setw(16) << "clause" << std::setw(9) << "status" << "witness\n";
  for (const auto& v : verdicts) {
    out << std::left << std::setw(16) << v.id;
    if (v.applicable()) {
      out << std::setw(9) << to_string(v.status) << clip(v.witness.dump(), 100);
    } else {
      out << to_string(v.status);
    }
    out << '\n';
    if (!v.notes.empty()) out << std::string(25, ' ') << v.notes << '\n';
    applicable += v.applicable() ? 1 : 0;
    failing += v.fails() ? 1 : 0;
  }
  out << std::right << verdicts.size() << " clauses, " << applicable << " applicable, "
      << applicable - failing << " hold, " << failing << " fail\n";
}

void render_audit(std::ostream& out, const AuditReport& a) {
  out << "examined " << a.total_examined << " semigroups (orders";
  for (std::size_t n : a.orders) out << ' ' << n;
  out << (a.up_to_iso ? ", up to isomorphism" : ", all tables") << ")\n";
  out << std::left << std::setw(16) << "clause" << std::right << std::setw(11) << "applicable"
      << std::setw(8) << "holds" << std::setw(8) << "fails" << '\n';
  for (const auto& [id, t] : a.tallies) {
    out << std::left << std::setw(16) << id << std::right << std::setw(11) << t.applicable
        << std::setw(8) << t.holds << std::setw(8) << t.fails << '\n';
  }
  out << "counterexample candidates: " << a.counterexample_candidates.size() << '\n';
  out << "structure violations: " << a.structure_violations.size() << '\n';
  std::map<std::string, std::size_t> shown;
  for (const auto& c : a.counterexample_candidates) {
    if (shown[c.verdict.id]++ >= 3) continue;
    out << '\n' << c.verdict.id << " fails on:\n" << format_sgt(c.table);
    if (!c.verdict.notes.empty()) out << "# " << c.verdict.notes << '\n';
  }
}

std::vector<std::size_t> order_range(std::size_t min_order, std::size_t order) {
  if (min_order > order) throw UsageError("--min-order exceeds --order");
  std::vector<std::size_t> out;
  for (std::size_t n = min_order; n <= order; ++n) out.push_back(n);
  return out;
}

void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> choices) {
  const std::string initial = choices.front();
  format = initial;
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(std::move(choices)))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Zero-divisor graphs of finite commutative semigroups with zero"};
  app.name("zdg");
  app.require_subcommand(1);

  std::string input;
  std::string format;
  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check a table (or a corpus) for the semigroup laws");
  validate->add_option("input", input, "File, '-' for stdin, or builtin id")->required();
  validate->callback([&] {
    action = [&] {
      std::vector<CayleyTable> tables;
      if (input != "-" && !is_file(input)) {
        tables.push_back(builtin_example(input).table());
      } else {
        std::istringstream text(read_input(input, in));
        tables = read_sgt_stream(text);
      }
      bool all_valid = true;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        const std::string prefix = tables.size() > 1 ? "record " + std::to_string(i + 1) + ": " : "";
        try {
          check_well_formed(tables[i]);
        } catch (const MalformedTable& e) {
          out << prefix << "malformed: " << e.what() << '\n';
          all_valid = false;
          continue;
        }
        const auto violations = find_violations(tables[i]);
        if (violations.empty()) {
          out << prefix << "valid: order " << tables[i].order << '\n';
          continue;
        }
        all_valid = false;
        out << prefix << "invalid:";
        for (const auto& v : violations) out << ' ' << v.describe();
        out << '\n';
      }
      return all_valid ? 0 : 1;
    };
  });

  bool bar = false;
  auto* graph = app.add_subcommand("graph", "Print the zero-divisor graph");
  graph->add_option("input", input, "File, '-' for stdin, or builtin id")->required();
  graph->add_flag("--bar", bar, "Use the xSy = 0 variant of the graph");
  add_format(graph, format, {"text", "dot", "report"});
  graph->callback([&] {
    action = [&] {
      const Semigroup s = load(input, in);
      const Graph g = bar ? gamma_bar(s) : gamma(s);
      if (format == "dot") {
        out << to_dot(g, bar ? "GammaBar" : "Gamma");
      } else if (format == "report") {
        out << dump(to_report(g));
      } else {
        out << adjacency_listing(g);
      }
      return 0;
    };
  });

  auto* invariants = app.add_subcommand("invariants", "Print ideal and graph invariants");
  invariants->add_option("input", input, "File, '-' for stdin, or builtin id")->required();
  add_format(invariants, format, {"text", "report"});
  invariants->callback([&] {
    action = [&] {
      const Semigroup s = load(input, in);
      const Report r = invariants_report(s);
      if (format == "report") {
        out << dump(r);
      } else {
        render_invariants(out, s, r);
      }
      return 0;
    };
  });

  std::string theorem = "all";
  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Check the theorem clauses against a semigroup");
  check->add_option("input", input, "File, '-' for stdin, or builtin id")->required();
  check->add_option("--theorem", theorem, "'all', a number such as 2.5, or a clause id")
      ->capture_default_str();
  check->add_option("--cutset-cap", check_opts.vertex_cutset_cap,
                    "Largest vertex and edge cutset enumerated")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_format(check, format, {"text", "report"});
  check->callback([&] {
    action = [&] {
      check_opts.edge_cutset_cap = check_opts.vertex_cutset_cap;
      const Semigroup s = load(input, in);
      const auto verdicts = run_selected(s, theorem, check_opts);
      if (format == "report") {
        out << dump(to_report(verdicts));
      } else {
        render_verdicts(out, verdicts);
      }
      return 0;
    };
  });

  EnumerationOptions enum_opts;
  std::size_t limit = 0;
  std::size_t min_order = 0;
  bool count_only = false;
  auto add_enumeration_flags = [&](CLI::App* cmd) {
    cmd->add_option("--order", enum_opts.order, "Semigroup order")
        ->required()
        ->check(CLI::Range(kMinEnumerationOrder, kMaxEnumerationOrder));
    cmd->add_flag("--up-to-iso", enum_opts.up_to_iso, "One table per isomorphism class");
    cmd->add_flag("--reduced", enum_opts.require_reduced, "Only reduced semigroups");
    cmd->add_option("--jobs", enum_opts.workers, "Worker threads")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every semigroup of an order");
  add_enumeration_flags(enumerate_cmd);
  enumerate_cmd->add_option("--limit", limit, "Stop after this many tables");
  enumerate_cmd->add_flag("--count", count_only, "Print only the number of tables");
  enumerate_cmd->callback([&] {
    action = [&] {
      if (limit > 0) enum_opts.limit = limit;
      std::size_t emitted = 0;
      enumerate(enum_opts, [&](const Semigroup& s) {
        if (!count_only) out << (emitted > 0 ? "\n" : "") << format_sgt(s.table());
        ++emitted;
        return true;
      });
      if (count_only) out << emitted << '\n';
      return 0;
    };
  });

  std::string predicate_spec;
  auto* search_cmd = app.add_subcommand("search", "List enumerated semigroups matching a predicate");
  add_enumeration_flags(search_cmd);
  search_cmd->add_option("--min-order", min_order, "Smallest order searched (default: --order)");
  search_cmd->add_option("--predicate", predicate_spec,
                         "complete-rpartite:R, has-bridge, has-cut-vertex, girth:K, "
                         "chi-omega-gap, reduced")
      ->required();
  search_cmd->add_option("--limit", limit, "Stop after this many matches");
  search_cmd->add_flag("--count", count_only, "Print only the number of matches");
  search_cmd->callback([&] {
    action = [&] {
      const Predicate predicate = parse_predicate(predicate_spec);
      std::size_t matched = 0;
      for (std::size_t n : order_range(min_order == 0 ? enum_opts.order : min_order, enum_opts.order)) {
        EnumerationOptions opts = enum_opts;
        opts.order = n;
        if (limit > 0) {
          if (matched >= limit) break;
          opts.limit = limit - matched;
        }
        search(opts, predicate, [&](const Semigroup& s) {
          if (!count_only) out << (matched > 0 ? "\n" : "") << format_sgt(s.table());
          ++matched;
          return true;
        });
      }
      if (count_only) out << matched << '\n';
      return 0;
    };
  });

  auto* audit_cmd = app.add_subcommand("audit", "Run every check over enumerated semigroups");
  add_enumeration_flags(audit_cmd);
  audit_cmd->add_option("--min-order", min_order, "Smallest order audited (default: 2)");
  add_format(audit_cmd, format, {"text", "report"});
  audit_cmd->callback([&] {
    action = [&] {
      AuditReport total;
      bool first = true;
      for (std::size_t n : order_range(min_order == 0 ? kMinEnumerationOrder : min_order, enum_opts.order)) {
        EnumerationOptions opts = enum_opts;
        opts.order = n;
        AuditReport part = audit(opts);
        if (first) {
          total = std::move(part);
          first = false;
        } else {
          merge(total, part);
        }
      }
      if (format == "report") {
        out << dump(to_report(total));
      } else {
        render_audit(out, total);
      }
      return 0;
    };
  });

  bool list = false;
  auto* example = app.add_subcommand("example", "Print a builtin semigroup");
  example->add_option("id", input, "Builtin id (see --list)");
  example->add_flag("--list", list, "List builtin ids");
  add_format(example, format, {"sgt", "report", "text"});
  example->callback([&] {
    action = [&] {
      if (list) {
        for (const auto& [id, text] : builtin_catalog()) {
          out << std::left << std::setw(18) << id << text << '\n';
        }
        return 0;
      }
      if (input.empty()) throw UsageError("example needs an id or --list");
      const Semigroup s = builtin_example(input);
      if (format == "report") {
        out << dump(to_report(s.table()));
      } else if (format == "text") {
        render_table(out, s);
      } else {
        out << format_sgt(s.table());
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "zdg: " << e.what() << '\n';
    err << "run 'zdg --help' for usage\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const UsageError& e) {
    err << "zdg: " << e.what() << '\n';
    return 2;
  } catch (const UnknownTheorem& e) {
    err << "zdg: " << e.what() << '\n';
    return 2;
  } catch (const UnknownPredicate& e) {
    err << "zdg: " << e.what() << '\n';
    return 2;
  } catch (const InvalidTable& e) {
    err << "zdg: invalid table:";
    for (const auto& v : e.violations()) err << ' ' << v.describe();
    err << '\n';
    return 1;
  } catch (const Error& e) {
    err << "zdg: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zdg
