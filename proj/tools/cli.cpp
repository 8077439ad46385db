#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "trirealize/conditions.hpp"
#include "trirealize/document.hpp"
#include "trirealize/error.hpp"
#include "trirealize/patterns.hpp"
#include "trirealize/realizer.hpp"
#include "trirealize/report.hpp"
#include "trirealize/svg.hpp"
#include "trirealize/theorems.hpp"

namespace trirealize::cli {

namespace {

struct CheckArgs {
  std::string path;
  std::optional<double> tol;
  bool measured = false;
  bool json = false;
};

struct RealizeArgs {
  std::string path;
  std::string svg;
  double tol = 1e-7;
  std::optional<std::size_t> seed_triangle;
  bool json = false;
};

struct PatternArgs {
  std::size_t n = 0;
  bool signatures_only = false;
  bool json = false;
};

struct TheoremArgs {
  std::string run;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  bool stress = false;
  bool json = false;
  unsigned threads = 1;
};

Tolerances tolerances(const CheckArgs& args) {
  Tolerances tol = args.measured ? Tolerances::measured() : Tolerances{};
  if (args.tol) tol = {*args.tol, *args.tol, *args.tol, *args.tol};
  return tol;
}

void print_verdict(const Verdict& verdict, std::ostream& out) {
  for (const auto& report : verdict.reports) {
    out << fmt::format("{:<14} {}\n", to_string(report.condition), report.passed() ? "PASS" : "FAIL");
    for (const auto& v : report.violations) {
      out << fmt::format("  {}: residual {:.9g} ({})\n", v.locus.name, v.residual, v.detail);
    }
  }
  if (verdict.realizable) {
    out << "realizable (certificate: " << to_string(verdict.via) << ")\n";
  } else {
    out << "not realizable\n";
  }
}

// Parses the document and insists on an angle block.
std::optional<FigureDocument> load(const std::string& path, std::ostream& err) {
  FigureDocument doc = read_document(path);
  if (!doc.angles) {
    err << "error: " << path << ": no assignment present\n";
    return std::nullopt;
  }
  return doc;
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  const auto doc = load(args.path, err);
  if (!doc) return kUsage;
  const Verdict verdict = realizability_verdict(doc->figure, *doc->angles, tolerances(args));
  if (args.json) {
    out << to_json(doc->figure, verdict);
  } else {
    print_verdict(verdict, out);
  }
  return verdict.realizable ? kOk : kFailure;
}

int cmd_realize(const RealizeArgs& args, std::ostream& out, std::ostream& err) {
  const auto doc = load(args.path, err);
  if (!doc) return kUsage;
  const Verdict verdict = realizability_verdict(doc->figure, *doc->angles);
  if (!verdict.realizable) {
    print_verdict(verdict, err);
    return kFailure;
  }
  Realization realization;
  try {
    realization = realize(doc->figure, *doc->angles, {args.tol, args.seed_triangle});
  } catch (const RealizeError& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == RealizeError::Kind::Closure) {
      err << fmt::format("closure residual {:.9g} degrees exceeds tolerance {:.9g}\n", e.residual(),
                         args.tol);
    }
    return kFailure;
  }
  for (const auto& w : realization.warnings) err << "warning: " << w << "\n";
  if (args.json) {
    out << to_json(realization, doc->figure);
  } else {
    for (VertexIndex v = 0; v < doc->figure.vertex_count(); ++v) {
      out << fmt::format("{} {:.9g} {:.9g}\n", doc->figure.label(v), realization.coords[v].x,
                         realization.coords[v].y);
    }
  }
  if (!args.svg.empty()) {
    std::ofstream file(args.svg);
    if (!file) {
      err << "error: cannot write '" << args.svg << "'\n";
      return kUsage;
    }
    file << to_svg(realization, doc->figure, &*doc->angles);
  }
  return kOk;
}

int cmd_patterns(const PatternArgs& args, std::ostream& out) {
  const auto classes = enumerate_patterns(args.n);
  if (args.json) {
    out << to_json(classes);
    return kOk;
  }
  for (const auto& c : classes) {
    if (args.signatures_only) {
      out << c.signature << "\n";
    } else {
      out << fmt::format("{}  {}  {}\n", c.canonical.str(), c.signature, c.members);
    }
  }
  return kOk;
}

void print_detail(const VerificationReport& report, std::ostream& out) {
  for (const TrialResult& r : report.results) {
    std::string params;
    for (const Param& p : r.params) params += fmt::format(" {}={:.9g}", p.name, p.value);
    out << fmt::format("trial {}:{}  {}\n", r.index, params, r.passed ? "PASS" : "FAIL");
    if (!r.error.empty()) out << "  error: " << r.error << "\n";
    if (!r.built) continue;
    out << fmt::format("  map {} | realizable {} | pairing {}{}\n", to_string(r.map_source),
                       r.realizable ? "yes" : "no", r.pairing ? "yes" : "no",
                       r.failed_conditions.empty() ? "" : " | failed: " + r.failed_conditions);
    out << fmt::format("  realizer vs oracle {:.9g} | round trip {:.9g} | oracle vs map {:.9g}\n",
                       r.similarity_deviation, r.roundtrip_deviation, r.oracle_map_deviation);
    for (const Check& c : r.checks) {
      out << fmt::format("  {}: measured {:.9g}, expected {:.9g}, deviation {:.9g} {}\n", c.name,
                         c.measured, c.expected, c.deviation,
                         c.informational ? "(informational)" : (c.passed() ? "ok" : "FAIL"));
    }
  }
}

int cmd_theorems(const TheoremArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<ScenarioKind> kinds;
  if (args.run == "all") {
    kinds.assign(all_scenarios().begin(), all_scenarios().end());
  } else if (auto kind = scenario_from_name(args.run)) {
    kinds.push_back(*kind);
  } else {
    err << "error: unknown scenario '" << args.run << "'; valid names: all";
    for (ScenarioKind k : all_scenarios()) err << ", " << to_string(k);
    err << "\n";
    return kUsage;
  }

  std::vector<VerificationReport> reports;
  for (ScenarioKind kind : kinds) {
    reports.push_back(run_verification(
        kind, {args.trials, args.seed, args.tol, args.stress, std::max(1u, args.threads)}));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport& r) { return r.all_passed(); });
  if (args.json) {
    out << (reports.size() == 1 ? to_json(reports.front()) : to_json(reports));
    return ok ? kOk : kFailure;
  }
  if (reports.size() == 1 && args.trials <= 5) print_detail(reports.front(), out);
  out << fmt::format("{:<22} {:>6} {:>6} {:>15}  {}\n", "scenario", "trials", "passed",
                     "max deviation", "tol");
  for (const auto& r : reports) {
    out << fmt::format("{:<22} {:>6} {:>6} {:>15.9g}  {:.9g}\n", to_string(r.scenario), r.trials,
                       r.passed_trials(), r.max_deviation(), r.tol);
  }
  for (const auto& r : reports) {
    if (r.scenario == ScenarioKind::MorleyHexagon) {
      out << "note: morley_hexagon uses adjacent trisectors for the inner triangle\n";
    }
    for (const TrialResult& t : r.results) {
      if (t.passed) continue;
      out << fmt::format("failed: {} trial {}{}\n", to_string(r.scenario), t.index,
                         t.error.empty() ? "" : " (" + t.error + ")");
    }
  }
  return ok ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angle-map realizability checker and plane-figure theorem verifier", "trirealize"};
  app.require_subcommand(1, 1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the realizability conditions on a document");
  check_cmd->add_option("path", check.path, "Figure document")->required();
  check_cmd->add_option("--tol", check.tol, "Tolerance for every condition");
  check_cmd->add_flag("--measured", check.measured, "Use tolerances for coordinate-measured maps");
  check_cmd->add_flag("--json", check.json, "Structured output");

  RealizeArgs realize_args;
  auto* realize_cmd = app.add_subcommand("realize", "Construct coordinates for a realizable document");
  realize_cmd->add_option("path", realize_args.path, "Figure document")->required();
  realize_cmd->add_option("--svg", realize_args.svg, "Write an SVG drawing");
  realize_cmd->add_option("--tol", realize_args.tol, "Closure tolerance in degrees");
  realize_cmd->add_option("--seed-triangle", realize_args.seed_triangle, "Triangle to start from");
  realize_cmd->add_flag("--json", realize_args.json, "Structured output");

  PatternArgs patterns;
  auto* patterns_cmd = app.add_subcommand("patterns", "Enumerate pairing-pattern classes");
  patterns_cmd->add_option("--n", patterns.n, "Triangles around the vertex (2..8)")->required();
  patterns_cmd->add_flag("--signatures-only", patterns.signatures_only, "Print signatures only");
  patterns_cmd->add_flag("--json", patterns.json, "Structured output");

  TheoremArgs theorems;
  auto* theorems_cmd = app.add_subcommand("theorems", "Run randomized theorem campaigns");
  theorems_cmd->add_option("--run", theorems.run, "Scenario name or 'all'")->required();
  theorems_cmd->add_option("--trials", theorems.trials, "Trials per scenario");
  theorems_cmd->add_option("--seed", theorems.seed, "Campaign seed");
  theorems_cmd->add_option("--tol", theorems.tol, "Deviation tolerance");
  theorems_cmd->add_flag("--stress", theorems.stress, "Sample up to the domain boundaries");
  theorems_cmd->add_flag("--json", theorems.json, "Structured output");
  theorems_cmd->add_option("--threads", theorems.threads, "Worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, out, err);
    if (*realize_cmd) return cmd_realize(realize_args, out, err);
    if (*patterns_cmd) return cmd_patterns(patterns, out);
    return cmd_theorems(theorems, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace trirealize::cli
