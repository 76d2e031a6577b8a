// Copyright 2026 The Symgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: suite runs, single-case replay and kernel queries.
// Exit status: 0 all pass, 1 property failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symgeo/harness/report.hpp"
#include "symgeo/symgeo.hpp"

namespace {

using namespace symgeo;
using namespace symgeo::harness;

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(kSeedEnvVar, "not an unsigned integer");
}

struct CheckArgs {
  std::vector<int> dims{2};
  std::uint64_t seed = 0;
  long cases = ModelConfig{}.cases_per_property;
  std::vector<std::string> select{"ALL"};
  std::string mutant = "NONE";
  std::string report_path;
  std::string format = "text";
  double degenerate_rate = ModelConfig{}.degenerate_rate;
  bool skip_redundant = false;
};

Mutant mutant_or_throw(const std::string& name) {
  auto m = parse_mutant(name);
  if (!m) throw CLI::ValidationError("--mutant", "expected NONE, L1_METRIC or X_ONLY_EQUIV");
  return *m;
}

int run_check(const CheckArgs& args) {
  ModelConfig config;
  config.seed = args.seed;
  config.cases_per_property = args.cases;
  config.mutant = mutant_or_throw(args.mutant);
  config.degenerate_rate = args.degenerate_rate;
  config.skip_redundant = args.skip_redundant;
  const SuiteReport report = run_suite(config, args.dims, args.select);
  const std::string body = args.format == "json" ? to_json(report).dump(2) + "\n" : to_text(report);
  if (args.report_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(args.report_path);
    if (!out) throw CLI::ValidationError("--report", "cannot open " + args.report_path);
    out << body;
    std::cout << (report.passed() ? "PASS" : "FAIL") << " (" << report.total_failures()
              << " failures) report written to " << args.report_path << "\n";
  }
  return report.passed() ? kExitPass : kExitFailure;
}

struct ReplayArgs {
  std::string id;
  int dim = 2;
  std::uint64_t case_seed = 0;
  unsigned shrink = 0;
  std::string mutant = "NONE";
};

int run_replay(const ReplayArgs& args) {
  ModelConfig config;
  config.dimension = args.dim;
  config.mutant = mutant_or_throw(args.mutant);
  const CaseResult r = replay(config, args.id, args.case_seed, args.shrink);
  for (const auto& [name, value] : r.bindings) std::cout << name << " = " << value << "\n";
  switch (r.outcome) {
    case Outcome::kPass: std::cout << "PASS\n"; return kExitPass;
    case Outcome::kDiscard: std::cout << "DISCARD\n"; return kExitPass;
    case Outcome::kFail: break;
  }
  std::cout << "FAIL" << (r.message.empty() ? "" : ": " + r.message) << "\n";
  return kExitFailure;
}

struct TraceArgs {
  std::string lambda;
  std::string arrow;
  unsigned depth = 10;
  std::string format = "text";
};

int run_trace(const TraceArgs& args) {
  const DyadicApproxTrace trace = real_mul_approx(Rational::parse(args.lambda), Arrow::parse(args.arrow), args.depth);
  std::cout << (args.format == "json" ? to_json(trace).dump(2) + "\n" : to_text(trace));
  return kExitPass;
}

void add_trace_options(CLI::App* cmd, TraceArgs& args) {
  cmd->add_option("--lambda", args.lambda, "target scalar p/q")->required();
  cmd->add_option("--arrow", args.arrow, "arrow \"(x, y)->(u, v)\"")->required();
  cmd->add_option("--depth", args.depth, "bisection depth")->check(CLI::Range(0u, 4096u));
  cmd->add_option("--format", args.format)->check(CLI::IsMember({"text", "json"}));
}

Line line_from(const std::string& base, const std::string& dir) {
  return Line(Point::parse(base), Vector::parse(dir));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symgeo: exact symmetry-axiom geometry kernel"};
  app.require_subcommand(1);
  int status = kExitPass;

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "run the axiom and theorem suite");
  check_cmd->add_option("--dim", check.dims, "dimensions, e.g. 1,2,3,4")
      ->delimiter(',')
      ->check(CLI::Range(1, 4));
  check_cmd->add_option("--seed", check.seed, std::string("run seed (default $") + kSeedEnvVar + " or 1)");
  check_cmd->add_option("--cases", check.cases, "cases per property")->check(CLI::PositiveNumber);
  check_cmd->add_option("--select", check.select, "ALL, ids or group prefixes")->delimiter(',');
  check_cmd->add_option("--mutant", check.mutant, "NONE, L1_METRIC or X_ONLY_EQUIV");
  check_cmd->add_option("--report", check.report_path, "write the report to a file");
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));
  check_cmd->add_option("--degenerate-rate", check.degenerate_rate)->check(CLI::Range(0.0, 1.0));
  check_cmd->add_flag("--skip-redundant", check.skip_redundant, "leave out implied axioms");
  check_cmd->callback([&] {
    if (check_cmd->count("--seed") == 0) check.seed = default_seed();
    status = run_check(check);
  });

  ReplayArgs rep;
  auto* replay_cmd = app.add_subcommand("replay", "re-run one reported case");
  replay_cmd->add_option("--select", rep.id, "property id")->required();
  replay_cmd->add_option("--dim", rep.dim)->check(CLI::Range(1, 4));
  replay_cmd->add_option("--case-seed", rep.case_seed)->required();
  replay_cmd->add_option("--shrink", rep.shrink)->check(CLI::Range(0u, kMaxShrink));
  replay_cmd->add_option("--mutant", rep.mutant);
  replay_cmd->callback([&] { status = run_replay(rep); });

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("dyadic-trace", "dyadic approximation of lambda * AB");
  add_trace_options(trace_cmd, trace);
  trace_cmd->callback([&] { status = run_trace(trace); });

  auto* query = app.add_subcommand("query", "evaluate one kernel operation");
  query->require_subcommand(1);

  std::string a, b, c, base, dir, point, center, radius_sq, plane_dir, ab, cd;

  auto* q_mid = query->add_subcommand("midpoint", "midpoint of AB");
  q_mid->add_option("--a", a)->required();
  q_mid->add_option("--b", b)->required();
  q_mid->callback([&] { std::cout << midpoint(Point::parse(a), Point::parse(b)) << "\n"; });

  auto* q_near = query->add_subcommand("nearest", "nearest point of a line");
  q_near->add_option("--point", point)->required();
  q_near->add_option("--line-base", base)->required();
  q_near->add_option("--line-dir", dir)->required();
  q_near->callback([&] { std::cout << nearest_point_on_line(Point::parse(point), line_from(base, dir)) << "\n"; });

  auto* q_perp = query->add_subcommand("perpendicular", "perpendicular to a line through a point");
  q_perp->add_option("--point", point)->required();
  q_perp->add_option("--line-base", base)->required();
  q_perp->add_option("--line-dir", dir)->required();
  q_perp->add_option("--plane-dir", plane_dir, "second plane direction for a point on the line");
  q_perp->callback([&] {
    std::optional<Vector> hint;
    if (!plane_dir.empty()) hint = Vector::parse(plane_dir);
    std::cout << perpendicular_through(Point::parse(point), line_from(base, dir), hint).str() << "\n";
  });

  auto* q_dot = query->add_subcommand("dot", "scalar product of two arrows");
  q_dot->add_option("--ab", ab)->required();
  q_dot->add_option("--cd", cd)->required();
  q_dot->callback([&] { std::cout << dot(Arrow::parse(ab), Arrow::parse(cd)) << "\n"; });

  auto* q_tri = query->add_subcommand("triangle", "compare |AB| + |BC| with |AC|");
  q_tri->add_option("--a", a)->required();
  q_tri->add_option("--b", b)->required();
  q_tri->add_option("--c", c)->required();
  q_tri->callback([&] {
    std::cout << to_string(triangle_cmp(Point::parse(a), Point::parse(b), Point::parse(c))) << "\n";
  });

  auto* q_lc = query->add_subcommand("line-circle", "classify a line against a circle");
  q_lc->add_option("--line-base", base)->required();
  q_lc->add_option("--line-dir", dir)->required();
  q_lc->add_option("--center", center)->required();
  q_lc->add_option("--radius-sq", radius_sq)->required();
  q_lc->callback([&] {
    const Circle circle(Point::parse(center), Rational::parse(radius_sq));
    std::cout << to_string(line_circle_class(line_from(base, dir), circle)) << "\n";
  });

  TraceArgs q_trace_args;
  auto* q_trace = query->add_subcommand("dyadic-trace", "dyadic approximation of lambda * AB");
  add_trace_options(q_trace, q_trace_args);
  q_trace->callback([&] { status = run_trace(q_trace_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ModelError& e) {
    std::cerr << "contract violated: " << e.contract() << ": " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
