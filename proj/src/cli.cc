// Copyright 2026 The nbpack Authors
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

#include "nbpack/cli.h"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbpack/approx.h"
#include "nbpack/errors.h"
#include "nbpack/games.h"
#include "nbpack/io.h"
#include "nbpack/oracle.h"
#include "nbpack/solvers.h"

namespace nbpack {
namespace {

using nlohmann::json;

std::string ReadBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

double DefaultTolerance() {
  const char* env = std::getenv("NBP_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(tol > 0.0)) {
    throw InvalidInput(std::string("NBP_TOL is not a positive number: ") + env);
  }
  return tol;
}

// Parsed once per process; the instance file is hashed for the manifest.
struct LoadedInstance {
  std::string hash;
  std::optional<SetFunction> weights;
};

LoadedInstance Load(const std::string& path) {
  LoadedInstance loaded;
  const std::string bytes = ReadBytes(path);
  loaded.hash = "fnv1a64:" + Fnv1aHex(bytes);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  try {
    loaded.weights.emplace(ParseInstance(doc));
  } catch (const SizeLimitExceeded& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return loaded;
}

json Manifest(const std::string& command, json config,
              const LoadedInstance& instance) {
  return {{"command", command},
          {"config", std::move(config)},
          {"input_hash", instance.hash}};
}

struct SolveArgs {
  std::string input;
  std::string algorithm = "local";
  std::string init = "weight";
  double tol = 0.0;
  uint64_t seed = 0;
  bool randomize_ties = false;
  std::string trace;
  std::string selection = "min";
  bool oracle_check = false;
  bool minimize = false;
  int max_iterations = 0;
};

json RunSolve(const SolveArgs& args) {
  const LoadedInstance instance = Load(args.input);
  const SetFunction& w = *instance.weights;

  SolverConfig config;
  if (args.algorithm == "roundup") {
    config.algorithm = Algorithm::kRoundUp;
  } else if (args.algorithm == "local") {
    config.algorithm = Algorithm::kLocalSearch;
  } else {
    config.algorithm = Algorithm::kLocalSearchWithCost;
  }
  if (args.init == "uniform") {
    config.init = InitKind::kUniform;
  } else if (args.init == "weight") {
    config.init = InitKind::kWeightProportional;
  } else if (args.init.rfind("file:", 0) == 0) {
    config.init = InitKind::kExplicit;
    config.initial_profile =
        ParseProfile(ReadJsonFile(args.init.substr(5)), w.family_ptr());
  } else {
    throw InvalidInput("--init must be uniform, weight or file:PATH");
  }
  config.options.tolerance = args.tol;
  config.options.seed = args.seed;
  config.options.randomize_ties = args.randomize_ties;
  config.options.selection =
      args.selection == "sum" ? Selection::kSum : Selection::kMin;
  config.options.maximize = !args.minimize;
  config.options.max_iterations = args.max_iterations;

  std::ofstream trace;
  if (!args.trace.empty()) {
    trace.open(args.trace);
    if (!trace) throw InvalidInput("cannot write trace to " + args.trace);
    config.options.trace = [&trace](const TraceEvent& event) {
      trace << TraceEventToJson(event).dump() << '\n';
    };
  }

  const SolveResult result = Solve(w, config);
  json out_result = SolveResultToJson(result);
  if (args.oracle_check) {
    OracleOptions oracle_options;
    oracle_options.tolerance = args.tol;
    oracle_options.collect_local_maximizers = false;
    const OracleReport report = OracleBestPartition(w, oracle_options);
    out_result["oracle"] = {{"best_weight", report.best_weight},
                            {"gap", report.best_weight - result.total_weight}};
  }

  json config_echo = {{"algorithm", args.algorithm},
                      {"init", args.init},
                      {"tol", args.tol},
                      {"seed", args.seed},
                      {"randomize_ties", args.randomize_ties},
                      {"selection", args.selection},
                      {"minimize", args.minimize},
                      {"max_iterations", args.max_iterations},
                      {"oracle_check", args.oracle_check}};
  json doc = Manifest("solve", std::move(config_echo), instance);
  doc["trace_path"] = args.trace.empty() ? json() : json(args.trace);
  doc["result"] = std::move(out_result);
  return doc;
}

json RunMobius(const std::string& input) {
  const LoadedInstance instance = Load(input);
  const SetFunction& w = *instance.weights;
  const auto mu = w.mobius();
  json table = json::array();
  for (int a = 1; a < w.family().size(); ++a) {
    table.push_back({{"set", SubsetToJson(w.family().member(a))},
                     {"weight", w.weight(a)},
                     {"mobius", mu[a]}});
  }
  json doc = Manifest("mobius", json::object(), instance);
  doc["result"] = {{"n", w.n()},
                   {"mode", w.family().mode() == Mode::kFull ? "full" : "family"},
                   {"table", table}};
  return doc;
}

json RunApprox(const std::string& input, int k, const std::string& gauge) {
  const LoadedInstance instance = Load(input);
  const GaugeStrategy strategy = gauge == "pinned"
                                     ? GaugeStrategy::kPinnedSingletons
                                     : GaugeStrategy::kMinimumNorm;
  const ApproxResult result = KDegreeApprox(*instance.weights, k, strategy);
  json doc = Manifest("approx", {{"k", k}, {"gauge", gauge}}, instance);
  doc["result"] = ApproxResultToJson(result);
  return doc;
}

json RunGame(const std::string& input, const std::string& profile_path,
             const std::string& payoff, std::vector<double> omega, double tol) {
  const LoadedInstance instance = Load(input);
  const SetFunction& w = *instance.weights;
  const MembershipProfile q =
      ParseProfile(ReadJsonFile(profile_path), w.family_ptr());
  if (!q.IsVertex(tol)) {
    throw InvalidInput("game profiles must put each element on a single set");
  }
  if (omega.empty()) omega.assign(w.n(), 1.0);
  const PayoffVector pi = payoff == "shapley"
                              ? ShapleyPayoffs(w, q, tol)
                              : ProportionalPayoffs(w, q, omega, tol);
  json doc = Manifest("game",
                      {{"payoff", payoff}, {"omega", omega}, {"tol", tol}},
                      instance);
  doc["result"] = {{"payoffs", pi},
                   {"worth", Worth(w, q, tol)},
                   {"induced_partition", PartitionToJson(InducedPartition(q, tol))},
                   {"equilibrium", IsEquilibrium(w, q, omega, tol)}};
  return doc;
}

json RunOracle(const std::string& input, int64_t node_limit, double tol) {
  const LoadedInstance instance = Load(input);
  OracleOptions options;
  options.node_limit = node_limit;
  options.tolerance = tol;
  const OracleReport report = OracleBestPartition(*instance.weights, options);
  json doc = Manifest("oracle", {{"node_limit", node_limit}, {"tol", tol}},
                      instance);
  doc["result"] = OracleReportToJson(report);
  return doc;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  double tol = 0.0;
  try {
    tol = DefaultTolerance();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  }

  CLI::App app{"Weighted set packing by near-Boolean local search", "nbpack"};
  app.require_subcommand(1);

  SolveArgs solve;
  solve.tol = tol;
  auto* solve_cmd = app.add_subcommand("solve", "Run a packing search");
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
  solve_cmd->add_option("--algorithm", solve.algorithm)
      ->check(CLI::IsMember({"roundup", "local", "local-cost"}));
  solve_cmd->add_option("--init", solve.init, "uniform | weight | file:PATH");
  solve_cmd->add_option("--tol", solve.tol)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_flag("--randomize-ties", solve.randomize_ties);
  solve_cmd->add_option("--trace", solve.trace, "Line-delimited JSON trace");
  solve_cmd->add_option("--selection", solve.selection)
      ->check(CLI::IsMember({"min", "sum"}));
  solve_cmd->add_flag("--oracle-check", solve.oracle_check);
  solve_cmd->add_flag("--minimize", solve.minimize, "RoundUp toward argmin");
  solve_cmd->add_option("--max-iterations", solve.max_iterations);

  std::string input;
  auto* mobius_cmd = app.add_subcommand("mobius", "Möbius inversion table");
  mobius_cmd->add_option("--input", input)->required();

  int k = 1;
  std::string gauge = "min-norm";
  auto* approx_cmd = app.add_subcommand("approx", "Best k-degree approximation");
  approx_cmd->add_option("--input", input)->required();
  approx_cmd->add_option("--k", k)->required();
  approx_cmd->add_option("--gauge", gauge)
      ->check(CLI::IsMember({"min-norm", "pinned"}));

  std::string profile;
  std::string payoff = "shapley";
  std::vector<double> omega;
  double game_tol = tol;
  auto* game_cmd = app.add_subcommand("game", "Payoffs on a vertex profile");
  game_cmd->add_option("--input", input)->required();
  game_cmd->add_option("--profile", profile)->required();
  game_cmd->add_option("--payoff", payoff)
      ->check(CLI::IsMember({"shapley", "proportional"}));
  game_cmd->add_option("--omega", omega, "Positive player weights");
  game_cmd->add_option("--tol", game_tol)->check(CLI::PositiveNumber);

  int64_t node_limit = OracleOptions{}.node_limit;
  double oracle_tol = tol;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive ground truth");
  oracle_cmd->add_option("--input", input)->required();
  oracle_cmd->add_option("--node-limit", node_limit);
  oracle_cmd->add_option("--tol", oracle_tol)->check(CLI::PositiveNumber);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("nbpack");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformedInput;
  }

  try {
    json doc;
    if (solve_cmd->parsed()) {
      doc = RunSolve(solve);
    } else if (mobius_cmd->parsed()) {
      doc = RunMobius(input);
    } else if (approx_cmd->parsed()) {
      doc = RunApprox(input, k, gauge);
    } else if (game_cmd->parsed()) {
      doc = RunGame(input, profile, payoff, omega, game_tol);
    } else {
      doc = RunOracle(input, node_limit, oracle_tol);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const InfeasibleConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasibleConfig;
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeGuard;
  }
}

}  // namespace nbpack
