// Copyright 2026 The RobustEA Authors.
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

// Command-line front end: runs, sweeps, oracles, drift checks and the
// acceptance suite. Exit codes: 0 success, 1 usage error, 2 failed check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robustea/bitstring.h"
#include "robustea/drift.h"
#include "robustea/ea.h"
#include "robustea/errors.h"
#include "robustea/experiments.h"
#include "robustea/instance_io.h"
#include "robustea/oracle.h"
#include "robustea/problems.h"
#include "robustea/verification.h"

namespace robustea {
namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr const char* kWorkersEnv = "ROBUSTEA_WORKERS";

int DefaultWorkers() {
  const char* env = std::getenv(kWorkersEnv);
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  Require(*end == '\0' && v >= 1 && v <= 1024,
          std::string(kWorkersEnv) + " must be an integer in 1..1024");
  return static_cast<int>(v);
}

struct FamilyFlags {
  std::string instance;
  std::string family;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> m;

  void Add(CLI::App* app) {
    app->add_option("--instance", instance, "Instance file (JSON)");
    app->add_option("--family", family, "Builder family shorthand");
    app->add_option("--n", n, "Number of items");
    app->add_option("--k", k, "Cardinality bound");
    app->add_option("--d", d, "Number of deletions");
    app->add_option("--m", m, "Number of objectives");
  }

  Instance Build() const {
    Require(instance.empty() != family.empty(), "give exactly one of --instance and --family");
    if (!instance.empty()) return LoadInstance(instance);
    Require(n.has_value(), "--family needs --n");
    return BuildFromParams(InstanceParams{ParseFamily(family), *n, k, d, m});
  }
};

SweepCell CellOf(const Instance& inst) {
  SweepCell cell;
  cell.family = inst.family();
  cell.n = inst.n();
  cell.k = inst.k();
  if (const auto* del = inst.deletion()) {
    cell.d = del->d();
  } else {
    cell.m = static_cast<int>(inst.worst_case()->objectives().size());
  }
  return cell;
}

int CmdRun(const FamilyFlags& flags, std::uint64_t seed, std::uint64_t max_evals, int trials,
           int workers, bool trajectory) {
  const Instance inst = flags.Build();
  if (trajectory) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.max_evaluations = max_evals;
    cfg.record_trajectory = true;
    const RunResult r = Run(inst, cfg);
    std::cout << "evaluation,ones,fitness\n";
    for (const auto& p : r.trajectory) {
      std::cout << p.evaluation << ',' << p.ones << ','
                << (p.fitness ? p.fitness->ToString() : std::string()) << '\n';
    }
    return 0;
  }
  TrialOptions options;
  options.max_evaluations = max_evals;
  options.workers = workers;
  SweepResult result;
  result.rows.push_back({CellOf(inst), max_evals, RunTrials(inst, trials, seed, options)});
  std::cout << SweepCsv(result);
  if (result.rows.front().stats.mean_is_lower_bound) {
    std::cerr << "note: " << result.rows.front().stats.censored
              << " censored runs; the mean is a lower bound\n";
  }
  return 0;
}

int CmdSweep(const std::string& spec_path, const std::string& out, const std::string& jsonl,
             int workers) {
  const SweepSpec spec = LoadSweepSpec(spec_path);
  const SweepResult result = Sweep(spec, workers);
  for (const auto& s : result.skipped) {
    std::cerr << "skipped cell " << s.cell.id << " (n=" << s.cell.n << "): " << s.reason << '\n';
  }
  const std::string csv = SweepCsv(result);
  if (out.empty() || out == "-") {
    std::cout << csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    Require(f.good(), "cannot write '" + out + "'");
    f << csv;
  }
  if (!jsonl.empty()) {
    std::ofstream f(jsonl, std::ios::binary);
    Require(f.good(), "cannot write '" + jsonl + "'");
    f << SweepJsonLines(result);
  }
  return 0;
}

int CmdOracleEfht(const std::string& kind_name, int n, int k, int d, bool full, bool exact,
                  const std::string& init, bool table) {
  ChainKind kind;
  if (kind_name == "deletion-onemax") {
    kind = ChainKind::kDeletionOneMax;
  } else if (kind_name == "accept-all") {
    kind = ChainKind::kAcceptAllWalk;
  } else {
    throw PreconditionError("--kind must be deletion-onemax or accept-all");
  }
  const Precision precision = exact ? Precision::kExact : Precision::kLongDouble;
  ChainSolution sol;
  if (full) {
    Require(kind == ChainKind::kDeletionOneMax, "--full is only available for deletion-onemax");
    Require(init == "uniform", "--full always starts from the uniform distribution");
    sol = FullChainEfht(Instance(BuildOneMax(n, k, d)), precision);
  } else {
    InitialDistribution start = InitialDistribution::Uniform();
    if (init != "uniform") {
      std::size_t used = 0;
      const int j = std::stoi(init, &used);
      Require(used == init.size(), "--init must be 'uniform' or a one-count");
      start = InitialDistribution::Point(j);
    }
    sol = LumpedChainEfht(kind, n, k, d, start, precision);
  }
  if (table) {
    std::cout << ChainSolutionCsv(sol);
    return 0;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12Lg", sol.mean_evaluations);
  std::cout << "kind,n,k,d,chain,mean_evaluations,exact_mean_evaluations,backward_error\n"
            << kind_name << ',' << n << ',' << k << ',' << d << ','
            << (full ? "full" : "lumped") << ',' << buf << ','
            << (sol.exact_mean_evaluations ? FormatRational(*sol.exact_mean_evaluations)
                                           : std::string());
  std::snprintf(buf, sizeof(buf), "%.3Le", sol.backward_error);
  std::cout << ',' << buf << '\n';
  return 0;
}

int CmdOracleBrute(const std::string& path, bool check_f) {
  const Instance inst = LoadInstance(path);
  if (!check_f) {
    const FitnessValue brute = BruteForceOptimum(inst);
    const bool known = inst.has_optimum();
    const bool match = !known || brute == inst.optimum_value();
    std::cout << "brute_force_optimum,stored_optimum,match\n"
              << brute.ToString() << ',' << (known ? inst.optimum_value().ToString() : "")
              << ',' << (known ? (match ? "yes" : "no") : "") << '\n';
    return match ? 0 : kExitFailed;
  }
  const auto* del = inst.deletion();
  Require(del != nullptr, "--check-F needs a deletion-robust instance");
  Require(inst.n() <= kBruteForceOptimumMaxN,
          "--check-F requires n <= " + std::to_string(kBruteForceOptimumMaxN));
  std::uint64_t mismatches = 0;
  const std::uint64_t total = std::uint64_t{1} << inst.n();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const BitString x = BitString::FromIndex(inst.n(), idx);
    if (EvalFDeletion(*del, x) != BruteForceF(*del, x)) {
      if (mismatches == 0) std::cerr << "first mismatch at " << x.ToString() << '\n';
      ++mismatches;
    }
  }
  std::cout << "checked,mismatches\n" << total << ',' << mismatches << '\n';
  return mismatches == 0 ? 0 : kExitFailed;
}

// Number, p/q, or one of 1/(en), 1/n^2, 1/(en^(2d+2)).
double ParseC(const std::string& text, int n, int d) {
  const double e = std::numbers::e;
  if (text == "1/(en)") return 1 / (e * n);
  if (text == "1/n^2") return 1.0 / (static_cast<double>(n) * n);
  if (text == "1/(en^(2d+2))") return 1 / (e * std::pow(static_cast<double>(n), 2 * d + 2));
  try {
    return static_cast<double>(ToLongDouble(ParseRational(text)));
  } catch (const PreconditionError&) {
  }
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  Require(used == text.size() && used > 0, "--c: cannot parse '" + text + "'");
  return v;
}

std::vector<BitString> ParseStates(const std::string& spec, const DistanceFunction& dist,
                                   std::uint64_t seed) {
  const int n = dist.n();
  std::vector<BitString> states;
  if (spec == "all") {
    Require(n <= 20, "--states all requires n <= 20");
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      BitString x = BitString::FromIndex(n, idx);
      if (dist.InDomain(x)) states.push_back(std::move(x));
    }
  } else if (spec.rfind("ones:", 0) == 0) {
    int lo = 0;
    int hi = 0;
    char tail = 0;
    Require(std::sscanf(spec.c_str() + 5, "%d-%d%c", &lo, &hi, &tail) == 2 && 0 <= lo &&
                lo <= hi && hi <= n,
            "--states ones:a-b needs 0 <= a <= b <= n");
    Rng rng(seed);
    for (int j = lo; j <= hi; ++j) {
      // A few tries for families whose domain depends on positions.
      for (int attempt = 0; attempt < 1000; ++attempt) {
        BitString x = RandomStringWithOnes(n, j, rng);
        if (dist.InDomain(x)) {
          states.push_back(std::move(x));
          break;
        }
      }
    }
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      BitString x = BitString::FromString(item);
      Require(x.size() == n, "--states: '" + item + "' does not have length n");
      states.push_back(std::move(x));
    }
  }
  Require(!states.empty(), "--states selects no state in the domain");
  return states;
}

struct DriftFlags {
  std::string family;
  std::string instance;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> d;
  std::optional<int> r;
  std::string states = "all";
  std::uint64_t samples = 100000;
  std::string bound = "multiplicative";
  std::string c;
  std::uint64_t seed = 1;
};

DeletionRobustInstance DriftInstance(const DriftFlags& f, Family family) {
  if (!f.instance.empty()) {
    const Instance inst = LoadInstance(f.instance);
    Require(inst.deletion() != nullptr, "drift needs a deletion-robust instance");
    return *inst.deletion();
  }
  Require(f.n && f.k && f.d, "drift: give --instance or --n, --k and --d");
  return family == Family::kBinVal ? BuildBinVal(*f.n, *f.k, *f.d)
                                   : BuildOneMax(*f.n, *f.k, *f.d);
}

int CmdDrift(const DriftFlags& f) {
  const DistanceFamily family = ParseDistanceFamily(f.family);
  std::optional<DistanceFunction> dist;
  switch (family) {
    case DistanceFamily::kThresholdPiecewise:
      Require(f.n && f.r, "lemma1_piecewise needs --n and --r");
      dist = DistanceFunction::ThresholdPiecewise(*f.n, *f.r);
      break;
    case DistanceFamily::kThresholdLinear:
      Require(f.n && f.d, "lemma1_linear needs --n and --d");
      dist = DistanceFunction::ThresholdLinear(*f.n, *f.d);
      break;
    case DistanceFamily::kOneMaxPhase2:
      dist = DistanceFunction::OneMaxPhase2(DriftInstance(f, Family::kOneMax));
      break;
    case DistanceFamily::kBinValPhase2a:
      dist = DistanceFunction::BinValPhase2a(DriftInstance(f, Family::kBinVal));
      break;
    case DistanceFamily::kBinValPhase2b:
      dist = DistanceFunction::BinValPhase2b(DriftInstance(f, Family::kBinVal));
      break;
    case DistanceFamily::kGeneralDeletion:
      dist = DistanceFunction::GeneralDeletion(DriftInstance(f, Family::kOneMax));
      break;
  }
  DriftBound bound;
  if (f.bound == "additive") {
    bound.kind = DriftBound::Kind::kAdditive;
  } else if (f.bound == "multiplicative") {
    bound.kind = DriftBound::Kind::kMultiplicative;
  } else {
    throw PreconditionError("--bound must be additive or multiplicative");
  }
  Require(!f.c.empty(), "drift needs --c");
  bound.c = ParseC(f.c, dist->n(), dist->d());
  const std::vector<BitString> states = ParseStates(f.states, *dist, f.seed);
  const BoundReport report = CheckBound(*dist, states, bound, f.samples, f.seed);
  std::cout << BoundReportCsv(report);
  std::cerr << report.family << ": " << (report.all_pass ? "all states pass" : "bound violated")
            << ", V_min " << report.v_min << ", max implied runtime bound "
            << report.max_implied_runtime_bound << '\n';
  return report.all_pass ? 0 : kExitFailed;
}

int CmdVerify(bool quick, const std::vector<int>& only, int workers) {
  VerifyOptions options;
  options.quick = quick;
  options.workers = workers;
  std::vector<int> ids = only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  bool all = true;
  for (int id : ids) {
    const CriterionResult r = RunCriterion(id, options);
    std::cout << FormatCriterion(r) << std::endl;
    all = all && r.passed;
  }
  return all ? 0 : kExitFailed;
}

int Main(int argc, char** argv) {
  CLI::App app{"Deletion-robust and worst-case robust (1+1)-EA experiments"};
  app.require_subcommand(1, 1);
  int workers = 1;
  std::string workers_error;
  try {
    workers = DefaultWorkers();
  } catch (const PreconditionError& e) {
    workers_error = e.what();
  }
  std::vector<CLI::Option*> worker_options;
  auto add_workers = [&](CLI::App* sub) {
    worker_options.push_back(sub->add_option("--workers", workers, "Parallel trials (default $ROBUSTEA_WORKERS or 1)")
        ->check(CLI::Range(1, 1024)));
  };

  FamilyFlags run_flags;
  std::uint64_t seed = 0;
  std::uint64_t max_evals = kDefaultMaxEvaluations;
  int trials = 1;
  bool trajectory = false;
  CLI::App* run = app.add_subcommand("run", "Run the (1+1)-EA on one instance");
  run_flags.Add(run);
  run->add_option("--seed", seed, "Master seed");
  run->add_option("--max-evals", max_evals, "Evaluation budget per run")->check(CLI::PositiveNumber);
  run->add_option("--trials", trials, "Number of runs")->check(CLI::PositiveNumber);
  run->add_flag("--trajectory", trajectory, "Print the checkpoints of a single run");
  add_workers(run);

  std::string spec_path;
  std::string out;
  std::string jsonl;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter grid");
  sweep->add_option("--spec", spec_path, "Sweep spec (JSON)")->required();
  sweep->add_option("--out", out, "CSV output path ('-' for stdout)");
  sweep->add_option("--jsonl", jsonl, "Optional JSON-lines output path");
  add_workers(sweep);

  std::string kind;
  int n = 0;
  int k = 0;
  int d = 0;
  bool full = false;
  bool exact = false;
  std::string init = "uniform";
  bool table = false;
  CLI::App* efht = app.add_subcommand("oracle-efht", "Exact expected hitting time");
  efht->add_option("--kind", kind, "deletion-onemax or accept-all")->required();
  efht->add_option("--n", n, "Number of items")->required();
  efht->add_option("--k", k, "Cardinality bound (deletion-onemax)");
  efht->add_option("--d", d, "Number of deletions / threshold")->required();
  efht->add_flag("--full", full, "Solve the chain on all 2^n strings");
  efht->add_flag("--exact", exact, "Rational arithmetic");
  efht->add_option("--init", init, "'uniform' or a starting one-count");
  efht->add_flag("--table", table, "Print the per-state table");

  std::string brute_instance;
  bool want_optimum = false;
  bool check_f = false;
  CLI::App* brute = app.add_subcommand("oracle-brute", "Exhaustive optimum or objective check");
  brute->add_option("--instance", brute_instance, "Instance file")->required();
  auto* opt_flag = brute->add_flag("--optimum", want_optimum, "Compare the optimum (default)");
  brute->add_flag("--check-F", check_f, "Compare the objective on every string")
      ->excludes(opt_flag);

  DriftFlags drift_flags;
  CLI::App* drift = app.add_subcommand("drift", "Check a drift condition state by state");
  drift->add_option("--family", drift_flags.family, "Distance function family")->required();
  drift->add_option("--instance", drift_flags.instance, "Instance file");
  drift->add_option("--n", drift_flags.n, "Number of items");
  drift->add_option("--k", drift_flags.k, "Cardinality bound");
  drift->add_option("--d", drift_flags.d, "Number of deletions / threshold");
  drift->add_option("--r", drift_flags.r, "Threshold offset, d = n/2 + r");
  drift->add_option("--states", drift_flags.states, "all | ones:a-b | comma-separated strings");
  drift->add_option("--samples", drift_flags.samples, "Samples per state")
      ->check(CLI::PositiveNumber);
  drift->add_option("--bound", drift_flags.bound, "additive or multiplicative");
  drift->add_option("--c", drift_flags.c, "Drift constant: number, p/q, 1/(en), 1/n^2, "
                                          "1/(en^(2d+2))");
  drift->add_option("--seed", drift_flags.seed, "Seed");

  bool quick = false;
  std::vector<int> only;
  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_flag("--quick", quick, "Reduced sizes");
  verify->add_option("--only", only, "Criterion ids")->check(CLI::Range(1, kCriterionCount));
  add_workers(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    const bool explicit_workers = std::any_of(worker_options.begin(), worker_options.end(),
                                              [](CLI::Option* o) { return o->count() > 0; });
    Require(workers_error.empty() || explicit_workers, workers_error);
    if (run->parsed()) return CmdRun(run_flags, seed, max_evals, trials, workers, trajectory);
    if (sweep->parsed()) return CmdSweep(spec_path, out, jsonl, workers);
    if (efht->parsed()) return CmdOracleEfht(kind, n, k, d, full, exact, init, table);
    if (brute->parsed()) return CmdOracleBrute(brute_instance, check_f);
    if (drift->parsed()) return CmdDrift(drift_flags);
    if (verify->parsed()) return CmdVerify(quick, only, workers);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace robustea

int main(int argc, char** argv) { return robustea::Main(argc, argv); }
