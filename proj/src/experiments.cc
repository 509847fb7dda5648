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

#include "robustea/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "robustea/errors.h"
#include "robustea/instance_io.h"
#include "robustea/oracle.h"

namespace robustea {
namespace {

using Clock = std::chrono::steady_clock;

// Runs trial(i) for i in [0, trials) on `workers` threads and stores each
// result at its index. With a deadline, indices are claimed in order and the
// completed prefix is returned.
template <typename Trial>
std::vector<RunResult> RunIndexed(int trials, int workers, double time_limit_seconds,
                                  const Trial& trial) {
  Require(trials >= 1, "trials must be at least 1");
  Require(workers >= 1, "workers must be at least 1");
  std::vector<RunResult> results(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(time_limit_seconds));
  auto work = [&] {
    for (;;) {
      if (time_limit_seconds > 0 && Clock::now() >= deadline) return;
      const int i = next.fetch_add(1);
      if (i >= trials) return;
      results[static_cast<std::size_t>(i)] = trial(static_cast<std::uint64_t>(i));
    }
  };
  const int threads = std::min(workers, trials);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  const int done = std::min(next.load(), trials);
  results.resize(static_cast<std::size_t>(done));
  return results;
}

TrialStats FromResults(std::uint64_t cell_id, const std::vector<RunResult>& results,
                       int requested) {
  std::vector<std::uint64_t> evaluations;
  std::vector<bool> censored;
  evaluations.reserve(results.size());
  for (const auto& r : results) {
    evaluations.push_back(r.evaluations);
    censored.push_back(!r.hit_optimum);
  }
  TrialStats stats;
  if (!results.empty()) stats = Summarize(cell_id, evaluations, censored);
  stats.cell_id = cell_id;
  stats.time_limited = static_cast<int>(results.size()) < requested;
  return stats;
}

double Quantile(const std::vector<double>& sorted, double p) {
  const double h = (static_cast<double>(sorted.size()) - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<int> IntGrid(const nlohmann::json& doc, const char* key) {
  std::vector<int> out;
  if (!doc.contains(key)) return out;
  const auto& v = doc[key];
  if (v.is_number_integer()) return {v.get<int>()};
  Require(v.is_array() && !v.empty(),
          std::string("sweep spec: '") + key + "' must be an integer or a non-empty array");
  for (const auto& e : v) {
    Require(e.is_number_integer(),
            std::string("sweep spec: '") + key + "' entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::optional<int>> OrUnset(const std::vector<int>& grid) {
  if (grid.empty()) return {std::nullopt};
  return {grid.begin(), grid.end()};
}

std::string OptInt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

nlohmann::json CellJson(const SweepCell& c) {
  nlohmann::json j;
  j["family"] = std::string(FamilyName(c.family));
  j["n"] = c.n;
  auto put = [&](const char* key, const std::optional<int>& v) {
    j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  put("k", c.k);
  put("d", c.d);
  put("r", c.r);
  put("m", c.m);
  return j;
}

// ln C(n, k).
double LogBinomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

RegimeOutcome SolveRegime(const RegimeSpec& spec) {
  Require(spec.n >= 1, "regime: n must be at least 1");
  Require(spec.r >= 0, "regime: r must be non-negative");
  RegimeOutcome out;
  out.d = spec.n / 2 + spec.r;
  const bool accept_all = spec.process == RegimeSpec::Process::kAcceptAll;
  if (accept_all && out.d >= spec.n) {
    // No string has more than n ones.
    out.reachable = false;
    out.evaluations = std::numeric_limits<double>::infinity();
    return out;
  }
  if (!accept_all) {
    Require(out.d < spec.k && spec.k <= spec.n, "regime: deletion-robust OneMax needs d < k <= n");
  }
  if (spec.method == RegimeSpec::Method::kExactChain) {
    const ChainSolution sol = LumpedChainEfht(
        accept_all ? ChainKind::kAcceptAllWalk : ChainKind::kDeletionOneMax, spec.n, spec.k,
        out.d);
    out.evaluations = static_cast<double>(sol.mean_evaluations);
    return out;
  }
  TrialOptions options;
  options.max_evaluations = spec.max_evaluations;
  options.workers = spec.workers;
  const TrialStats stats =
      accept_all ? RunAcceptAllTrials(spec.n, out.d, spec.trials, spec.seed, options)
                 : RunTrials(Instance(BuildOneMax(spec.n, spec.k, out.d)), spec.trials,
                             spec.seed, options);
  out.evaluations = stats.mean;
  out.lower_bound = stats.mean_is_lower_bound;
  return out;
}

}  // namespace

TrialStats Summarize(std::uint64_t cell_id, const std::vector<std::uint64_t>& evaluations,
                     const std::vector<bool>& censored) {
  Require(!evaluations.empty(), "Summarize: no trials");
  Require(evaluations.size() == censored.size(), "Summarize: size mismatch");
  TrialStats s;
  s.cell_id = cell_id;
  s.trials = static_cast<int>(evaluations.size());
  s.censored = static_cast<int>(std::count(censored.begin(), censored.end(), true));
  s.mean_is_lower_bound = s.censored > 0;
  std::vector<double> v(evaluations.begin(), evaluations.end());
  // Summation in index order keeps the result independent of scheduling.
  long double sum = 0;
  for (double e : v) sum += e;
  const long double mean = sum / static_cast<long double>(v.size());
  long double ss = 0;
  for (double e : v) ss += (e - mean) * (e - mean);
  s.mean = static_cast<double>(mean);
  if (v.size() > 1) {
    s.stddev = static_cast<double>(std::sqrt(ss / static_cast<long double>(v.size() - 1)));
    s.standard_error = s.stddev / std::sqrt(static_cast<double>(v.size()));
  }
  std::sort(v.begin(), v.end());
  s.median = Quantile(v, 0.5);
  s.q05 = Quantile(v, 0.05);
  s.q95 = Quantile(v, 0.95);
  return s;
}

TrialStats RunTrials(const Instance& inst, int trials, std::uint64_t master_seed,
                     const TrialOptions& options) {
  auto results = RunIndexed(trials, options.workers, options.time_limit_seconds,
                            [&](std::uint64_t i) {
                              RunConfig cfg;
                              cfg.seed = DeriveSeed(master_seed, options.cell_id, i);
                              cfg.max_evaluations = options.max_evaluations;
                              return Run(inst, cfg);
                            });
  return FromResults(options.cell_id, results, trials);
}

TrialStats RunAcceptAllTrials(int n, int d, int trials, std::uint64_t master_seed,
                              const TrialOptions& options) {
  auto results = RunIndexed(trials, options.workers, options.time_limit_seconds,
                            [&](std::uint64_t i) {
                              RunConfig cfg;
                              cfg.seed = DeriveSeed(master_seed, options.cell_id, i);
                              cfg.max_evaluations = options.max_evaluations;
                              return RunAcceptAll(n, d, cfg);
                            });
  return FromResults(options.cell_id, results, trials);
}

SweepSpec ParseSweepSpec(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("sweep spec: malformed JSON: ") + e.what());
  }
  Require(doc.is_object(), "sweep spec: top level must be an object");
  Require(doc.contains("family") && doc["family"].is_string(),
          "sweep spec: missing string field 'family'");
  SweepSpec spec;
  spec.family = ParseFamily(doc["family"].get<std::string>());
  spec.n = IntGrid(doc, "n");
  spec.k = IntGrid(doc, "k");
  spec.d = IntGrid(doc, "d");
  spec.r = IntGrid(doc, "r");
  spec.m = IntGrid(doc, "m");
  Require(!spec.n.empty(), "sweep spec: 'n' grid must be non-empty");
  if (doc.contains("d_rule")) {
    const std::string rule = doc["d_rule"].get<std::string>();
    if (rule == "sqrt_n") {
      spec.d_rule = SweepSpec::DRule::kSqrtN;
    } else if (rule == "half_n_plus_r") {
      spec.d_rule = SweepSpec::DRule::kHalfNPlusR;
    } else {
      throw PreconditionError("sweep spec: unknown d_rule '" + rule + "'");
    }
  }
  if (doc.contains("k_rule")) {
    const std::string rule = doc["k_rule"].get<std::string>();
    if (rule == "two_d") {
      spec.k_rule = SweepSpec::KRule::kTwoD;
    } else if (rule == "d_plus_1") {
      spec.k_rule = SweepSpec::KRule::kDPlusOne;
    } else if (rule == "half_n") {
      spec.k_rule = SweepSpec::KRule::kHalfN;
    } else {
      throw PreconditionError("sweep spec: unknown k_rule '" + rule + "'");
    }
  }
  Require(spec.d_rule == SweepSpec::DRule::kNone || spec.d.empty(),
          "sweep spec: give either a 'd' grid or a d_rule");
  Require(spec.k_rule == SweepSpec::KRule::kNone || spec.k.empty(),
          "sweep spec: give either a 'k' grid or a k_rule");
  Require(spec.d_rule != SweepSpec::DRule::kHalfNPlusR || !spec.r.empty(),
          "sweep spec: d_rule half_n_plus_r needs an 'r' grid");
  if (!spec.r.empty() && spec.d_rule == SweepSpec::DRule::kNone && spec.d.empty()) {
    spec.d_rule = SweepSpec::DRule::kHalfNPlusR;
  }
  try {
    if (doc.contains("trials")) spec.trials = doc["trials"].get<int>();
    if (doc.contains("master_seed")) spec.master_seed = doc["master_seed"].get<std::uint64_t>();
    if (doc.contains("max_evaluations")) {
      spec.max_evaluations = doc["max_evaluations"].get<std::uint64_t>();
    }
    if (doc.contains("cell_time_limit_seconds")) {
      spec.cell_time_limit_seconds = doc["cell_time_limit_seconds"].get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("sweep spec: ") + e.what());
  }
  Require(spec.trials >= 1, "sweep spec: trials must be at least 1");
  Require(spec.max_evaluations >= 1, "sweep spec: max_evaluations must be at least 1");
  Require(spec.cell_time_limit_seconds >= 0,
          "sweep spec: cell_time_limit_seconds must be non-negative");
  return spec;
}

SweepSpec LoadSweepSpec(const std::string& path) {
  std::ifstream in(path);
  Require(in.good(), "cannot open sweep spec '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseSweepSpec(buf.str());
}

std::vector<SweepCell> ExpandSweep(const SweepSpec& spec) {
  std::vector<SweepCell> cells;
  std::uint64_t id = 0;
  for (int n : spec.n) {
    for (const auto& k : OrUnset(spec.k)) {
      for (const auto& d : OrUnset(spec.d)) {
        for (const auto& r : OrUnset(spec.r)) {
          for (const auto& m : OrUnset(spec.m)) {
            SweepCell c{id++, spec.family, n, k, d, r, m};
            switch (spec.d_rule) {
              case SweepSpec::DRule::kSqrtN:
                c.d = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
                break;
              case SweepSpec::DRule::kHalfNPlusR:
                c.d = n / 2 + *r;
                break;
              case SweepSpec::DRule::kNone:
                break;
            }
            switch (spec.k_rule) {
              case SweepSpec::KRule::kTwoD:
                if (c.d) c.k = 2 * *c.d;
                break;
              case SweepSpec::KRule::kDPlusOne:
                if (c.d) c.k = *c.d + 1;
                break;
              case SweepSpec::KRule::kHalfN:
                c.k = n / 2;
                break;
              case SweepSpec::KRule::kNone:
                break;
            }
            cells.push_back(c);
          }
        }
      }
    }
  }
  return cells;
}

SweepResult Sweep(const SweepSpec& spec, int workers) {
  SweepResult result;
  for (const SweepCell& cell : ExpandSweep(spec)) {
    std::optional<Instance> inst;
    try {
      inst = BuildFromParams(InstanceParams{cell.family, cell.n, cell.k, cell.d, cell.m});
    } catch (const std::exception& e) {
      result.skipped.push_back({cell, e.what()});
      continue;
    }
    TrialOptions options;
    options.max_evaluations = spec.max_evaluations;
    options.workers = workers;
    options.cell_id = cell.id;
    options.time_limit_seconds = spec.cell_time_limit_seconds;
    SweepRow row{cell, spec.max_evaluations,
                 RunTrials(*inst, spec.trials, spec.master_seed, options)};
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string SweepCsv(const SweepResult& result) {
  std::string out =
      "family,n,k,d,r,m,trials,censored,mean,median,stddev,stderr,q05,q95,max_evals\n";
  char buf[512];
  for (const auto& row : result.rows) {
    const SweepCell& c = row.cell;
    const TrialStats& s = row.stats;
    std::snprintf(buf, sizeof(buf), "%s,%d,%s,%s,%s,%s,%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%llu\n",
                  std::string(FamilyName(c.family)).c_str(), c.n, OptInt(c.k).c_str(),
                  OptInt(c.d).c_str(), OptInt(c.r).c_str(), OptInt(c.m).c_str(), s.trials,
                  s.censored, s.mean, s.median, s.stddev, s.standard_error, s.q05, s.q95,
                  static_cast<unsigned long long>(row.max_evaluations));
    out += buf;
  }
  return out;
}

std::string SweepJsonLines(const SweepResult& result) {
  std::string out;
  for (const auto& row : result.rows) {
    nlohmann::json j = CellJson(row.cell);
    const TrialStats& s = row.stats;
    j["trials"] = s.trials;
    j["censored"] = s.censored;
    j["mean"] = s.mean;
    j["median"] = s.median;
    j["stddev"] = s.stddev;
    j["stderr"] = s.standard_error;
    j["q05"] = s.q05;
    j["q95"] = s.q95;
    j["max_evals"] = row.max_evaluations;
    j["mean_is_lower_bound"] = s.mean_is_lower_bound;
    j["time_limited"] = s.time_limited;
    out += j.dump() + "\n";
  }
  for (const auto& skip : result.skipped) {
    nlohmann::json j = CellJson(skip.cell);
    j["skipped"] = true;
    j["reason"] = skip.reason;
    out += j.dump() + "\n";
  }
  return out;
}

ScalingFit FitScaling(const std::vector<ScalingPoint>& points, ScalingModel model,
                      const ScalingOptions& options) {
  Require(points.size() >= 3, "fit_scaling: at least 3 cells are required");
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : points) {
    Require(p.n >= 1, "fit_scaling: n must be positive");
    Require(p.mean > 0 && std::isfinite(p.mean), "fit_scaling: means must be positive");
    Require(!p.censored || options.allow_lower_bounds,
            "fit_scaling: censored cell at n=" + std::to_string(p.n) +
                " (allow lower bounds explicitly to include it)");
    ys.push_back(std::log(p.mean));
    const double n = p.n;
    switch (model) {
      case ScalingModel::kNLogN:
        Require(p.n >= 2, "fit_scaling: n ln n needs n >= 2");
        xs.push_back(std::log(n * std::log(n)));
        break;
      case ScalingModel::kPower:
        xs.push_back(std::log(n));
        break;
      case ScalingModel::kExponential:
        xs.push_back(options.g ? options.g(p.n) : n);
        break;
      case ScalingModel::kBinomial:
        Require(p.k >= 0 && p.k <= p.n, "fit_scaling: binomial model needs 0 <= k <= n");
        xs.push_back(LogBinomial(p.n, p.k));
        break;
    }
  }
  const bool all_same_n = std::all_of(points.begin(), points.end(),
                                      [&](const ScalingPoint& p) { return p.n == points[0].n; });
  const bool all_same_mean = std::all_of(
      points.begin(), points.end(), [&](const ScalingPoint& p) { return p.mean == points[0].mean; });
  Require(!all_same_n, "fit_scaling: degenerate input, all cells share the same n");
  Require(!all_same_mean, "fit_scaling: degenerate input, all means are equal");

  const double count = static_cast<double>(ys.size());
  double y_bar = 0;
  for (double y : ys) y_bar += y;
  y_bar /= count;
  ScalingFit fit;
  fit.model = model;
  fit.cells = static_cast<int>(ys.size());
  std::vector<double> predicted(ys.size());
  if (model == ScalingModel::kPower || model == ScalingModel::kExponential) {
    double x_bar = 0;
    for (double x : xs) x_bar += x;
    x_bar /= count;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - x_bar) * (xs[i] - x_bar);
      sxy += (xs[i] - x_bar) * (ys[i] - y_bar);
    }
    Require(sxx > 0, "fit_scaling: degenerate input, the regressor is constant");
    fit.exponent = sxy / sxx;
    const double log_a = y_bar - fit.exponent * x_bar;
    fit.a = std::exp(log_a);
    for (std::size_t i = 0; i < xs.size(); ++i) predicted[i] = log_a + fit.exponent * xs[i];
  } else {
    // Unit slope: only the constant is fitted.
    double log_a = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) log_a += ys[i] - xs[i];
    log_a /= count;
    fit.a = std::exp(log_a);
    for (std::size_t i = 0; i < xs.size(); ++i) predicted[i] = log_a + xs[i];
  }
  double ss_res = 0;
  double ss_tot = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    ss_res += (ys[i] - predicted[i]) * (ys[i] - predicted[i]);
    ss_tot += (ys[i] - y_bar) * (ys[i] - y_bar);
  }
  fit.r_squared = 1 - ss_res / ss_tot;
  return fit;
}

int SqrtOffset(int n, double coefficient) {
  Require(n >= 1, "n must be at least 1");
  return static_cast<int>(std::floor(coefficient * std::sqrt(static_cast<double>(n))));
}

int SqrtNLogNOffset(int n, double coefficient) {
  Require(n >= 1, "n must be at least 1");
  const double x = static_cast<double>(n);
  return static_cast<int>(std::floor(coefficient * std::sqrt(x * std::log(x))));
}

RegimeComparison CompareRegimes(const RegimeSpec& small_r, const RegimeSpec& large_r) {
  RegimeComparison cmp;
  cmp.small = SolveRegime(small_r);
  cmp.large = SolveRegime(large_r);
  if (!cmp.small.reachable && !cmp.large.reachable) {
    cmp.ratio = std::numeric_limits<double>::quiet_NaN();
  } else {
    cmp.ratio = cmp.large.evaluations / cmp.small.evaluations;
  }
  return cmp;
}

}  // namespace robustea
