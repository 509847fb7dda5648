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

#include "robustea/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "robustea/errors.h"

namespace robustea {
namespace {

// ---------------------------------------------------------------------------
// Brute force

// Integer weights over a common denominator, computed here independently of
// the problems module.
struct OracleScaling {
  BigInt denominator{1};
  std::vector<std::vector<BigInt>> rows;
  bool fits_int64 = true;
};

OracleScaling Scale(const std::vector<std::vector<Rational>>& rows) {
  OracleScaling s;
  for (const auto& row : rows) {
    for (const auto& w : row) {
      mpz_lcm(s.denominator.get_mpz_t(), s.denominator.get_mpz_t(),
              w.get_den().get_mpz_t());
    }
  }
  const BigInt limit = BigInt(1) << 62;
  for (const auto& row : rows) {
    std::vector<BigInt> scaled;
    BigInt total = 0;
    for (const auto& w : row) {
      scaled.push_back(w.get_num() * (s.denominator / w.get_den()));
      total += scaled.back();
    }
    if (total >= limit) s.fits_int64 = false;
    s.rows.push_back(std::move(scaled));
  }
  return s;
}

template <typename Score>
Score FromBig(const BigInt& v) {
  if constexpr (std::is_same_v<Score, std::int64_t>) {
    return v.get_si();
  } else {
    return v;
  }
}

template <typename Score>
void MaxSubsetSum(const std::vector<Score>& w, std::size_t start, int depth_left,
                  const Score& sum, Score& best) {
  if (sum > best) best = sum;
  if (depth_left == 0) return;
  for (std::size_t i = start; i < w.size(); ++i) {
    MaxSubsetSum(w, i + 1, depth_left - 1, Score(sum + w[i]), best);
  }
}

std::uint64_t DeletionSubsetCount(int ones, int d) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;  // C(ones, j)
  for (int j = 0; j <= std::min(d, ones); ++j) {
    total += c;
    if (total > kBruteForceSubsetCap) return total;
    c = c * static_cast<std::uint64_t>(ones - j) / static_cast<std::uint64_t>(j + 1);
  }
  return total;
}

template <typename Score>
BigInt BruteForceScaledF(const std::vector<BigInt>& row, const BitString& x, int d) {
  std::vector<Score> selected;
  x.ForEachOne([&](int i) {
    selected.push_back(FromBig<Score>(row[static_cast<std::size_t>(i)]));
    return true;
  });
  Score total(0);
  for (const auto& w : selected) total += w;
  Score deleted(0);
  MaxSubsetSum<Score>(selected, 0, d, Score(0), deleted);
  Score value = total - deleted;
  if constexpr (std::is_same_v<Score, std::int64_t>) {
    return BigInt(static_cast<long>(value));
  } else {
    return value;
  }
}

BigInt BruteForceScaledFChecked(const OracleScaling& s, const BitString& x, int d) {
  Require(x.size() == static_cast<int>(s.rows.front().size()),
          "BruteForceF: solution length differs from n");
  if (x.ones() > kBruteForceMaxOnes ||
      DeletionSubsetCount(x.ones(), d) > kBruteForceSubsetCap) {
    throw EnumerationCapError("BruteForceF: deletion-subset enumeration exceeds cap (" +
                              std::to_string(kBruteForceSubsetCap) + ")");
  }
  if (s.fits_int64) return BruteForceScaledF<std::int64_t>(s.rows.front(), x, d);
  return BruteForceScaledF<BigInt>(s.rows.front(), x, d);
}

Rational Unscale(const BigInt& v, const BigInt& den) {
  Rational r(v, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Absorbing chains

template <typename Scalar>
struct AbsorbingChain {
  int size = 0;
  std::vector<Scalar> q;       // size x size, row-major, self-loops included
  std::vector<Scalar> absorb;  // one-step absorption probability
};

// Solves (I - Q) t = 1 by eliminating states in index order. The pivot
// 1 - Q_pp is formed as the sum of the probabilities of leaving p (to later
// states or to absorption), so every operation adds non-negative terms and
// the result keeps componentwise relative accuracy however large t gets.
template <typename Scalar>
std::vector<Scalar> EliminateStates(AbsorbingChain<Scalar> c) {
  const int n = c.size;
  const auto idx = [n](int i, int j) {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(j);
  };
  std::vector<Scalar> b(static_cast<std::size_t>(n), Scalar(1));
  std::vector<Scalar> leave(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    Scalar s = c.absorb[static_cast<std::size_t>(p)];
    for (int j = p + 1; j < n; ++j) s += c.q[idx(p, j)];
    if (s == 0) {
      throw SingularChainError("absorption is unreachable from transient state #" +
                               std::to_string(p));
    }
    leave[static_cast<std::size_t>(p)] = s;
    const Scalar* row_p = &c.q[idx(p, 0)];
    for (int i = p + 1; i < n; ++i) {
      const Scalar& qip = c.q[idx(i, p)];
      if (qip == 0) continue;
      const Scalar f = qip / s;
      b[static_cast<std::size_t>(i)] += f * b[static_cast<std::size_t>(p)];
      c.absorb[static_cast<std::size_t>(i)] += f * c.absorb[static_cast<std::size_t>(p)];
      Scalar* row_i = &c.q[idx(i, 0)];
      for (int j = p + 1; j < n; ++j) {
        if (row_p[j] != 0) row_i[j] += f * row_p[j];
      }
    }
  }
  std::vector<Scalar> t(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    Scalar acc = b[static_cast<std::size_t>(p)];
    for (int j = p + 1; j < n; ++j) acc += c.q[idx(p, j)] * t[static_cast<std::size_t>(j)];
    t[static_cast<std::size_t>(p)] = acc / leave[static_cast<std::size_t>(p)];
  }
  return t;
}

long double BackwardError(const AbsorbingChain<long double>& c,
                          const std::vector<long double>& t) {
  const int n = c.size;
  long double worst = 0;
  for (int i = 0; i < n; ++i) {
    long double flow = 0;
    const long double* row = &c.q[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
    for (int j = 0; j < n; ++j) flow += row[j] * t[static_cast<std::size_t>(j)];
    const long double r = t[static_cast<std::size_t>(i)] - flow - 1.0L;
    const long double scale = t[static_cast<std::size_t>(i)] + flow + 1.0L;
    worst = std::max(worst, std::fabs(r) / scale);
  }
  return worst;
}

bool ResidualIsZero(const AbsorbingChain<Rational>& c, const std::vector<Rational>& t) {
  const int n = c.size;
  for (int i = 0; i < n; ++i) {
    Rational r = t[static_cast<std::size_t>(i)] - 1;
    for (int j = 0; j < n; ++j) {
      const Rational& q = c.q[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j)];
      if (q != 0) r -= q * t[static_cast<std::size_t>(j)];
    }
    if (r != 0) return false;
  }
  return true;
}

template <typename Scalar>
std::vector<Scalar> BinomialPmf(int m, const Scalar& p) {
  std::vector<Scalar> pmf(static_cast<std::size_t>(m) + 1, Scalar(0));
  const Scalar q = Scalar(1) - p;
  if (q == 0) {
    pmf[static_cast<std::size_t>(m)] = Scalar(1);
    return pmf;
  }
  Scalar v(1);
  for (int i = 0; i < m; ++i) v *= q;
  pmf[0] = v;
  const Scalar odds = p / q;
  for (int i = 0; i < m; ++i) {
    v = v * Scalar(m - i) / Scalar(i + 1) * odds;
    pmf[static_cast<std::size_t>(i) + 1] = v;
  }
  return pmf;
}

template <typename Scalar>
std::vector<Scalar> StepDistribution(int n, int j) {
  const Scalar p = Scalar(1) / Scalar(n);
  const auto lose = BinomialPmf<Scalar>(j, p);
  const auto gain = BinomialPmf<Scalar>(n - j, p);
  std::vector<Scalar> diff(static_cast<std::size_t>(n) + 1, Scalar(0));
  for (int x = 0; x <= j; ++x) {
    if (lose[static_cast<std::size_t>(x)] == 0) continue;
    for (int y = 0; y <= n - j; ++y) {
      diff[static_cast<std::size_t>(y - x + j)] +=
          lose[static_cast<std::size_t>(x)] * gain[static_cast<std::size_t>(y)];
    }
  }
  return diff;
}

struct LumpedRules {
  ChainKind kind;
  int n;
  int k;
  int d;

  bool Absorbing(int j) const {
    return kind == ChainKind::kDeletionOneMax ? j == k : j > d;
  }
  int Fitness(int j) const {
    if (j > k) return k - j;
    if (j <= d) return 0;
    return j - d;
  }
  bool Accept(int from, int to) const {
    return kind == ChainKind::kAcceptAllWalk || Fitness(to) >= Fitness(from);
  }
};

void CheckLumpedParams(ChainKind kind, int n, int k, int d) {
  Require(n >= 1 && n <= kLumpedChainMaxN,
          "lumped chain requires 1 <= n <= " + std::to_string(kLumpedChainMaxN));
  if (kind == ChainKind::kDeletionOneMax) {
    Require(d >= 0 && d < k && k <= n, "deletion-onemax chain requires 0 <= d < k <= n");
  } else {
    Require(d >= 0 && d < n, "accept-all chain requires 0 <= d < n");
  }
}

template <typename Scalar>
std::vector<Scalar> LumpedMatrix(const LumpedRules& rules) {
  const int n = rules.n;
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  std::vector<Scalar> p(size * size, Scalar(0));
  for (int j = 0; j <= n; ++j) {
    Scalar* row = &p[static_cast<std::size_t>(j) * size];
    if (rules.Absorbing(j)) {
      row[j] = Scalar(1);
      continue;
    }
    const auto step = StepDistribution<Scalar>(n, j);
    for (int to = 0; to <= n; ++to) {
      const Scalar& prob = step[static_cast<std::size_t>(to)];
      if (prob == 0) continue;
      row[rules.Accept(j, to) ? to : j] += prob;
    }
  }
  return p;
}

// Restricts a full transition matrix to its transient states.
template <typename Scalar>
AbsorbingChain<Scalar> ToAbsorbingChain(const std::vector<Scalar>& p,
                                        const std::vector<bool>& absorbing,
                                        std::vector<int>& transient) {
  const int total = static_cast<int>(absorbing.size());
  std::vector<int> position(static_cast<std::size_t>(total), -1);
  transient.clear();
  for (int s = 0; s < total; ++s) {
    if (!absorbing[static_cast<std::size_t>(s)]) {
      position[static_cast<std::size_t>(s)] = static_cast<int>(transient.size());
      transient.push_back(s);
    }
  }
  AbsorbingChain<Scalar> c;
  c.size = static_cast<int>(transient.size());
  const std::size_t m = static_cast<std::size_t>(c.size);
  c.q.assign(m * m, Scalar(0));
  c.absorb.assign(m, Scalar(0));
  for (std::size_t a = 0; a < m; ++a) {
    const int s = transient[a];
    for (int to = 0; to < total; ++to) {
      const Scalar& prob = p[static_cast<std::size_t>(s) * static_cast<std::size_t>(total) +
                             static_cast<std::size_t>(to)];
      if (prob == 0) continue;
      if (absorbing[static_cast<std::size_t>(to)]) {
        c.absorb[a] += prob;
      } else {
        c.q[a * m + static_cast<std::size_t>(position[static_cast<std::size_t>(to)])] += prob;
      }
    }
  }
  return c;
}

template <typename Scalar>
std::vector<Scalar> InitialWeights(int n, const InitialDistribution& init) {
  std::vector<Scalar> pi(static_cast<std::size_t>(n) + 1, Scalar(0));
  if (init.point) {
    Require(*init.point >= 0 && *init.point <= n, "initial one-count out of range");
    pi[static_cast<std::size_t>(*init.point)] = Scalar(1);
    return pi;
  }
  return BinomialPmf<Scalar>(n, Scalar(1) / Scalar(2));
}

template <>
std::vector<long double> InitialWeights<long double>(int n, const InitialDistribution& init) {
  std::vector<long double> pi(static_cast<std::size_t>(n) + 1, 0.0L);
  if (init.point) {
    Require(*init.point >= 0 && *init.point <= n, "initial one-count out of range");
    pi[static_cast<std::size_t>(*init.point)] = 1.0L;
    return pi;
  }
  // (1/2)^n without underflow for n <= 2000.
  long double v = std::ldexp(1.0L, -n);
  pi[0] = v;
  for (int j = 0; j < n; ++j) {
    v = v * static_cast<long double>(n - j) / static_cast<long double>(j + 1);
    pi[static_cast<std::size_t>(j) + 1] = v;
  }
  return pi;
}

std::string DescribeLumped(ChainKind kind, int n, int k, int d) {
  std::ostringstream s;
  s << "one-count j = 0.." << n << " ("
    << (kind == ChainKind::kDeletionOneMax ? "deletion-onemax" : "accept-all")
    << ", n=" << n;
  if (kind == ChainKind::kDeletionOneMax) s << ", k=" << k;
  s << ", d=" << d << ")";
  return s.str();
}

// Full-space fitness values and target set, in the scaled integer domain.
template <typename Score>
void FullStateValues(const Instance& inst, std::vector<Score>& fitness,
                     std::vector<bool>& optimal) {
  const int n = inst.n();
  const std::uint64_t states = std::uint64_t{1} << n;
  const auto& eval = inst.scaled();
  const FitnessValue opt = inst.optimum_value();
  const auto target = eval.Scale(opt.value);
  fitness.resize(states);
  optimal.assign(states, false);
  for (std::uint64_t s = 0; s < states; ++s) {
    const BitString x = BitString::FromIndex(n, s);
    fitness[s] = eval.Fitness<Score>(x);
    if (target && x.ones() <= inst.k()) {
      if constexpr (std::is_same_v<Score, std::int64_t>) {
        optimal[s] = fitness[s] == target->get_si();
      } else {
        optimal[s] = fitness[s] == *target;
      }
    }
  }
}

template <typename Scalar>
std::vector<Scalar> MutationKernel(int n) {
  const Scalar p = Scalar(1) / Scalar(n);
  const Scalar q = Scalar(1) - p;
  std::vector<Scalar> kernel(static_cast<std::size_t>(n) + 1);
  for (int h = 0; h <= n; ++h) {
    Scalar v(1);
    for (int i = 0; i < h; ++i) v *= p;
    for (int i = h; i < n; ++i) v *= q;
    kernel[static_cast<std::size_t>(h)] = v;
  }
  return kernel;
}

template <typename Scalar, typename Score>
AbsorbingChain<Scalar> BuildFullChain(const Instance& inst, std::vector<int>& transient,
                                      std::vector<bool>& optimal) {
  const int n = inst.n();
  const std::uint64_t states = std::uint64_t{1} << n;
  std::vector<Score> fitness;
  FullStateValues<Score>(inst, fitness, optimal);
  if (std::none_of(optimal.begin(), optimal.end(), [](bool b) { return b; })) {
    throw SingularChainError("no solution attains the stored optimum");
  }
  const auto kernel = MutationKernel<Scalar>(n);
  std::vector<int> position(states, -1);
  transient.clear();
  for (std::uint64_t s = 0; s < states; ++s) {
    if (!optimal[s]) {
      position[s] = static_cast<int>(transient.size());
      transient.push_back(static_cast<int>(s));
    }
  }
  AbsorbingChain<Scalar> c;
  c.size = static_cast<int>(transient.size());
  const std::size_t m = static_cast<std::size_t>(c.size);
  c.q.assign(m * m, Scalar(0));
  c.absorb.assign(m, Scalar(0));
  for (std::size_t a = 0; a < m; ++a) {
    const auto from = static_cast<std::uint64_t>(transient[a]);
    Scalar stay = kernel[0];
    for (std::uint64_t to = 0; to < states; ++to) {
      if (to == from) continue;
      const Scalar& prob = kernel[static_cast<std::size_t>(std::popcount(from ^ to))];
      if (fitness[to] >= fitness[from]) {
        if (optimal[to]) {
          c.absorb[a] += prob;
        } else {
          c.q[a * m + static_cast<std::size_t>(position[to])] += prob;
        }
      } else {
        stay += prob;
      }
    }
    c.q[a * m + a] += stay;
  }
  return c;
}

template <typename Scalar>
ChainSolution Finish(const AbsorbingChain<Scalar>& chain, const std::vector<int>& transient,
                     int total_states, const std::vector<Scalar>& pi) {
  const std::vector<Scalar> t = EliminateStates(chain);
  ChainSolution out;
  std::vector<Scalar> efht(static_cast<std::size_t>(total_states), Scalar(0));
  for (std::size_t a = 0; a < transient.size(); ++a) {
    efht[static_cast<std::size_t>(transient[a])] = t[a];
  }
  Scalar mean(1);
  for (std::size_t s = 0; s < efht.size(); ++s) {
    if (pi[s] != 0) mean += pi[s] * efht[s];
  }
  if constexpr (std::is_same_v<Scalar, long double>) {
    out.efht = efht;
    out.mean_evaluations = mean;
    out.backward_error = BackwardError(chain, t);
    if (!(out.backward_error <= kMaxBackwardError)) {
      throw SingularChainError("hitting-time solve failed its residual check");
    }
  } else {
    if (!ResidualIsZero(chain, t)) {
      throw std::logic_error("exact hitting-time solve left a nonzero residual");
    }
    out.efht.reserve(efht.size());
    for (const auto& v : efht) out.efht.push_back(ToLongDouble(v));
    out.mean_evaluations = ToLongDouble(mean);
    out.exact_efht = std::move(efht);
    out.exact_mean_evaluations = mean;
  }
  return out;
}

template <typename Scalar>
ChainSolution SolveLumped(const LumpedRules& rules, const InitialDistribution& init) {
  const int n = rules.n;
  const auto p = LumpedMatrix<Scalar>(rules);
  std::vector<bool> absorbing(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) absorbing[static_cast<std::size_t>(j)] = rules.Absorbing(j);
  std::vector<int> transient;
  const auto chain = ToAbsorbingChain<Scalar>(p, absorbing, transient);
  return Finish<Scalar>(chain, transient, n + 1, InitialWeights<Scalar>(n, init));
}

template <typename Scalar>
ChainSolution SolveFull(const Instance& inst) {
  const int n = inst.n();
  const int states = 1 << n;
  std::vector<int> transient;
  std::vector<bool> optimal;
  const auto chain = inst.scaled().fits_int64()
                         ? BuildFullChain<Scalar, std::int64_t>(inst, transient, optimal)
                         : BuildFullChain<Scalar, BigInt>(inst, transient, optimal);
  std::vector<Scalar> pi(static_cast<std::size_t>(states),
                         Scalar(1) / Scalar(static_cast<long>(states)));
  return Finish<Scalar>(chain, transient, states, pi);
}

}  // namespace

FitnessValue BruteForceF(const DeletionRobustInstance& inst, const BitString& x) {
  const OracleScaling s = Scale({inst.objective().weights()});
  return FitnessValue{Unscale(BruteForceScaledFChecked(s, x, inst.d()), s.denominator)};
}

FitnessValue BruteForceOptimum(const Instance& inst) {
  const int n = inst.n();
  Require(n <= kBruteForceOptimumMaxN,
          "BruteForceOptimum requires n <= " + std::to_string(kBruteForceOptimumMaxN));
  const int k = inst.k();
  std::optional<BigInt> best;
  OracleScaling s;
  if (const auto* del = inst.deletion()) {
    s = Scale({del->objective().weights()});
  } else {
    s = Scale(inst.worst_case()->objectives());
  }
  for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
    if (std::popcount(idx) > k) continue;
    const BitString x = BitString::FromIndex(n, idx);
    BigInt value;
    if (const auto* del = inst.deletion()) {
      value = BruteForceScaledFChecked(s, x, del->d());
    } else {
      bool first = true;
      for (const auto& row : s.rows) {
        BigInt total = 0;
        x.ForEachOne([&](int i) {
          total += row[static_cast<std::size_t>(i)];
          return true;
        });
        if (first || total < value) value = total;
        first = false;
      }
    }
    if (!best || value > *best) best = value;
  }
  return FitnessValue{Unscale(*best, s.denominator)};
}

std::vector<long double> OneCountStepDistribution(int n, int j) {
  Require(n >= 1 && j >= 0 && j <= n, "step distribution requires 0 <= j <= n");
  return StepDistribution<long double>(n, j);
}

std::vector<Rational> OneCountStepDistributionExact(int n, int j) {
  Require(n >= 1 && j >= 0 && j <= n, "step distribution requires 0 <= j <= n");
  return StepDistribution<Rational>(n, j);
}

std::vector<long double> LumpedTransitionMatrix(ChainKind kind, int n, int k, int d) {
  CheckLumpedParams(kind, n, k, d);
  return LumpedMatrix<long double>(LumpedRules{kind, n, k, d});
}

ChainSolution LumpedChainEfht(ChainKind kind, int n, int k, int d,
                              InitialDistribution init, Precision precision) {
  CheckLumpedParams(kind, n, k, d);
  const LumpedRules rules{kind, n, k, d};
  ChainSolution out;
  if (precision == Precision::kExact) {
    Require(n <= kExactLumpedMaxN,
            "exact lumped chain requires n <= " + std::to_string(kExactLumpedMaxN));
    out = SolveLumped<Rational>(rules, init);
  } else {
    out = SolveLumped<long double>(rules, init);
  }
  out.states = DescribeLumped(kind, n, k, d);
  return out;
}

ChainSolution FullChainEfht(const Instance& inst, Precision precision) {
  const int n = inst.n();
  Require(n <= kFullChainMaxN,
          "full chain requires n <= " + std::to_string(kFullChainMaxN));
  ChainSolution out;
  if (precision == Precision::kExact) {
    Require(n <= kExactFullMaxN,
            "exact full chain requires n <= " + std::to_string(kExactFullMaxN));
    out = SolveFull<Rational>(inst);
  } else {
    out = SolveFull<long double>(inst);
  }
  out.states = "bit-string index 0.." + std::to_string((1 << n) - 1) +
               " (bit i = position i), " + std::string(FamilyName(inst.family())) +
               ", n=" + std::to_string(n);
  return out;
}

std::vector<long double> FullChainTransitionRow(const Instance& inst, std::uint64_t from) {
  const int n = inst.n();
  Require(n <= kFullChainMaxN, "full chain requires n <= " + std::to_string(kFullChainMaxN));
  const std::uint64_t states = std::uint64_t{1} << n;
  Require(from < states, "state index out of range");
  const auto& eval = inst.scaled();
  const auto kernel = MutationKernel<long double>(n);
  const BigInt base = eval.Fitness<BigInt>(BitString::FromIndex(n, from));
  std::vector<long double> row(states, 0.0L);
  for (std::uint64_t to = 0; to < states; ++to) {
    const long double prob = kernel[static_cast<std::size_t>(std::popcount(from ^ to))];
    const bool accept = eval.Fitness<BigInt>(BitString::FromIndex(n, to)) >= base;
    row[accept ? to : from] += prob;
  }
  return row;
}

std::string ChainSolutionCsv(const ChainSolution& solution) {
  std::string out = "state,efht\n";
  char buf[64];
  for (std::size_t s = 0; s < solution.efht.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "%zu,%.12Lg\n", s, solution.efht[s]);
    out += buf;
  }
  return out;
}

}  // namespace robustea
