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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "nbpack/approx.h"
#include "nbpack/cover.h"
#include "nbpack/games.h"
#include "nbpack/oracle.h"
#include "nbpack/set_function.h"
#include "nbpack/solvers.h"
#include "test_util.h"

namespace nbpack {
namespace {

using testing::Rng;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool ok = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string Format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), fmt, a, b);
  return buf;
}

Verdict ThreePlayerReproduction() {
  Verdict v;
  const auto start = Clock::now();
  const SetFunction w = testing::ThreePlayers();
  Rng rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    MembershipProfile q(w.family_ptr());
    q.Concentrate(0, 0b011);
    q.Concentrate(1, 0b011);
    std::vector<double> row(4);
    double total = 0.0;
    for (double& x : row) total += (x = testing::Uniform(rng));
    for (double& x : row) x /= total;
    q.SetRow(2, row);
    worst = std::max(worst, std::abs(Worth(w, q) - 1.0));
  }
  v.Require(worst <= 1e-9, Format("worth off by %.3g", worst));

  SolverConfig config;
  config.algorithm = Algorithm::kLocalSearch;
  config.init = InitKind::kWeightProportional;
  const SolveResult r = Solve(w, config);
  v.Require(r.partition == Partition(3, {Subset(0b011), Subset(0b100)}),
            "local search returned " + r.partition.ToString());
  v.Require(std::abs(r.total_weight - 1.0) <= 1e-9,
            Format("local search weight %.12g", r.total_weight));
  const double elapsed = Seconds(start);
  v.Require(elapsed < 1.0, Format("took %.3f s", elapsed));
  if (v.ok) {
    v.detail = Format("max |W-1| = %.2g over 10 rows; local search gives {{1,2},{3}} "
                      "weight 1 in %.4f s", worst, elapsed);
  }
  return v;
}

Verdict FourElementReproduction() {
  Verdict v;
  const auto start = Clock::now();
  const SetFunction w = testing::FourElementFamily();
  const Family& f = w.family();
  const int whole = *f.IndexOf(Subset::Full(4));
  const int four = *f.IndexOf(Subset::Singleton(3));
  const std::vector<int> stated = {whole, whole, whole, four};
  const MembershipProfile q = MembershipProfile::Vertex(w.family_ptr(), stated);
  const double worth = Worth(w, q);
  v.Require(worth == 5.0, Format("stated profile has worth %.17g", worth));
  v.Require(!IsExactSupport(q), "stated profile reported as exact");

  // Rows 1..3 range over members inside {1,2,3}; row 4 stays on {4}.
  std::vector<std::vector<int>> options(3);
  for (int i = 0; i < 3; ++i) {
    for (int a : f.Containing(i)) {
      if (f.member(a).IsSubsetOf(Subset(0b0111))) options[i].push_back(a);
    }
  }
  int exact = 0;
  double best = -INFINITY;
  for (int a0 : options[0]) {
    for (int a1 : options[1]) {
      for (int a2 : options[2]) {
        const std::vector<int> choice = {a0, a1, a2, four};
        const auto p = MembershipProfile::Vertex(w.family_ptr(), choice);
        if (!IsExactSupport(p)) continue;
        ++exact;
        best = std::max(best, Worth(w, p));
      }
    }
  }
  v.Require(exact > 0, "no exact vertex profile enumerated");
  v.Require(best < 5.0, Format("an exact profile reaches %.6g", best));
  const double elapsed = Seconds(start);
  v.Require(elapsed < 1.0, Format("took %.3f s", elapsed));
  if (v.ok) {
    v.detail = Format("W = 5 on the non-exact profile; best of the exact ones %.6g; "
                      "%.4f s", best, elapsed);
  }
  return v;
}

Verdict MobiusRoundTrip() {
  Verdict v;
  Rng rng(103);
  double worst_roundtrip = 0.0;
  double worst_alternating = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 10;
    const SetFunction w = testing::RandomFull(n, rng, -1.0, 1.0);
    const auto mu = MobiusInversion(w.family(), w.weights());
    const auto back = ZetaTransform(w.family(), mu);
    for (size_t a = 0; a < back.size(); ++a) {
      worst_roundtrip = std::max(worst_roundtrip, std::abs(back[a] - w.weight(int(a))));
    }
    if (n <= 8) {
      const auto alt = testing::AlternatingSumMobius(w.weights());
      for (size_t a = 0; a < mu.size(); ++a) {
        worst_alternating = std::max(worst_alternating, std::abs(alt[a] - mu[a]));
      }
    }
  }
  v.Require(worst_roundtrip <= 1e-12, Format("roundtrip error %.3g", worst_roundtrip));
  v.Require(worst_alternating <= 1e-12,
            Format("alternating-sum disagreement %.3g", worst_alternating));
  if (v.ok) {
    v.detail = Format("max roundtrip error %.2g (n = 3..12), alternating-sum gap %.2g",
                      worst_roundtrip, worst_alternating);
  }
  return v;
}

Verdict Multilinearity() {
  Verdict v;
  Rng rng(104);
  const double eps = 1e-5;
  double worst_split = 0.0;
  double worst_fd = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const SetFunction w = trial % 2 == 0
        ? testing::RandomFull(testing::UniformInt(rng, 2, 7), rng, -1.0, 1.0)
        : testing::RandomFamily(testing::UniformInt(rng, 2, 8), 12, rng);
    const MembershipProfile q = testing::RandomProfile(w.family_ptr(), rng);
    const double total = Worth(w, q);
    for (int i = 0; i < w.n(); ++i) {
      const WorthSplit s = WorthDecomposition(w, q, i);
      worst_split = std::max(worst_split, std::abs(total - (s.own + s.rest)));

      const auto f_i = w.family().Containing(i);
      if (f_i.size() < 2) continue;
      const int ka = testing::UniformInt(rng, 0, int(f_i.size()) - 1);
      int kb = testing::UniformInt(rng, 0, int(f_i.size()) - 2);
      if (kb >= ka) ++kb;
      const int a = f_i[ka];
      const int b = f_i[kb];
      // Move eps of mass from B to A and back; both stay in the simplex.
      MembershipProfile plus = q;
      MembershipProfile minus = q;
      plus.set_mass(i, a, q.mass(i, a) + eps);
      plus.set_mass(i, b, q.mass(i, b) - eps);
      minus.set_mass(i, a, q.mass(i, a) - eps);
      minus.set_mass(i, b, q.mass(i, b) + eps);
      const double central =
          (WorthUnchecked(w, plus) - WorthUnchecked(w, minus)) / (2 * eps);
      const double predicted = Derivative(w, q, i, a) - Derivative(w, q, i, b);
      worst_fd = std::max(worst_fd, std::abs(central - predicted));
    }
  }
  v.Require(worst_split <= 1e-9, Format("|W - (W_i + W_-i)| reached %.3g", worst_split));
  v.Require(worst_fd <= 1e-6, Format("finite difference gap %.3g", worst_fd));
  if (v.ok) {
    v.detail = Format("max decomposition gap %.2g, max finite-difference gap %.2g",
                      worst_split, worst_fd);
  }
  return v;
}

Verdict RoundUpMonotone() {
  Verdict v;
  Rng rng(105);
  OracleOptions oracle;
  oracle.collect_local_maximizers = false;
  for (int trial = 0; trial < 100 && v.ok; ++trial) {
    const int n = 1 + trial % 8;
    const SetFunction w = testing::RandomFull(n, rng, -1.0, 1.0);
    const SolveResult r =
        RoundUp(w, MembershipProfile::Uniform(w.family_ptr()));
    for (size_t t = 1; t < r.worth_trace.size(); ++t) {
      v.Require(r.worth_trace[t] >= r.worth_trace[t - 1] - 1e-9,
                "worth decreased at step " + std::to_string(t));
    }
    v.Require(r.final_profile && r.final_profile->IsVertex(1e-9),
              "final rows are not all vertices");
    const OracleReport o = OracleBestPartition(w, oracle);
    v.Require(r.final_worth >= o.worst_weight - 1e-9 &&
                  r.final_worth <= o.best_weight + 1e-9,
              Format("final worth %.6g outside the oracle range", r.final_worth));
  }
  if (v.ok) v.detail = "100 instances, n = 1..8: non-decreasing traces, vertex outputs, inside oracle range";
  return v;
}

bool Contains(const std::vector<Partition>& set, const Partition& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

Verdict LocalMaximizerGuarantee() {
  Verdict v;
  const auto start = Clock::now();
  Rng rng(106);
  int checked = 0;
  for (int trial = 0; trial < 200 && v.ok; ++trial) {
    const bool full = trial < 100;
    SolverConfig config;
    config.init = trial % 2 == 0 ? InitKind::kWeightProportional : InitKind::kUniform;
    std::optional<SetFunction> w;
    if (full) {
      w.emplace(testing::RandomFull(1 + trial % 7, rng));
      config.algorithm = Algorithm::kLocalSearch;
    } else {
      const int n = testing::UniformInt(rng, 2, 8);
      // |F| counts the empty set and the n singletons as well.
      w.emplace(testing::RandomFamily(n, testing::UniformInt(rng, 1, 19 - n), rng));
      config.algorithm = Algorithm::kLocalSearchWithCost;
    }
    if (w->family().size() > 20 && !full) {
      v.Require(false, "generated family exceeds 20 members");
      break;
    }
    const SolveResult r = Solve(*w, config);
    v.Require(r.local_maximizer && IsLocalMaximizer(*w, r.partition),
              "output " + r.partition.ToString() + " is not a local maximizer");
    const OracleReport o = OracleBestPartition(*w);
    v.Require(o.local_maximizers.has_value(), "oracle skipped the local-maximizer scan");
    if (o.local_maximizers) {
      v.Require(Contains(*o.local_maximizers, r.partition),
                "output " + r.partition.ToString() + " missing from the oracle set");
    }
    ++checked;
  }
  const double elapsed = Seconds(start);
  v.Require(elapsed < 60.0, Format("took %.2f s", elapsed));
  if (v.ok) {
    v.detail = Format("%.0f instances (100 full, 100 family) confirmed by the oracle in %.2f s",
                      checked, elapsed);
  }
  return v;
}

Verdict SufficientCondition() {
  Verdict v;
  Rng rng(107);
  int64_t satisfying = 0;
  int64_t non_singleton = 0;
  for (int trial = 0; trial < 50 && v.ok; ++trial) {
    const SetFunction w = testing::RandomFamily(testing::UniformInt(rng, 3, 8),
                                                testing::UniformInt(rng, 2, 14), rng);
    ForEachFeasiblePartition(w.family(), 10'000'000, [&](const Partition& p) {
      bool holds = true;
      for (Subset a : p.blocks()) {
        const double wa = w.WeightOf(a);
        ForEachElement(a, [&](int i) {
          const double bound = w.WeightOf(Subset::Singleton(i)) + w.MobiusSumWithin(a.Without(i));
          if (wa < bound) holds = false;
        });
      }
      if (!holds) return;
      ++satisfying;
      non_singleton += p.blocks().size() < size_t(w.n());
      v.Require(IsLocalMaximizer(w, p),
                "counterexample " + p.ToString());
    });
  }
  if (v.ok) {
    v.detail = Format("%.0f partitions meet the inequality (%.0f with a non-singleton block); "
                      "all are local maximizers", double(satisfying), double(non_singleton));
  }
  return v;
}

Verdict Approximation() {
  Verdict v;
  Rng rng(108);
  double worst_full = 0.0;
  for (int n = 1; n <= 8; ++n) {
    const SetFunction w = testing::RandomFull(n, rng);
    worst_full = std::max(worst_full, KDegreeApprox(w, n).residual);
  }
  v.Require(worst_full <= 1e-12, Format("k = n residual %.3g", worst_full));

  double worst_modular = 0.0;
  double worst_constant = 0.0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> x(n);
    for (double& xi : x) xi = testing::Uniform(rng, -1.0, 1.0);
    std::vector<double> table(size_t{1} << n, 0.0);
    for (size_t a = 1; a < table.size(); ++a) {
      for (int i = 0; i < n; ++i) if (a >> i & 1) table[a] += x[i];
    }
    const SetFunction w(Family::MakeFull(n), table);
    const ApproxResult r = KDegreeApprox(w, 1);
    worst_modular = std::max(worst_modular, r.residual);
    for (double f : r.fitted) {
      worst_constant = std::max(worst_constant, std::abs(f - table.back()));
    }
  }
  v.Require(worst_modular <= 1e-12, Format("modular residual %.3g", worst_modular));
  v.Require(worst_constant <= 1e-9, Format("modular fit off w(N) by %.3g", worst_constant));

  double worst_mean = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const SetFunction w = testing::RandomFull(n, rng);
    // Mean of F over partitions, from the independent enumerator.
    double sum = 0.0;
    int64_t count = 0;
    testing::ForEachPartitionNaive(n, [&](const std::vector<Subset>& blocks) {
      for (Subset b : blocks) sum += w.WeightOf(b);
      ++count;
    });
    const double mean = sum / double(count);
    for (double f : KDegreeApprox(w, 1).fitted) {
      worst_mean = std::max(worst_mean, std::abs(f - mean));
    }
  }
  v.Require(worst_mean <= 1e-9, Format("k = 1 constant off the mean by %.3g", worst_mean));

  double worst_gauge = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testing::UniformInt(rng, 2, 7);
    const int k = testing::UniformInt(rng, 1, n);
    const SetFunction w = testing::RandomFull(n, rng, -1.0, 1.0);
    const ApproxResult a = KDegreeApprox(w, k, GaugeStrategy::kMinimumNorm);
    const ApproxResult b = KDegreeApprox(w, k, GaugeStrategy::kPinnedSingletons);
    for (size_t p = 0; p < a.fitted.size(); ++p) {
      worst_gauge = std::max(worst_gauge, std::abs(a.fitted[p] - b.fitted[p]));
    }
  }
  v.Require(worst_gauge <= 1e-8, Format("gauge disagreement %.3g", worst_gauge));
  if (v.ok) {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "k=n residual %.2g; modular residual %.2g; mean gap %.2g; gauge gap %.2g",
                  worst_full, worst_modular, worst_mean, worst_gauge);
    v.detail = buf;
  }
  return v;
}

Verdict Games() {
  Verdict v;
  Rng rng(109);
  double worst_efficiency = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const SetFunction w = testing::RandomFull(1 + trial % 8, rng, -1.0, 1.0);
    const auto q = MembershipProfile::Vertex(w.family_ptr(),
                                             testing::RandomChoice(w.family(), rng));
    const PayoffVector pi = ShapleyPayoffs(w, q);
    worst_efficiency = std::max(
        worst_efficiency, std::abs(std::accumulate(pi.begin(), pi.end(), 0.0) - Worth(w, q)));
  }
  v.Require(worst_efficiency <= 1e-9, Format("efficiency gap %.3g", worst_efficiency));

  int64_t profiles = 0;
  int64_t equilibria = 0;
  for (int trial = 0; trial < 20 && v.ok; ++trial) {
    const SetFunction w = testing::RandomFull(2 + trial % 4, rng);
    std::vector<double> omega(w.n());
    for (double& o : omega) o = testing::Uniform(rng, 0.1, 2.0);
    testing::ForEachChoice(w.family(), [&](const std::vector<int>& choice) {
      const auto q = MembershipProfile::Vertex(w.family_ptr(), choice);
      const bool eq = IsEquilibrium(w, q, omega);
      ++profiles;
      equilibria += eq;
      if (eq != IsLocalMaximizer(w, q)) v.Require(false, "equilibrium and local maximizer disagree");
    });
  }
  if (v.ok) {
    v.detail = Format("efficiency gap %.2g; equilibrium = local maximizer on %.0f vertex profiles",
                      worst_efficiency, double(profiles));
  }
  return v;
}

Verdict PropertySubstitution() {
  Verdict v;
  v.detail = "no benchmark tables exist to match; criteria 1-9 are the property and oracle checks";
  return v;
}

}  // namespace
}  // namespace nbpack

int main() {
  using nbpack::Verdict;
  struct Criterion {
    int id;
    const char* name;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "three-player instance", nbpack::ThreePlayerReproduction},
      {2, "non-exact vertex profile beats exact ones", nbpack::FourElementReproduction},
      {3, "Möbius roundtrip", nbpack::MobiusRoundTrip},
      {4, "multilinearity and gradients", nbpack::Multilinearity},
      {5, "RoundUp monotonicity", nbpack::RoundUpMonotone},
      {6, "local-maximizer guarantee", nbpack::LocalMaximizerGuarantee},
      {7, "sufficient condition for local maximality", nbpack::SufficientCondition},
      {8, "k-degree approximation", nbpack::Approximation},
      {9, "games", nbpack::Games},
      {10, "property-based acceptance", nbpack::PropertySubstitution},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !v.ok;
    std::printf("%s  criterion %2d  %-44s %s [%.2f s]\n", v.ok ? "PASS" : "FAIL", c.id,
                c.name, v.detail.c_str(), elapsed);
  }
  std::printf("%d of %zu criteria passed\n", int(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
