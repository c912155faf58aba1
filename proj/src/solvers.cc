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

#include "nbpack/solvers.h"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "nbpack/errors.h"

namespace nbpack {
namespace {

int IterationCap(int n, const SolverOptions& options) {
  if (options.max_iterations == 0) return 2 * n + 2;
  if (options.max_iterations < n) {
    throw InvalidInput("max_iterations must be at least n");
  }
  return options.max_iterations;
}

// Picks among candidates whose score is within tol of the best. Candidates
// arrive in ascending member order, so the default pick is the lowest index.
class TieBreaker {
 public:
  explicit TieBreaker(const SolverOptions& options)
      : randomize_(options.randomize_ties), rng_(options.seed) {}

  template <typename Candidate>
  const Candidate& Pick(const std::vector<Candidate>& tied) {
    if (!randomize_ || tied.size() == 1) return tied.front();
    std::uniform_int_distribution<size_t> pick(0, tied.size() - 1);
    return tied[pick(rng_)];
  }

 private:
  bool randomize_;
  std::mt19937_64 rng_;
};

void Emit(const SolverOptions& options, int t, int loop,
          std::optional<Subset> selected, double worth,
          TraceEvent::Kind kind) {
  if (!options.trace) return;
  options.trace(TraceEvent{t, loop, selected, worth, kind});
}

void FinishResult(const SetFunction& w, const MembershipProfile& q,
                  Partition partition, double tol, SolveResult& result) {
  result.partition = std::move(partition);
  result.packing = ExtractPacking(w.family(), result.partition);
  result.total_weight = 0.0;
  for (const Subset b : result.packing) result.total_weight += w.WeightOf(b);
  result.final_worth = WorthUnchecked(w, q);
  result.local_maximizer = IsLocalMaximizer(w, q, tol);
  result.final_profile = q;
}

// Element groups of a vertex profile, with groups that are not feasible
// broken into singletons.
Partition FeasibleInducedPartition(const MembershipProfile& q, double tol) {
  const Partition induced = InducedPartition(q, tol);
  std::vector<Subset> blocks;
  for (const Subset b : induced.blocks()) {
    if (q.family().IndexOf(b)) {
      blocks.push_back(b);
    } else {
      ForEachElement(b, [&](int i) { blocks.push_back(Subset::Singleton(i)); });
    }
  }
  return Partition(q.n(), std::move(blocks));
}

void CheckFamilies(const SetFunction& w, const MembershipProfile& q) {
  if (&w.family() != &q.family()) {
    throw InvalidInput("initial profile built on a different family");
  }
}

SolveResult BlockSearch(const SetFunction& w, MembershipProfile q,
                        const SolverOptions& options, bool with_cost) {
  CheckFamilies(w, q);
  const Family& family = w.family();
  const int n = family.n();
  const double tol = options.tolerance;
  const int cap = IterationCap(n, options);
  q.Validate(tol);

  std::optional<CostFunction> costs;
  SetFunction guide = w;
  if (with_cost) {
    costs.emplace(family);
    guide = CostAdjusted(w, *costs);
  }

  for (int a = 1; a < family.size(); ++a) {
    if (with_cost && !(guide.weight(a) > 0.0)) continue;
    const Subset support = q.SupportOn(a, tol);
    if (!support.empty() && support != family.member(a)) {
      throw InfeasibleConfig(
          "initial profile supports " + family.member(a).ToString() +
          " on " + support.ToString() + " only; local search needs all or none");
    }
  }

  SolveResult result;
  TieBreaker ties(options);
  result.worth_trace.push_back(WorthUnchecked(w, q));
  const bool use_sum = !with_cost || options.selection == Selection::kSum;
  Subset covered;
  int t = 0;

  // Loop 1: select partially supported blocks until the profile is a
  // partition.
  while (true) {
    std::vector<int> partial;
    std::vector<double> scores;
    double best = -std::numeric_limits<double>::infinity();
    for (int a = 1; a < family.size(); ++a) {
      const Subset set = family.member(a);
      double total = 0.0;
      for (const double m : q.column(a)) total += m;
      if (!(total > tol && total < set.size() - tol)) continue;
      double score = use_sum ? 0.0 : std::numeric_limits<double>::infinity();
      ForEachElement(set, [&](int i) {
        const double d = ConditionalWeightAt(guide, q, i, a);
        score = use_sum ? score + d : std::min(score, d);
      });
      partial.push_back(a);
      scores.push_back(score);
      best = std::max(best, score);
    }
    if (partial.empty()) break;
    if (++t > cap) throw std::logic_error("block search exceeded iteration cap");

    std::vector<int> tied;
    for (size_t k = 0; k < partial.size(); ++k) {
      if (scores[k] >= best - tol) tied.push_back(partial[k]);
    }
    const int chosen = ties.Pick(tied);
    const Subset block = family.member(chosen);
    covered = covered | block;

    ForEachElement(block, [&](int i) { q.Concentrate(i, chosen); });

    for (int j = 0; j < n; ++j) {
      if (block.contains(j)) continue;
      double freed = 0.0;
      for (const int a : family.Containing(j)) {
        if (family.member(a).Intersects(block)) {
          freed += q.mass(j, a);
          q.set_mass(j, a, 0.0);
        }
      }
      if (!(freed > 0.0)) continue;
      // Freed mass moves onto the sets j still supports that avoid every
      // selected block, in proportion to their (cost-adjusted) weight.
      double denom = 0.0;
      for (const int a : family.Containing(j)) {
        if (!family.member(a).Intersects(covered) && q.mass(j, a) > 0.0 &&
            guide.weight(a) > 0.0) {
          denom += guide.weight(a);
        }
      }
      if (denom > 0.0) {
        for (const int a : family.Containing(j)) {
          const double m = q.mass(j, a);
          const double g = guide.weight(a);
          if (!family.member(a).Intersects(covered) && m > 0.0 && g > 0.0) {
            q.set_mass(j, a, m + freed * g / denom);
          }
        }
      } else {
        const int single = *family.IndexOf(Subset::Singleton(j));
        q.set_mass(j, single, q.mass(j, single) + freed);
        Emit(options, t, 1, Subset::Singleton(j), WorthUnchecked(w, q),
             TraceEvent::Kind::kFallbackSingleton);
      }
    }

    if (with_cost) {
      costs->UpdateAfterBlock(family, block);
      guide = CostAdjusted(w, *costs);
    }
    result.worth_trace.push_back(WorthUnchecked(w, q));
    Emit(options, t, 1, block, result.worth_trace.back(),
         TraceEvent::Kind::kSelect);
  }

  std::vector<Subset> blocks;
  for (int i = 0; i < n; ++i) {
    const auto choice = q.VertexChoice(i, tol);
    if (!choice) throw std::logic_error("loop 1 ended off a vertex");
    const Subset set = family.member(*choice);
    if (std::find(blocks.begin(), blocks.end(), set) == blocks.end()) {
      blocks.push_back(set);
    }
  }

  // Loop 2: extract the element whose move to a singleton gains the most,
  // while some extraction gains more than tol.
  while (true) {
    std::sort(blocks.begin(), blocks.end());
    double best_gain = tol;
    std::optional<std::pair<Subset, int>> best_move;
    for (const Subset block : blocks) {
      if (block.size() < 2) continue;
      const double current = w.WeightOf(block);
      ForEachElement(block, [&](int i) {
        const double gain = w.WeightOf(Subset::Singleton(i)) +
                            w.MobiusSumWithin(block.Without(i)) - current;
        if (gain > best_gain + tol ||
            (!best_move && gain > best_gain)) {
          best_gain = gain;
          best_move = {block, i};
        }
      });
    }
    if (!best_move) break;
    if (++t > cap) throw std::logic_error("block search exceeded iteration cap");

    const auto [block, i] = *best_move;
    blocks.erase(std::find(blocks.begin(), blocks.end(), block));
    blocks.push_back(Subset::Singleton(i));
    q.Concentrate(i, *family.IndexOf(Subset::Singleton(i)));
    const Subset rest = block.Without(i);
    if (const auto r = family.IndexOf(rest)) {
      blocks.push_back(rest);
      ForEachElement(rest, [&](int j) { q.Concentrate(j, *r); });
    } else {
      ForEachElement(rest, [&](int j) {
        blocks.push_back(Subset::Singleton(j));
        q.Concentrate(j, *family.IndexOf(Subset::Singleton(j)));
      });
      Emit(options, t, 2, rest, WorthUnchecked(w, q),
           TraceEvent::Kind::kFallbackSingleton);
    }
    result.worth_trace.push_back(WorthUnchecked(w, q));
    Emit(options, t, 2, Subset::Singleton(i), result.worth_trace.back(),
         TraceEvent::Kind::kExtract);
  }

  result.iterations = t;
  FinishResult(w, q, Partition(n, std::move(blocks)), tol, result);
  return result;
}

}  // namespace

SolveResult RoundUp(const SetFunction& w, MembershipProfile q0,
                    const SolverOptions& options) {
  CheckFamilies(w, q0);
  const double tol = options.tolerance;
  const int cap = IterationCap(w.n(), options);
  q0.Validate(tol);
  MembershipProfile q = std::move(q0);
  const auto members_of = [&](int i) { return w.family().Containing(i); };

  SolveResult result;
  TieBreaker ties(options);
  result.worth_trace.push_back(WorthUnchecked(w, q));
  int t = 0;
  for (int i = 0; i < w.n(); ++i) {
    if (q.VertexChoice(i, tol)) continue;
    if (++t > cap) throw std::logic_error("RoundUp exceeded iteration cap");
    const GradientRow row = ConditionalWeight(w, q, i);
    const double target =
        options.maximize
            ? *std::max_element(row.values.begin(), row.values.end())
            : *std::min_element(row.values.begin(), row.values.end());
    std::vector<int> tied;
    for (size_t k = 0; k < row.values.size(); ++k) {
      const double gap = options.maximize ? target - row.values[k]
                                          : row.values[k] - target;
      if (gap <= tol) tied.push_back(members_of(i)[k]);
    }
    const int chosen = ties.Pick(tied);
    q.Concentrate(i, chosen);
    result.worth_trace.push_back(WorthUnchecked(w, q));
    Emit(options, t, 1, w.family().member(chosen), result.worth_trace.back(),
         TraceEvent::Kind::kSelect);
  }
  result.iterations = t;
  FinishResult(w, q, FeasibleInducedPartition(q, tol), tol, result);
  return result;
}

SolveResult LocalSearch(const SetFunction& w, MembershipProfile q0,
                        const SolverOptions& options) {
  return BlockSearch(w, std::move(q0), options, /*with_cost=*/false);
}

SolveResult LocalSearchWithCost(const SetFunction& w, MembershipProfile q0,
                                const SolverOptions& options) {
  return BlockSearch(w, std::move(q0), options, /*with_cost=*/true);
}

InitialProfile MakeInitialProfile(const SetFunction& weights, InitKind kind) {
  const auto family = weights.family_ptr();
  if (kind == InitKind::kUniform) {
    return {MembershipProfile::Uniform(family), {}};
  }
  if (kind != InitKind::kWeightProportional) {
    throw InvalidInput("explicit profiles are supplied, not generated");
  }
  InitialProfile init{MembershipProfile(family), {}};
  for (int i = 0; i < family->n(); ++i) {
    double denom = 0.0;
    for (const int a : family->Containing(i)) {
      denom += std::max(weights.weight(a), 0.0);
    }
    if (!(denom > 0.0)) {
      init.profile.Concentrate(i, *family->IndexOf(Subset::Singleton(i)));
      init.fallback_elements.push_back(i);
      continue;
    }
    for (const int a : family->Containing(i)) {
      init.profile.set_mass(i, a, std::max(weights.weight(a), 0.0) / denom);
    }
  }
  return init;
}

bool IsLocalMaximizer(const SetFunction& w, const MembershipProfile& q,
                      double tol) {
  for (int i = 0; i < w.n(); ++i) {
    const GradientRow row = ConditionalWeight(w, q, i);
    const auto members = w.family().Containing(i);
    double current = 0.0;
    for (size_t k = 0; k < members.size(); ++k) {
      current += q.mass(i, members[k]) * row.values[k];
    }
    for (const double v : row.values) {
      if (v > current + tol) return false;
    }
  }
  return true;
}

bool IsLocalMaximizer(const SetFunction& w, const Partition& p, double tol) {
  return IsLocalMaximizer(
      w, MembershipProfile::FromPartition(w.family_ptr(), p), tol);
}

std::vector<Subset> ExtractPacking(const Family& family, const Partition& p) {
  std::vector<Subset> packing;
  for (const Subset b : p.blocks()) {
    const auto a = family.IndexOf(b);
    if (a && !family.synthetic(*a)) packing.push_back(b);
  }
  return packing;
}

SolveResult Solve(const SetFunction& w, const SolverConfig& config) {
  const Family& family = w.family();
  if (config.algorithm == Algorithm::kLocalSearch &&
      family.mode() == Mode::kFamily) {
    throw InfeasibleConfig(
        "local search runs on full-mode instances; use local-cost");
  }
  std::vector<int> fallback;
  std::optional<MembershipProfile> q0;
  if (config.init == InitKind::kExplicit) {
    if (!config.initial_profile) {
      throw InvalidInput("explicit init requested without a profile");
    }
    q0 = *config.initial_profile;
  } else if (config.algorithm == Algorithm::kLocalSearchWithCost) {
    InitialProfile init = MakeInitialProfile(
        CostAdjusted(w, CostFunction(family)), config.init);
    q0 = std::move(init.profile);
    fallback = std::move(init.fallback_elements);
  } else {
    InitialProfile init = MakeInitialProfile(w, config.init);
    q0 = std::move(init.profile);
    fallback = std::move(init.fallback_elements);
  }

  SolveResult result;
  switch (config.algorithm) {
    case Algorithm::kRoundUp:
      result = RoundUp(w, std::move(*q0), config.options);
      break;
    case Algorithm::kLocalSearch:
      result = LocalSearch(w, std::move(*q0), config.options);
      break;
    case Algorithm::kLocalSearchWithCost:
      result = LocalSearchWithCost(w, std::move(*q0), config.options);
      break;
  }
  result.init_fallback = std::move(fallback);
  return result;
}

}  // namespace nbpack
