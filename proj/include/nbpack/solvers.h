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

#ifndef NBPACK_SOLVERS_H_
#define NBPACK_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nbpack/cover.h"
#include "nbpack/set_function.h"
#include "nbpack/subset.h"

namespace nbpack {

enum class Algorithm { kRoundUp, kLocalSearch, kLocalSearchWithCost };

// How LocalSearchWithCost scores a candidate block from the derivatives of
// its members: the smallest one, or their sum as in LocalSearch.
enum class Selection { kMin, kSum };

enum class InitKind { kUniform, kWeightProportional, kExplicit };

struct TraceEvent {
  enum class Kind { kSelect, kExtract, kFallbackSingleton };

  int t = 0;
  int loop = 1;
  std::optional<Subset> selected;
  double worth = 0.0;
  Kind kind = Kind::kSelect;
};

using TraceSink = std::function<void(const TraceEvent&)>;

struct SolverOptions {
  double tolerance = kDefaultTolerance;
  // Safeguard on the number of iterations; 0 picks 2n + 2, which no correct
  // run can reach.
  int max_iterations = 0;
  Selection selection = Selection::kMin;
  // RoundUp only: false concentrates rows on argmin sets instead.
  bool maximize = true;
  // Break argmax ties uniformly at random instead of by lowest index.
  bool randomize_ties = false;
  uint64_t seed = 0;
  TraceSink trace;
};

struct SolveResult {
  std::optional<MembershipProfile> final_profile;
  Partition partition;
  // Blocks of the partition kept as the packing: the feasible, non-synthetic
  // ones.
  std::vector<Subset> packing;
  double total_weight = 0.0;
  // W at the final profile. Equals total_weight for partitions of supplied
  // sets; RoundUp in family mode may end at a non-exact vertex profile whose
  // worth exceeds any packing.
  double final_worth = 0.0;
  // W(q0) followed by W after every iteration.
  std::vector<double> worth_trace;
  int iterations = 0;
  bool local_maximizer = false;
  // Elements whose weight-proportional row was degenerate.
  std::vector<int> init_fallback;
};

// Concentrates every non-vertex row, in element order, on an argmax (argmin)
// of its conditional weights. Never decreases (increases) W.
SolveResult RoundUp(const SetFunction& w, MembershipProfile q0,
                    const SolverOptions& options = {});

// Block-selection search over the full power set; ends at a partition that is
// a local maximizer. Requires the all-or-none support condition on q0.
SolveResult LocalSearch(const SetFunction& w, MembershipProfile q0,
                        const SolverOptions& options = {});

// The cost-aware variant for feasible families: blocks are chosen on w/c and
// costs are recounted after every selection.
SolveResult LocalSearchWithCost(const SetFunction& w, MembershipProfile q0,
                                const SolverOptions& options = {});

struct InitialProfile {
  MembershipProfile profile;
  std::vector<int> fallback_elements;
};

// Uniform rows, or rows proportional to the positive part of `weights` over
// F_i. A row with no positive weight falls back to its singleton.
InitialProfile MakeInitialProfile(const SetFunction& weights, InitKind kind);

// No single element can raise W by moving its whole row onto another set.
// Vertex deviations suffice because W is linear in each row.
bool IsLocalMaximizer(const SetFunction& w, const MembershipProfile& q,
                      double tol = kDefaultTolerance);
bool IsLocalMaximizer(const SetFunction& w, const Partition& p,
                      double tol = kDefaultTolerance);

std::vector<Subset> ExtractPacking(const Family& family, const Partition& p);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kLocalSearch;
  InitKind init = InitKind::kWeightProportional;
  std::optional<MembershipProfile> initial_profile;  // for kExplicit
  SolverOptions options;
};

// Builds the initial profile and dispatches. Throws InfeasibleConfig for
// LocalSearch on a family-mode instance.
SolveResult Solve(const SetFunction& w, const SolverConfig& config);

}  // namespace nbpack

#endif  // NBPACK_SOLVERS_H_
