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

#include "nbpack/games.h"

#include <numeric>
#include <string>

#include "nbpack/errors.h"

namespace nbpack {
namespace {

void RequireVertex(const MembershipProfile& q, double tol) {
  if (!q.IsVertex(tol)) {
    throw InvalidInput("game operations need a vertex profile");
  }
}

double CheckedOmegaSum(std::span<const double> omega, int n) {
  if (static_cast<int>(omega.size()) != n) {
    throw InvalidInput("need one omega weight per player");
  }
  double sum = 0.0;
  for (const double o : omega) {
    if (!(o > 0.0)) throw InvalidInput("omega weights must be positive");
    sum += o;
  }
  return sum;
}

}  // namespace

PayoffVector ShapleyPayoffs(const SetFunction& w, const MembershipProfile& q,
                            double tol) {
  if (w.family().mode() != Mode::kFull) {
    throw InvalidInput("Shapley payoffs need a full-mode instance");
  }
  RequireVertex(q, tol);
  const auto mu = w.mobius();
  PayoffVector payoff(w.n(), 0.0);
  const Partition partition = InducedPartition(q, tol);
  for (const Subset block : partition.blocks()) {
    ForEachSubsetOf(block, [&](Subset coalition) {
      if (coalition.empty()) return;
      const double share = mu[coalition.bits()] / coalition.size();
      ForEachElement(coalition, [&](int i) { payoff[i] += share; });
    });
  }
  return payoff;
}

PayoffVector ProportionalPayoffs(const SetFunction& w,
                                 const MembershipProfile& q,
                                 std::span<const double> omega, double tol) {
  RequireVertex(q, tol);
  const double total = CheckedOmegaSum(omega, w.n());
  const double worth = Worth(w, q, tol);
  PayoffVector payoff(w.n());
  for (int i = 0; i < w.n(); ++i) payoff[i] = omega[i] * worth / total;
  return payoff;
}

bool IsEquilibrium(const SetFunction& w, const MembershipProfile& q,
                   std::span<const double> omega, double tol) {
  RequireVertex(q, tol);
  const double total = CheckedOmegaSum(omega, w.n());
  const double worth = Worth(w, q, tol);
  MembershipProfile probe = q;
  for (int i = 0; i < w.n(); ++i) {
    const double share = omega[i] / total;
    const int current = *probe.VertexChoice(i, tol);
    for (const int a : w.family().Containing(i)) {
      if (a == current) continue;
      const double deviated = SwitchedWorth(w, probe, worth, i, current, a);
      // Compared in payoff units with the tolerance scaled alike, so the
      // verdict does not depend on omega.
      if (share * deviated > share * (worth + tol)) return false;
    }
  }
  return true;
}

}  // namespace nbpack
