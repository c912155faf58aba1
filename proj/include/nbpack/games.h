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

#ifndef NBPACK_GAMES_H_
#define NBPACK_GAMES_H_

#include <span>
#include <vector>

#include "nbpack/cover.h"
#include "nbpack/set_function.h"

namespace nbpack {

using PayoffVector = std::vector<double>;

// Shapley value of w inside each block of the partition induced by the
// vertex profile q: each coalition's Möbius mass is split evenly among its
// members. Full mode only.
PayoffVector ShapleyPayoffs(const SetFunction& w, const MembershipProfile& q,
                            double tol = kDefaultTolerance);

// pi_i = omega_i * W(q) / sum(omega). All weights must be positive.
PayoffVector ProportionalPayoffs(const SetFunction& w,
                                 const MembershipProfile& q,
                                 std::span<const double> omega,
                                 double tol = kDefaultTolerance);

// No player can raise its proportional payoff by switching to another pure
// strategy (another set containing it) while the others stay put.
bool IsEquilibrium(const SetFunction& w, const MembershipProfile& q,
                   std::span<const double> omega,
                   double tol = kDefaultTolerance);

}  // namespace nbpack

#endif  // NBPACK_GAMES_H_
