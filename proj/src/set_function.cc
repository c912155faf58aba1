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

#include "nbpack/set_function.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "nbpack/errors.h"

namespace nbpack {

std::shared_ptr<const Family> Family::MakeFull(int n) {
  if (n < 1) throw InvalidInput("ground set must have at least one element");
  if (n > kMaxFullElements) {
    throw SizeLimitExceeded("full mode supports n <= " +
                            std::to_string(kMaxFullElements) + ", got " +
                            std::to_string(n));
  }
  auto family = std::shared_ptr<Family>(new Family());
  family->n_ = n;
  family->mode_ = Mode::kFull;
  const uint64_t count = uint64_t{1} << n;
  family->members_.reserve(count);
  for (uint64_t bits = 0; bits < count; ++bits) {
    family->members_.emplace_back(bits);
  }
  family->synthetic_.assign(count, false);
  family->BuildIndexes();
  return family;
}

std::shared_ptr<const Family> Family::MakeClosed(int n,
                                                 std::span<const Subset> sets) {
  if (n < 1) throw InvalidInput("ground set must have at least one element");
  if (n > kMaxElements) {
    throw SizeLimitExceeded("family mode supports n <= " +
                            std::to_string(kMaxElements));
  }
  const Subset ground = Subset::Full(n);
  std::vector<Subset> members(sets.begin(), sets.end());
  for (const Subset s : members) {
    if (!s.IsSubsetOf(ground)) {
      throw InvalidInput("feasible set " + s.ToString() +
                         " leaves the ground set");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Subset> closure;
  closure.emplace_back(0);
  for (int i = 0; i < n; ++i) closure.push_back(Subset::Singleton(i));
  const std::vector<Subset> supplied = members;
  for (const Subset s : closure) {
    if (!std::binary_search(members.begin(), members.end(), s)) {
      members.push_back(s);
    }
  }
  std::sort(members.begin(), members.end());
  if (static_cast<int>(members.size()) > kMaxMembers) {
    throw SizeLimitExceeded("family mode supports |F| <= " +
                            std::to_string(kMaxMembers) + " after closure");
  }

  auto family = std::shared_ptr<Family>(new Family());
  family->n_ = n;
  family->mode_ = Mode::kFamily;
  family->members_ = std::move(members);
  family->synthetic_.resize(family->members_.size());
  for (size_t a = 0; a < family->members_.size(); ++a) {
    family->synthetic_[a] = !std::binary_search(
        supplied.begin(), supplied.end(), family->members_[a]);
  }
  family->BuildIndexes();
  return family;
}

void Family::BuildIndexes() {
  containing_.assign(n_, {});
  for (int a = 0; a < size(); ++a) {
    ForEachElement(members_[a], [&](int i) { containing_[i].push_back(a); });
  }
  by_cardinality_.resize(members_.size());
  for (int a = 0; a < size(); ++a) by_cardinality_[a] = a;
  std::stable_sort(by_cardinality_.begin(), by_cardinality_.end(),
                   [&](int x, int y) {
                     return members_[x].size() < members_[y].size();
                   });
  if (mode_ == Mode::kFamily) {
    index_.reserve(members_.size());
    for (int a = 0; a < size(); ++a) index_.emplace(members_[a].bits(), a);
  }
}

std::optional<int> Family::IndexOf(Subset s) const {
  if (mode_ == Mode::kFull) {
    if (!s.IsSubsetOf(ground())) return std::nullopt;
    return static_cast<int>(s.bits());
  }
  const auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void CheckTableSize(const Family& family, size_t size, const char* what) {
  if (size != static_cast<size_t>(family.size())) {
    throw InvalidInput(std::string(what) + " table has " +
                       std::to_string(size) + " entries, family has " +
                       std::to_string(family.size()));
  }
}

}  // namespace

std::vector<double> MobiusInversion(const Family& family,
                                    std::span<const double> weights) {
  CheckTableSize(family, weights.size(), "weight");
  if (weights[0] != 0.0) {
    throw InvalidInput("w(empty set) must be 0");
  }
  std::vector<double> mu(weights.begin(), weights.end());
  if (family.mode() == Mode::kFull) {
    const size_t count = mu.size();
    for (int d = 0; d < family.n(); ++d) {
      const size_t bit = size_t{1} << d;
      for (size_t s = 0; s < count; ++s) {
        if (s & bit) mu[s] -= mu[s ^ bit];
      }
    }
    return mu;
  }
  for (const int a : family.ByCardinality()) {
    double below = 0.0;
    family.ForEachMemberWithin(family.member(a), [&](int b) {
      if (b != a) below += mu[b];
    });
    mu[a] = weights[a] - below;
  }
  return mu;
}

std::vector<double> ZetaTransform(const Family& family,
                                  std::span<const double> mobius) {
  CheckTableSize(family, mobius.size(), "mobius");
  if (family.mode() == Mode::kFull) {
    std::vector<double> w(mobius.begin(), mobius.end());
    const size_t count = w.size();
    for (int d = 0; d < family.n(); ++d) {
      const size_t bit = size_t{1} << d;
      for (size_t s = 0; s < count; ++s) {
        if (s & bit) w[s] += w[s ^ bit];
      }
    }
    return w;
  }
  std::vector<double> w(mobius.size(), 0.0);
  for (int a = 0; a < family.size(); ++a) {
    double sum = 0.0;
    family.ForEachMemberWithin(family.member(a),
                               [&](int b) { sum += mobius[b]; });
    w[a] = sum;
  }
  return w;
}

SetFunction::SetFunction(std::shared_ptr<const Family> family,
                         std::vector<double> weights)
    : family_(std::move(family)), weights_(std::move(weights)) {
  CheckTableSize(*family_, weights_.size(), "weight");
  if (weights_[0] != 0.0) throw InvalidInput("w(empty set) must be 0");
  for (int a = 0; a < family_->size(); ++a) {
    if (!std::isfinite(weights_[a])) {
      throw InvalidInput("non-finite weight on " +
                         family_->member(a).ToString());
    }
    if (family_->mode() == Mode::kFamily && weights_[a] < 0.0) {
      throw InvalidInput("negative weight on " + family_->member(a).ToString() +
                         " (family mode requires w >= 0)");
    }
  }
}

double SetFunction::WeightOf(Subset s) const {
  const auto a = family_->IndexOf(s);
  if (!a) throw InvalidInput(s.ToString() + " is not a feasible set");
  return weights_[*a];
}

void SetFunction::set_weight(int a, double value) {
  if (a == 0 && value != 0.0) throw InvalidInput("w(empty set) must be 0");
  if (!std::isfinite(value) ||
      (family_->mode() == Mode::kFamily && value < 0.0)) {
    throw InvalidInput("invalid weight for " + family_->member(a).ToString());
  }
  weights_[a] = value;
  mobius_valid_ = false;
}

std::span<const double> SetFunction::mobius() const {
  if (!mobius_valid_) {
    mobius_ = MobiusInversion(*family_, weights_);
    mobius_valid_ = true;
  }
  return mobius_;
}

double SetFunction::MobiusSumWithin(Subset s) const {
  const auto mu = mobius();
  double sum = 0.0;
  family_->ForEachMemberWithin(s, [&](int b) { sum += mu[b]; });
  return sum;
}

CostFunction::CostFunction(const Family& family)
    : costs_(family.size(), 0), active_(family.size(), 1) {
  Recount(family);
}

void CostFunction::UpdateAfterBlock(const Family& family, Subset block) {
  if (block.empty()) return;
  for (int a = 0; a < family.size(); ++a) {
    if (family.member(a).Intersects(block)) active_[a] = 0;
  }
  Recount(family);
}

void CostFunction::Recount(const Family& family) {
  if (family.mode() == Mode::kFull) {
    // below[S] = number of active nonempty members inside S.
    const size_t count = family.size();
    std::vector<int> below(count, 0);
    for (size_t s = 1; s < count; ++s) below[s] = active_[s] ? 1 : 0;
    for (int d = 0; d < family.n(); ++d) {
      const size_t bit = size_t{1} << d;
      for (size_t s = 0; s < count; ++s) {
        if (s & bit) below[s] += below[s ^ bit];
      }
    }
    const uint64_t ground = family.ground().bits();
    const int total = below[ground];
    for (size_t a = 1; a < count; ++a) {
      if (active_[a]) costs_[a] = total - below[ground & ~a];
    }
    return;
  }
  std::vector<int> live;
  for (int a = 1; a < family.size(); ++a) {
    if (active_[a] && !family.member(a).empty()) live.push_back(a);
  }
  for (const int a : live) {
    const Subset s = family.member(a);
    int c = 0;
    for (const int b : live) c += family.member(b).Intersects(s) ? 1 : 0;
    costs_[a] = c;
  }
}

CostFunction ComputeCosts(const Family& family) { return CostFunction(family); }

void UpdateCostsAfterBlock(const Family& family, Subset block,
                           CostFunction& costs) {
  costs.UpdateAfterBlock(family, block);
}

SetFunction CostAdjusted(const SetFunction& w, const CostFunction& costs) {
  const Family& family = w.family();
  std::vector<double> adjusted(family.size(), 0.0);
  for (int a = 1; a < family.size(); ++a) {
    adjusted[a] = w.weight(a) / costs.cost(a);
  }
  return SetFunction(w.family_ptr(), std::move(adjusted));
}

}  // namespace nbpack
