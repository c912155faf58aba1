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

#ifndef NBPACK_SET_FUNCTION_H_
#define NBPACK_SET_FUNCTION_H_

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "nbpack/subset.h"

namespace nbpack {

enum class Mode { kFull, kFamily };

// The feasible family F. In full mode F = 2^N and member index == bits. In
// family mode members are sorted by bits; the closure always contains the
// empty set and every singleton, the ones not supplied by the caller being
// flagged as synthetic.
class Family {
 public:
  static constexpr int kMaxFullElements = 16;
  static constexpr int kMaxMembers = 4096;

  static std::shared_ptr<const Family> MakeFull(int n);
  // Duplicate members collapse into one.
  static std::shared_ptr<const Family> MakeClosed(int n,
                                                  std::span<const Subset> sets);

  int n() const { return n_; }
  Mode mode() const { return mode_; }
  int size() const { return static_cast<int>(members_.size()); }
  Subset member(int a) const { return members_[a]; }
  std::span<const Subset> members() const { return members_; }
  bool synthetic(int a) const { return synthetic_[a]; }
  Subset ground() const { return Subset::Full(n_); }

  std::optional<int> IndexOf(Subset s) const;
  // F_i as ascending member indices (ascending bits as well).
  std::span<const int> Containing(int i) const { return containing_[i]; }
  // Member indices ordered by (cardinality, bits).
  std::span<const int> ByCardinality() const { return by_cardinality_; }

  // Calls fn(a) for every member a with member(a) ⊆ s, the empty set
  // included. Order is unspecified.
  template <typename Fn>
  void ForEachMemberWithin(Subset s, Fn&& fn) const {
    if (mode_ == Mode::kFull) {
      ForEachSubsetOf(s, [&](Subset sub) { fn(static_cast<int>(sub.bits())); });
      return;
    }
    if (s.size() < 20 && (int64_t{1} << s.size()) <= size()) {
      ForEachSubsetOf(s, [&](Subset sub) {
        const auto it = index_.find(sub.bits());
        if (it != index_.end()) fn(it->second);
      });
      return;
    }
    for (int a = 0; a < size(); ++a) {
      if (members_[a].IsSubsetOf(s)) fn(a);
    }
  }

 private:
  Family() = default;
  void BuildIndexes();

  int n_ = 0;
  Mode mode_ = Mode::kFull;
  std::vector<Subset> members_;
  std::vector<bool> synthetic_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> by_cardinality_;
  std::unordered_map<uint64_t, int> index_;  // family mode only
};

// Möbius inversion over the feasible family: the unique mu with
// w(A) = sum over feasible B ⊆ A of mu(B). Full mode uses the in-place subset
// transform, family mode the recursion in increasing cardinality.
// Throws InvalidInput if w(∅) != 0.
std::vector<double> MobiusInversion(const Family& family,
                                    std::span<const double> weights);

// Inverse of MobiusInversion: w(A) = sum over feasible B ⊆ A of mu(B).
std::vector<double> ZetaTransform(const Family& family,
                                  std::span<const double> mobius);

// A set function over a feasible family, with lazily cached Möbius values.
// Weights must be finite, w(∅) = 0, and nonnegative in family mode.
class SetFunction {
 public:
  SetFunction(std::shared_ptr<const Family> family,
              std::vector<double> weights);

  const Family& family() const { return *family_; }
  const std::shared_ptr<const Family>& family_ptr() const { return family_; }
  int n() const { return family_->n(); }

  double weight(int a) const { return weights_[a]; }
  // Throws InvalidInput if s is not feasible.
  double WeightOf(Subset s) const;
  std::span<const double> weights() const { return weights_; }
  void set_weight(int a, double value);

  std::span<const double> mobius() const;
  // Sum of mu(B) over feasible B ⊆ s. Equals w(s) when s is feasible.
  double MobiusSumWithin(Subset s) const;

 private:
  std::shared_ptr<const Family> family_;
  std::vector<double> weights_;
  mutable std::vector<double> mobius_;
  mutable bool mobius_valid_ = false;
};

// c(A) = number of active nonempty members meeting A. Members start active;
// UpdateAfterBlock deactivates every member meeting the selected block and
// recounts the costs of those still active. Costs of inactive members are
// frozen at their last value.
class CostFunction {
 public:
  explicit CostFunction(const Family& family);

  int cost(int a) const { return costs_[a]; }
  bool active(int a) const { return active_[a]; }
  std::span<const int> costs() const { return costs_; }

  void UpdateAfterBlock(const Family& family, Subset block);

 private:
  void Recount(const Family& family);

  std::vector<int> costs_;
  std::vector<char> active_;
};

CostFunction ComputeCosts(const Family& family);
void UpdateCostsAfterBlock(const Family& family, Subset block,
                           CostFunction& costs);

// The cost-adjusted set function w/c; zero on the empty set.
SetFunction CostAdjusted(const SetFunction& w, const CostFunction& costs);

}  // namespace nbpack

#endif  // NBPACK_SET_FUNCTION_H_
