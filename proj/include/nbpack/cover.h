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

#ifndef NBPACK_COVER_H_
#define NBPACK_COVER_H_

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nbpack/set_function.h"
#include "nbpack/subset.h"

namespace nbpack {

// A partition of the ground set into nonempty, pairwise disjoint blocks,
// kept sorted by bits.
class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless blocks partition {0..n-1}.
  Partition(int n, std::vector<Subset> blocks);

  static Partition Finest(int n);

  int n() const { return n_; }
  std::span<const Subset> blocks() const { return blocks_; }
  // The block holding element i.
  Subset BlockOf(int i) const;
  std::string ToString() const;

  bool operator==(const Partition&) const = default;

 private:
  int n_ = 0;
  std::vector<Subset> blocks_;
};

// Sum of w over the blocks; every block must be feasible.
double PartitionWeight(const SetFunction& w, const Partition& p);

// A fuzzy cover: every element i holds a probability vector over F_i. Mass
// is stored column-wise, one contiguous slot per (member A, element of A),
// so both the row view (element) and the column view (member) are cheap.
class MembershipProfile {
 public:
  // All-zero masses; not a valid cover until every row is filled.
  explicit MembershipProfile(std::shared_ptr<const Family> family);

  static MembershipProfile Uniform(std::shared_ptr<const Family> family);
  // Row i concentrated on member choice[i], which must contain i.
  static MembershipProfile Vertex(std::shared_ptr<const Family> family,
                                  std::span<const int> choice);
  // Throws InvalidInput if some block is not feasible.
  static MembershipProfile FromPartition(std::shared_ptr<const Family> family,
                                         const Partition& p);

  const Family& family() const { return *family_; }
  const std::shared_ptr<const Family>& family_ptr() const { return family_; }
  int n() const { return family_->n(); }

  // Requires i ∈ member(a).
  double mass(int i, int a) const {
    return data_[offsets_[a] + family_->member(a).Rank(i)];
  }
  void set_mass(int i, int a, double value) {
    data_[offsets_[a] + family_->member(a).Rank(i)] = value;
  }
  // Masses of member(a)'s elements, in increasing element order.
  std::span<const double> column(int a) const {
    return {data_.data() + offsets_[a], data_.data() + offsets_[a + 1]};
  }

  // Row i aligned with family().Containing(i).
  std::vector<double> Row(int i) const;
  void SetRow(int i, std::span<const double> row);
  void ClearRow(int i);
  void Concentrate(int i, int a);
  double RowSum(int i) const;

  // Members of A carrying mass above tol on A.
  Subset SupportOn(int a, double tol) const;

  // The member row i is concentrated on, if the row is a vertex of its
  // simplex (one entry >= 1 - tol).
  std::optional<int> VertexChoice(int i, double tol) const;
  bool IsVertex(double tol) const;

  // Throws InvalidInput on negative entries or rows not summing to 1.
  void Validate(double tol) const;

 private:
  std::shared_ptr<const Family> family_;
  std::vector<int> offsets_;
  std::vector<double> data_;
};

// f^w(q^A): the multilinear extension of w at member a's column.
double ColumnWorth(const SetFunction& w, const MembershipProfile& q, int a);

// W after row i, currently concentrated on member `from`, moves all its mass
// to member `to`; `worth` is W before the move. Only the two affected columns
// are re-evaluated. `probe` is restored before returning.
double SwitchedWorth(const SetFunction& w, MembershipProfile& probe,
                     double worth, int i, int from, int to);

// Global worth W(q). Validates q first.
double Worth(const SetFunction& w, const MembershipProfile& q,
             double tol = kDefaultTolerance);
// Same sum without validation; rows may be zero.
double WorthUnchecked(const SetFunction& w, const MembershipProfile& q);

// Values of w_{q_{-i}} on F_i (the i-gradient of W at q).
struct GradientRow {
  int element = 0;
  std::vector<double> values;  // aligned with family().Containing(element)
};

// w_{q_{-i}}(A) for a single member A ∋ i; row i itself is ignored.
double ConditionalWeightAt(const SetFunction& w, const MembershipProfile& q,
                           int i, int a);
GradientRow ConditionalWeight(const SetFunction& w, const MembershipProfile& q,
                              int i);

struct WorthSplit {
  double own = 0.0;   // W_i(q_i | q_{-i}) = <q_i, w_{q_{-i}}>
  double rest = 0.0;  // W_{-i}(q_{-i})
};
WorthSplit WorthDecomposition(const SetFunction& w, const MembershipProfile& q,
                              int i);

// W(q with row i on A) - W(q with row i null), evaluated as two worths.
double Derivative(const SetFunction& w, const MembershipProfile& q, int i,
                  int a);

// For every member A, either no element or every element of A carries mass
// above tol on A. Necessary for exactness.
bool IsExactSupport(const MembershipProfile& q, double tol = kDefaultTolerance);

// Groups the elements of a vertex profile by the member they chose. Throws
// InvalidInput on a non-vertex row.
Partition InducedPartition(const MembershipProfile& q,
                           double tol = kDefaultTolerance);

}  // namespace nbpack

#endif  // NBPACK_COVER_H_
