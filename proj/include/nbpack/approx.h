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

#ifndef NBPACK_APPROX_H_
#define NBPACK_APPROX_H_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "nbpack/cover.h"
#include "nbpack/set_function.h"

namespace nbpack {

inline constexpr int kMaxEnumerationElements = 12;

// Bell numbers via the Bell triangle; exact for n <= 25.
uint64_t BellNumber(int n);

// Set partitions of {0..n-1} as restricted growth strings, in lexicographic
// order: labels[0] = 0 and labels[i] <= 1 + max(labels[0..i-1]).
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);

  const std::vector<int>& labels() const { return labels_; }
  Partition Current() const;
  // Advances to the next string; false once exhausted.
  bool Next();

 private:
  int n_;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

std::vector<Partition> EnumeratePartitions(int n);

enum class GaugeStrategy {
  // Minimum-norm solution of the normal equations.
  kMinimumNorm,
  // Singletons 2..n pinned to zero, remaining columns solved by QR.
  kPinnedSingletons,
};

struct ApproxResult {
  int k = 0;
  // Möbius values of the fitted set function on nonempty sets of size <= k.
  std::vector<std::pair<Subset, double>> mu;
  std::vector<Partition> partitions;  // enumeration order
  std::vector<double> values;         // F(p) = sum of w over blocks
  std::vector<double> fitted;         // F_k(p)
  double residual = 0.0;              // sum of squared errors
};

// Best least-squares approximation of the partition function of w by one
// whose set function has no Möbius mass above cardinality k. Full mode,
// 1 <= k <= n <= 8.
ApproxResult KDegreeApprox(const SetFunction& w, int k,
                           GaugeStrategy strategy = GaugeStrategy::kMinimumNorm);

}  // namespace nbpack

#endif  // NBPACK_APPROX_H_
