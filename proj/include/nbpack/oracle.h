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

#ifndef NBPACK_ORACLE_H_
#define NBPACK_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nbpack/cover.h"
#include "nbpack/set_function.h"

namespace nbpack {

struct OracleOptions {
  double tolerance = kDefaultTolerance;
  // Search-tree nodes allowed in family mode.
  int64_t node_limit = 10'000'000;
  bool collect_local_maximizers = true;
  // Single-element deviations the local-maximizer scan may evaluate before
  // it gives up (the report then carries no local-maximizer set).
  int64_t deviation_budget = 50'000'000;
};

struct OracleReport {
  Partition best_partition;
  double best_weight = 0.0;
  Partition worst_partition;
  double worst_weight = 0.0;
  std::optional<std::vector<Partition>> local_maximizers;
  int64_t count_enumerated = 0;
};

inline constexpr int kMaxOracleFullElements = 10;

// Calls fn on every partition of the ground set into feasible blocks, by
// branching on the smallest uncovered element. Throws SizeLimitExceeded past
// node_limit search nodes.
void ForEachFeasiblePartition(const Family& family, int64_t node_limit,
                              const std::function<void(const Partition&)>& fn);

// Exhaustive ground truth: extremes of the packing weight over all
// feasible-block partitions and, budget permitting, every partition that no
// single element can improve by switching sets. Full mode needs n <= 10.
OracleReport OracleBestPartition(const SetFunction& w,
                                 const OracleOptions& options = {});

}  // namespace nbpack

#endif  // NBPACK_ORACLE_H_
