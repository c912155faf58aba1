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

#include "nbpack/oracle.h"

#include <string>

#include "nbpack/approx.h"
#include "nbpack/errors.h"

namespace nbpack {
namespace {

void Branch(const Family& family, Subset covered, std::vector<Subset>& blocks,
            int64_t node_limit, int64_t& nodes,
            const std::function<void(const Partition&)>& fn) {
  if (++nodes > node_limit) {
    throw SizeLimitExceeded("oracle search exceeded " +
                            std::to_string(node_limit) + " nodes");
  }
  const Subset open = family.ground() - covered;
  if (open.empty()) {
    fn(Partition(family.n(), blocks));
    return;
  }
  const int e = open.First();
  for (const int a : family.Containing(e)) {
    const Subset block = family.member(a);
    if (block.Intersects(covered)) continue;
    blocks.push_back(block);
    Branch(family, covered | block, blocks, node_limit, nodes, fn);
    blocks.pop_back();
  }
}

// Every single-element switch to another feasible set, each worth
// re-evaluated on the switched profile.
bool NoImprovingSwitch(const SetFunction& w, const Partition& p, double tol) {
  MembershipProfile probe = MembershipProfile::FromPartition(w.family_ptr(), p);
  const double worth = WorthUnchecked(w, probe);
  for (int i = 0; i < w.n(); ++i) {
    const int current = *w.family().IndexOf(p.BlockOf(i));
    for (const int a : w.family().Containing(i)) {
      if (SwitchedWorth(w, probe, worth, i, current, a) > worth + tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

void ForEachFeasiblePartition(const Family& family, int64_t node_limit,
                              const std::function<void(const Partition&)>& fn) {
  std::vector<Subset> blocks;
  int64_t nodes = 0;
  Branch(family, Subset(), blocks, node_limit, nodes, fn);
}

OracleReport OracleBestPartition(const SetFunction& w,
                                 const OracleOptions& options) {
  const Family& family = w.family();
  if (family.mode() == Mode::kFull && family.n() > kMaxOracleFullElements) {
    throw SizeLimitExceeded("oracle supports full mode up to n = " +
                            std::to_string(kMaxOracleFullElements));
  }
  int64_t deviations_per_partition = 0;
  for (int i = 0; i < family.n(); ++i) {
    deviations_per_partition += static_cast<int64_t>(family.Containing(i).size());
  }

  OracleReport report;
  bool first = true;
  bool collect = options.collect_local_maximizers;
  int64_t spent = 0;
  std::vector<Partition> maximizers;
  const auto visit = [&](const Partition& p) {
    const double weight = PartitionWeight(w, p);
    ++report.count_enumerated;
    if (first || weight > report.best_weight) {
      report.best_weight = weight;
      report.best_partition = p;
    }
    if (first || weight < report.worst_weight) {
      report.worst_weight = weight;
      report.worst_partition = p;
    }
    first = false;
    if (!collect) return;
    spent += deviations_per_partition;
    if (spent > options.deviation_budget) {
      collect = false;
      maximizers.clear();
      return;
    }
    if (NoImprovingSwitch(w, p, options.tolerance)) maximizers.push_back(p);
  };

  if (family.mode() == Mode::kFull) {
    PartitionEnumerator e(family.n());
    do {
      visit(e.Current());
    } while (e.Next());
  } else {
    ForEachFeasiblePartition(family, options.node_limit, visit);
  }
  if (collect) report.local_maximizers = std::move(maximizers);
  return report;
}

}  // namespace nbpack
