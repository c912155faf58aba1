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

#include "nbpack/approx.h"

#include <Eigen/Dense>
#include <string>

#include "nbpack/errors.h"

namespace nbpack {

uint64_t BellNumber(int n) {
  if (n < 0 || n > 25) throw InvalidInput("BellNumber needs 0 <= n <= 25");
  std::vector<uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<uint64_t> next{row.back()};
    for (const uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

PartitionEnumerator::PartitionEnumerator(int n)
    : n_(n), labels_(n, 0), prefix_max_(n, 0) {
  if (n < 1 || n > kMaxEnumerationElements) {
    throw SizeLimitExceeded("partition enumeration supports 1 <= n <= " +
                            std::to_string(kMaxEnumerationElements));
  }
}

Partition PartitionEnumerator::Current() const {
  std::vector<Subset> blocks(prefix_max_.back() + 1);
  for (int i = 0; i < n_; ++i) blocks[labels_[i]] = blocks[labels_[i]].With(i);
  return Partition(n_, std::move(blocks));
}

bool PartitionEnumerator::Next() {
  for (int i = n_ - 1; i >= 1; --i) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (int j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::vector<Partition> EnumeratePartitions(int n) {
  std::vector<Partition> out;
  PartitionEnumerator e(n);
  do {
    out.push_back(e.Current());
  } while (e.Next());
  return out;
}

ApproxResult KDegreeApprox(const SetFunction& w, int k,
                           GaugeStrategy strategy) {
  const Family& family = w.family();
  const int n = family.n();
  if (family.mode() != Mode::kFull) {
    throw InvalidInput("k-degree approximation needs a full-mode instance");
  }
  if (n > 8) throw SizeLimitExceeded("k-degree approximation needs n <= 8");
  if (k < 1 || k > n) {
    throw InvalidInput("k must satisfy 1 <= k <= n, got " + std::to_string(k));
  }

  std::vector<Subset> columns;
  std::vector<int> column_of(family.size(), -1);
  for (int a = 1; a < family.size(); ++a) {
    if (family.member(a).size() <= k) {
      column_of[a] = static_cast<int>(columns.size());
      columns.push_back(family.member(a));
    }
  }

  ApproxResult result;
  result.k = k;
  result.partitions = EnumeratePartitions(n);
  const int rows = static_cast<int>(result.partitions.size());
  const int cols = static_cast<int>(columns.size());
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd target(rows);
  for (int r = 0; r < rows; ++r) {
    const Partition& p = result.partitions[r];
    target(r) = PartitionWeight(w, p);
    for (const Subset block : p.blocks()) {
      ForEachSubsetOf(block, [&](Subset sub) {
        const int c = column_of[sub.bits()];
        if (!sub.empty() && c >= 0) design(r, c) = 1.0;
      });
    }
  }

  Eigen::VectorXd solution = Eigen::VectorXd::Zero(cols);
  if (strategy == GaugeStrategy::kMinimumNorm) {
    const Eigen::MatrixXd normal = design.transpose() * design;
    const Eigen::VectorXd rhs = design.transpose() * target;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(normal);
    cod.setThreshold(1e-10);
    solution = cod.solve(rhs);
  } else {
    std::vector<int> kept;
    for (int c = 0; c < cols; ++c) {
      if (!(columns[c].size() == 1 && columns[c].First() > 0)) kept.push_back(c);
    }
    Eigen::MatrixXd reduced(rows, static_cast<Eigen::Index>(kept.size()));
    for (size_t c = 0; c < kept.size(); ++c) {
      reduced.col(static_cast<Eigen::Index>(c)) = design.col(kept[c]);
    }
    const Eigen::VectorXd partial = reduced.colPivHouseholderQr().solve(target);
    for (size_t c = 0; c < kept.size(); ++c) {
      solution(kept[c]) = partial(static_cast<Eigen::Index>(c));
    }
  }

  const Eigen::VectorXd fitted = design * solution;
  result.values.assign(target.data(), target.data() + rows);
  result.fitted.assign(fitted.data(), fitted.data() + rows);
  result.residual = (target - fitted).squaredNorm();
  result.mu.reserve(cols);
  for (int c = 0; c < cols; ++c) result.mu.emplace_back(columns[c], solution(c));
  return result;
}

}  // namespace nbpack
