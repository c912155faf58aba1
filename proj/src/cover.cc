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

#include "nbpack/cover.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "nbpack/errors.h"

namespace nbpack {

Partition::Partition(int n, std::vector<Subset> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  Subset seen;
  for (const Subset b : blocks_) {
    if (b.empty()) throw InvalidInput("partition block is empty");
    if (b.Intersects(seen)) {
      throw InvalidInput("partition blocks overlap at " + b.ToString());
    }
    seen = seen | b;
  }
  if (seen != Subset::Full(n)) {
    throw InvalidInput("partition blocks do not cover the ground set");
  }
  std::sort(blocks_.begin(), blocks_.end());
}

Partition Partition::Finest(int n) {
  std::vector<Subset> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(Subset::Singleton(i));
  return Partition(n, std::move(blocks));
}

Subset Partition::BlockOf(int i) const {
  for (const Subset b : blocks_) {
    if (b.contains(i)) return b;
  }
  return Subset();
}

std::string Partition::ToString() const {
  std::string s = "{";
  for (size_t k = 0; k < blocks_.size(); ++k) {
    if (k) s += ',';
    s += blocks_[k].ToString();
  }
  return s + "}";
}

double PartitionWeight(const SetFunction& w, const Partition& p) {
  double total = 0.0;
  for (const Subset b : p.blocks()) total += w.WeightOf(b);
  return total;
}

MembershipProfile::MembershipProfile(std::shared_ptr<const Family> family)
    : family_(std::move(family)) {
  offsets_.resize(family_->size() + 1);
  int offset = 0;
  for (int a = 0; a < family_->size(); ++a) {
    offsets_[a] = offset;
    offset += family_->member(a).size();
  }
  offsets_[family_->size()] = offset;
  data_.assign(offset, 0.0);
}

MembershipProfile MembershipProfile::Uniform(
    std::shared_ptr<const Family> family) {
  MembershipProfile q(std::move(family));
  for (int i = 0; i < q.n(); ++i) {
    const auto row = q.family().Containing(i);
    const double share = 1.0 / static_cast<double>(row.size());
    for (const int a : row) q.set_mass(i, a, share);
  }
  return q;
}

MembershipProfile MembershipProfile::Vertex(
    std::shared_ptr<const Family> family, std::span<const int> choice) {
  MembershipProfile q(std::move(family));
  if (static_cast<int>(choice.size()) != q.n()) {
    throw InvalidInput("vertex profile needs one choice per element");
  }
  for (int i = 0; i < q.n(); ++i) {
    if (choice[i] < 0 || choice[i] >= q.family().size() ||
        !q.family().member(choice[i]).contains(i)) {
      throw InvalidInput("element " + std::to_string(i + 1) +
                         " chose a set not containing it");
    }
    q.Concentrate(i, choice[i]);
  }
  return q;
}

MembershipProfile MembershipProfile::FromPartition(
    std::shared_ptr<const Family> family, const Partition& p) {
  if (p.n() != family->n()) {
    throw InvalidInput("partition and family disagree on n");
  }
  std::vector<int> choice(family->n());
  for (const Subset b : p.blocks()) {
    const auto a = family->IndexOf(b);
    if (!a) throw InvalidInput("block " + b.ToString() + " is not feasible");
    ForEachElement(b, [&](int i) { choice[i] = *a; });
  }
  return Vertex(std::move(family), choice);
}

std::vector<double> MembershipProfile::Row(int i) const {
  const auto members = family_->Containing(i);
  std::vector<double> row(members.size());
  for (size_t k = 0; k < members.size(); ++k) row[k] = mass(i, members[k]);
  return row;
}

void MembershipProfile::SetRow(int i, std::span<const double> row) {
  const auto members = family_->Containing(i);
  if (row.size() != members.size()) {
    throw InvalidInput("row length mismatch for element " +
                       std::to_string(i + 1));
  }
  for (size_t k = 0; k < members.size(); ++k) set_mass(i, members[k], row[k]);
}

void MembershipProfile::ClearRow(int i) {
  for (const int a : family_->Containing(i)) set_mass(i, a, 0.0);
}

void MembershipProfile::Concentrate(int i, int a) {
  ClearRow(i);
  set_mass(i, a, 1.0);
}

double MembershipProfile::RowSum(int i) const {
  double sum = 0.0;
  for (const int a : family_->Containing(i)) sum += mass(i, a);
  return sum;
}

Subset MembershipProfile::SupportOn(int a, double tol) const {
  const Subset set = family_->member(a);
  const auto col = column(a);
  Subset support;
  int k = 0;
  ForEachElement(set, [&](int i) {
    if (col[k++] > tol) support = support.With(i);
  });
  return support;
}

std::optional<int> MembershipProfile::VertexChoice(int i, double tol) const {
  for (const int a : family_->Containing(i)) {
    if (mass(i, a) >= 1.0 - tol) return a;
  }
  return std::nullopt;
}

bool MembershipProfile::IsVertex(double tol) const {
  for (int i = 0; i < n(); ++i) {
    if (!VertexChoice(i, tol)) return false;
  }
  return true;
}

void MembershipProfile::Validate(double tol) const {
  for (int i = 0; i < n(); ++i) {
    double sum = 0.0;
    for (const int a : family_->Containing(i)) {
      const double m = mass(i, a);
      if (!(m >= -tol)) {
        throw InvalidInput("negative membership of element " +
                           std::to_string(i + 1) + " on " +
                           family_->member(a).ToString());
      }
      sum += m;
    }
    if (std::abs(sum - 1.0) > tol) {
      throw InvalidInput("membership row of element " + std::to_string(i + 1) +
                         " sums to " + std::to_string(sum));
    }
  }
}

namespace {

// Product of the column entries of the elements of b (b ⊆ set).
double ColumnProduct(Subset set, std::span<const double> col, Subset b) {
  double product = 1.0;
  ForEachElement(b, [&](int j) { product *= col[set.Rank(j)]; });
  return product;
}

Subset NonzeroWithin(Subset set, std::span<const double> col) {
  Subset support;
  int k = 0;
  ForEachElement(set, [&](int i) {
    if (col[k++] != 0.0) support = support.With(i);
  });
  return support;
}

void CheckSameFamily(const SetFunction& w, const MembershipProfile& q) {
  if (&w.family() != &q.family()) {
    throw InvalidInput("set function and profile use different families");
  }
}

}  // namespace

double ColumnWorth(const SetFunction& w, const MembershipProfile& q, int a) {
  const Family& family = w.family();
  const Subset set = family.member(a);
  if (set.empty()) return 0.0;
  const auto col = q.column(a);
  const Subset support = NonzeroWithin(set, col);
  if (support.empty()) return 0.0;
  const auto mu = w.mobius();
  double value = 0.0;
  family.ForEachMemberWithin(support, [&](int b) {
    const Subset sub = family.member(b);
    if (!sub.empty()) value += mu[b] * ColumnProduct(set, col, sub);
  });
  return value;
}

double SwitchedWorth(const SetFunction& w, MembershipProfile& probe,
                     double worth, int i, int from, int to) {
  if (from == to) return worth;
  const double before = ColumnWorth(w, probe, from) + ColumnWorth(w, probe, to);
  const double from_mass = probe.mass(i, from);
  const double to_mass = probe.mass(i, to);
  probe.set_mass(i, from, 0.0);
  probe.set_mass(i, to, from_mass + to_mass);
  const double after = ColumnWorth(w, probe, from) + ColumnWorth(w, probe, to);
  probe.set_mass(i, from, from_mass);
  probe.set_mass(i, to, to_mass);
  return worth - before + after;
}

double WorthUnchecked(const SetFunction& w, const MembershipProfile& q) {
  CheckSameFamily(w, q);
  double total = 0.0;
  for (int a = 1; a < w.family().size(); ++a) total += ColumnWorth(w, q, a);
  return total;
}

double Worth(const SetFunction& w, const MembershipProfile& q, double tol) {
  q.Validate(tol);
  return WorthUnchecked(w, q);
}

double ConditionalWeightAt(const SetFunction& w, const MembershipProfile& q,
                           int i, int a) {
  const Family& family = w.family();
  const Subset set = family.member(a);
  const auto col = q.column(a);
  const Subset others = NonzeroWithin(set, col).Without(i);
  const auto mu = w.mobius();
  double value = 0.0;
  family.ForEachMemberWithin(others.With(i), [&](int b) {
    const Subset sub = family.member(b);
    if (sub.contains(i)) {
      value += mu[b] * ColumnProduct(set, col, sub.Without(i));
    }
  });
  return value;
}

GradientRow ConditionalWeight(const SetFunction& w, const MembershipProfile& q,
                              int i) {
  CheckSameFamily(w, q);
  GradientRow row;
  row.element = i;
  const auto members = w.family().Containing(i);
  row.values.reserve(members.size());
  for (const int a : members) {
    row.values.push_back(ConditionalWeightAt(w, q, i, a));
  }
  return row;
}

WorthSplit WorthDecomposition(const SetFunction& w, const MembershipProfile& q,
                              int i) {
  CheckSameFamily(w, q);
  WorthSplit split;
  for (const int a : w.family().Containing(i)) {
    const double m = q.mass(i, a);
    if (m != 0.0) split.own += m * ConditionalWeightAt(w, q, i, a);
  }
  MembershipProfile without = q;
  without.ClearRow(i);
  split.rest = WorthUnchecked(w, without);
  return split;
}

double Derivative(const SetFunction& w, const MembershipProfile& q, int i,
                  int a) {
  MembershipProfile upper = q;
  upper.Concentrate(i, a);
  MembershipProfile lower = q;
  lower.ClearRow(i);
  return WorthUnchecked(w, upper) - WorthUnchecked(w, lower);
}

bool IsExactSupport(const MembershipProfile& q, double tol) {
  for (int a = 1; a < q.family().size(); ++a) {
    const Subset support = q.SupportOn(a, tol);
    if (!support.empty() && support != q.family().member(a)) return false;
  }
  return true;
}

Partition InducedPartition(const MembershipProfile& q, double tol) {
  std::map<int, Subset> groups;
  for (int i = 0; i < q.n(); ++i) {
    const auto choice = q.VertexChoice(i, tol);
    if (!choice) {
      throw InvalidInput("element " + std::to_string(i + 1) +
                         " is not at a vertex of its simplex");
    }
    groups[*choice] = groups[*choice].With(i);
  }
  std::vector<Subset> blocks;
  blocks.reserve(groups.size());
  for (const auto& [a, group] : groups) blocks.push_back(group);
  return Partition(q.n(), std::move(blocks));
}

}  // namespace nbpack
