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

// Instance generators and slow reference computations shared by the tests.
// The references deliberately avoid the library's transforms.

#ifndef NBPACK_TESTS_TEST_UTIL_H_
#define NBPACK_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "nbpack/cover.h"
#include "nbpack/set_function.h"
#include "nbpack/subset.h"

namespace nbpack::testing {

using Rng = std::mt19937_64;

inline double Uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// three-player instance: three players, singletons 0.2, pairs 0.8/0.3/0.6, N 0.7.
inline SetFunction ThreePlayers() {
  std::vector<double> w = {0.0, 0.2, 0.2, 0.8, 0.2, 0.3, 0.6, 0.7};
  return SetFunction(Family::MakeFull(3), std::move(w));
}

// N = {1,2,3,4} with weight 3, {4} with weight 2 and the three pairs inside
// {1,2,3} with weight 1.
inline SetFunction FourElementFamily() {
  const std::vector<Subset> sets = {Subset::Full(4), Subset::Singleton(3),
                                    Subset(0b0011), Subset(0b0101),
                                    Subset(0b0110)};
  auto family = Family::MakeClosed(4, sets);
  std::vector<double> w(family->size(), 0.0);
  for (int a = 0; a < family->size(); ++a) {
    const Subset s = family->member(a);
    if (s == Subset::Full(4)) w[a] = 3.0;
    else if (s == Subset::Singleton(3)) w[a] = 2.0;
    else if (s.size() == 2) w[a] = 1.0;
  }
  return SetFunction(family, std::move(w));
}

inline SetFunction RandomFull(int n, Rng& rng, double lo = 0.0,
                              double hi = 1.0) {
  std::vector<double> w(size_t{1} << n);
  for (size_t a = 1; a < w.size(); ++a) w[a] = Uniform(rng, lo, hi);
  return SetFunction(Family::MakeFull(n), std::move(w));
}

// Up to `extra` random non-singleton sets plus the closure.
inline SetFunction RandomFamily(int n, int extra, Rng& rng) {
  std::vector<Subset> sets;
  for (int k = 0; k < extra; ++k) {
    uint64_t bits = 0;
    while (std::popcount(bits) < 2) {
      bits = std::uniform_int_distribution<uint64_t>(1, (uint64_t{1} << n) - 1)(rng);
    }
    sets.push_back(Subset(bits));
  }
  auto family = Family::MakeClosed(n, sets);
  std::vector<double> w(family->size(), 0.0);
  for (int a = 1; a < family->size(); ++a) {
    const Subset s = family->member(a);
    w[a] = s.size() == 1 ? Uniform(rng, 0.0, 0.5) : Uniform(rng, 0.0, double(s.size()));
  }
  return SetFunction(family, std::move(w));
}

inline MembershipProfile RandomProfile(std::shared_ptr<const Family> family,
                                       Rng& rng) {
  MembershipProfile q(family);
  for (int i = 0; i < family->n(); ++i) {
    std::vector<double> row(family->Containing(i).size());
    double total = 0.0;
    for (double& x : row) total += (x = Uniform(rng, 0.01, 1.0));
    for (double& x : row) x /= total;
    q.SetRow(i, row);
  }
  return q;
}

// choice[i] is a member index containing i.
inline std::vector<int> RandomChoice(const Family& family, Rng& rng) {
  std::vector<int> choice(family.n());
  for (int i = 0; i < family.n(); ++i) {
    const auto f = family.Containing(i);
    choice[i] = f[UniformInt(rng, 0, static_cast<int>(f.size()) - 1)];
  }
  return choice;
}

// mu(A) = sum over B ⊆ A of (-1)^{|A \ B|} w(B), full mode only.
inline std::vector<double> AlternatingSumMobius(std::span<const double> w) {
  std::vector<double> mu(w.size(), 0.0);
  for (uint64_t a = 0; a < w.size(); ++a) {
    uint64_t b = a;
    while (true) {
      const int sign = std::popcount(a & ~b) % 2 == 0 ? 1 : -1;
      mu[a] += sign * w[b];
      if (b == 0) break;
      b = (b - 1) & a;
    }
  }
  return mu;
}

// Möbius values over any family by the defining recursion, scanning all
// members for every set.
inline std::vector<double> NaiveMobius(const SetFunction& w) {
  const Family& f = w.family();
  std::vector<int> order(f.size());
  for (int a = 0; a < f.size(); ++a) order[a] = a;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return f.member(x).size() < f.member(y).size();
  });
  std::vector<double> mu(f.size(), 0.0);
  for (int a : order) {
    double below = 0.0;
    for (int b = 0; b < f.size(); ++b) {
      if (b != a && f.member(b).IsSubsetOf(f.member(a))) below += mu[b];
    }
    mu[a] = w.weight(a) - below;
  }
  return mu;
}

// sum over feasible B ⊆ s of mu(B), by scanning.
inline double NaiveMobiusSum(const SetFunction& w, std::span<const double> mu,
                             Subset s) {
  double total = 0.0;
  for (int b = 0; b < w.family().size(); ++b) {
    if (w.family().member(b).IsSubsetOf(s)) total += mu[b];
  }
  return total;
}

// W(q) straight from the polynomial form.
inline double NaiveWorth(const SetFunction& w, const MembershipProfile& q) {
  const Family& f = w.family();
  const auto mu = NaiveMobius(w);
  double total = 0.0;
  for (int a = 1; a < f.size(); ++a) {
    const Subset s = f.member(a);
    for (int b = 1; b < f.size(); ++b) {
      const Subset t = f.member(b);
      if (!t.IsSubsetOf(s)) continue;
      double term = mu[b];
      for (int j : t.Elements()) term *= q.mass(j, a);
      total += term;
    }
  }
  return total;
}

// Worth of the vertex profile where element i sits on member choice[i].
inline double NaiveVertexWorth(const SetFunction& w, std::span<const double> mu,
                               std::span<const int> choice) {
  const Family& f = w.family();
  double total = 0.0;
  for (int a = 1; a < f.size(); ++a) {
    uint64_t bits = 0;
    for (int i = 0; i < f.n(); ++i) {
      if (choice[i] == a) bits |= uint64_t{1} << i;
    }
    if (bits != 0) total += NaiveMobiusSum(w, mu, Subset(bits));
  }
  return total;
}

// No element can strictly raise the vertex worth by choosing another member.
inline bool NaiveIsLocalMax(const SetFunction& w, std::span<const double> mu,
                            std::vector<int> choice, double tol) {
  const double base = NaiveVertexWorth(w, mu, choice);
  for (int i = 0; i < w.n(); ++i) {
    const int keep = choice[i];
    for (int a : w.family().Containing(i)) {
      if (a == keep) continue;
      choice[i] = a;
      const bool better = NaiveVertexWorth(w, mu, choice) > base + tol;
      choice[i] = keep;
      if (better) return false;
    }
  }
  return true;
}

// Calls fn on every vertex choice vector (odometer order).
inline void ForEachChoice(const Family& family,
                          const std::function<void(const std::vector<int>&)>& fn) {
  const int n = family.n();
  std::vector<size_t> digit(n, 0);
  std::vector<int> choice(n);
  for (int i = 0; i < n; ++i) choice[i] = family.Containing(i)[0];
  while (true) {
    fn(choice);
    int i = 0;
    while (i < n) {
      if (++digit[i] < family.Containing(i).size()) {
        choice[i] = family.Containing(i)[digit[i]];
        break;
      }
      digit[i] = 0;
      choice[i] = family.Containing(i)[0];
      ++i;
    }
    if (i == n) return;
  }
}

// Set partitions by inserting each element into an existing block or a new
// one; independent of the restricted-growth enumerator.
inline void ForEachPartitionNaive(
    int n, const std::function<void(const std::vector<Subset>&)>& fn) {
  std::vector<Subset> blocks;
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      fn(blocks);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      const Subset keep = blocks[b];
      blocks[b] = keep.With(i);
      place(i + 1);
      blocks[b] = keep;
    }
    blocks.push_back(Subset::Singleton(i));
    place(i + 1);
    blocks.pop_back();
  };
  place(0);
}

// Bell numbers from the Stirling-number recurrence.
inline uint64_t StirlingBell(int n) {
  std::vector<std::vector<uint64_t>> s(n + 1, std::vector<uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

}  // namespace nbpack::testing

#endif  // NBPACK_TESTS_TEST_UTIL_H_
