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

#ifndef NBPACK_SUBSET_H_
#define NBPACK_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nbpack {

inline constexpr int kMaxElements = 64;
inline constexpr double kDefaultTolerance = 1e-9;

// A subset of the ground set {0, ..., n-1}, stored as a bit mask. Element i
// is a member iff bit i is set. Elements are 0-based internally; everything
// user facing (JSON, strings) is 1-based.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint64_t bits) : bits_(bits) {}

  static constexpr Subset Singleton(int i) { return Subset(uint64_t{1} << i); }
  static constexpr Subset Full(int n) {
    return Subset(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  // Throws std::invalid_argument on elements outside [1, n] or duplicates.
  static Subset FromOneBased(std::span<const int> elements, int n);

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Lowest member; undefined on the empty set.
  constexpr int First() const { return std::countr_zero(bits_); }
  // Number of members strictly smaller than i.
  constexpr int Rank(int i) const {
    return std::popcount(bits_ & ((uint64_t{1} << i) - 1));
  }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset Without(int i) const {
    return Subset(bits_ & ~(uint64_t{1} << i));
  }
  constexpr Subset With(int i) const {
    return Subset(bits_ | (uint64_t{1} << i));
  }

  std::vector<int> Elements() const;
  std::vector<int> OneBased() const;
  // "{1,3}" style, 1-based.
  std::string ToString() const;

  constexpr auto operator<=>(const Subset&) const = default;

 private:
  uint64_t bits_ = 0;
};

// Calls fn(sub) for every sub ⊆ s, including s itself and the empty set, in
// decreasing bit order.
template <typename Fn>
void ForEachSubsetOf(Subset s, Fn&& fn) {
  uint64_t sub = s.bits();
  while (true) {
    fn(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

// Calls fn(i) for each member of s in increasing order.
template <typename Fn>
void ForEachElement(Subset s, Fn&& fn) {
  for (uint64_t b = s.bits(); b != 0; b &= b - 1) fn(std::countr_zero(b));
}

}  // namespace nbpack

#endif  // NBPACK_SUBSET_H_
