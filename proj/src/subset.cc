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

#include "nbpack/subset.h"

#include <stdexcept>

namespace nbpack {

Subset Subset::FromOneBased(std::span<const int> elements, int n) {
  uint64_t bits = 0;
  for (const int e : elements) {
    if (e < 1 || e > n) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside ground set 1.." +
                                  std::to_string(n));
    }
    const uint64_t bit = uint64_t{1} << (e - 1);
    if (bits & bit) {
      throw std::invalid_argument("duplicate element " + std::to_string(e));
    }
    bits |= bit;
  }
  return Subset(bits);
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachElement(*this, [&](int i) { out.push_back(i); });
  return out;
}

std::vector<int> Subset::OneBased() const {
  std::vector<int> out;
  out.reserve(size());
  ForEachElement(*this, [&](int i) { out.push_back(i + 1); });
  return out;
}

std::string Subset::ToString() const {
  std::string s = "{";
  bool first = true;
  ForEachElement(*this, [&](int i) {
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  });
  return s + "}";
}

}  // namespace nbpack
