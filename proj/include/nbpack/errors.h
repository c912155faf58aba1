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

#ifndef NBPACK_ERRORS_H_
#define NBPACK_ERRORS_H_

#include <stdexcept>

namespace nbpack {

// Malformed or inconsistent user input: bad instance data, profiles off the
// simplex, unknown elements.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A valid request that the chosen algorithm cannot run on, e.g. an initial
// profile violating the support requirement of the local searches.
class InfeasibleConfig : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work or memory bounds exceeded (dense tables, exhaustive enumeration).
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace nbpack

#endif  // NBPACK_ERRORS_H_
