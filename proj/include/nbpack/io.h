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

#ifndef NBPACK_IO_H_
#define NBPACK_IO_H_

#include <memory>
#include <string>

#include "json.hpp"
#include "nbpack/approx.h"
#include "nbpack/cover.h"
#include "nbpack/oracle.h"
#include "nbpack/set_function.h"
#include "nbpack/solvers.h"

namespace nbpack {

// Instance documents:
//   {"n": 3, "mode": "full", "weights": [w(∅), w({1}), w({2}), w({1,2}), ...]}
//   {"n": 4, "mode": "family", "family": [[1,2], [4]], "weights": [1.0, 2.0]}
// Full-mode weights are indexed by subset bits. Family-mode weights run
// parallel to "family"; the closure adds ∅ and missing singletons at 0.
// Every failure is reported as InvalidInput.
SetFunction ParseInstance(const nlohmann::json& doc);
SetFunction LoadInstance(const std::string& path);

nlohmann::json ReadJsonFile(const std::string& path);

// {"rows": [{"element": 1, "memberships": [{"set": [1,2], "mass": 0.5}, ...]},
//  ...]}. Rows off by at most renormalize_tol are rescaled to sum to 1.
MembershipProfile ParseProfile(const nlohmann::json& doc,
                               std::shared_ptr<const Family> family,
                               double renormalize_tol = 1e-6);
// Only nonzero masses are written.
nlohmann::json ProfileToJson(const MembershipProfile& q);

nlohmann::json SubsetToJson(Subset s);
nlohmann::json PartitionToJson(const Partition& p);
Partition ParsePartition(const nlohmann::json& doc, int n);

nlohmann::json TraceEventToJson(const TraceEvent& event);
nlohmann::json SolveResultToJson(const SolveResult& result);
nlohmann::json OracleReportToJson(const OracleReport& report);
// Keeps the first `sample_rows` partitions in "sample_values".
nlohmann::json ApproxResultToJson(const ApproxResult& result,
                                  int sample_rows = 20);

// 64-bit FNV-1a of raw bytes, as 16 hex digits.
std::string Fnv1aHex(const std::string& bytes);

}  // namespace nbpack

#endif  // NBPACK_IO_H_
