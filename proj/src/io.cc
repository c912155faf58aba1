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

#include "nbpack/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <utility>
#include <vector>

#include "nbpack/errors.h"

namespace nbpack {

using nlohmann::json;

namespace {

Subset ParseSet(const json& elements, int n) {
  if (!elements.is_array()) throw InvalidInput("a set must be an array");
  std::vector<int> items;
  for (const json& e : elements) {
    if (!e.is_number_integer()) {
      throw InvalidInput("set elements must be integers");
    }
    items.push_back(e.get<int>());
  }
  try {
    return Subset::FromOneBased(items, n);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

double ParseNumber(const json& value, const char* what) {
  if (!value.is_number()) throw InvalidInput(std::string(what) + " must be a number");
  return value.get<double>();
}

SetFunction ParseInstanceUnchecked(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("instance must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InvalidInput("instance needs integer \"n\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 1) throw InvalidInput("\"n\" must be positive");
  const std::string mode = doc.value("mode", "");
  if (mode != "full" && mode != "family") {
    throw InvalidInput("\"mode\" must be \"full\" or \"family\"");
  }
  if (!doc.contains("weights") || !doc["weights"].is_array()) {
    throw InvalidInput("instance needs a \"weights\" array");
  }
  const json& weights = doc["weights"];

  if (mode == "full") {
    const auto family = Family::MakeFull(n);
    if (weights.size() != static_cast<size_t>(family->size())) {
      throw InvalidInput("full mode needs 2^n = " +
                         std::to_string(family->size()) + " weights, got " +
                         std::to_string(weights.size()));
    }
    std::vector<double> w;
    w.reserve(weights.size());
    for (const json& v : weights) w.push_back(ParseNumber(v, "weight"));
    return SetFunction(family, std::move(w));
  }

  if (!doc.contains("family") || !doc["family"].is_array()) {
    throw InvalidInput("family mode needs a \"family\" array");
  }
  const json& sets = doc["family"];
  if (sets.size() != weights.size()) {
    throw InvalidInput("\"family\" and \"weights\" differ in length");
  }
  if (n > kMaxElements) {
    throw InvalidInput("family mode supports n <= " +
                       std::to_string(kMaxElements));
  }
  std::map<Subset, double> given;
  for (size_t k = 0; k < sets.size(); ++k) {
    const Subset s = ParseSet(sets[k], n);
    const double v = ParseNumber(weights[k], "weight");
    const auto [it, inserted] = given.emplace(s, v);
    if (!inserted && it->second != v) {
      throw InvalidInput("set " + s.ToString() + " listed with two weights");
    }
  }
  std::vector<Subset> members;
  members.reserve(given.size());
  for (const auto& [s, v] : given) members.push_back(s);
  const auto family = Family::MakeClosed(n, members);
  std::vector<double> w(family->size(), 0.0);
  for (const auto& [s, v] : given) w[*family->IndexOf(s)] = v;
  return SetFunction(family, std::move(w));
}

json Number(double v) { return v; }

}  // namespace

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

SetFunction ParseInstance(const json& doc) {
  try {
    return ParseInstanceUnchecked(doc);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
}

SetFunction LoadInstance(const std::string& path) {
  return ParseInstance(ReadJsonFile(path));
}

MembershipProfile ParseProfile(const json& doc,
                               std::shared_ptr<const Family> family,
                               double renormalize_tol) {
  const int n = family->n();
  MembershipProfile q(family);
  try {
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
      throw InvalidInput("profile needs a \"rows\" array");
    }
    std::vector<bool> seen(n, false);
    for (const json& row : doc["rows"]) {
      if (!row.contains("element") || !row["element"].is_number_integer()) {
        throw InvalidInput("profile row needs integer \"element\"");
      }
      const int element = row["element"].get<int>();
      if (element < 1 || element > n) {
        throw InvalidInput("profile element " + std::to_string(element) +
                           " outside 1.." + std::to_string(n));
      }
      const int i = element - 1;
      if (seen[i]) {
        throw InvalidInput("element " + std::to_string(element) +
                           " has two rows");
      }
      seen[i] = true;
      if (!row.contains("memberships") || !row["memberships"].is_array()) {
        throw InvalidInput("profile row needs a \"memberships\" array");
      }
      std::vector<bool> used(family->size(), false);
      double sum = 0.0;
      for (const json& m : row["memberships"]) {
        const Subset s = ParseSet(m.at("set"), n);
        const double mass = ParseNumber(m.at("mass"), "mass");
        const auto a = family->IndexOf(s);
        if (!a) throw InvalidInput(s.ToString() + " is not a feasible set");
        if (!s.contains(i)) {
          throw InvalidInput(s.ToString() + " does not contain element " +
                             std::to_string(element));
        }
        if (used[*a]) {
          throw InvalidInput(s.ToString() + " repeated in row " +
                             std::to_string(element));
        }
        if (!(mass >= 0.0) || !std::isfinite(mass)) {
          throw InvalidInput("masses must be finite and nonnegative");
        }
        used[*a] = true;
        q.set_mass(i, *a, mass);
        sum += mass;
      }
      if (!(std::abs(sum - 1.0) <= renormalize_tol)) {
        throw InvalidInput("row of element " + std::to_string(element) +
                           " sums to " + std::to_string(sum));
      }
      for (const int a : family->Containing(i)) {
        q.set_mass(i, a, q.mass(i, a) / sum);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!seen[i]) {
        throw InvalidInput("profile has no row for element " +
                           std::to_string(i + 1));
      }
    }
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("profile: ") + e.what());
  }
  return q;
}

json ProfileToJson(const MembershipProfile& q) {
  json rows = json::array();
  for (int i = 0; i < q.n(); ++i) {
    json memberships = json::array();
    for (const int a : q.family().Containing(i)) {
      const double m = q.mass(i, a);
      if (m != 0.0) {
        memberships.push_back(
            {{"set", SubsetToJson(q.family().member(a))}, {"mass", m}});
      }
    }
    rows.push_back({{"element", i + 1}, {"memberships", memberships}});
  }
  return {{"rows", rows}};
}

json SubsetToJson(Subset s) { return s.OneBased(); }

json PartitionToJson(const Partition& p) {
  json blocks = json::array();
  for (const Subset b : p.blocks()) blocks.push_back(SubsetToJson(b));
  return blocks;
}

Partition ParsePartition(const json& doc, int n) {
  if (!doc.is_array()) throw InvalidInput("partition must be an array");
  std::vector<Subset> blocks;
  for (const json& b : doc) blocks.push_back(ParseSet(b, n));
  return Partition(n, std::move(blocks));
}

json TraceEventToJson(const TraceEvent& event) {
  const char* kind = "select";
  switch (event.kind) {
    case TraceEvent::Kind::kSelect: kind = "select"; break;
    case TraceEvent::Kind::kExtract: kind = "extract"; break;
    case TraceEvent::Kind::kFallbackSingleton: kind = "fallback_singleton"; break;
  }
  return {{"t", event.t},
          {"loop", event.loop},
          {"selected", event.selected ? SubsetToJson(*event.selected) : json()},
          {"W", Number(event.worth)},
          {"event", kind}};
}

json SolveResultToJson(const SolveResult& result) {
  json packing = json::array();
  for (const Subset b : result.packing) packing.push_back(SubsetToJson(b));
  json fallback = json::array();
  for (const int i : result.init_fallback) fallback.push_back(i + 1);
  return {{"partition", PartitionToJson(result.partition)},
          {"packing", packing},
          {"total_weight", result.total_weight},
          {"final_worth", result.final_worth},
          {"iterations", result.iterations},
          {"local_maximizer", result.local_maximizer},
          {"worth_trace", result.worth_trace},
          {"init_fallback", fallback}};
}

json OracleReportToJson(const OracleReport& report) {
  json doc = {{"best_partition", PartitionToJson(report.best_partition)},
              {"best_weight", report.best_weight},
              {"worst_partition", PartitionToJson(report.worst_partition)},
              {"worst_weight", report.worst_weight},
              {"count_enumerated", report.count_enumerated}};
  if (report.local_maximizers) {
    json all = json::array();
    for (const Partition& p : *report.local_maximizers) {
      all.push_back(PartitionToJson(p));
    }
    doc["all_local_maximizers"] = all;
  } else {
    doc["all_local_maximizers"] = nullptr;
  }
  return doc;
}

json ApproxResultToJson(const ApproxResult& result, int sample_rows) {
  json mu = json::array();
  for (const auto& [s, v] : result.mu) {
    mu.push_back({{"set", SubsetToJson(s)}, {"value", v}});
  }
  json samples = json::array();
  const size_t rows =
      std::min(result.partitions.size(), static_cast<size_t>(sample_rows));
  for (size_t r = 0; r < rows; ++r) {
    samples.push_back({{"partition", PartitionToJson(result.partitions[r])},
                       {"F", result.values[r]},
                       {"F_k", result.fitted[r]}});
  }
  return {{"k", result.k},
          {"residual", result.residual},
          {"mu", mu},
          {"sample_values", samples}};
}

std::string Fnv1aHex(const std::string& bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace nbpack
