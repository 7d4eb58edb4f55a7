// Copyright 2026 The sbomproof Authors.
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

#include "sbomproof/policy.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <utility>

#include "json.hpp"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

using nlohmann::json;

constexpr std::string_view kDenyListKind = "deny-list";
constexpr std::string_view kLicenseAllowListKind = "license-allow-list";
constexpr std::string_view kVersionFloorKind = "version-floor";

Error SchemaError(const std::string& message) {
  return Error(ErrorCode::kSchema, message);
}

void CheckPolicyId(std::string_view id) {
  if (id.empty()) throw UsageError("policy_id must not be empty");
  for (char c : id) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                    c == '_' || c == '.';
    if (!ok) {
      throw UsageError("policy_id '" + std::string(id) +
                       "' may only contain [A-Za-z0-9._-]");
    }
  }
}

std::vector<std::uint64_t> VersionComponents(std::string_view v) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = v.find('.', start);
    std::string_view part = v.substr(start, dot == std::string_view::npos
                                                ? std::string_view::npos
                                                : dot - start);
    std::uint64_t n = 0;
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) break;
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
    }
    out.push_back(n);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

void RequireSameKeys(const RegistrySnapshot& snapshot, const Verdicts& map,
                     const char* what) {
  const bool same =
      map.size() == snapshot.packages.size() &&
      std::equal(map.begin(), map.end(), snapshot.packages.begin(),
                 [](const auto& a, const auto& b) { return a.first == b.first; });
  if (!same) {
    throw UsageError(std::string(what) +
                     " does not cover exactly the snapshot's packages");
  }
}

json VerdictsToJson(const Verdicts& v) {
  json obj = json::object();
  for (const auto& [key, bit] : v) obj[key] = bit ? 1 : 0;
  return obj;
}

Verdicts VerdictsFromJson(const json& obj, const char* field) {
  if (!obj.is_object()) {
    throw SchemaError(std::string("'") + field + "' must be an object");
  }
  Verdicts v;
  for (const auto& [key, bit] : obj.items()) {
    if (!bit.is_number_integer() || (bit != 0 && bit != 1)) {
      throw SchemaError(std::string("'") + field + "' values must be 0 or 1");
    }
    v.emplace(key, bit == 1);
  }
  return v;
}

}  // namespace

std::string_view PolicyConstraint::kind() const {
  switch (payload.index()) {
    case 0:
      return kDenyListKind;
    case 1:
      return kLicenseAllowListKind;
    default:
      return kVersionFloorKind;
  }
}

PolicyConstraint PolicyFromJson(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!obj.is_object()) throw SchemaError("policy must be a JSON object");
  for (const char* field : {"policy_id", "kind", "payload"}) {
    if (!obj.contains(field)) {
      throw SchemaError(std::string("policy is missing '") + field + "'");
    }
  }
  if (!obj["policy_id"].is_string() || !obj["kind"].is_string()) {
    throw SchemaError("'policy_id' and 'kind' must be strings");
  }
  PolicyConstraint policy;
  policy.policy_id = obj["policy_id"].get<std::string>();
  CheckPolicyId(policy.policy_id);
  const std::string kind = obj["kind"].get<std::string>();
  const json& payload = obj["payload"];

  auto string_set = [&](const char* what) {
    if (!payload.is_array()) {
      throw SchemaError(std::string(what) + " payload must be an array");
    }
    std::set<std::string> out;
    for (const auto& item : payload) {
      if (!item.is_string()) {
        throw SchemaError(std::string(what) + " payload entries must be strings");
      }
      out.insert(item.get<std::string>());
    }
    return out;
  };

  if (kind == kDenyListKind) {
    DenyList deny;
    for (const auto& ref : string_set("deny-list")) {
      deny.keys.insert(NormalizeDependencyKey(ref));
    }
    policy.payload = std::move(deny);
  } else if (kind == kLicenseAllowListKind) {
    LicenseAllowList allow{string_set("license-allow-list")};
    if (allow.licenses.empty()) {
      throw SchemaError("license-allow-list payload must not be empty");
    }
    policy.payload = std::move(allow);
  } else if (kind == kVersionFloorKind) {
    if (!payload.is_object() || payload.empty()) {
      throw SchemaError("version-floor payload must be a non-empty object");
    }
    VersionFloor floor;
    for (const auto& [name, version] : payload.items()) {
      if (!version.is_string()) {
        throw SchemaError("version-floor values must be strings");
      }
      floor.minimum.emplace(name, version.get<std::string>());
    }
    policy.payload = std::move(floor);
  } else {
    throw UsageError("unknown policy kind '" + kind + "'");
  }
  return policy;
}

std::string PolicyToJson(const PolicyConstraint& policy) {
  json payload;
  if (const auto* deny = std::get_if<DenyList>(&policy.payload)) {
    payload = deny->keys;
  } else if (const auto* allow =
                 std::get_if<LicenseAllowList>(&policy.payload)) {
    payload = allow->licenses;
  } else {
    payload = std::get<VersionFloor>(policy.payload).minimum;
  }
  return json{{"policy_id", policy.policy_id},
              {"kind", policy.kind()},
              {"payload", payload}}
      .dump(2);
}

int CompareVersions(std::string_view a, std::string_view b) {
  auto ca = VersionComponents(a);
  auto cb = VersionComponents(b);
  const std::size_t n = std::max(ca.size(), cb.size());
  ca.resize(n, 0);
  cb.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
  }
  return 0;
}

Verdicts EvaluateLocal(const RegistrySnapshot& snapshot,
                       const PolicyConstraint& policy) {
  Verdicts local;
  for (const auto& [key, rec] : snapshot.packages) {
    bool ok = true;
    if (const auto* deny = std::get_if<DenyList>(&policy.payload)) {
      ok = !deny->keys.contains(key);
    } else if (const auto* allow =
                   std::get_if<LicenseAllowList>(&policy.payload)) {
      ok = allow->licenses.contains(rec.license);
    } else if (const auto* floor = std::get_if<VersionFloor>(&policy.payload)) {
      auto it = floor->minimum.find(rec.name);
      ok = it == floor->minimum.end() ||
           CompareVersions(rec.version, it->second) >= 0;
    }
    local.emplace(key, ok);
  }
  return local;
}

Verdicts Propagate(const RegistrySnapshot& snapshot, const Verdicts& local) {
  RequireSameKeys(snapshot, local, "local verdict map");
  std::map<std::string, std::vector<std::string>> dependents;
  for (const auto& [key, rec] : snapshot.packages) {
    for (const auto& dep : rec.dependencies) dependents[dep].push_back(key);
  }
  Verdicts out = local;
  std::deque<std::string> frontier;
  for (const auto& [key, ok] : local) {
    if (!ok) frontier.push_back(key);
  }
  while (!frontier.empty()) {
    const std::string key = std::move(frontier.front());
    frontier.pop_front();
    auto it = dependents.find(key);
    if (it == dependents.end()) continue;
    for (const auto& parent : it->second) {
      bool& bit = out.at(parent);
      if (bit) {
        bit = false;
        frontier.push_back(parent);
      }
    }
  }
  return out;
}

ComplianceMap EvaluatePolicy(const RegistrySnapshot& snapshot,
                             const PolicyConstraint& policy) {
  ComplianceMap map{policy.policy_id, EvaluateLocal(snapshot, policy), {}};
  map.propagated = Propagate(snapshot, map.local);
  return map;
}

std::string ComplianceToJson(const ComplianceMap& map) {
  return json{{"policy_id", map.policy_id},
              {"local", VerdictsToJson(map.local)},
              {"propagated", VerdictsToJson(map.propagated)}}
      .dump(2);
}

ComplianceMap ComplianceFromJson(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!obj.is_object() || !obj.contains("policy_id") ||
      !obj["policy_id"].is_string() || !obj.contains("local") ||
      !obj.contains("propagated")) {
    throw SchemaError("compliance export needs policy_id, local, propagated");
  }
  ComplianceMap map;
  map.policy_id = obj["policy_id"].get<std::string>();
  map.local = VerdictsFromJson(obj["local"], "local");
  map.propagated = VerdictsFromJson(obj["propagated"], "propagated");
  return map;
}

Verdicts Compose(const RegistrySnapshot& snapshot,
                 std::span<const Verdicts> maps) {
  Verdicts out;
  for (const auto& [key, rec] : snapshot.packages) out.emplace(key, true);
  for (const auto& map : maps) {
    RequireSameKeys(snapshot, map, "compliance map");
    for (const auto& [key, bit] : map) {
      if (!bit) out[key] = false;
    }
  }
  return out;
}

std::string MakeSetId(std::vector<std::string> policy_ids) {
  std::sort(policy_ids.begin(), policy_ids.end());
  std::string id;
  for (const auto& p : policy_ids) {
    if (!id.empty()) id.push_back('+');
    id += p;
  }
  return id;
}

std::vector<std::string> PolicySet::ids() const {
  std::vector<std::string> out;
  out.reserve(policies.size());
  for (const auto& p : policies) out.push_back(p.policy_id);
  return out;
}

OnDemandResult AggregateOnDemand(const RegistrySnapshot& snapshot,
                                 const PolicySet& auditor_set,
                                 std::span<const ComplianceMap> auditor_maps,
                                 std::span<const PolicyConstraint> client) {
  std::set<std::string> seen;
  std::vector<Verdicts> parts;
  for (const auto& id : auditor_set.ids()) {
    if (!seen.insert(id).second) throw UsageError("duplicate policy id '" + id + "'");
    auto it = std::find_if(auditor_maps.begin(), auditor_maps.end(),
                           [&](const ComplianceMap& m) { return m.policy_id == id; });
    if (it == auditor_maps.end()) {
      throw UsageError("no published compliance map for auditor policy '" +
                       id + "'");
    }
    parts.push_back(it->propagated);
  }
  for (const auto& policy : client) {
    if (!seen.insert(policy.policy_id).second) {
      throw UsageError("client policy id '" + policy.policy_id +
                       "' clashes with an existing policy");
    }
    parts.push_back(EvaluatePolicy(snapshot, policy).propagated);
  }
  OnDemandResult result;
  result.policy_ids.assign(seen.begin(), seen.end());
  result.set_id = MakeSetId(result.policy_ids);
  result.composed = Compose(snapshot, parts);
  return result;
}

Digest ShadowLeaf(bool compliant) {
  const std::uint8_t bit = compliant ? 1 : 0;
  return Hash(DomainTag::kLeafSt, std::span<const std::uint8_t>(&bit, 1));
}

SparseTree BuildShadowTree(const Verdicts& composed, const IndexMap& index_map,
                           const PublicParams& params) {
  const bool same =
      composed.size() == index_map.size() &&
      std::equal(composed.begin(), composed.end(), index_map.begin(),
                 [](const auto& a, const auto& b) { return a.first == b.first; });
  if (!same) {
    throw UsageError("compliance map and index map cover different packages");
  }
  const Digest ok = ShadowLeaf(true);
  const Digest flagged = ShadowLeaf(false);
  std::map<std::uint64_t, Digest> leaves;
  for (const auto& [key, bit] : composed) {
    leaves.emplace(index_map.at(key), bit ? ok : flagged);
  }
  return SparseTree::Commit(params, leaves);
}

}  // namespace sbomproof
