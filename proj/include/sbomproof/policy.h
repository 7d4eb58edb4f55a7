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

#ifndef SBOMPROOF_POLICY_H_
#define SBOMPROOF_POLICY_H_

#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbomproof/digest.h"
#include "sbomproof/registry.h"
#include "sbomproof/sparse_tree.h"

namespace sbomproof {

// Packages the auditor flags outright. Keys are canonical.
struct DenyList {
  std::set<std::string> keys;
};

struct LicenseAllowList {
  std::set<std::string> licenses;
};

// Package name -> lowest acceptable version.
struct VersionFloor {
  std::map<std::string, std::string> minimum;
};

using PolicyPayload = std::variant<DenyList, LicenseAllowList, VersionFloor>;

struct PolicyConstraint {
  std::string policy_id;
  PolicyPayload payload;

  std::string_view kind() const;
};

// Reads {"policy_id", "kind", "payload"}. UsageError for an unknown kind or a
// bad policy id; Error(kSchema) for missing fields or an empty payload where
// the kind needs one. An empty deny-list is allowed.
PolicyConstraint PolicyFromJson(std::string_view text);
std::string PolicyToJson(const PolicyConstraint& policy);

// Dotted-numeric comparison: each dot-separated component is read as its
// leading run of digits (none = 0) and missing components count as 0.
// Returns <0, 0 or >0.
int CompareVersions(std::string_view a, std::string_view b);

// Canonical key -> 1 (compliant) / 0.
using Verdicts = std::map<std::string, bool>;

Verdicts EvaluateLocal(const RegistrySnapshot& snapshot,
                       const PolicyConstraint& policy);

// Greatest fixpoint of C(p) = L(p) * prod C(d): every package that can reach
// a locally failing package (itself included) ends up 0. Cycles are fine.
Verdicts Propagate(const RegistrySnapshot& snapshot, const Verdicts& local);

struct ComplianceMap {
  std::string policy_id;
  Verdicts local;
  Verdicts propagated;
};

ComplianceMap EvaluatePolicy(const RegistrySnapshot& snapshot,
                             const PolicyConstraint& policy);

std::string ComplianceToJson(const ComplianceMap& map);
ComplianceMap ComplianceFromJson(std::string_view text);

// Pointwise AND over `maps`. Every map must cover exactly the snapshot's
// keys (UsageError otherwise); no maps at all gives all-compliant.
Verdicts Compose(const RegistrySnapshot& snapshot,
                 std::span<const Verdicts> maps);

// Sorted policy ids joined by '+'.
std::string MakeSetId(std::vector<std::string> policy_ids);

struct PolicySet {
  std::vector<PolicyConstraint> policies;

  std::vector<std::string> ids() const;
  std::string set_id() const { return MakeSetId(ids()); }
};

struct OnDemandResult {
  std::string set_id;
  std::vector<std::string> policy_ids;
  Verdicts composed;
};

// Client-side union of the auditor's published forest with extra client
// policies. Auditor maps are reused as given; client policies are evaluated
// and propagated here. UsageError on an id clash or when an auditor policy
// has no map.
OnDemandResult AggregateOnDemand(const RegistrySnapshot& snapshot,
                                 const PolicySet& auditor_set,
                                 std::span<const ComplianceMap> auditor_maps,
                                 std::span<const PolicyConstraint> client);

// Hash(leaf-st, 0x01) or Hash(leaf-st, 0x00).
Digest ShadowLeaf(bool compliant);

// Shadow tree with the same slots as the package tree. `composed` must have
// exactly the index map's keys.
SparseTree BuildShadowTree(const Verdicts& composed, const IndexMap& index_map,
                           const PublicParams& params);

}  // namespace sbomproof

#endif  // SBOMPROOF_POLICY_H_
