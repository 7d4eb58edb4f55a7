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

#ifndef SBOMPROOF_REGISTRY_H_
#define SBOMPROOF_REGISTRY_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sbomproof/digest.h"
#include "sbomproof/sparse_tree.h"

namespace sbomproof {

// "pkg:" + name + "@" + version. One leaf per released version.
std::string CanonicalKey(std::string_view name, std::string_view version);
// Accepts "name@version" or an already canonical "pkg:name@version".
std::string NormalizeDependencyKey(std::string_view ref);

struct PackageRecord {
  std::string name;
  std::string version;
  std::string license;
  std::string artifact_hash;
  // Canonical keys of direct dependencies.
  std::vector<std::string> dependencies;
  std::string ecosystem;

  std::string key() const { return CanonicalKey(name, version); }
};

struct RegistrySnapshot {
  std::string snapshot_id;
  std::map<std::string, PackageRecord> packages;
};

// One JSON object per line:
//   {"name", "version", "license", "hash", "dependencies": ["name@version"],
//    "ecosystem"}
// "dependencies" and "ecosystem" are optional. Blank lines are skipped.
// Throws ParseError (with line number), Error(kDuplicatePackage) or
// Error(kDanglingDependency).
RegistrySnapshot LoadSnapshot(std::istream& in, std::string snapshot_id = "");
RegistrySnapshot LoadSnapshotFile(const std::string& path);

// Checks key uniqueness and that every dependency resolves in the snapshot.
RegistrySnapshot MakeSnapshot(std::vector<PackageRecord> records,
                              std::string snapshot_id = "");

std::string SnapshotToJsonl(const RegistrySnapshot& snapshot);

// Length-prefixed name, version, license, artifact_hash. This is the
// pre-image an opener may reveal to let a verifier rebuild the leaf.
std::vector<std::uint8_t> SerializeMetadata(const PackageRecord& record);
// Hash(leaf-pt, SerializeMetadata(record)).
Digest LeafCommitment(const PackageRecord& record);

using IndexMap = std::map<std::string, std::uint64_t>;

// derive_index for every key; IndexCollisionError names both keys when two
// land in the same slot.
IndexMap BuildIndexMap(const RegistrySnapshot& snapshot, int depth);

struct PackageTree {
  SparseTree tree;
  IndexMap index_map;

  Digest root() const { return tree.root(); }
};

PackageTree BuildPackageTree(const RegistrySnapshot& snapshot,
                             const PublicParams& params);

}  // namespace sbomproof

#endif  // SBOMPROOF_REGISTRY_H_
