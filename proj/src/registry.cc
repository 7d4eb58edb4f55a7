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

#include "sbomproof/registry.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

using nlohmann::json;

constexpr std::string_view kKeyPrefix = "pkg:";

std::string RequireString(const json& obj, const char* field,
                          std::size_t line) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(std::string("missing or non-string field '") + field + "'",
                     line);
  }
  return it->get<std::string>();
}

PackageRecord ParseRecord(const std::string& text, std::size_t line) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), line);
  }
  if (!obj.is_object()) throw ParseError("expected a JSON object", line);

  PackageRecord rec;
  rec.name = RequireString(obj, "name", line);
  rec.version = RequireString(obj, "version", line);
  rec.license = RequireString(obj, "license", line);
  rec.artifact_hash = RequireString(obj, "hash", line);
  if (rec.name.empty() || rec.version.empty()) {
    throw ParseError("name and version must be non-empty", line);
  }
  if (auto it = obj.find("ecosystem"); it != obj.end()) {
    if (!it->is_string()) throw ParseError("'ecosystem' must be a string", line);
    rec.ecosystem = it->get<std::string>();
  }
  if (auto it = obj.find("dependencies"); it != obj.end()) {
    if (!it->is_array()) {
      throw ParseError("'dependencies' must be an array", line);
    }
    for (const auto& dep : *it) {
      if (!dep.is_string()) {
        throw ParseError("dependency entries must be strings", line);
      }
      rec.dependencies.push_back(
          NormalizeDependencyKey(dep.get<std::string>()));
    }
  }
  return rec;
}

}  // namespace

std::string CanonicalKey(std::string_view name, std::string_view version) {
  std::string key(kKeyPrefix);
  key.append(name);
  key.push_back('@');
  key.append(version);
  return key;
}

std::string NormalizeDependencyKey(std::string_view ref) {
  if (ref.starts_with(kKeyPrefix)) return std::string(ref);
  return std::string(kKeyPrefix) + std::string(ref);
}

RegistrySnapshot MakeSnapshot(std::vector<PackageRecord> records,
                              std::string snapshot_id) {
  RegistrySnapshot snap;
  snap.snapshot_id = std::move(snapshot_id);
  for (auto& rec : records) {
    std::string key = rec.key();
    if (!snap.packages.emplace(key, std::move(rec)).second) {
      throw Error(ErrorCode::kDuplicatePackage, "duplicate package '" + key + "'");
    }
  }
  for (const auto& [key, rec] : snap.packages) {
    for (const auto& dep : rec.dependencies) {
      if (!snap.packages.contains(dep)) {
        throw Error(ErrorCode::kDanglingDependency,
                    "'" + key + "' depends on unknown '" + dep + "'");
      }
    }
  }
  return snap;
}

RegistrySnapshot LoadSnapshot(std::istream& in, std::string snapshot_id) {
  std::vector<PackageRecord> records;
  std::map<std::string, std::size_t> first_line;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    PackageRecord rec = ParseRecord(text, line);
    auto [it, inserted] = first_line.emplace(rec.key(), line);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicatePackage,
                  "line " + std::to_string(line) + ": duplicate package '" +
                      rec.key() + "' (first seen on line " +
                      std::to_string(it->second) + ")");
    }
    records.push_back(std::move(rec));
  }
  return MakeSnapshot(std::move(records), std::move(snapshot_id));
}

RegistrySnapshot LoadSnapshotFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return LoadSnapshot(in, path);
}

std::string SnapshotToJsonl(const RegistrySnapshot& snapshot) {
  std::string out;
  for (const auto& [key, rec] : snapshot.packages) {
    json deps = json::array();
    for (const auto& d : rec.dependencies) deps.push_back(d.substr(kKeyPrefix.size()));
    json obj = {{"name", rec.name},       {"version", rec.version},
                {"license", rec.license}, {"hash", rec.artifact_hash},
                {"dependencies", deps},   {"ecosystem", rec.ecosystem}};
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> SerializeMetadata(const PackageRecord& record) {
  std::vector<std::uint8_t> out;
  AppendLengthPrefixed(out, record.name);
  AppendLengthPrefixed(out, record.version);
  AppendLengthPrefixed(out, record.license);
  AppendLengthPrefixed(out, record.artifact_hash);
  return out;
}

Digest LeafCommitment(const PackageRecord& record) {
  return Hash(DomainTag::kLeafPt, SerializeMetadata(record));
}

IndexMap BuildIndexMap(const RegistrySnapshot& snapshot, int depth) {
  IndexMap index_map;
  std::map<std::uint64_t, std::string> owner;
  for (const auto& [key, rec] : snapshot.packages) {
    const std::uint64_t idx = DeriveIndex(key, depth);
    auto [it, inserted] = owner.emplace(idx, key);
    if (!inserted) throw IndexCollisionError(it->second, key, idx);
    index_map.emplace(key, idx);
  }
  return index_map;
}

PackageTree BuildPackageTree(const RegistrySnapshot& snapshot,
                             const PublicParams& params) {
  IndexMap index_map = BuildIndexMap(snapshot, params.depth);
  std::map<std::uint64_t, Digest> leaves;
  for (const auto& [key, rec] : snapshot.packages) {
    leaves.emplace(index_map.at(key), LeafCommitment(rec));
  }
  return PackageTree{SparseTree::Commit(params, leaves), std::move(index_map)};
}

}  // namespace sbomproof
