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

#include "sbomproof/sbom.h"

#include <utility>

#include "json.hpp"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kHiddenType = "zk-hidden";

Error SchemaError(const std::string& message) {
  return Error(ErrorCode::kSchema, message);
}

ordered_json ParseJson(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string RequireString(const ordered_json& obj, const char* field,
                          const std::string& where) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_string()) {
    throw SchemaError(where + ": missing or non-string '" + field + "'");
  }
  return it->get<std::string>();
}

SbomEntry ParseEntry(const ordered_json& obj, const std::string& where) {
  if (!obj.is_object()) throw SchemaError(where + ": entry must be an object");
  SbomEntry entry;
  entry.name = RequireString(obj, "name", where);
  entry.version = RequireString(obj, "version", where);
  if (entry.name.empty() || entry.version.empty()) {
    throw SchemaError(where + ": name and version must be non-empty");
  }
  if (obj.contains("src")) entry.src = RequireString(obj, "src", where);
  return entry;
}

ordered_json EntryToJson(const SbomEntry& e) {
  ordered_json obj = {{"name", e.name}, {"version", e.version}};
  if (e.src) obj["src"] = *e.src;
  return obj;
}

const ordered_json& RequireArray(const ordered_json& obj) {
  auto it = obj.find("dependencies");
  if (it == obj.end() || !it->is_array()) {
    throw SchemaError("missing or non-array 'dependencies'");
  }
  return *it;
}

}  // namespace

Sbom SbomFromJson(std::string_view text) {
  const ordered_json obj = ParseJson(text);
  if (!obj.is_object()) throw SchemaError("SBOM must be a JSON object");
  Sbom sbom;
  sbom.name = RequireString(obj, "name", "SBOM");
  sbom.version = RequireString(obj, "version", "SBOM");
  const auto& deps = RequireArray(obj);
  for (std::size_t i = 0; i < deps.size(); ++i) {
    sbom.entries.push_back(
        ParseEntry(deps[i], "dependencies[" + std::to_string(i) + "]"));
  }
  return sbom;
}

Sbom LoadSbomFile(const std::string& path) {
  return SbomFromJson(ReadFileText(path));
}

std::string SbomToJson(const Sbom& sbom) {
  ordered_json deps = ordered_json::array();
  for (const auto& e : sbom.entries) deps.push_back(EntryToJson(e));
  return ordered_json{{"name", sbom.name},
                      {"version", sbom.version},
                      {"dependencies", deps}}
      .dump(2);
}

std::string PublicSbomToJson(const PublicSbom& sbom) {
  ordered_json deps = ordered_json::array();
  for (const auto& entry : sbom.entries) {
    if (const auto* open = std::get_if<SbomEntry>(&entry)) {
      deps.push_back(EntryToJson(*open));
    } else {
      deps.push_back(
          {{"commitment", "0x" + std::get<HiddenEntry>(entry).commitment.ToHex()},
           {"type", kHiddenType}});
    }
  }
  return ordered_json{{"name", sbom.name},
                      {"version", sbom.version},
                      {"dependencies", deps},
                      {"zk_proof", sbom.zk_proof}}
      .dump(2);
}

PublicSbom PublicSbomFromJson(std::string_view text) {
  const ordered_json obj = ParseJson(text);
  if (!obj.is_object()) throw SchemaError("public SBOM must be a JSON object");
  PublicSbom sbom;
  sbom.name = RequireString(obj, "name", "public SBOM");
  sbom.version = RequireString(obj, "version", "public SBOM");
  sbom.zk_proof = RequireString(obj, "zk_proof", "public SBOM");
  const auto& deps = RequireArray(obj);
  for (std::size_t i = 0; i < deps.size(); ++i) {
    const std::string where = "dependencies[" + std::to_string(i) + "]";
    const auto& item = deps[i];
    if (item.is_object() && item.contains("type")) {
      if (RequireString(item, "type", where) != kHiddenType) {
        throw SchemaError(where + ": unknown entry type");
      }
      const std::string c = RequireString(item, "commitment", where);
      if (!c.starts_with("0x")) {
        throw SchemaError(where + ": commitment must start with 0x");
      }
      sbom.entries.push_back(HiddenEntry{Digest::FromHex(c.substr(2))});
    } else {
      sbom.entries.push_back(ParseEntry(item, where));
    }
  }
  return sbom;
}

Digest SaltedCommitment(const PackageRecord& record, const Salt& salt) {
  std::vector<std::uint8_t> payload = SerializeMetadata(record);
  AppendU32(payload, static_cast<std::uint32_t>(salt.size()));
  AppendBytes(payload, salt);
  return Hash(DomainTag::kLeafPt, payload);
}

Redaction Redact(const Sbom& sbom, const std::set<std::size_t>& hide,
                 std::string proof_ref, const RegistrySnapshot& snapshot,
                 RandomSource* salt_source) {
  for (std::size_t pos : hide) {
    if (pos >= sbom.entries.size()) {
      throw UsageError("hide position " + std::to_string(pos) +
                       " out of range for " +
                       std::to_string(sbom.entries.size()) + " entries");
    }
  }
  Redaction out;
  out.sbom.name = sbom.name;
  out.sbom.version = sbom.version;
  out.sbom.zk_proof = std::move(proof_ref);
  for (std::size_t i = 0; i < sbom.entries.size(); ++i) {
    const SbomEntry& entry = sbom.entries[i];
    if (!hide.contains(i)) {
      out.sbom.entries.emplace_back(entry);
      continue;
    }
    auto it = snapshot.packages.find(entry.key());
    if (it == snapshot.packages.end()) {
      throw StepError(ErrorCode::kUnresolvableDependency, i + 1);
    }
    if (salt_source != nullptr) {
      Salt salt;
      salt_source->Fill(salt);
      out.salts.emplace(i, salt);
      out.sbom.entries.emplace_back(HiddenEntry{SaltedCommitment(it->second, salt)});
    } else {
      out.sbom.entries.emplace_back(HiddenEntry{LeafCommitment(it->second)});
    }
  }
  return out;
}

}  // namespace sbomproof
