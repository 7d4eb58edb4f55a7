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

#include "sbomproof/root_file.h"

#include <algorithm>

#include "json.hpp"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

using nlohmann::ordered_json;

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

}  // namespace

std::string RootFileToJson(const RootFile& file) {
  ordered_json obj = {
      {"root", file.root.ToHex()},
      {"depth", file.depth},
      {"hash_alg_id", file.hash_alg_id},
      {"tree_kind", file.kind == TreeKind::kPackage ? "PT" : "ST"},
  };
  if (file.kind == TreeKind::kShadow) {
    obj["policy_set"] = ordered_json::array();
    std::size_t start = 0;
    const std::string& set = file.policy_set;
    while (start <= set.size() && !set.empty()) {
      const std::size_t plus = set.find('+', start);
      obj["policy_set"].push_back(set.substr(start, plus - start));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
  }
  return obj.dump(2);
}

RootFile RootFileFromJson(std::string_view text) {
  const ordered_json obj = ParseJson(text);
  if (!obj.is_object()) throw SchemaError("root file must be a JSON object");
  for (const char* f : {"root", "depth", "hash_alg_id", "tree_kind"}) {
    if (!obj.contains(f)) {
      throw SchemaError(std::string("root file is missing '") + f + "'");
    }
  }
  if (!obj["root"].is_string() || !obj["depth"].is_number_integer() ||
      !obj["hash_alg_id"].is_string() || !obj["tree_kind"].is_string()) {
    throw SchemaError("root file has a field of the wrong type");
  }
  RootFile file;
  file.root = Digest::FromHex(obj["root"].get<std::string>());
  file.depth = obj["depth"].get<int>();
  file.hash_alg_id = obj["hash_alg_id"].get<std::string>();
  if (file.hash_alg_id.empty()) throw SchemaError("empty hash_alg_id");
  const std::string kind = obj["tree_kind"].get<std::string>();
  if (kind == "PT") {
    file.kind = TreeKind::kPackage;
    if (obj.contains("policy_set")) {
      throw SchemaError("package-tree root must not carry a policy_set");
    }
  } else if (kind == "ST") {
    file.kind = TreeKind::kShadow;
    if (!obj.contains("policy_set") || !obj["policy_set"].is_array()) {
      throw SchemaError("shadow-tree root needs a policy_set array");
    }
    std::vector<std::string> ids;
    for (const auto& id : obj["policy_set"]) {
      if (!id.is_string()) throw SchemaError("policy_set entries must be strings");
      ids.push_back(id.get<std::string>());
    }
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids) {
      if (!file.policy_set.empty()) file.policy_set.push_back('+');
      file.policy_set += id;
    }
  } else {
    throw SchemaError("tree_kind must be \"PT\" or \"ST\"");
  }
  return file;
}

RootFile LoadRootFile(const std::string& path) {
  return RootFileFromJson(ReadFileText(path));
}

std::string IndexMapToJson(const IndexMap& index_map) {
  ordered_json obj = ordered_json::object();
  for (const auto& [key, idx] : index_map) obj[key] = idx;
  return obj.dump(2);
}

IndexMap IndexMapFromJson(std::string_view text) {
  const ordered_json obj = ParseJson(text);
  if (!obj.is_object()) throw SchemaError("index map must be a JSON object");
  IndexMap out;
  for (const auto& [key, idx] : obj.items()) {
    if (!idx.is_number_unsigned()) {
      throw SchemaError("index map values must be non-negative integers");
    }
    out.emplace(key, idx.get<std::uint64_t>());
  }
  return out;
}

}  // namespace sbomproof
