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

#ifndef SBOMPROOF_ROOT_FILE_H_
#define SBOMPROOF_ROOT_FILE_H_

#include <optional>
#include <string>
#include <string_view>

#include "sbomproof/digest.h"
#include "sbomproof/registry.h"

namespace sbomproof {

enum class TreeKind { kPackage, kShadow };

// Published root:
//   {"root", "depth", "hash_alg_id", "tree_kind": "PT"|"ST",
//    "policy_set" (ST only)}
struct RootFile {
  Digest root;
  int depth = 0;
  std::string hash_alg_id{kHashAlgId};
  TreeKind kind = TreeKind::kPackage;
  std::string policy_set;

  PublicParams params() const { return PublicParams{depth, hash_alg_id}; }
};

std::string RootFileToJson(const RootFile& file);
// ParseError / Error(kSchema) on bad input. A shadow root without
// "policy_set", or a package root with one, is a schema error.
RootFile RootFileFromJson(std::string_view text);
RootFile LoadRootFile(const std::string& path);

// {canonical_key: index}
std::string IndexMapToJson(const IndexMap& index_map);
IndexMap IndexMapFromJson(std::string_view text);

}  // namespace sbomproof

#endif  // SBOMPROOF_ROOT_FILE_H_
