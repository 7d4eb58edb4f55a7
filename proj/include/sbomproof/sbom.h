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

#ifndef SBOMPROOF_SBOM_H_
#define SBOMPROOF_SBOM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbomproof/digest.h"
#include "sbomproof/random.h"
#include "sbomproof/registry.h"

namespace sbomproof {

struct SbomEntry {
  std::string name;
  std::string version;
  // Kept optional so that redaction reproduces the input field-for-field.
  std::optional<std::string> src;

  std::string key() const { return CanonicalKey(name, version); }

  friend bool operator==(const SbomEntry&, const SbomEntry&) = default;
};

// Vendor-internal SBOM: {"name", "version", "dependencies": [entries]}.
struct Sbom {
  std::string name;
  std::string version;
  std::vector<SbomEntry> entries;
};

// ParseError for malformed JSON, Error(kSchema) for missing fields.
Sbom SbomFromJson(std::string_view text);
Sbom LoadSbomFile(const std::string& path);
std::string SbomToJson(const Sbom& sbom);

struct HiddenEntry {
  Digest commitment;

  friend bool operator==(const HiddenEntry&, const HiddenEntry&) = default;
};

using PublicEntry = std::variant<SbomEntry, HiddenEntry>;

struct PublicSbom {
  std::string name;
  std::string version;
  std::vector<PublicEntry> entries;
  std::string zk_proof;
};

// Hidden entries serialize as {"commitment": "0x" + hex, "type": "zk-hidden"}.
std::string PublicSbomToJson(const PublicSbom& sbom);
PublicSbom PublicSbomFromJson(std::string_view text);

using Salt = std::array<std::uint8_t, 32>;

// Hidden-entry commitment with a private salt: Hash(leaf-pt, metadata || salt)
// where the salt is appended as a fifth length-prefixed field. Never equal to
// an unsalted leaf, and not confirmable by guessing without the salt.
Digest SaltedCommitment(const PackageRecord& record, const Salt& salt);

struct Redaction {
  PublicSbom sbom;
  // Entry position -> salt, only when salting was requested.
  std::map<std::size_t, Salt> salts;
};

// Replaces the entries at `hide` (0-based positions) with commitments. By
// default a commitment is the entry's package-tree leaf; pass `salt_source`
// to salt them instead. UsageError for out-of-range positions; StepError
// (kUnresolvableDependency, 1-based ordinal) if a hidden entry is not in the
// snapshot.
Redaction Redact(const Sbom& sbom, const std::set<std::size_t>& hide,
                 std::string proof_ref, const RegistrySnapshot& snapshot,
                 RandomSource* salt_source = nullptr);

}  // namespace sbomproof

#endif  // SBOMPROOF_SBOM_H_
