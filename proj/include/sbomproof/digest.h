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

#ifndef SBOMPROOF_DIGEST_H_
#define SBOMPROOF_DIGEST_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace sbomproof {

// 256-bit hash value. Roots, leaves, siblings and accumulators are all
// Digests.
class Digest {
 public:
  static constexpr std::size_t kSize = 32;
  using Bytes = std::array<std::uint8_t, kSize>;

  Digest() : bytes_{} {}
  explicit Digest(const Bytes& bytes) : bytes_(bytes) {}

  // Requires exactly 64 lowercase hex characters; anything else is a
  // ParseError. Uppercase is rejected so that every digest has one spelling.
  static Digest FromHex(std::string_view hex);
  static Digest FromBytes(std::span<const std::uint8_t> bytes);

  std::string ToHex() const;
  const Bytes& bytes() const { return bytes_; }
  std::span<const std::uint8_t> span() const { return bytes_; }

  friend bool operator==(const Digest&, const Digest&) = default;
  friend auto operator<=>(const Digest&, const Digest&) = default;

 private:
  Bytes bytes_;
};

// Separation tags. The wire name of each tag is length-prefixed into the
// hash input, so no two tags can produce the same preimage.
enum class DomainTag : std::uint8_t {
  kLeafPt,
  kLeafSt,
  kNode,
  kEmpty,
  kIndex,
  kAccum,
};

std::string_view DomainTagName(DomainTag tag);
// UsageError for names outside the fixed tag set.
DomainTag ParseDomainTag(std::string_view name);

inline constexpr std::string_view kHashAlgId = "sha256";

// SHA-256(u8(len(name)) || name || payload).
Digest Hash(DomainTag tag, std::span<const std::uint8_t> payload);
Digest Hash(DomainTag tag, std::string_view payload);
Digest Hash(std::string_view tag_name, std::span<const std::uint8_t> payload);
// Hash of the concatenation of two digests.
Digest Hash(DomainTag tag, const Digest& left, const Digest& right);

// Plain SHA-256 of raw bytes, used for artifact digests so that they match
// what `sha256sum` prints.
Digest Sha256(std::span<const std::uint8_t> bytes);

struct PublicParams {
  int depth = 0;
  std::string hash_alg_id{kHashAlgId};

  std::uint64_t capacity() const { return std::uint64_t{1} << depth; }

  friend bool operator==(const PublicParams&, const PublicParams&) = default;
};

inline constexpr int kMinDepth = 1;
inline constexpr int kMaxDepth = 40;

// Slot of a package: big-endian integer value of Hash(index, key) mod 2^depth.
std::uint64_t DeriveIndex(std::string_view package_key, int depth);

}  // namespace sbomproof

#endif  // SBOMPROOF_DIGEST_H_
