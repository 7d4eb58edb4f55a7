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

#include "sbomproof/digest.h"

#include <openssl/sha.h>

#include <algorithm>
#include <vector>

#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

constexpr std::array<std::string_view, 6> kTagNames = {
    "leaf-pt", "leaf-st", "node", "empty", "index", "accum"};

Digest HashWithPrefix(std::string_view name,
                      std::span<const std::uint8_t> payload) {
  std::vector<std::uint8_t> buf;
  buf.reserve(1 + name.size() + payload.size());
  buf.push_back(static_cast<std::uint8_t>(name.size()));
  buf.insert(buf.end(), name.begin(), name.end());
  buf.insert(buf.end(), payload.begin(), payload.end());
  Digest::Bytes out;
  SHA256(buf.data(), buf.size(), out.data());
  return Digest(out);
}

}  // namespace

Digest Digest::FromHex(std::string_view hex) {
  if (hex.size() != 2 * kSize) {
    throw ParseError("digest must be 64 lowercase hex characters, got " +
                     std::to_string(hex.size()));
  }
  return FromBytes(HexDecode(hex));
}

Digest Digest::FromBytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kSize) {
    throw ParseError("digest must be 32 bytes, got " +
                     std::to_string(bytes.size()));
  }
  Bytes b;
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return Digest(b);
}

std::string Digest::ToHex() const { return HexEncode(bytes_); }

std::string_view DomainTagName(DomainTag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

DomainTag ParseDomainTag(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<DomainTag>(i);
  }
  throw UsageError("unknown domain tag '" + std::string(name) + "'");
}

Digest Hash(DomainTag tag, std::span<const std::uint8_t> payload) {
  return HashWithPrefix(DomainTagName(tag), payload);
}

Digest Hash(DomainTag tag, std::string_view payload) {
  return Hash(tag, std::span(reinterpret_cast<const std::uint8_t*>(
                                 payload.data()),
                             payload.size()));
}

Digest Hash(std::string_view tag_name, std::span<const std::uint8_t> payload) {
  return Hash(ParseDomainTag(tag_name), payload);
}

Digest Hash(DomainTag tag, const Digest& left, const Digest& right) {
  std::array<std::uint8_t, 2 * Digest::kSize> buf;
  std::copy(left.bytes().begin(), left.bytes().end(), buf.begin());
  std::copy(right.bytes().begin(), right.bytes().end(),
            buf.begin() + Digest::kSize);
  return Hash(tag, buf);
}

Digest Sha256(std::span<const std::uint8_t> bytes) {
  Digest::Bytes out;
  SHA256(bytes.data(), bytes.size(), out.data());
  return Digest(out);
}

std::uint64_t DeriveIndex(std::string_view package_key, int depth) {
  if (package_key.empty()) throw UsageError("package key must not be empty");
  if (depth < kMinDepth || depth > kMaxDepth) {
    throw UsageError("depth must be in [1, 40], got " + std::to_string(depth));
  }
  const Digest d = Hash(DomainTag::kIndex, package_key);
  // Only the low 64 bits of the big-endian integer survive mod 2^depth.
  std::uint64_t tail = 0;
  for (std::size_t i = Digest::kSize - 8; i < Digest::kSize; ++i) {
    tail = (tail << 8) | d.bytes()[i];
  }
  return tail & ((std::uint64_t{1} << depth) - 1);
}

}  // namespace sbomproof
