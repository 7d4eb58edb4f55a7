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

#include <set>
#include <string>

#include "gtest/gtest.h"
#include "sbomproof/digest.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

// Golden values come from tests/oracle/golden_vectors.py (hashlib only).
constexpr char kE0[] =
    "3a6b76f7ed7d8304999a67c1cd60f76c33d75b7273ada90e89a46f6799c785e0";
constexpr char kLeafPtX[] =
    "5e42d4e755a275bf993ea34ad240abf62f209c6dd43f4346179467b82723da28";
constexpr char kLeafStX[] =
    "c30459cde9ced5500dc5d5e0a21d1ab80725e9394e99fc2b52dc2f20ccd2dce0";

TEST(HashTest, Deterministic) {
  const Digest d = Hash(DomainTag::kLeafPt, "payload");
  EXPECT_EQ(Hash(DomainTag::kNode, d, d), Hash(DomainTag::kNode, d, d));
}

TEST(HashTest, GoldenVectors) {
  EXPECT_EQ(Hash(DomainTag::kEmpty, std::string_view()).ToHex(), kE0);
  EXPECT_EQ(Hash(DomainTag::kLeafPt, "x").ToHex(), kLeafPtX);
  EXPECT_EQ(Hash(DomainTag::kLeafSt, "x").ToHex(), kLeafStX);
}

TEST(HashTest, TagsSeparate) {
  EXPECT_NE(Hash(DomainTag::kLeafPt, "x"), Hash(DomainTag::kLeafSt, "x"));
}

TEST(HashTest, TagByName) {
  const std::string_view x = "x";
  const std::span<const std::uint8_t> bytes(
      reinterpret_cast<const std::uint8_t*>(x.data()), x.size());
  EXPECT_EQ(Hash("leaf-pt", bytes).ToHex(), kLeafPtX);
  EXPECT_THROW(Hash("leaf", bytes), UsageError);
  EXPECT_THROW(ParseDomainTag("LEAF-PT"), UsageError);
}

TEST(HashTest, NoCrossTagCollisionsOnFuzzCorpus) {
  constexpr DomainTag kTags[] = {DomainTag::kLeafPt, DomainTag::kLeafSt,
                                 DomainTag::kNode,   DomainTag::kEmpty,
                                 DomainTag::kIndex,  DomainTag::kAccum};
  std::set<Digest> seen;
  std::size_t n = 0;
  for (int i = 0; i < 10000 / 6 + 1; ++i) {
    const std::string payload = "sample-" + std::to_string(i);
    for (DomainTag t : kTags) {
      seen.insert(Hash(t, payload));
      ++n;
    }
  }
  EXPECT_EQ(seen.size(), n);
  EXPECT_GE(n, 10000u);
}

TEST(DigestTest, HexRoundTripAndStrictness) {
  const Digest d = Hash(DomainTag::kNode, "abc");
  EXPECT_EQ(Digest::FromHex(d.ToHex()), d);
  EXPECT_EQ(d.ToHex().size(), 64u);
  std::string upper = d.ToHex();
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper != d.ToHex()) EXPECT_THROW(Digest::FromHex(upper), ParseError);
  EXPECT_THROW(Digest::FromHex("0x" + d.ToHex().substr(2)), ParseError);
  EXPECT_THROW(Digest::FromHex(d.ToHex().substr(1)), ParseError);
}

TEST(DeriveIndexTest, RangeForDepthOne) {
  for (int i = 0; i < 200; ++i) {
    EXPECT_LT(DeriveIndex("pkg:k" + std::to_string(i) + "@1", 1), 2u);
  }
}

TEST(DeriveIndexTest, Deterministic) {
  EXPECT_EQ(DeriveIndex("pkg:tokio@1.28.0", 20),
            DeriveIndex("pkg:tokio@1.28.0", 20));
}

// Big-endian interpretation; changing the byte order breaks these.
TEST(DeriveIndexTest, GoldenVectors) {
  EXPECT_EQ(DeriveIndex("pkg:serde@1.0.136", 4), 12u);
  EXPECT_EQ(DeriveIndex("pkg:serde@1.0.136", 20), 667804u);
  EXPECT_EQ(DeriveIndex("pkg:serde@1.0.136", 40), 526631186588u);
}

TEST(DeriveIndexTest, RangeProperty) {
  for (int d = 1; d <= kMaxDepth; ++d) {
    for (int i = 0; i < 50; ++i) {
      const auto idx = DeriveIndex("pkg:p" + std::to_string(i) + "@0.1", d);
      EXPECT_LT(idx, std::uint64_t{1} << d);
    }
  }
}

TEST(DeriveIndexTest, Errors) {
  EXPECT_THROW(DeriveIndex("", 4), UsageError);
  EXPECT_THROW(DeriveIndex("pkg:a@1", 0), UsageError);
  EXPECT_THROW(DeriveIndex("pkg:a@1", 41), UsageError);
}

TEST(Sha256Test, KnownAnswer) {
  const std::string abc = "abc";
  const Digest d = Sha256(std::span(
      reinterpret_cast<const std::uint8_t*>(abc.data()), abc.size()));
  EXPECT_EQ(d.ToHex(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace sbomproof
