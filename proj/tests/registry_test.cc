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

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "sbomproof/errors.h"
#include "sbomproof/fixtures.h"
#include "sbomproof/registry.h"

namespace sbomproof {
namespace {

constexpr char kSerdeLine[] =
    R"({"name": "serde", "version": "1.0.136", "dependencies": [], )"
    R"("hash": "abc123...", "license": "MIT"})";

RegistrySnapshot Load(const std::string& text) {
  std::istringstream in(text);
  return LoadSnapshot(in);
}

TEST(LoadSnapshotTest, EmptyFile) {
  EXPECT_TRUE(Load("").packages.empty());
  EXPECT_TRUE(Load("\n  \n").packages.empty());
}

TEST(LoadSnapshotTest, SerdeRecord) {
  const auto snap = Load(kSerdeLine);
  ASSERT_EQ(snap.packages.size(), 1u);
  const auto& rec = snap.packages.at("pkg:serde@1.0.136");
  EXPECT_EQ(rec.license, "MIT");
  EXPECT_EQ(rec.artifact_hash, "abc123...");
  EXPECT_EQ(rec.ecosystem, "");
}

// The dependency list as printed in the sample entry has no version, so it
// cannot resolve within a snapshot.
TEST(LoadSnapshotTest, VersionlessDependencyDangles) {
  try {
    Load(R"({"name": "serde", "version": "1.0.136", )"
         R"("dependencies": ["serde_derive"], "hash": "abc123...", "license": "MIT"})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingDependency);
  }
}

TEST(LoadSnapshotTest, DanglingDependency) {
  try {
    Load(R"({"name":"a","version":"1","license":"MIT","hash":"h","dependencies":["b@1"]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDanglingDependency);
    EXPECT_NE(std::string(e.what()).find("pkg:b@1"), std::string::npos);
  }
}

TEST(LoadSnapshotTest, DuplicatePackage) {
  try {
    Load(std::string(kSerdeLine) + "\n" + kSerdeLine + "\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicatePackage);
  }
}

TEST(LoadSnapshotTest, MalformedLineReportsLineNumber) {
  try {
    Load(std::string(kSerdeLine) + "\n\n{not json\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    Load(R"({"name":"a","license":"MIT","hash":"h"})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(LoadSnapshotTest, LineOrderDoesNotMatter) {
  const std::string a =
      R"({"name":"a","version":"1","license":"MIT","hash":"h","dependencies":["b@1"]})";
  const std::string b = R"({"name":"b","version":"1","license":"MIT","hash":"h"})";
  const auto x = Load(a + "\n" + b);
  const auto y = Load(b + "\n" + a);
  EXPECT_EQ(SnapshotToJsonl(x), SnapshotToJsonl(y));
  EXPECT_EQ(SnapshotToJsonl(Load(SnapshotToJsonl(x))), SnapshotToJsonl(x));
}

TEST(LeafCommitmentTest, GoldenSerdeLeaf) {
  const auto snap = Load(kSerdeLine);
  const auto& rec = snap.packages.at("pkg:serde@1.0.136");
  // tests/oracle/golden_vectors.py
  EXPECT_EQ(LeafCommitment(rec).ToHex(),
            "e6d15cd4b2e96066315b8ba759939b02b59351407d52890f40e5a3aed2bfea74");
  EXPECT_EQ(LeafCommitment(rec), LeafCommitment(rec));
}

TEST(LeafCommitmentTest, LicenseMatters) {
  PackageRecord a{"x", "1", "MIT", "h", {}, ""};
  PackageRecord b = a;
  b.license = "GPL-3.0-only";
  EXPECT_NE(LeafCommitment(a), LeafCommitment(b));
}

TEST(LeafCommitmentTest, FieldBoundariesAreUnambiguous) {
  PackageRecord a{"ab", "c", "MIT", "h", {}, ""};
  PackageRecord b{"a", "bc", "MIT", "h", {}, ""};
  EXPECT_NE(LeafCommitment(a), LeafCommitment(b));
}

TEST(LeafCommitmentTest, NoCollisionsOnRandomRecords) {
  std::mt19937_64 rng(1);
  std::set<Digest> seen;
  std::set<std::vector<std::uint8_t>> tuples;
  const char alphabet[] = "ab.-1";
  auto field = [&] {
    std::string s;
    for (std::size_t n = rng() % 5; n > 0; --n) s.push_back(alphabet[rng() % 5]);
    return s;
  };
  for (int i = 0; i < 10000; ++i) {
    PackageRecord r{field(), field(), field(), field(), {}, ""};
    if (tuples.insert(SerializeMetadata(r)).second) {
      EXPECT_TRUE(seen.insert(LeafCommitment(r)).second);
    }
  }
  EXPECT_EQ(seen.size(), tuples.size());
}

TEST(BuildPackageTreeTest, SinglePackage) {
  const auto snap = Load(kSerdeLine);
  const auto pt = BuildPackageTree(snap, PublicParams{4, "sha256"});
  EXPECT_NE(pt.root(), EmptyChain(4)[4]);
  const std::uint64_t idx = pt.index_map.at("pkg:serde@1.0.136");
  EXPECT_EQ(idx, 12u);
  const auto o = pt.tree.Open(idx);
  EXPECT_TRUE(VerifyCommit(pt.root(), LeafCommitment(snap.packages.begin()->second),
                           idx, o));
}

TEST(BuildPackageTreeTest, DeterministicAndOneSlotPerPackage) {
  const auto snap = fixtures::BankingRegistry();
  const auto a = BuildPackageTree(snap, PublicParams{16, "sha256"});
  const auto b = BuildPackageTree(snap, PublicParams{16, "sha256"});
  EXPECT_EQ(a.root(), b.root());
  EXPECT_EQ(a.index_map, b.index_map);
  EXPECT_EQ(a.tree.occupied().size(), snap.packages.size());
}

TEST(BuildPackageTreeTest, CollisionNamesBothKeys) {
  std::vector<PackageRecord> recs;
  std::map<std::uint64_t, std::string> owner;
  std::string first, second;
  for (int i = 0; second.empty(); ++i) {
    PackageRecord r{"c" + std::to_string(i), "1", "MIT", "h", {}, ""};
    auto [it, fresh] = owner.emplace(DeriveIndex(r.key(), 4), r.key());
    if (!fresh) {
      first = it->second;
      second = r.key();
    }
    recs.push_back(r);
  }
  try {
    BuildPackageTree(MakeSnapshot(recs), PublicParams{4, "sha256"});
    FAIL();
  } catch (const IndexCollisionError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find(first), std::string::npos);
    EXPECT_NE(msg.find(second), std::string::npos);
  }
}

TEST(BuildPackageTreeTest, SyntheticTwoToTheFourteenAtDepthTwenty) {
  const auto snap = fixtures::SyntheticRegistry(1 << 14, 20, 42);
  ASSERT_EQ(snap.packages.size(), 1u << 14);
  const auto pt = BuildPackageTree(snap, PublicParams{20, "sha256"});
  EXPECT_EQ(pt.tree.occupied().size(), 1u << 14);
  EXPECT_EQ(BuildIndexMap(snap, 20), pt.index_map);
}

// Unfiltered sequential names at this load factor collide (about 128 pairs
// expected); the error must still name the keys.
TEST(BuildPackageTreeTest, NaiveNamesCollideActionably) {
  std::vector<PackageRecord> recs;
  for (int i = 0; i < (1 << 14); ++i) {
    recs.push_back({"naive-" + std::to_string(i), "1.0.0", "MIT", "h", {}, ""});
  }
  EXPECT_THROW(BuildPackageTree(MakeSnapshot(recs), PublicParams{20, "sha256"}),
               IndexCollisionError);
}

}  // namespace
}  // namespace sbomproof
