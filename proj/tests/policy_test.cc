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

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sbomproof/errors.h"
#include "sbomproof/fixtures.h"
#include "sbomproof/policy.h"

namespace sbomproof {
namespace {

const std::string kRoot = "pkg:P_R@1.0.0";
const std::string kMid = "pkg:P_B@1.0.0";
const std::string kDeep = "pkg:P_A@1.0.0";

PackageRecord Record(std::string name, std::string version, std::string license) {
  return PackageRecord{std::move(name), std::move(version), std::move(license),
                       "h", {}, ""};
}

TEST(PolicyJsonTest, ParsesEachKind) {
  const auto deny = PolicyFromJson(
      R"({"policy_id":"sec","kind":"deny-list","payload":["log4rs@1.2.0"]})");
  EXPECT_EQ(deny.kind(), "deny-list");
  EXPECT_TRUE(std::get<DenyList>(deny.payload).keys.contains("pkg:log4rs@1.2.0"));

  const auto lic = PolicyFromJson(
      R"({"policy_id":"lic","kind":"license-allow-list","payload":["MIT"]})");
  EXPECT_EQ(lic.kind(), "license-allow-list");

  const auto floor = PolicyFromJson(
      R"({"policy_id":"ver","kind":"version-floor","payload":{"log4rs":"1.3.0"}})");
  EXPECT_EQ(std::get<VersionFloor>(floor.payload).minimum.at("log4rs"), "1.3.0");

  EXPECT_EQ(PolicyFromJson(PolicyToJson(floor)).kind(), "version-floor");
}

TEST(PolicyJsonTest, Errors) {
  EXPECT_THROW(PolicyFromJson(R"({"policy_id":"x","kind":"cve-feed","payload":[]})"),
               UsageError);
  EXPECT_THROW(PolicyFromJson(R"({"policy_id":"a+b","kind":"deny-list","payload":[]})"),
               UsageError);
  try {
    PolicyFromJson(R"({"policy_id":"x","kind":"license-allow-list","payload":[]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
  }
  try {
    PolicyFromJson(R"({"policy_id":"x","kind":"deny-list"})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchema);
  }
  EXPECT_NO_THROW(PolicyFromJson(R"({"policy_id":"x","kind":"deny-list","payload":[]})"));
}

TEST(CompareVersionsTest, DottedNumeric) {
  EXPECT_LT(CompareVersions("1.2.0", "1.3.0"), 0);
  EXPECT_EQ(CompareVersions("1.3", "1.3.0"), 0);
  EXPECT_GT(CompareVersions("1.10.0", "1.9.9"), 0);
  EXPECT_GT(CompareVersions("2", "1.99.99"), 0);
  EXPECT_EQ(CompareVersions("1.0.0-beta", "1.0.0"), 0);
}

TEST(EvaluateLocalTest, EmptyDenyListAllCompliant) {
  const auto snap = fixtures::BankingRegistry();
  for (const auto& [key, ok] :
       EvaluateLocal(snap, PolicyConstraint{"sec", DenyList{}})) {
    EXPECT_TRUE(ok) << key;
  }
}

TEST(EvaluateLocalTest, DenyListFlagsExactlyListed) {
  const auto snap = fixtures::BankingRegistry();
  const auto v = EvaluateLocal(snap, PolicyConstraint{"sec", DenyList{{"pkg:log4rs@1.2.0"}}});
  for (const auto& [key, ok] : v) EXPECT_EQ(ok, key != "pkg:log4rs@1.2.0") << key;
}

TEST(EvaluateLocalTest, LicenseAllowListOnSerde) {
  const auto snap = MakeSnapshot({Record("serde", "1.0.136", "MIT")});
  const auto v = EvaluateLocal(snap, PolicyConstraint{"lic", LicenseAllowList{{"MIT"}}});
  EXPECT_TRUE(v.at("pkg:serde@1.0.136"));
  const auto w =
      EvaluateLocal(snap, PolicyConstraint{"lic", LicenseAllowList{{"Apache-2.0"}}});
  EXPECT_FALSE(w.at("pkg:serde@1.0.136"));
}

TEST(EvaluateLocalTest, VersionFloor) {
  const auto snap = MakeSnapshot({Record("log4rs", "1.2.0", "MIT"),
                                  Record("log4rs", "1.3.0", "MIT"),
                                  Record("tokio", "0.1.0", "MIT")});
  const auto v =
      EvaluateLocal(snap, PolicyConstraint{"ver", VersionFloor{{{"log4rs", "1.3.0"}}}});
  EXPECT_FALSE(v.at("pkg:log4rs@1.2.0"));
  EXPECT_TRUE(v.at("pkg:log4rs@1.3.0"));
  EXPECT_TRUE(v.at("pkg:tokio@0.1.0"));
}

TEST(PropagateTest, ChainPropagatesToRoot) {
  const auto snap = fixtures::PropagationChain();
  const auto c = Propagate(snap, {{kRoot, true}, {kMid, true}, {kDeep, false}});
  EXPECT_FALSE(c.at(kRoot));
  EXPECT_FALSE(c.at(kMid));
  EXPECT_FALSE(c.at(kDeep));
}

TEST(PropagateTest, IsolatedCompliantStaysCompliant) {
  const auto snap = MakeSnapshot({Record("solo", "1", "MIT")});
  EXPECT_TRUE(Propagate(snap, {{"pkg:solo@1", true}}).at("pkg:solo@1"));
}

TEST(PropagateTest, MissingKeyIsUsageError) {
  const auto snap = fixtures::PropagationChain();
  EXPECT_THROW(Propagate(snap, {{kRoot, true}}), UsageError);
}

TEST(PropagateTest, RandomDagsMatchReachabilityOracle) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto g = oracle::MakeRandomGraph(rng, 12, 30, /*acyclic=*/true);
    ASSERT_EQ(Propagate(g.snapshot, g.local),
              oracle::ReachabilityOracle(g.snapshot, g.local));
  }
}

TEST(PropagateTest, CyclesUseGreatestFixpoint) {
  PackageRecord a = Record("a", "1", "MIT");
  PackageRecord b = Record("b", "1", "MIT");
  PackageRecord c = Record("c", "1", "MIT");
  a.dependencies = {"pkg:b@1"};
  b.dependencies = {"pkg:a@1"};
  c.dependencies = {"pkg:a@1"};
  const auto snap = MakeSnapshot({a, b, c});
  const auto clean = Propagate(snap, {{"pkg:a@1", true}, {"pkg:b@1", true}, {"pkg:c@1", true}});
  for (const auto& [k, ok] : clean) EXPECT_TRUE(ok) << k;
  const auto dirty = Propagate(snap, {{"pkg:a@1", true}, {"pkg:b@1", false}, {"pkg:c@1", true}});
  for (const auto& [k, ok] : dirty) EXPECT_FALSE(ok) << k;
}

TEST(PropagateTest, InvariantsOnCyclicGraphs) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracle::MakeRandomGraph(rng, 12, 30, /*acyclic=*/false);
    const auto c = Propagate(g.snapshot, g.local);
    EXPECT_EQ(c, oracle::ReachabilityOracle(g.snapshot, g.local));
    for (const auto& [k, bit] : c) EXPECT_LE(bit, g.local.at(k));
    // A fixpoint: propagating the result again changes nothing.
    EXPECT_EQ(Propagate(g.snapshot, c), c);
  }
}

TEST(ComposeTest, Conjunction) {
  const auto snap = fixtures::PropagationChain();
  const auto sec = EvaluatePolicy(snap, fixtures::SecurityProfile()).propagated;
  const auto lic = EvaluatePolicy(snap, fixtures::LegalProfile()).propagated;
  EXPECT_FALSE(sec.at(kRoot));
  EXPECT_TRUE(lic.at(kRoot));
  const std::vector<Verdicts> both = {sec, lic};
  EXPECT_FALSE(Compose(snap, both).at(kRoot));
  const std::vector<Verdicts> lic_only = {lic, lic};
  for (const auto& [k, ok] : Compose(snap, lic_only)) EXPECT_TRUE(ok);
}

TEST(ComposeTest, EmptyListIsAllCompliant) {
  const auto snap = fixtures::PropagationChain();
  const auto c = Compose(snap, {});
  EXPECT_EQ(c.size(), 3u);
  for (const auto& [k, ok] : c) EXPECT_TRUE(ok);
}

TEST(ComposeTest, KeyMismatchIsUsageError) {
  const auto snap = fixtures::PropagationChain();
  const std::vector<Verdicts> bad = {{{kRoot, true}}};
  EXPECT_THROW(Compose(snap, bad), UsageError);
}

TEST(ComposeTest, OrderIndependentAndMonotone) {
  std::mt19937_64 rng(8);
  const auto snap = fixtures::BankingRegistry();
  std::vector<PolicyConstraint> policies = {
      {"sec", DenyList{{"pkg:libc@0.2.144"}}},
      {"lic", LicenseAllowList{{"MIT"}}},
      {"ver", VersionFloor{{{"log4rs", "1.3.0"}}}},
  };
  std::vector<Verdicts> maps;
  for (const auto& p : policies) maps.push_back(EvaluatePolicy(snap, p).propagated);
  const Verdicts all = Compose(snap, maps);
  for (int i = 0; i < 6; ++i) {
    std::vector<std::size_t> order = {0, 1, 2};
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Verdicts> permuted;
    PolicySet set;
    for (std::size_t j : order) {
      permuted.push_back(maps[j]);
      set.policies.push_back(policies[j]);
    }
    EXPECT_EQ(Compose(snap, permuted), all);
    EXPECT_EQ(set.set_id(), "lic+sec+ver");
  }
  // Adding a policy never raises a verdict.
  for (std::size_t n = 0; n < maps.size(); ++n) {
    const std::vector<Verdicts> fewer(maps.begin(), maps.begin() + n);
    const std::vector<Verdicts> more(maps.begin(), maps.begin() + n + 1);
    const auto a = Compose(snap, fewer);
    const auto b = Compose(snap, more);
    for (const auto& [k, bit] : b) EXPECT_LE(bit, a.at(k));
  }
}

TEST(AggregateOnDemandTest, EmptyClientDenyListKeepsAuditorVerdicts) {
  const auto snap = fixtures::PropagationChain();
  const PolicySet auditor{{fixtures::SecurityProfile(), fixtures::LegalProfile()}};
  const std::vector<ComplianceMap> maps = {
      EvaluatePolicy(snap, fixtures::SecurityProfile()),
      EvaluatePolicy(snap, fixtures::LegalProfile())};
  const std::vector<Verdicts> parts = {maps[0].propagated, maps[1].propagated};
  const std::vector<PolicyConstraint> client = {{"client", DenyList{}}};
  const auto r = AggregateOnDemand(snap, auditor, maps, client);
  EXPECT_EQ(r.composed, Compose(snap, parts));
  EXPECT_EQ(r.set_id, "client+lic+sec");
}

TEST(AggregateOnDemandTest, ClientDenyFlipsAncestors) {
  const auto snap = fixtures::BankingRegistry();
  const PolicySet auditor{{PolicyConstraint{"lic", LicenseAllowList{{"MIT", "Apache-2.0"}}}}};
  const std::vector<ComplianceMap> maps = {EvaluatePolicy(snap, auditor.policies[0])};
  const std::vector<PolicyConstraint> client = {
      {"mine", DenyList{{"pkg:libc@0.2.144"}}}};
  const auto r = AggregateOnDemand(snap, auditor, maps, client);
  Verdicts local;
  for (const auto& [k, rec] : snap.packages) local[k] = k != "pkg:libc@0.2.144";
  EXPECT_EQ(r.composed, oracle::ReachabilityOracle(snap, local));
  EXPECT_FALSE(r.composed.at("pkg:tokio@1.28.0"));
  EXPECT_FALSE(r.composed.at("pkg:mio@0.8.6"));
  EXPECT_TRUE(r.composed.at("pkg:log4rs@1.2.0"));
}

TEST(AggregateOnDemandTest, EmptyAuditorEqualsClientAlone) {
  const auto snap = fixtures::PropagationChain();
  const std::vector<PolicyConstraint> client = {fixtures::SecurityProfile()};
  const auto r = AggregateOnDemand(snap, PolicySet{}, {}, client);
  EXPECT_EQ(r.composed, EvaluatePolicy(snap, fixtures::SecurityProfile()).propagated);
  EXPECT_EQ(r.set_id, "sec");
}

TEST(AggregateOnDemandTest, IdClashIsUsageError) {
  const auto snap = fixtures::PropagationChain();
  const PolicySet auditor{{fixtures::SecurityProfile()}};
  const std::vector<ComplianceMap> maps = {
      EvaluatePolicy(snap, fixtures::SecurityProfile())};
  const std::vector<PolicyConstraint> client = {{"sec", DenyList{}}};
  EXPECT_THROW(AggregateOnDemand(snap, auditor, maps, client), UsageError);
  EXPECT_THROW(AggregateOnDemand(snap, auditor, {}, {}), UsageError);
}

TEST(ComplianceJsonTest, RoundTrip) {
  const auto snap = fixtures::PropagationChain();
  const auto map = EvaluatePolicy(snap, fixtures::SecurityProfile());
  const auto back = ComplianceFromJson(ComplianceToJson(map));
  EXPECT_EQ(back.policy_id, "sec");
  EXPECT_EQ(back.local, map.local);
  EXPECT_EQ(back.propagated, map.propagated);
}

TEST(ShadowTreeTest, AllCompliantLeaves) {
  const auto snap = fixtures::BankingRegistry();
  const PublicParams params{12, "sha256"};
  const auto pt = BuildPackageTree(snap, params);
  const auto st = BuildShadowTree(Compose(snap, {}), pt.index_map, params);
  for (const auto& [idx, leaf] : st.occupied()) EXPECT_EQ(leaf, ShadowLeaf(true));
  // tests/oracle/golden_vectors.py
  EXPECT_EQ(ShadowLeaf(true).ToHex(),
            "208eaea925913b777db07c13c1fbbf6d75b540758f9b99ca2a74795fd68fc825");
  EXPECT_EQ(ShadowLeaf(false).ToHex(),
            "97cb81ee999449441397ab96e9b35a565318a7c3cfe0eb8b474cb562d4bd9d2f");
}

TEST(ShadowTreeTest, IsomorphicToPackageTree) {
  const auto snap = fixtures::SyntheticRegistry(300, 14, 3);
  const PublicParams params{14, "sha256"};
  const auto pt = BuildPackageTree(snap, params);
  const auto lic = EvaluatePolicy(snap, {"lic", LicenseAllowList{{"MIT"}}});
  const auto st = BuildShadowTree(lic.propagated, pt.index_map, params);
  std::vector<std::uint64_t> a, b;
  for (const auto& [i, d] : pt.tree.occupied()) a.push_back(i);
  for (const auto& [i, d] : st.occupied()) b.push_back(i);
  EXPECT_EQ(a, b);
}

TEST(ShadowTreeTest, FlippingOneBitChangesRoot) {
  const auto snap = fixtures::BankingRegistry();
  const PublicParams params{12, "sha256"};
  const auto pt = BuildPackageTree(snap, params);
  Verdicts v = Compose(snap, {});
  const Digest before = BuildShadowTree(v, pt.index_map, params).root();
  v["pkg:bytes@1.4.0"] = false;
  EXPECT_NE(BuildShadowTree(v, pt.index_map, params).root(), before);
  v.erase("pkg:bytes@1.4.0");
  EXPECT_THROW(BuildShadowTree(v, pt.index_map, params), UsageError);
}

}  // namespace
}  // namespace sbomproof
