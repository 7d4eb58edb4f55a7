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

#include "sbomproof/fixtures.h"

#include <algorithm>
#include <random>
#include <set>

namespace sbomproof::fixtures {
namespace {

PackageRecord Crate(std::string name, std::string version, std::string license,
                    std::vector<std::string> deps = {}) {
  PackageRecord r;
  r.artifact_hash = Sha256(std::span(
                               reinterpret_cast<const std::uint8_t*>(name.data()),
                               name.size()))
                        .ToHex()
                        .substr(0, 16) +
                    version;
  r.name = std::move(name);
  r.version = std::move(version);
  r.license = std::move(license);
  for (auto& d : deps) r.dependencies.push_back(NormalizeDependencyKey(d));
  r.ecosystem = "crates.io";
  return r;
}

}  // namespace

RegistrySnapshot SyntheticRegistry(std::size_t count, int depth,
                                   std::uint64_t seed, int max_deps) {
  static constexpr const char* kLicenses[] = {"MIT", "Apache-2.0",
                                              "BSD-3-Clause", "GPL-3.0-only"};
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> taken;
  std::vector<PackageRecord> records;
  records.reserve(count);
  for (std::uint64_t serial = 0; records.size() < count; ++serial) {
    PackageRecord r;
    r.name = "synth-" + std::to_string(serial);
    r.version = std::to_string(1 + rng() % 3) + "." + std::to_string(rng() % 10) +
                "." + std::to_string(rng() % 20);
    if (!taken.insert(DeriveIndex(r.key(), depth)).second) continue;
    r.license = kLicenses[rng() % 4];
    r.artifact_hash = Hash(DomainTag::kLeafPt, r.key()).ToHex();
    r.ecosystem = serial % 5 == 0 ? "c" : "crates.io";
    if (!records.empty()) {
      const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deps + 1));
      std::set<std::string> deps;
      for (int i = 0; i < n; ++i) deps.insert(records[rng() % records.size()].key());
      r.dependencies.assign(deps.begin(), deps.end());
    }
    records.push_back(std::move(r));
  }
  return MakeSnapshot(std::move(records), "synthetic-" + std::to_string(seed));
}

Sbom SyntheticSbom(const RegistrySnapshot& snapshot, std::size_t k,
                   std::uint64_t seed) {
  std::vector<const PackageRecord*> all;
  for (const auto& [key, rec] : snapshot.packages) all.push_back(&rec);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  Sbom sbom{"synthetic-app", "0.1.0", {}};
  for (std::size_t i = 0; i < k && i < all.size(); ++i) {
    sbom.entries.push_back({all[i]->name, all[i]->version, all[i]->ecosystem});
  }
  return sbom;
}

RegistrySnapshot BankingRegistry() {
  return MakeSnapshot(
      {
          Crate("tokio", "1.28.0", "MIT",
                {"mio@0.8.6", "bytes@1.4.0", "pin-project-lite@0.2.9"}),
          Crate("mio", "0.8.6", "MIT", {"libc@0.2.144"}),
          Crate("bytes", "1.4.0", "MIT"),
          Crate("pin-project-lite", "0.2.9", "Apache-2.0"),
          Crate("libc", "0.2.144", "MIT"),
          Crate("log4rs", "1.2.0", "MIT",
                {"log@0.4.17", "serde@1.0.136", "arc-swap@1.6.0"}),
          Crate("log4rs", "1.3.0", "MIT",
                {"log@0.4.17", "serde@1.0.136", "arc-swap@1.6.0"}),
          Crate("arc-swap", "1.6.0", "Apache-2.0"),
          Crate("log", "0.4.17", "MIT"),
          Crate("serde", "1.0.136", "MIT", {"serde_derive@1.0.136"}),
          Crate("serde_derive", "1.0.136", "MIT"),
      },
      "banking-registry");
}

Sbom BankingSbom() {
  return Sbom{"banking-core",
              "2.4.1",
              {{"tokio", "1.28.0", "crates.io"}, {"log4rs", "1.2.0", "crates.io"}}};
}

Sbom PatchedBankingSbom() {
  Sbom sbom = BankingSbom();
  sbom.entries[1].version = "1.3.0";
  return sbom;
}

RegistrySnapshot PropagationChain() {
  return MakeSnapshot({Crate("P_R", "1.0.0", "MIT", {"P_B@1.0.0"}),
                       Crate("P_B", "1.0.0", "MIT", {"P_A@1.0.0"}),
                       Crate("P_A", "1.0.0", "Apache-2.0")},
                      "propagation-chain");
}

PolicyConstraint SecurityProfile() {
  return PolicyConstraint{"sec", DenyList{{"pkg:P_A@1.0.0"}}};
}

PolicyConstraint LegalProfile() {
  return PolicyConstraint{"lic", LicenseAllowList{{"MIT", "Apache-2.0"}}};
}

}  // namespace sbomproof::fixtures
