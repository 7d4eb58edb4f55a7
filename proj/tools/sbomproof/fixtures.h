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

#ifndef SBOMPROOF_TOOLS_FIXTURES_H_
#define SBOMPROOF_TOOLS_FIXTURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "sbomproof/policy.h"
#include "sbomproof/registry.h"
#include "sbomproof/sbom.h"

namespace sbomproof::fixtures {

// `count` packages with random DAG dependencies (each package may depend on
// up to `max_deps` earlier ones). Names whose slot is already taken at
// `depth` are skipped, so the result always commits without collisions.
RegistrySnapshot SyntheticRegistry(std::size_t count, int depth,
                                   std::uint64_t seed, int max_deps = 3);

// SBOM listing the first `k` packages of `snapshot` (map order of a
// deterministic shuffle).
Sbom SyntheticSbom(const RegistrySnapshot& snapshot, std::size_t k,
                   std::uint64_t seed);

// Small crates.io-style registry used by the lifecycle scenarios:
// tokio 1.28.0, log4rs 1.2.0 and 1.3.0, serde/serde_derive 1.0.136 and
// their transitive dependencies.
RegistrySnapshot BankingRegistry();

// banking-core 2.4.1 -> tokio 1.28.0, log4rs 1.2.0.
Sbom BankingSbom();
// Same SBOM after upgrading log4rs to 1.3.0.
Sbom PatchedBankingSbom();

// Three-package chain P_R -> P_B -> P_A for the propagation profiles.
RegistrySnapshot PropagationChain();
// Flags P_A (security), allows every license in the chain (legal).
PolicyConstraint SecurityProfile();
PolicyConstraint LegalProfile();

}  // namespace sbomproof::fixtures

#endif  // SBOMPROOF_TOOLS_FIXTURES_H_
