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

#include "sbomproof/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

#include "sbomproof/errors.h"
#include "sbomproof/fixtures.h"
#include "sbomproof/policy.h"
#include "sbomproof/proof.h"
#include "sbomproof/random.h"
#include "sbomproof/registry.h"
#include "sbomproof/transcript_backend.h"

namespace sbomproof::cli {
namespace {

using Clock = std::chrono::steady_clock;

double Millis(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

std::size_t StoredNodes(const SparseTree& t) {
  return t.occupied().size() + t.cached_node_count();
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  const TranscriptBackend backend;
  for (int log2n : config.log2_packages) {
    const std::size_t n = std::size_t{1} << log2n;
    const int depth = config.depth > 0 ? config.depth : std::min(log2n + 6, kMaxDepth);
    if (depth < log2n + 1) {
      throw UsageError("depth " + std::to_string(depth) + " is too shallow for 2^" +
                       std::to_string(log2n) + " packages");
    }
    const PublicParams params = SetupParams(128, depth);
    const auto snapshot = fixtures::SyntheticRegistry(n, depth, config.seed);
    const auto pt = BuildPackageTree(snapshot, params);
    const auto st = BuildShadowTree(Compose(snapshot, {}), pt.index_map, params);
    const Digest artifact = Hash(DomainTag::kLeafPt, "bench-artifact");
    const TrustedAnchors anchors{pt.root(), st.root(), "", artifact, depth};

    for (std::size_t k : config.deps) {
      if (k > n) {
        throw UsageError("K=" + std::to_string(k) + " exceeds the registry size " +
                         std::to_string(n));
      }
      const Sbom sbom = fixtures::SyntheticSbom(snapshot, k, config.seed + k);
      BenchRow row{log2n, snapshot.packages.size(), depth, k,
                   static_cast<std::size_t>(depth) * Digest::kSize,
                   (StoredNodes(pt.tree) + StoredNodes(st)) * Digest::kSize};
      row.prove_ms = row.verify_ms = std::numeric_limits<double>::infinity();
      for (int r = 0; r < std::max(1, config.repeat); ++r) {
        SeededRandom rng(config.seed + static_cast<std::uint64_t>(r));
        const auto t0 = Clock::now();
        const Proof proof = Prove({&sbom, &pt, &st, "", artifact}, backend, rng);
        const auto t1 = Clock::now();
        const std::string json = ProofToJson(proof);
        const auto t2 = Clock::now();
        const VerifyResult result = VerifyProofJson(json, anchors);
        const auto t3 = Clock::now();
        if (!result.accepted) {
          throw Error(ErrorCode::kBackend, "bench proof rejected: " + result.ToString());
        }
        row.prove_ms = std::min(row.prove_ms, Millis(t1 - t0));
        row.verify_ms = std::min(row.verify_ms, Millis(t3 - t2));
        row.proof_bytes = json.size();
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string BenchRowCsv(const BenchRow& r) {
  char times[64];
  std::snprintf(times, sizeof(times), "%.4f,%.4f", r.prove_ms, r.verify_ms);
  return std::to_string(r.log2_packages) + "," + std::to_string(r.packages) + "," +
         std::to_string(r.depth) + "," + std::to_string(r.deps) + "," +
         std::to_string(r.opening_bytes) + "," + std::to_string(r.storage_bytes) + "," +
         times + "," + std::to_string(r.proof_bytes);
}

}  // namespace sbomproof::cli
