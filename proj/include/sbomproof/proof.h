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

#ifndef SBOMPROOF_PROOF_H_
#define SBOMPROOF_PROOF_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sbomproof/digest.h"
#include "sbomproof/random.h"
#include "sbomproof/registry.h"
#include "sbomproof/sbom.h"
#include "sbomproof/sparse_tree.h"

namespace sbomproof {

using Randomizer = std::array<std::uint8_t, 32>;

// Private input of one fold step.
struct StepWitness {
  // Prover-side bookkeeping only; never serialized.
  std::string dep_key;
  std::uint64_t index = 0;
  Digest pt_leaf;
  Opening pt_opening;
  Opening st_opening;
  Randomizer rho{};
};

// Dual membership: pt_leaf opens at `index` under g_pt, and the compliant
// shadow leaf Hash(leaf-st, 0x01) opens at the same index under g_st. The
// shadow leaf is fixed here and never read from the witness. Both openings
// must have the same depth.
bool ValidDep(const Digest& g_pt, const Digest& g_st, const StepWitness& w);

// W_0 = Hash(accum, g_pt || g_st || "init"), W_k = Hash(accum, W_{k-1} || rho_k).
class FoldAccumulator {
 public:
  static FoldAccumulator Init(const Digest& g_pt, const Digest& g_st);

  void Absorb(const Randomizer& rho);

  const Digest& value() const { return value_; }
  std::size_t steps() const { return steps_; }

 private:
  FoldAccumulator(Digest value) : value_(value) {}

  Digest value_;
  std::size_t steps_ = 0;
};

struct PublicRoots {
  Digest pt;
  Digest st;
  std::string policy_set;

  friend bool operator==(const PublicRoots&, const PublicRoots&) = default;
};

// Envelope:
//   {"backend_id", "hash_alg_id", "roots": {"pt", "st", "policy_set"},
//    "artifact_digest", "step_count", "accumulator", "body": base64}
struct Proof {
  std::string backend_id;
  std::string hash_alg_id{kHashAlgId};
  PublicRoots roots;
  Digest artifact_digest;
  std::size_t step_count = 0;
  Digest accumulator;
  std::vector<std::uint8_t> body;
};

// Compact, no trailing newline.
std::string ProofToJson(const Proof& proof);
// Strict: unknown or missing keys, wrong types and non-canonical encodings
// are ParseErrors.
Proof ProofFromJson(std::string_view text);

// Prover state between fold steps.
struct FoldState {
  PublicRoots roots;
  Digest artifact_digest;
  FoldAccumulator accumulator;
  std::vector<StepWitness> steps;
};

FoldState InitFold(const PublicRoots& roots, const Digest& artifact_digest);

// Opaque key material; empty for backends that need none.
struct BackendKeys {
  std::vector<std::uint8_t> proving_key;
  std::vector<std::uint8_t> verifying_key;
};

enum class RejectReason {
  kRootMismatch,
  kPolicySetMismatch,
  kArtifactMismatch,
  kInvalidStep,
  kAccumulatorMismatch,
  kMalformedProof,
};

std::string_view RejectReasonName(RejectReason reason);

struct VerifyResult {
  bool accepted = false;
  RejectReason reason = RejectReason::kMalformedProof;
  // 1-based step for kInvalidStep.
  std::size_t step = 0;
  std::string detail;

  static VerifyResult Accept() { return {true, {}, 0, {}}; }
  static VerifyResult Reject(RejectReason reason, std::string detail = {},
                             std::size_t step = 0) {
    return {false, reason, step, std::move(detail)};
  }

  // "Accept", "RootMismatch", "InvalidStep(2)", ...
  std::string ToString() const;
};

// A proof system that folds ValidDep steps. Implementations must keep the
// accumulator recurrence of FoldAccumulator so that every backend agrees on
// W_K for the same randomizers.
class ProofBackend {
 public:
  virtual ~ProofBackend() = default;

  virtual std::string_view id() const = 0;
  // Whether proofs hide the witnesses from the verifier.
  virtual bool hiding() const = 0;

  virtual BackendKeys KeyGen(const PublicParams& params) const = 0;
  // Checks the step and absorbs it. Throws StepError(kNonCompliantStep) with
  // the 1-based ordinal when ValidDep fails.
  virtual void FoldStep(FoldState& state, StepWitness witness) const = 0;
  // Serializes the folded state without re-checking it.
  virtual Proof Compress(const FoldState& state) const = 0;
  // Checks the body only; VerifyProof has already compared the roots, policy
  // set and artifact with the trusted anchors. `expected_depth` of 0 means
  // unchecked.
  virtual VerifyResult VerifyBody(const Proof& proof,
                                  int expected_depth) const = 0;
};

class BackendRegistry {
 public:
  // Registry with the transcript backend.
  static const BackendRegistry& Default();

  void Register(std::unique_ptr<ProofBackend> backend);
  const ProofBackend* Find(std::string_view id) const;

 private:
  std::map<std::string, std::unique_ptr<ProofBackend>, std::less<>> backends_;
};

inline constexpr std::string_view kTranscriptBackendId = "transcript";
inline constexpr std::string_view kFoldingBackendId = "folding";

struct ProveRequest {
  const Sbom* sbom = nullptr;
  const PackageTree* package_tree = nullptr;
  const SparseTree* shadow_tree = nullptr;
  std::string policy_set;
  Digest artifact_digest;
  // Set to demand a zero-knowledge backend; UsageError if the chosen one is
  // not hiding.
  bool require_hiding = false;
};

// Folds every SBOM entry in order and compresses. Fails fast:
// StepError(kUnresolvableDependency) when an entry is not in the package
// tree, StepError(kNonCompliantStep) when ValidDep fails. Both carry only
// the 1-based step ordinal.
Proof Prove(const ProveRequest& request, const ProofBackend& backend,
            RandomSource& rng);

// Anchors the client obtained independently of the prover.
struct TrustedAnchors {
  Digest pt_root;
  Digest st_root;
  std::string policy_set;
  Digest artifact_digest;
  // 0 skips the depth check.
  int depth = 0;
};

// Total: never throws.
VerifyResult VerifyProof(const Proof& proof, const TrustedAnchors& anchors,
                         const BackendRegistry& backends =
                             BackendRegistry::Default());
// Parses the envelope first; any parse failure is kMalformedProof.
VerifyResult VerifyProofJson(std::string_view envelope,
                             const TrustedAnchors& anchors,
                             const BackendRegistry& backends =
                                 BackendRegistry::Default());

}  // namespace sbomproof

#endif  // SBOMPROOF_PROOF_H_
