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

#include "sbomproof/proof.h"

#include <exception>
#include <utility>

#include "json.hpp"
#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"
#include "sbomproof/policy.h"
#include "sbomproof/transcript_backend.h"

namespace sbomproof {
namespace {

using nlohmann::ordered_json;

const ordered_json& Field(const ordered_json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) {
    throw ParseError(std::string("proof is missing '") + name + "'");
  }
  return *it;
}

std::string StringField(const ordered_json& obj, const char* name) {
  const auto& v = Field(obj, name);
  if (!v.is_string()) {
    throw ParseError(std::string("proof field '") + name + "' must be a string");
  }
  return v.get<std::string>();
}

void RequireExactKeys(const ordered_json& obj,
                      std::initializer_list<const char*> keys) {
  if (!obj.is_object() || obj.size() != keys.size()) {
    throw ParseError("unexpected proof envelope shape");
  }
  for (const char* k : keys) Field(obj, k);
}

}  // namespace

bool ValidDep(const Digest& g_pt, const Digest& g_st, const StepWitness& w) {
  if (w.pt_opening.siblings.size() != w.st_opening.siblings.size()) {
    return false;
  }
  static const Digest kCompliant = ShadowLeaf(true);
  return VerifyCommit(g_pt, w.pt_leaf, w.index, w.pt_opening) &&
         VerifyCommit(g_st, kCompliant, w.index, w.st_opening);
}

FoldAccumulator FoldAccumulator::Init(const Digest& g_pt, const Digest& g_st) {
  std::vector<std::uint8_t> payload;
  AppendBytes(payload, g_pt.span());
  AppendBytes(payload, g_st.span());
  constexpr std::string_view kInit = "init";
  payload.insert(payload.end(), kInit.begin(), kInit.end());
  return FoldAccumulator(Hash(DomainTag::kAccum, payload));
}

void FoldAccumulator::Absorb(const Randomizer& rho) {
  std::vector<std::uint8_t> payload;
  AppendBytes(payload, value_.span());
  AppendBytes(payload, rho);
  value_ = Hash(DomainTag::kAccum, payload);
  ++steps_;
}

std::string ProofToJson(const Proof& proof) {
  return ordered_json{
      {"backend_id", proof.backend_id},
      {"hash_alg_id", proof.hash_alg_id},
      {"roots",
       {{"pt", proof.roots.pt.ToHex()},
        {"st", proof.roots.st.ToHex()},
        {"policy_set", proof.roots.policy_set}}},
      {"artifact_digest", proof.artifact_digest.ToHex()},
      {"step_count", proof.step_count},
      {"accumulator", proof.accumulator.ToHex()},
      {"body", Base64Encode(proof.body)},
  }
      .dump();
}

Proof ProofFromJson(std::string_view text) {
  ordered_json obj;
  try {
    obj = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what());
  }
  RequireExactKeys(obj, {"backend_id", "hash_alg_id", "roots", "artifact_digest",
                         "step_count", "accumulator", "body"});
  const auto& roots = Field(obj, "roots");
  RequireExactKeys(roots, {"pt", "st", "policy_set"});
  const auto& count = Field(obj, "step_count");
  if (!count.is_number_unsigned()) {
    throw ParseError("'step_count' must be a non-negative integer");
  }
  Proof proof;
  proof.backend_id = StringField(obj, "backend_id");
  proof.hash_alg_id = StringField(obj, "hash_alg_id");
  proof.roots.pt = Digest::FromHex(StringField(roots, "pt"));
  proof.roots.st = Digest::FromHex(StringField(roots, "st"));
  proof.roots.policy_set = StringField(roots, "policy_set");
  proof.artifact_digest = Digest::FromHex(StringField(obj, "artifact_digest"));
  proof.step_count = count.get<std::size_t>();
  proof.accumulator = Digest::FromHex(StringField(obj, "accumulator"));
  proof.body = Base64Decode(StringField(obj, "body"));
  return proof;
}

FoldState InitFold(const PublicRoots& roots, const Digest& artifact_digest) {
  return FoldState{roots, artifact_digest,
                   FoldAccumulator::Init(roots.pt, roots.st), {}};
}

std::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kRootMismatch:
      return "RootMismatch";
    case RejectReason::kPolicySetMismatch:
      return "PolicySetMismatch";
    case RejectReason::kArtifactMismatch:
      return "ArtifactMismatch";
    case RejectReason::kInvalidStep:
      return "InvalidStep";
    case RejectReason::kAccumulatorMismatch:
      return "AccumulatorMismatch";
    case RejectReason::kMalformedProof:
      return "MalformedProof";
  }
  return "MalformedProof";
}

std::string VerifyResult::ToString() const {
  if (accepted) return "Accept";
  std::string s(RejectReasonName(reason));
  if (reason == RejectReason::kInvalidStep) s += "(" + std::to_string(step) + ")";
  return s;
}

const BackendRegistry& BackendRegistry::Default() {
  static const BackendRegistry* registry = [] {
    auto* r = new BackendRegistry();
    r->Register(std::make_unique<TranscriptBackend>());
    return r;
  }();
  return *registry;
}

void BackendRegistry::Register(std::unique_ptr<ProofBackend> backend) {
  std::string id(backend->id());
  backends_[std::move(id)] = std::move(backend);
}

const ProofBackend* BackendRegistry::Find(std::string_view id) const {
  auto it = backends_.find(id);
  return it == backends_.end() ? nullptr : it->second.get();
}

Proof Prove(const ProveRequest& request, const ProofBackend& backend,
            RandomSource& rng) {
  if (request.sbom == nullptr || request.package_tree == nullptr ||
      request.shadow_tree == nullptr) {
    throw UsageError("prove needs an SBOM, a package tree and a shadow tree");
  }
  if (request.require_hiding && !backend.hiding()) {
    throw UsageError("backend '" + std::string(backend.id()) +
                     "' is not hiding and cannot produce a zero-knowledge proof");
  }
  const PackageTree& pt = *request.package_tree;
  const SparseTree& st = *request.shadow_tree;
  if (pt.tree.params() != st.params()) {
    throw UsageError("package and shadow trees have different parameters");
  }
  FoldState state = InitFold(
      PublicRoots{pt.root(), st.root(), request.policy_set},
      request.artifact_digest);
  const auto& entries = request.sbom->entries;
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const std::string key = entries[j].key();
    auto it = pt.index_map.find(key);
    if (it == pt.index_map.end()) {
      throw StepError(ErrorCode::kUnresolvableDependency, j + 1);
    }
    StepWitness w;
    w.dep_key = key;
    w.index = it->second;
    w.pt_leaf = pt.tree.Leaf(w.index);
    w.pt_opening = pt.tree.Open(w.index);
    w.st_opening = st.Open(w.index);
    rng.Fill(w.rho);
    backend.FoldStep(state, std::move(w));
  }
  return backend.Compress(state);
}

VerifyResult VerifyProof(const Proof& proof, const TrustedAnchors& anchors,
                         const BackendRegistry& backends) {
  try {
    if (proof.hash_alg_id != kHashAlgId) {
      return VerifyResult::Reject(RejectReason::kMalformedProof,
                                  "unsupported hash_alg_id");
    }
    const ProofBackend* backend = backends.Find(proof.backend_id);
    if (backend == nullptr) {
      return VerifyResult::Reject(RejectReason::kMalformedProof,
                                  "unknown backend '" + proof.backend_id + "'");
    }
    if (proof.roots.pt != anchors.pt_root || proof.roots.st != anchors.st_root) {
      return VerifyResult::Reject(RejectReason::kRootMismatch);
    }
    if (proof.roots.policy_set != anchors.policy_set) {
      return VerifyResult::Reject(RejectReason::kPolicySetMismatch);
    }
    if (proof.artifact_digest != anchors.artifact_digest) {
      return VerifyResult::Reject(RejectReason::kArtifactMismatch);
    }
    return backend->VerifyBody(proof, anchors.depth);
  } catch (const std::exception& e) {
    return VerifyResult::Reject(RejectReason::kMalformedProof, e.what());
  }
}

VerifyResult VerifyProofJson(std::string_view envelope,
                             const TrustedAnchors& anchors,
                             const BackendRegistry& backends) {
  Proof proof;
  try {
    proof = ProofFromJson(envelope);
  } catch (const std::exception& e) {
    return VerifyResult::Reject(RejectReason::kMalformedProof, e.what());
  }
  return VerifyProof(proof, anchors, backends);
}

}  // namespace sbomproof
