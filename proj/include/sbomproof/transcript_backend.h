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

#ifndef SBOMPROOF_TRANSCRIPT_BACKEND_H_
#define SBOMPROOF_TRANSCRIPT_BACKEND_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sbomproof/proof.h"

namespace sbomproof {

// Reference backend. Sound and binding, but the body is the full list of
// witnesses, so it is NOT hiding: the verifier learns every index, leaf and
// path.
//
// Body layout (big-endian):
//   u32 step_count
//   step_count x { u32 record_len, u64 index, pt_leaf[32],
//                  pt_siblings[D][32], st_siblings[D][32], rho[32] }
//   final_accumulator[32]
class TranscriptBackend final : public ProofBackend {
 public:
  std::string_view id() const override { return kTranscriptBackendId; }
  bool hiding() const override { return false; }

  BackendKeys KeyGen(const PublicParams& params) const override;
  void FoldStep(FoldState& state, StepWitness witness) const override;
  Proof Compress(const FoldState& state) const override;
  VerifyResult VerifyBody(const Proof& proof,
                          int expected_depth) const override;
};

struct TranscriptBody {
  std::vector<StepWitness> steps;
  Digest final_accumulator;
};

std::vector<std::uint8_t> EncodeTranscriptBody(const TranscriptBody& body);
// ParseError on any structural problem, including mixed depths.
TranscriptBody DecodeTranscriptBody(std::span<const std::uint8_t> bytes);

}  // namespace sbomproof

#endif  // SBOMPROOF_TRANSCRIPT_BACKEND_H_
