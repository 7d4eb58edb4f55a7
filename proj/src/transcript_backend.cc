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

#include "sbomproof/transcript_backend.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "sbomproof/encoding.h"
#include "sbomproof/errors.h"

namespace sbomproof {
namespace {

constexpr std::size_t kFixedRecordBytes = 8 + 2 * Digest::kSize;

std::size_t RecordBytes(std::size_t depth) {
  return kFixedRecordBytes + 2 * depth * Digest::kSize;
}

std::vector<Digest> ReadDigests(ByteReader& in, std::size_t n) {
  std::vector<Digest> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(Digest::FromBytes(in.ReadBytes(Digest::kSize)));
  }
  return out;
}

}  // namespace

BackendKeys TranscriptBackend::KeyGen(const PublicParams&) const { return {}; }

void TranscriptBackend::FoldStep(FoldState& state, StepWitness witness) const {
  if (!ValidDep(state.roots.pt, state.roots.st, witness)) {
    throw StepError(ErrorCode::kNonCompliantStep, state.steps.size() + 1);
  }
  state.accumulator.Absorb(witness.rho);
  state.steps.push_back(std::move(witness));
}

Proof TranscriptBackend::Compress(const FoldState& state) const {
  Proof proof;
  proof.backend_id = std::string(id());
  proof.roots = state.roots;
  proof.artifact_digest = state.artifact_digest;
  proof.step_count = state.steps.size();
  proof.accumulator = state.accumulator.value();
  proof.body = EncodeTranscriptBody(
      TranscriptBody{state.steps, state.accumulator.value()});
  return proof;
}

VerifyResult TranscriptBackend::VerifyBody(const Proof& proof,
                                           int expected_depth) const {
  TranscriptBody body;
  try {
    body = DecodeTranscriptBody(proof.body);
  } catch (const Error& e) {
    return VerifyResult::Reject(RejectReason::kMalformedProof, e.what());
  }
  if (body.steps.size() != proof.step_count) {
    return VerifyResult::Reject(RejectReason::kMalformedProof,
                                "step_count disagrees with the body");
  }
  if (expected_depth > 0 && !body.steps.empty() &&
      body.steps.front().pt_opening.siblings.size() !=
          static_cast<std::size_t>(expected_depth)) {
    return VerifyResult::Reject(RejectReason::kMalformedProof,
                                "opening depth differs from the trusted depth");
  }
  // Steps are independent; only the accumulator chain is order-dependent.
  FoldAccumulator acc = FoldAccumulator::Init(proof.roots.pt, proof.roots.st);
  for (std::size_t k = 0; k < body.steps.size(); ++k) {
    if (!ValidDep(proof.roots.pt, proof.roots.st, body.steps[k])) {
      return VerifyResult::Reject(RejectReason::kInvalidStep, {}, k + 1);
    }
    acc.Absorb(body.steps[k].rho);
  }
  if (acc.value() != body.final_accumulator ||
      acc.value() != proof.accumulator) {
    return VerifyResult::Reject(RejectReason::kAccumulatorMismatch);
  }
  return VerifyResult::Accept();
}

std::vector<std::uint8_t> EncodeTranscriptBody(const TranscriptBody& body) {
  std::vector<std::uint8_t> out;
  AppendU32(out, static_cast<std::uint32_t>(body.steps.size()));
  for (const StepWitness& w : body.steps) {
    const std::size_t depth = w.pt_opening.siblings.size();
    if (w.st_opening.siblings.size() != depth) {
      throw UsageError("witness openings have different depths");
    }
    AppendU32(out, static_cast<std::uint32_t>(RecordBytes(depth)));
    AppendU64(out, w.index);
    AppendBytes(out, w.pt_leaf.span());
    for (const Digest& s : w.pt_opening.siblings) AppendBytes(out, s.span());
    for (const Digest& s : w.st_opening.siblings) AppendBytes(out, s.span());
    AppendBytes(out, w.rho);
  }
  AppendBytes(out, body.final_accumulator.span());
  return out;
}

TranscriptBody DecodeTranscriptBody(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  const std::uint32_t count = in.ReadU32();
  // Each record is at least RecordBytes(1); reject absurd counts up front.
  if (count > in.remaining() / RecordBytes(kMinDepth)) {
    throw ParseError("transcript step count exceeds body size");
  }
  TranscriptBody body;
  body.steps.reserve(count);
  std::size_t depth = 0;
  for (std::uint32_t k = 0; k < count; ++k) {
    const std::uint32_t len = in.ReadU32();
    if (len < RecordBytes(kMinDepth) || (len - kFixedRecordBytes) % 64 != 0) {
      throw ParseError("bad transcript record length");
    }
    const std::size_t d = (len - kFixedRecordBytes) / 64;
    if (d > static_cast<std::size_t>(kMaxDepth)) {
      throw ParseError("transcript record depth out of range");
    }
    if (k == 0) depth = d;
    if (d != depth) throw ParseError("transcript records have mixed depths");

    StepWitness w;
    w.index = in.ReadU64();
    w.pt_leaf = Digest::FromBytes(in.ReadBytes(Digest::kSize));
    w.pt_opening.index = w.index;
    w.pt_opening.leaf = w.pt_leaf;
    w.pt_opening.siblings = ReadDigests(in, d);
    w.st_opening.index = w.index;
    w.st_opening.siblings = ReadDigests(in, d);
    auto rho = in.ReadBytes(w.rho.size());
    std::copy(rho.begin(), rho.end(), w.rho.begin());
    body.steps.push_back(std::move(w));
  }
  body.final_accumulator = Digest::FromBytes(in.ReadBytes(Digest::kSize));
  if (!in.done()) throw ParseError("trailing bytes after transcript body");
  return body;
}

}  // namespace sbomproof
