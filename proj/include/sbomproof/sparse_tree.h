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

#ifndef SBOMPROOF_SPARSE_TREE_H_
#define SBOMPROOF_SPARSE_TREE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "sbomproof/digest.h"

namespace sbomproof {

// Merkle path for one slot. siblings[k] is the sibling at level k, leaf level
// first; bit k of `index` says whether the running node is a right child.
struct Opening {
  std::uint64_t index = 0;
  Digest leaf;
  std::vector<Digest> siblings;

  std::size_t sibling_bytes() const { return siblings.size() * Digest::kSize; }
};

// Validates the depth (1..40) and returns the parameters for a tree of that
// size. `security_bits` is accepted for interface parity and must be
// positive; SHA-256 fixes the actual level at 128.
PublicParams SetupParams(int security_bits, int depth);

// E_0 = Hash(empty, "") and E_{k+1} = Hash(node, E_k || E_k), for k < depth.
// Cached per depth; the returned reference stays valid for the process.
const std::vector<Digest>& EmptyChain(int depth);

// Fixed-depth sparse Merkle tree. Absent slots hold E_0; only nodes that
// differ from the empty chain are stored. A leaf equal to E_0 is the same as
// an absent slot.
class SparseTree {
 public:
  explicit SparseTree(PublicParams params);

  // UsageError if any index is >= capacity.
  static SparseTree Commit(PublicParams params,
                           const std::map<std::uint64_t, Digest>& leaves);

  const PublicParams& params() const { return params_; }
  Digest root() const { return Node(params_.depth, 0); }
  Digest Leaf(std::uint64_t index) const;
  const std::map<std::uint64_t, Digest>& occupied() const { return occupied_; }

  // Works for unoccupied slots too: the leaf is then E_0.
  Opening Open(std::uint64_t index) const;

  // Recomputes the D nodes on the path and returns the new root.
  Digest Update(std::uint64_t index, const Digest& leaf);

  // Number of stored internal (non-default) nodes.
  std::size_t cached_node_count() const;

 private:
  Digest Node(int level, std::uint64_t position) const;
  void CheckIndex(std::uint64_t index) const;

  PublicParams params_;
  const std::vector<Digest>* empty_;
  std::map<std::uint64_t, Digest> occupied_;
  // levels_[k] holds level-k nodes for 1 <= k <= depth; levels_[0] is unused.
  std::vector<std::unordered_map<std::uint64_t, Digest>> levels_;
};

// Root of the tree holding `leaves`; same contract as SparseTree::Commit.
Digest CommitRoot(const PublicParams& params,
                  const std::map<std::uint64_t, Digest>& leaves);

// Replays the path from `leaf` at `index`. Depth is siblings.size().
Digest RecomputeRoot(const Digest& leaf, std::uint64_t index,
                     const std::vector<Digest>& siblings);

// True iff the path in `opening` recomputes `root` from `leaf` at `index`.
// opening.leaf is not consulted; the caller supplies the leaf to check.
// Malformed openings (wrong index, no siblings, more than 40 siblings, index
// outside 2^depth) are false, never exceptions.
bool VerifyCommit(const Digest& root, const Digest& leaf, std::uint64_t index,
                  const Opening& opening);

}  // namespace sbomproof

#endif  // SBOMPROOF_SPARSE_TREE_H_
