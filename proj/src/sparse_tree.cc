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

#include "sbomproof/sparse_tree.h"

#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>

#include "sbomproof/errors.h"

namespace sbomproof {

PublicParams SetupParams(int security_bits, int depth) {
  if (security_bits <= 0) {
    throw UsageError("security_bits must be positive");
  }
  if (depth < kMinDepth || depth > kMaxDepth) {
    throw UsageError("depth must be in [1, 40], got " + std::to_string(depth));
  }
  return PublicParams{.depth = depth, .hash_alg_id = std::string(kHashAlgId)};
}

const std::vector<Digest>& EmptyChain(int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw UsageError("depth must be in [0, 40], got " + std::to_string(depth));
  }
  static std::mutex mu;
  static std::vector<Digest> full;
  static std::map<int, std::unique_ptr<std::vector<Digest>>> by_depth;
  std::lock_guard<std::mutex> lock(mu);
  if (full.empty()) {
    full.push_back(Hash(DomainTag::kEmpty, std::string_view()));
    for (int k = 0; k < kMaxDepth; ++k) {
      full.push_back(Hash(DomainTag::kNode, full.back(), full.back()));
    }
  }
  auto& slot = by_depth[depth];
  if (!slot) {
    slot = std::make_unique<std::vector<Digest>>(full.begin(),
                                                 full.begin() + depth + 1);
  }
  return *slot;
}

SparseTree::SparseTree(PublicParams params)
    : params_(std::move(params)),
      empty_(&EmptyChain(params_.depth)),
      levels_(static_cast<std::size_t>(params_.depth) + 1) {
  if (params_.depth < kMinDepth || params_.depth > kMaxDepth) {
    throw UsageError("depth must be in [1, 40], got " +
                     std::to_string(params_.depth));
  }
}

void SparseTree::CheckIndex(std::uint64_t index) const {
  if (index >= params_.capacity()) {
    throw UsageError("index " + std::to_string(index) +
                     " out of range for capacity " +
                     std::to_string(params_.capacity()));
  }
}

SparseTree SparseTree::Commit(PublicParams params,
                              const std::map<std::uint64_t, Digest>& leaves) {
  SparseTree tree(std::move(params));
  const Digest& empty_leaf = (*tree.empty_)[0];
  std::set<std::uint64_t> dirty;
  for (const auto& [index, leaf] : leaves) {
    tree.CheckIndex(index);
    if (leaf == empty_leaf) continue;
    tree.occupied_.emplace(index, leaf);
    dirty.insert(index);
  }
  for (int level = 1; level <= tree.params_.depth; ++level) {
    std::set<std::uint64_t> parents;
    for (std::uint64_t child : dirty) parents.insert(child >> 1);
    auto& nodes = tree.levels_[static_cast<std::size_t>(level)];
    nodes.reserve(parents.size());
    for (std::uint64_t p : parents) {
      nodes.emplace(p, Hash(DomainTag::kNode, tree.Node(level - 1, 2 * p),
                            tree.Node(level - 1, 2 * p + 1)));
    }
    dirty = std::move(parents);
  }
  return tree;
}

Digest SparseTree::Node(int level, std::uint64_t position) const {
  if (level == 0) {
    auto it = occupied_.find(position);
    return it == occupied_.end() ? (*empty_)[0] : it->second;
  }
  const auto& nodes = levels_[static_cast<std::size_t>(level)];
  auto it = nodes.find(position);
  return it == nodes.end() ? (*empty_)[static_cast<std::size_t>(level)]
                           : it->second;
}

Digest SparseTree::Leaf(std::uint64_t index) const {
  CheckIndex(index);
  return Node(0, index);
}

Opening SparseTree::Open(std::uint64_t index) const {
  CheckIndex(index);
  Opening opening{.index = index, .leaf = Node(0, index), .siblings = {}};
  opening.siblings.reserve(static_cast<std::size_t>(params_.depth));
  std::uint64_t pos = index;
  for (int level = 0; level < params_.depth; ++level) {
    opening.siblings.push_back(Node(level, pos ^ 1));
    pos >>= 1;
  }
  return opening;
}

Digest SparseTree::Update(std::uint64_t index, const Digest& leaf) {
  CheckIndex(index);
  if (leaf == (*empty_)[0]) {
    occupied_.erase(index);
  } else {
    occupied_[index] = leaf;
  }
  std::uint64_t pos = index;
  for (int level = 1; level <= params_.depth; ++level) {
    pos >>= 1;
    const Digest node = Hash(DomainTag::kNode, Node(level - 1, 2 * pos),
                             Node(level - 1, 2 * pos + 1));
    auto& nodes = levels_[static_cast<std::size_t>(level)];
    if (node == (*empty_)[static_cast<std::size_t>(level)]) {
      nodes.erase(pos);
    } else {
      nodes[pos] = node;
    }
  }
  return root();
}

std::size_t SparseTree::cached_node_count() const {
  std::size_t n = 0;
  for (const auto& level : levels_) n += level.size();
  return n;
}

Digest CommitRoot(const PublicParams& params,
                  const std::map<std::uint64_t, Digest>& leaves) {
  return SparseTree::Commit(params, leaves).root();
}

Digest RecomputeRoot(const Digest& leaf, std::uint64_t index,
                     const std::vector<Digest>& siblings) {
  Digest x = leaf;
  for (std::size_t level = 0; level < siblings.size(); ++level) {
    if ((index >> level) & 1) {
      x = Hash(DomainTag::kNode, siblings[level], x);
    } else {
      x = Hash(DomainTag::kNode, x, siblings[level]);
    }
  }
  return x;
}

bool VerifyCommit(const Digest& root, const Digest& leaf, std::uint64_t index,
                  const Opening& opening) {
  const std::size_t depth = opening.siblings.size();
  if (depth < static_cast<std::size_t>(kMinDepth) ||
      depth > static_cast<std::size_t>(kMaxDepth)) {
    return false;
  }
  if (opening.index != index || (index >> depth) != 0) return false;
  return RecomputeRoot(leaf, index, opening.siblings) == root;
}

}  // namespace sbomproof
