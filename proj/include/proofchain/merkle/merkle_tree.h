// Copyright 2026 The Proofchain Authors.
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

#ifndef PROOFCHAIN_MERKLE_MERKLE_TREE_H_
#define PROOFCHAIN_MERKLE_MERKLE_TREE_H_

#include <cstddef>
#include <vector>

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"

namespace proofchain::merkle {

// leaf = H(0x00 || payload), node = H(0x01 || left || right). An unpaired
// node is carried up to the next level unchanged.
Digest leaf_hash(ByteSpan payload);
Digest node_hash(const Digest& left, const Digest& right);

class MerkleTree {
 public:
  // Throws ParameterError on an empty payload list.
  static MerkleTree build(const std::vector<Bytes>& leaf_payloads);

  const std::vector<Digest>& leaves() const { return levels_.front(); }
  // levels()[0] are the leaf digests, levels().back() holds only the root.
  const std::vector<std::vector<Digest>>& levels() const { return levels_; }
  const Digest& root() const { return levels_.back().front(); }
  std::size_t size() const { return leaves().size(); }

 private:
  explicit MerkleTree(std::vector<std::vector<Digest>> levels)
      : levels_(std::move(levels)) {}
  std::vector<std::vector<Digest>> levels_;
};

enum class Side { kLeft, kRight };

struct PathStep {
  Side side;  // Where the sibling sits relative to the running hash.
  Digest digest;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct MerklePath {
  std::size_t leaf_index = 0;
  std::vector<PathStep> siblings;

  friend bool operator==(const MerklePath&, const MerklePath&) = default;
};

inline MerkleTree build_tree(const std::vector<Bytes>& leaf_payloads) {
  return MerkleTree::build(leaf_payloads);
}

// Throws ParameterError if index is out of bounds.
MerklePath prove_membership(const MerkleTree& tree, std::size_t index);

Digest replay_path(const Digest& leaf_digest, const MerklePath& path);
bool verify_membership(const Digest& root, ByteSpan leaf_payload,
                       const MerklePath& path);

// True iff leaf_index matches the sibling sides under the carry-up rule.
// Membership itself depends only on the sides; decoding requires both to
// agree so the index cannot be edited silently.
bool index_consistent(const MerklePath& path);

Json to_json(const MerklePath& path);
MerklePath merkle_path_from_json(const Json& j);

}  // namespace proofchain::merkle

#endif  // PROOFCHAIN_MERKLE_MERKLE_TREE_H_
