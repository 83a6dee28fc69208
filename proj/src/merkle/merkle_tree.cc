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

#include "proofchain/merkle/merkle_tree.h"

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain::merkle {

Digest leaf_hash(ByteSpan payload) {
  return Sha256().update(std::uint8_t{0x00}).update(payload).finish();
}

Digest node_hash(const Digest& left, const Digest& right) {
  return Sha256()
      .update(std::uint8_t{0x01})
      .update(left.span())
      .update(right.span())
      .finish();
}

MerkleTree MerkleTree::build(const std::vector<Bytes>& leaf_payloads) {
  if (leaf_payloads.empty()) {
    throw ParameterError("Merkle tree needs at least one leaf");
  }
  std::vector<std::vector<Digest>> levels;
  levels.emplace_back();
  levels.back().reserve(leaf_payloads.size());
  for (const auto& payload : leaf_payloads) {
    levels.back().push_back(leaf_hash(payload));
  }
  while (levels.back().size() > 1) {
    const auto& below = levels.back();
    std::vector<Digest> above;
    above.reserve((below.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < below.size(); i += 2) {
      above.push_back(node_hash(below[i], below[i + 1]));
    }
    if (below.size() % 2 == 1) above.push_back(below.back());
    levels.push_back(std::move(above));
  }
  return MerkleTree(std::move(levels));
}

MerklePath prove_membership(const MerkleTree& tree, std::size_t index) {
  if (index >= tree.size()) {
    throw ParameterError("leaf index out of bounds");
  }
  MerklePath path;
  path.leaf_index = index;
  std::size_t pos = index;
  const auto& levels = tree.levels();
  for (std::size_t level = 0; level + 1 < levels.size(); ++level) {
    const auto& nodes = levels[level];
    if (pos % 2 == 1) {
      path.siblings.push_back({Side::kLeft, nodes[pos - 1]});
    } else if (pos + 1 < nodes.size()) {
      path.siblings.push_back({Side::kRight, nodes[pos + 1]});
    }
    // else: carried up unchanged, no sibling at this level.
    pos /= 2;
  }
  return path;
}

Digest replay_path(const Digest& leaf_digest, const MerklePath& path) {
  Digest running = leaf_digest;
  for (const auto& step : path.siblings) {
    running = step.side == Side::kLeft ? node_hash(step.digest, running)
                                       : node_hash(running, step.digest);
  }
  return running;
}

bool verify_membership(const Digest& root, ByteSpan leaf_payload,
                       const MerklePath& path) {
  return replay_path(leaf_hash(leaf_payload), path) == root;
}

bool index_consistent(const MerklePath& path) {
  // Right siblings can only appear before the first carry-up: once a node is
  // the last of its level it stays last.
  std::uint64_t pos = path.leaf_index;
  std::size_t next = 0;
  bool last = false;
  const auto& steps = path.siblings;
  while (next < steps.size() || pos != 0) {
    const bool have = next < steps.size();
    if (pos % 2 == 1) {
      if (!have || steps[next].side != Side::kLeft) return false;
      ++next;
    } else if (have && steps[next].side == Side::kRight) {
      if (last) return false;
      ++next;
    } else if (pos == 0) {
      return false;
    } else {
      last = true;
    }
    pos /= 2;
  }
  return true;
}

Json to_json(const MerklePath& path) {
  Json siblings = Json::array();
  for (const auto& s : path.siblings) {
    siblings.push_back({{"digest", s.digest.hex()},
                        {"side", s.side == Side::kLeft ? "L" : "R"}});
  }
  return {{"leaf_index", hex_int(std::uint64_t{path.leaf_index})},
          {"siblings", std::move(siblings)}};
}

MerklePath merkle_path_from_json(const Json& j) {
  MerklePath path;
  path.leaf_index = require_u64(j, "leaf_index");
  const Json& siblings = require(j, "siblings");
  if (!siblings.is_array()) throw FormatError("siblings must be an array");
  for (const auto& s : siblings) {
    const std::string side = require_string(s, "side");
    if (side != "L" && side != "R") throw FormatError("side must be L or R");
    path.siblings.push_back({side == "L" ? Side::kLeft : Side::kRight,
                             require_digest(s, "digest")});
  }
  if (!index_consistent(path)) {
    throw FormatError("leaf_index disagrees with sibling sides");
  }
  return path;
}

}  // namespace proofchain::merkle
