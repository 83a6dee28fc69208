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

#ifndef PROOFCHAIN_ZK_PRESERVED_H_
#define PROOFCHAIN_ZK_PRESERVED_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/crypto/pedersen.h"
#include "proofchain/ledger/ledger.h"
#include "proofchain/merkle/merkle_tree.h"

namespace proofchain::zk {

using Salt = std::array<std::uint8_t, 16>;
// Numeric (scalar mod q) or text value.
using FieldValue = std::variant<crypto::BigInt, std::string>;

struct PreservedField {
  std::string name;
  FieldValue value;
  Salt salt{};
  crypto::BigInt blinding;  // Pedersen randomness; numeric fields only.

  bool numeric() const {
    return std::holds_alternative<crypto::BigInt>(value);
  }
  const crypto::BigInt& number() const {
    return std::get<crypto::BigInt>(value);
  }
  const std::string& text() const { return std::get<std::string>(value); }
};

struct PreservedRecord {
  std::string record_id;
  std::vector<PreservedField> fields;

  const PreservedField* field(std::string_view name) const;
};

struct RawField {
  std::string name;
  FieldValue value;
};

// Draws salts and blinding factors for every field from `seed`.
PreservedRecord seal_record(std::string record_id, std::vector<RawField> fields,
                            ByteSpan seed, const crypto::GroupParams& params);

// Leaf encodings (each a 32-byte digest, placed in the field tree as
// be64(position) || digest so a path's leaf_index cannot be edited):
//   text:    H(0x02 || salt || be32(|name|) || name || value)
//   numeric: H(0x03 || be32(|name|) || name || commitment bytes)
Digest text_leaf(const Salt& salt, std::string_view name,
                 std::string_view value);
Digest numeric_leaf(std::string_view name, const crypto::Commitment& c,
                    const crypto::GroupParams& params);
Digest field_leaf(const PreservedField& field,
                  const crypto::GroupParams& params);
crypto::Commitment field_commitment(const PreservedField& field,
                                    const crypto::GroupParams& params);
Bytes field_leaf_payload(std::uint64_t position, const Digest& leaf);
// Record-set leaf payload:
//   be64(position) || be32(|record_id|) || record_id || record_root.
Bytes record_leaf_payload(std::uint64_t position, std::string_view record_id,
                          const Digest& root);

// Owner-side view of an anchored record set: the records with all their
// openings plus the Merkle trees over them. Only `root` goes on-ledger.
class PreservedCommitment {
 public:
  // Throws ParameterError on empty input, duplicate ids or field names, and
  // RangeError on numeric values outside [0, q).
  static PreservedCommitment build(std::string owner, std::string label,
                                   std::vector<PreservedRecord> records,
                                   const crypto::GroupParams& params);

  const std::string& owner() const { return owner_; }
  const std::string& label() const { return label_; }
  const Digest& root() const { return set_tree_.root(); }
  const Digest& anchor() const { return anchor_; }
  bool anchored() const { return anchor_ != Digest::zero(); }
  const Digest& params_id() const { return params_id_; }
  const std::vector<PreservedRecord>& records() const { return records_; }

  // Throws LookupError for unknown ids.
  std::size_t record_index(std::string_view record_id) const;
  std::size_t field_index(std::size_t record, std::string_view name) const;
  merkle::MerklePath record_path(std::size_t record) const;
  merkle::MerklePath field_path(std::size_t record, std::size_t field) const;

  PreservedCommitment with_anchor(const Digest& entry_id) const;

 private:
  PreservedCommitment(std::string owner, std::string label,
                      std::vector<PreservedRecord> records,
                      std::vector<merkle::MerkleTree> record_trees,
                      merkle::MerkleTree set_tree, Digest params_id)
      : owner_(std::move(owner)),
        label_(std::move(label)),
        records_(std::move(records)),
        record_trees_(std::move(record_trees)),
        set_tree_(std::move(set_tree)),
        params_id_(params_id) {}

  std::string owner_;
  std::string label_;
  std::vector<PreservedRecord> records_;
  std::vector<merkle::MerkleTree> record_trees_;
  merkle::MerkleTree set_tree_;
  Digest params_id_;
  Digest anchor_;
};

// Builds the trees, registers the set root as a CommitmentRecord under
// (owner, label) and returns the anchored owner-side commitment.
std::pair<ledger::LedgerState, PreservedCommitment> commit_preserved(
    std::vector<PreservedRecord> records, std::string_view owner,
    std::string_view label, const ledger::LedgerState& state,
    std::uint64_t timestamp, const crypto::GroupParams& params);

// Owner-side openings file. Contains secrets; never publish it.
Json to_json(const PreservedCommitment& pc);
PreservedCommitment preserved_commitment_from_json(
    const Json& j, const crypto::GroupParams& params);

}  // namespace proofchain::zk

#endif  // PROOFCHAIN_ZK_PRESERVED_H_
