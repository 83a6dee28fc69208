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

#ifndef PROOFCHAIN_LEDGER_LEDGER_H_
#define PROOFCHAIN_LEDGER_LEDGER_H_

// Deterministic single-writer ledger simulation. States are immutable
// values: every operation returns a new LedgerState and leaves its input
// untouched, so older states stay valid for concurrent readers.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/crypto/pedersen.h"

namespace proofchain::ledger {

enum class EntryKind {
  kCommitmentRecord,
  kAuthorityKey,
  kValidatorRegistration,
  kVerificationResult,
};

std::string_view kind_name(EntryKind kind);
EntryKind parse_kind(std::string_view name);

struct LedgerEntry {
  EntryKind kind = EntryKind::kCommitmentRecord;
  std::string author;
  std::string payload;  // Canonical JSON bytes.
  Digest entry_id;

  // Canonicalizes `payload` and fills in entry_id.
  static LedgerEntry make(EntryKind kind, std::string author,
                          const Json& payload);
  // SHA-256 over length-prefixed kind name, author and payload.
  Digest compute_id() const;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

struct Block {
  std::uint64_t index = 0;
  Digest prev_hash;
  std::uint64_t timestamp = 0;
  Digest entries_root;
  std::vector<LedgerEntry> entries;
  Digest block_hash;

  Json header_json() const;
  Digest compute_hash() const;
  Digest compute_entries_root() const;

  friend bool operator==(const Block&, const Block&) = default;
};

struct ValidatorDescriptor {
  std::string id;
  std::string version;
  std::string schema;  // Name of the statement schema the validator accepts.

  friend bool operator==(const ValidatorDescriptor&,
                         const ValidatorDescriptor&) = default;
};

struct EntryLocation {
  std::size_t block = 0;
  std::size_t offset = 0;
};

// Decoded view of a CommitmentRecord payload.
struct CommitmentRecordView {
  Digest entry_id;
  std::string author;
  std::string label;
  std::string encoding;  // "sha256" or "pedersen"
  std::string value;     // Digest hex or commitment hex.
  std::uint64_t timestamp = 0;
};

class LedgerState {
 public:
  LedgerState() = default;

  // Rebuilds the lookup indexes from a block list without validating it;
  // use audit_chain to check integrity.
  static LedgerState from_blocks(std::vector<Block> blocks);

  std::size_t height() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const Block& block(std::size_t i) const { return *blocks_.at(i); }
  const Block& tip() const { return *blocks_.back(); }
  std::vector<Block> blocks() const;
  // State consisting of the first `n` blocks.
  LedgerState prefix(std::size_t n) const;

  const LedgerEntry* find_entry(const Digest& entry_id) const;
  std::optional<EntryLocation> locate(const Digest& entry_id) const;
  std::optional<CommitmentRecordView> commitment_record(
      const Digest& entry_id) const;
  // Latest by block timestamp, later position breaking ties.
  std::optional<CommitmentRecordView> latest_commitment(
      std::string_view author, std::string_view label) const;
  std::optional<crypto::BigInt> authority_key(std::string_view party) const;
  std::optional<ValidatorDescriptor> validator(std::string_view id) const;

  const std::map<Digest, EntryLocation>& index() const { return index_; }
  const std::map<std::string, crypto::BigInt, std::less<>>& authorities()
      const {
    return authorities_;
  }
  const std::map<std::string, ValidatorDescriptor, std::less<>>& validators()
      const {
    return validators_;
  }

  friend LedgerState append_block(const LedgerState& state,
                                  std::vector<LedgerEntry> entries,
                                  std::uint64_t timestamp);

 private:
  void index_block(const Block& block);

  std::vector<std::shared_ptr<const Block>> blocks_;
  std::map<Digest, EntryLocation> index_;
  std::map<std::string, crypto::BigInt, std::less<>> authorities_;
  std::map<std::string, ValidatorDescriptor, std::less<>> validators_;
  // (author, label) -> CommitmentRecord ids in ledger order.
  std::map<std::pair<std::string, std::string>, std::vector<Digest>> labels_;
};

// Throws ParameterError on empty entries, OrderingError if the timestamp is
// below the tip's, ConflictError if an entry id already exists.
LedgerState append_block(const LedgerState& state,
                         std::vector<LedgerEntry> entries,
                         std::uint64_t timestamp);

using AnchorValue = std::variant<Digest, crypto::Commitment>;

// Throws ParameterError on an empty label and ConflictError when the same
// (author, label) was already registered at this timestamp.
std::pair<LedgerState, Digest> register_commitment(const LedgerState& state,
                                                   std::string_view author,
                                                   const AnchorValue& value,
                                                   std::string_view label,
                                                   std::uint64_t timestamp);

std::pair<LedgerState, Digest> register_authority(
    const LedgerState& state, std::string_view authority,
    const crypto::BigInt& public_key, std::uint64_t timestamp);

std::pair<LedgerState, Digest> register_validator(
    const LedgerState& state, std::string_view author,
    const ValidatorDescriptor& descriptor, std::uint64_t timestamp);

// Recomputes every entry id, entries root, block hash, hash link, block
// index and timestamp order, and cross-checks the lookup indexes.
bool audit_chain(const LedgerState& state);

// One block per line, each line canonical JSON.
std::string export_jsonl(const LedgerState& state);
// Throws FormatError on malformed lines. Does not audit.
LedgerState import_jsonl(std::string_view text);

Json block_to_json(const Block& block);
Block block_from_json(const Json& j);

}  // namespace proofchain::ledger

#endif  // PROOFCHAIN_LEDGER_LEDGER_H_
