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

#include "proofchain/ledger/ledger.h"

#include <set>
#include <sstream>

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"
#include "proofchain/merkle/merkle_tree.h"

namespace proofchain::ledger {

std::string_view kind_name(EntryKind kind) {
  switch (kind) {
    case EntryKind::kCommitmentRecord:
      return "CommitmentRecord";
    case EntryKind::kAuthorityKey:
      return "AuthorityKey";
    case EntryKind::kValidatorRegistration:
      return "ValidatorRegistration";
    case EntryKind::kVerificationResult:
      return "VerificationResult";
  }
  return "Unknown";
}

EntryKind parse_kind(std::string_view name) {
  for (EntryKind k :
       {EntryKind::kCommitmentRecord, EntryKind::kAuthorityKey,
        EntryKind::kValidatorRegistration, EntryKind::kVerificationResult}) {
    if (kind_name(k) == name) return k;
  }
  throw FormatError("unknown entry kind '" + std::string(name) + "'");
}

LedgerEntry LedgerEntry::make(EntryKind kind, std::string author,
                              const Json& payload) {
  LedgerEntry e;
  e.kind = kind;
  e.author = std::move(author);
  e.payload = canonical_dump(payload);
  e.entry_id = e.compute_id();
  return e;
}

Digest LedgerEntry::compute_id() const {
  Bytes buf;
  append_length_prefixed(buf, as_bytes(kind_name(kind)));
  append_length_prefixed(buf, as_bytes(author));
  append_length_prefixed(buf, as_bytes(payload));
  return sha256(buf);
}

Json Block::header_json() const {
  return {{"entries_root", entries_root.hex()},
          {"index", hex_int(index)},
          {"prev_hash", prev_hash.hex()},
          {"timestamp", hex_int(timestamp)}};
}

Digest Block::compute_hash() const { return digest_of(header_json()); }

Digest Block::compute_entries_root() const {
  if (entries.empty()) return Digest::zero();
  std::vector<Bytes> leaves;
  leaves.reserve(entries.size());
  for (const auto& e : entries) {
    leaves.emplace_back(e.entry_id.bytes.begin(), e.entry_id.bytes.end());
  }
  return merkle::build_tree(leaves).root();
}

// ---------------------------------------------------------------------------
// LedgerState

void LedgerState::index_block(const Block& block) {
  for (std::size_t offset = 0; offset < block.entries.size(); ++offset) {
    const LedgerEntry& e = block.entries[offset];
    index_.emplace(e.entry_id, EntryLocation{block.index, offset});
    Json payload;
    try {
      payload = parse_json(e.payload);
    } catch (const FormatError&) {
      continue;  // Left for audit_chain to report.
    }
    if (!payload.is_object()) continue;
    try {
      switch (e.kind) {
        case EntryKind::kCommitmentRecord:
          labels_[{e.author, require_string(payload, "label")}].push_back(
              e.entry_id);
          break;
        case EntryKind::kAuthorityKey:
          authorities_[e.author] = require_int(payload, "public_key");
          break;
        case EntryKind::kValidatorRegistration: {
          ValidatorDescriptor d{require_string(payload, "validator_id"),
                                require_string(payload, "version"),
                                require_string(payload, "schema")};
          validators_[d.id] = d;
          break;
        }
        case EntryKind::kVerificationResult:
          break;
      }
    } catch (const Error&) {
      continue;
    }
  }
}

LedgerState LedgerState::from_blocks(std::vector<Block> blocks) {
  LedgerState state;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto block = std::make_shared<const Block>(std::move(blocks[i]));
    // Locations use the position in the list, not the claimed index, so a
    // reordered list is caught by the audit.
    Block positioned = *block;
    positioned.index = i;
    state.index_block(positioned);
    state.blocks_.push_back(std::move(block));
  }
  return state;
}

std::vector<Block> LedgerState::blocks() const {
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) out.push_back(*b);
  return out;
}

LedgerState LedgerState::prefix(std::size_t n) const {
  n = std::min(n, blocks_.size());
  LedgerState state;
  for (std::size_t i = 0; i < n; ++i) {
    Block positioned = *blocks_[i];
    positioned.index = i;
    state.index_block(positioned);
    state.blocks_.push_back(blocks_[i]);
  }
  return state;
}

const LedgerEntry* LedgerState::find_entry(const Digest& entry_id) const {
  auto loc = locate(entry_id);
  if (!loc) return nullptr;
  if (loc->block >= blocks_.size()) return nullptr;
  const Block& b = *blocks_[loc->block];
  if (loc->offset >= b.entries.size()) return nullptr;
  return &b.entries[loc->offset];
}

std::optional<EntryLocation> LedgerState::locate(const Digest& entry_id) const {
  auto it = index_.find(entry_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<CommitmentRecordView> LedgerState::commitment_record(
    const Digest& entry_id) const {
  const LedgerEntry* e = find_entry(entry_id);
  if (e == nullptr || e->kind != EntryKind::kCommitmentRecord) {
    return std::nullopt;
  }
  try {
    Json payload = parse_json(e->payload);
    CommitmentRecordView view;
    view.entry_id = entry_id;
    view.author = e->author;
    view.label = require_string(payload, "label");
    view.encoding = require_string(payload, "encoding");
    view.value = require_string(payload, "commitment");
    view.timestamp = blocks_[locate(entry_id)->block]->timestamp;
    return view;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<CommitmentRecordView> LedgerState::latest_commitment(
    std::string_view author, std::string_view label) const {
  auto it = labels_.find({std::string(author), std::string(label)});
  if (it == labels_.end()) return std::nullopt;
  std::optional<CommitmentRecordView> best;
  for (const Digest& id : it->second) {
    auto view = commitment_record(id);
    if (view && (!best || view->timestamp >= best->timestamp)) best = view;
  }
  return best;
}

std::optional<crypto::BigInt> LedgerState::authority_key(
    std::string_view party) const {
  auto it = authorities_.find(party);
  if (it == authorities_.end()) return std::nullopt;
  return it->second;
}

std::optional<ValidatorDescriptor> LedgerState::validator(
    std::string_view id) const {
  auto it = validators_.find(id);
  if (it == validators_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Operations

LedgerState append_block(const LedgerState& state,
                         std::vector<LedgerEntry> entries,
                         std::uint64_t timestamp) {
  if (entries.empty()) throw ParameterError("block needs at least one entry");
  if (!state.empty() && timestamp < state.tip().timestamp) {
    throw OrderingError("timestamp " + std::to_string(timestamp) +
                        " is before tip timestamp " +
                        std::to_string(state.tip().timestamp));
  }
  std::set<Digest> fresh;
  for (const auto& e : entries) {
    if (state.index_.contains(e.entry_id) || !fresh.insert(e.entry_id).second) {
      throw ConflictError("entry " + e.entry_id.hex() + " already exists");
    }
  }

  Block block;
  block.index = state.height();
  block.prev_hash = state.empty() ? Digest::zero() : state.tip().block_hash;
  block.timestamp = timestamp;
  block.entries = std::move(entries);
  block.entries_root = block.compute_entries_root();
  block.block_hash = block.compute_hash();

  LedgerState next = state;
  next.index_block(block);
  next.blocks_.push_back(std::make_shared<const Block>(std::move(block)));
  return next;
}

std::pair<LedgerState, Digest> register_commitment(const LedgerState& state,
                                                   std::string_view author,
                                                   const AnchorValue& value,
                                                   std::string_view label,
                                                   std::uint64_t timestamp) {
  if (label.empty()) throw ParameterError("commitment label is empty");
  if (auto prior = state.latest_commitment(author, label);
      prior && prior->timestamp == timestamp) {
    throw ConflictError("'" + std::string(label) +
                        "' already registered at this timestamp");
  }
  Json payload = {{"label", std::string(label)},
                  {"timestamp", hex_int(timestamp)}};
  if (const auto* d = std::get_if<Digest>(&value)) {
    payload["encoding"] = "sha256";
    payload["commitment"] = d->hex();
  } else {
    const auto& c = std::get<crypto::Commitment>(value);
    payload["encoding"] = "pedersen";
    payload["commitment"] = hex_int(c.value);
    payload["params"] = c.params_id.hex();
  }
  LedgerEntry entry = LedgerEntry::make(EntryKind::kCommitmentRecord,
                                        std::string(author), payload);
  Digest id = entry.entry_id;
  return {append_block(state, {std::move(entry)}, timestamp), id};
}

std::pair<LedgerState, Digest> register_authority(
    const LedgerState& state, std::string_view authority,
    const crypto::BigInt& public_key, std::uint64_t timestamp) {
  if (authority.empty()) throw ParameterError("authority id is empty");
  Json payload = {{"public_key", hex_int(public_key)},
                  {"timestamp", hex_int(timestamp)}};
  LedgerEntry entry = LedgerEntry::make(EntryKind::kAuthorityKey,
                                        std::string(authority), payload);
  Digest id = entry.entry_id;
  return {append_block(state, {std::move(entry)}, timestamp), id};
}

std::pair<LedgerState, Digest> register_validator(
    const LedgerState& state, std::string_view author,
    const ValidatorDescriptor& descriptor, std::uint64_t timestamp) {
  if (descriptor.id.empty()) throw ParameterError("validator id is empty");
  Json payload = {{"schema", descriptor.schema},
                  {"timestamp", hex_int(timestamp)},
                  {"validator_id", descriptor.id},
                  {"version", descriptor.version}};
  LedgerEntry entry = LedgerEntry::make(EntryKind::kValidatorRegistration,
                                        std::string(author), payload);
  Digest id = entry.entry_id;
  return {append_block(state, {std::move(entry)}, timestamp), id};
}

bool audit_chain(const LedgerState& state) {
  std::size_t entry_count = 0;
  for (std::size_t i = 0; i < state.height(); ++i) {
    const Block& b = state.block(i);
    if (b.index != i || b.entries.empty()) return false;
    const Digest expected_prev =
        i == 0 ? Digest::zero() : state.block(i - 1).block_hash;
    if (b.prev_hash != expected_prev) return false;
    if (i > 0 && b.timestamp < state.block(i - 1).timestamp) return false;
    for (const auto& e : b.entries) {
      if (e.compute_id() != e.entry_id) return false;
      try {
        if (canonical_dump(parse_json(e.payload)) != e.payload) return false;
      } catch (const FormatError&) {
        return false;
      }
    }
    if (b.compute_entries_root() != b.entries_root) return false;
    if (b.compute_hash() != b.block_hash) return false;
    entry_count += b.entries.size();
  }
  if (state.index().size() != entry_count) return false;
  for (const auto& [id, loc] : state.index()) {
    const LedgerEntry* e = state.find_entry(id);
    if (e == nullptr || e->entry_id != id) return false;
  }
  return true;
}

Json block_to_json(const Block& block) {
  Json entries = Json::array();
  for (const auto& e : block.entries) {
    entries.push_back({{"author", e.author},
                       {"entry_id", e.entry_id.hex()},
                       {"kind", kind_name(e.kind)},
                       {"payload", parse_json(e.payload)}});
  }
  Json j = block.header_json();
  j["block_hash"] = block.block_hash.hex();
  j["entries"] = std::move(entries);
  return j;
}

Block block_from_json(const Json& j) {
  Block b;
  b.index = require_u64(j, "index");
  b.prev_hash = require_digest(j, "prev_hash");
  b.timestamp = require_u64(j, "timestamp");
  b.entries_root = require_digest(j, "entries_root");
  b.block_hash = require_digest(j, "block_hash");
  const Json& entries = require(j, "entries");
  if (!entries.is_array()) throw FormatError("entries must be an array");
  for (const auto& ej : entries) {
    LedgerEntry e;
    e.kind = parse_kind(require_string(ej, "kind"));
    e.author = require_string(ej, "author");
    e.payload = canonical_dump(require(ej, "payload"));
    e.entry_id = require_digest(ej, "entry_id");
    b.entries.push_back(std::move(e));
  }
  return b;
}

std::string export_jsonl(const LedgerState& state) {
  std::string out;
  for (std::size_t i = 0; i < state.height(); ++i) {
    out += canonical_dump(block_to_json(state.block(i)));
    out += '\n';
  }
  return out;
}

LedgerState import_jsonl(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      blocks.push_back(block_from_json(parse_json(line)));
    } catch (const Error& e) {
      throw FormatError("ledger line " + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return LedgerState::from_blocks(std::move(blocks));
}

}  // namespace proofchain::ledger
