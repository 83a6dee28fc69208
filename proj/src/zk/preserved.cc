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

#include "proofchain/zk/preserved.h"

#include <set>

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"
#include "proofchain/crypto/drbg.h"

namespace proofchain::zk {
namespace {

constexpr std::uint8_t kTextLeafPrefix = 0x02;
constexpr std::uint8_t kNumericLeafPrefix = 0x03;

}  // namespace

const PreservedField* PreservedRecord::field(std::string_view name) const {
  for (const auto& f : fields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

PreservedRecord seal_record(std::string record_id, std::vector<RawField> fields,
                            ByteSpan seed, const crypto::GroupParams& params) {
  PreservedRecord record;
  record.record_id = std::move(record_id);
  crypto::Drbg rng(seed, "proofchain/seal/v1", as_bytes(record.record_id));
  for (auto& raw : fields) {
    PreservedField f;
    f.name = std::move(raw.name);
    f.value = std::move(raw.value);
    Bytes salt = rng.bytes(f.salt.size());
    std::copy(salt.begin(), salt.end(), f.salt.begin());
    f.blinding = f.numeric() ? rng.scalar(params.q) : crypto::BigInt(0);
    record.fields.push_back(std::move(f));
  }
  return record;
}

Digest text_leaf(const Salt& salt, std::string_view name,
                 std::string_view value) {
  Bytes buf = {kTextLeafPrefix};
  append(buf, ByteSpan(salt.data(), salt.size()));
  append_u32be(buf, static_cast<std::uint32_t>(name.size()));
  append(buf, name);
  append(buf, value);
  return sha256(buf);
}

Digest numeric_leaf(std::string_view name, const crypto::Commitment& c,
                    const crypto::GroupParams& params) {
  Bytes buf = {kNumericLeafPrefix};
  append_u32be(buf, static_cast<std::uint32_t>(name.size()));
  append(buf, name);
  append(buf, params.element_bytes(c.value));
  return sha256(buf);
}

crypto::Commitment field_commitment(const PreservedField& field,
                                    const crypto::GroupParams& params) {
  if (!field.numeric()) {
    throw ParameterError("field '" + field.name + "' is not numeric");
  }
  return crypto::pedersen_commit(field.number(), field.blinding, params);
}

Digest field_leaf(const PreservedField& field,
                  const crypto::GroupParams& params) {
  if (field.numeric()) {
    return numeric_leaf(field.name, field_commitment(field, params), params);
  }
  return text_leaf(field.salt, field.name, field.text());
}

Bytes field_leaf_payload(std::uint64_t position, const Digest& leaf) {
  Bytes buf;
  append_u64be(buf, position);
  append(buf, leaf.span());
  return buf;
}

Bytes record_leaf_payload(std::uint64_t position, std::string_view record_id,
                          const Digest& root) {
  Bytes buf;
  append_u64be(buf, position);
  append_u32be(buf, static_cast<std::uint32_t>(record_id.size()));
  append(buf, record_id);
  append(buf, root.span());
  return buf;
}

PreservedCommitment PreservedCommitment::build(
    std::string owner, std::string label, std::vector<PreservedRecord> records,
    const crypto::GroupParams& params) {
  if (records.empty()) throw ParameterError("no records to commit");
  std::set<std::string> ids;
  std::vector<merkle::MerkleTree> record_trees;
  std::vector<Bytes> record_leaves;
  for (const auto& record : records) {
    if (!ids.insert(record.record_id).second) {
      throw ParameterError("duplicate record id '" + record.record_id + "'");
    }
    if (record.fields.empty()) {
      throw ParameterError("record '" + record.record_id + "' has no fields");
    }
    std::set<std::string> names;
    std::vector<Bytes> leaves;
    for (const auto& field : record.fields) {
      if (!names.insert(field.name).second) {
        throw ParameterError("duplicate field '" + field.name + "'");
      }
      if (field.numeric() && !params.is_scalar(field.number())) {
        throw RangeError("field '" + field.name + "' not in [0, q)");
      }
      leaves.push_back(
          field_leaf_payload(leaves.size(), field_leaf(field, params)));
    }
    record_trees.push_back(merkle::build_tree(leaves));
    record_leaves.push_back(record_leaf_payload(
        record_leaves.size(), record.record_id, record_trees.back().root()));
  }
  merkle::MerkleTree set_tree = merkle::build_tree(record_leaves);
  return PreservedCommitment(std::move(owner), std::move(label),
                             std::move(records), std::move(record_trees),
                             std::move(set_tree), params.id);
}

std::size_t PreservedCommitment::record_index(std::string_view record_id) const {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].record_id == record_id) return i;
  }
  throw LookupError("unknown record '" + std::string(record_id) + "'");
}

std::size_t PreservedCommitment::field_index(std::size_t record,
                                             std::string_view name) const {
  const auto& fields = records_.at(record).fields;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].name == name) return i;
  }
  throw LookupError("record '" + records_[record].record_id +
                    "' has no field '" + std::string(name) + "'");
}

merkle::MerklePath PreservedCommitment::record_path(std::size_t record) const {
  return merkle::prove_membership(set_tree_, record);
}

merkle::MerklePath PreservedCommitment::field_path(std::size_t record,
                                                   std::size_t field) const {
  return merkle::prove_membership(record_trees_.at(record), field);
}

PreservedCommitment PreservedCommitment::with_anchor(
    const Digest& entry_id) const {
  PreservedCommitment out = *this;
  out.anchor_ = entry_id;
  return out;
}

std::pair<ledger::LedgerState, PreservedCommitment> commit_preserved(
    std::vector<PreservedRecord> records, std::string_view owner,
    std::string_view label, const ledger::LedgerState& state,
    std::uint64_t timestamp, const crypto::GroupParams& params) {
  PreservedCommitment pc = PreservedCommitment::build(
      std::string(owner), std::string(label), std::move(records), params);
  auto [next, entry_id] =
      ledger::register_commitment(state, owner, pc.root(), label, timestamp);
  return {std::move(next), pc.with_anchor(entry_id)};
}

Json to_json(const PreservedCommitment& pc) {
  Json records = Json::array();
  for (const auto& r : pc.records()) {
    Json fields = Json::array();
    for (const auto& f : r.fields) {
      Json jf = {{"name", f.name},
                 {"salt", to_hex(ByteSpan(f.salt.data(), f.salt.size()))}};
      if (f.numeric()) {
        jf["type"] = "int";
        jf["value"] = hex_int(f.number());
        jf["blinding"] = hex_int(f.blinding);
      } else {
        jf["type"] = "text";
        jf["value"] = f.text();
      }
      fields.push_back(std::move(jf));
    }
    records.push_back({{"fields", std::move(fields)}, {"id", r.record_id}});
  }
  return {{"anchor", pc.anchor().hex()},
          {"label", pc.label()},
          {"owner", pc.owner()},
          {"params", pc.params_id().hex()},
          {"records", std::move(records)},
          {"root", pc.root().hex()}};
}

PreservedCommitment preserved_commitment_from_json(
    const Json& j, const crypto::GroupParams& params) {
  if (require_digest(j, "params") != params.id) {
    throw ParameterError("openings were made under different group params");
  }
  std::vector<PreservedRecord> records;
  const Json& jr = require(j, "records");
  if (!jr.is_array()) throw FormatError("records must be an array");
  for (const auto& r : jr) {
    PreservedRecord record;
    record.record_id = require_string(r, "id");
    const Json& jf = require(r, "fields");
    if (!jf.is_array()) throw FormatError("fields must be an array");
    for (const auto& f : jf) {
      PreservedField field;
      field.name = require_string(f, "name");
      Bytes salt = from_hex(require_string(f, "salt"));
      if (salt.size() != field.salt.size()) {
        throw FormatError("salt must be 16 bytes");
      }
      std::copy(salt.begin(), salt.end(), field.salt.begin());
      const std::string type = require_string(f, "type");
      if (type == "int") {
        field.value = require_int(f, "value");
        field.blinding = require_int(f, "blinding");
      } else if (type == "text") {
        field.value = require_string(f, "value");
      } else {
        throw FormatError("field type must be int or text");
      }
      record.fields.push_back(std::move(field));
    }
    records.push_back(std::move(record));
  }
  PreservedCommitment pc = PreservedCommitment::build(
      require_string(j, "owner"), require_string(j, "label"),
      std::move(records), params);
  if (pc.root() != require_digest(j, "root")) {
    throw FormatError("openings do not reproduce the recorded root");
  }
  return pc.with_anchor(require_digest(j, "anchor"));
}

}  // namespace proofchain::zk
