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

#include "proofchain/zk/units.h"

#include <optional>
#include <set>

#include "proofchain/common/errors.h"
#include "proofchain/crypto/range_proof.h"

namespace proofchain::zk {
namespace {

using crypto::BigInt;
using crypto::Commitment;
using crypto::GroupParams;
using ledger::LedgerState;
using ledger::ValidationOutcome;

constexpr std::string_view kUnanchored = "unanchored";
constexpr std::string_view kSourceMismatch = "source-mismatch";

const PreservedCommitment& require_anchored(const PreservedCommitment& pc) {
  if (!pc.anchored()) {
    throw ParameterError("preserved commitment has not been anchored");
  }
  return pc;
}

// The bundle proof embeds the statement digest so that any edit to the
// statement after proving is detected before the cryptographic checks.
Json seal_proof(Json proof, const Json& statement) {
  proof["statement_digest"] = digest_of(statement).hex();
  return proof;
}

std::optional<ValidationOutcome> check_envelope(std::string_view unit,
                                                const GroupParams& params,
                                                const Json& statement,
                                                const Json& proof) {
  if (require_string(statement, "unit") != unit) {
    return ValidationOutcome{false, "wrong-unit"};
  }
  if (require_digest(statement, "params") != params.id) {
    return ValidationOutcome{false, "params-mismatch"};
  }
  if (require_digest(proof, "statement_digest") != digest_of(statement)) {
    return ValidationOutcome{false, "statement-digest-mismatch"};
  }
  return std::nullopt;
}

// Root anchored by a ledger CommitmentRecord, if the entry exists.
std::optional<Digest> anchored_root(const LedgerState& state,
                                    const Digest& entry_id) {
  auto record = state.commitment_record(entry_id);
  if (!record || record->encoding != "sha256") return std::nullopt;
  try {
    return Digest::from_hex(record->value);
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

// field leaf -> record root -> record-set root.
bool reaches_root(const Digest& root, std::string_view record_id,
                  const Digest& field_leaf_digest, const Json& proof_item) {
  merkle::MerklePath field_path =
      merkle::merkle_path_from_json(require(proof_item, "field_path"));
  merkle::MerklePath record_path =
      merkle::merkle_path_from_json(require(proof_item, "record_path"));
  const Digest record_root = merkle::replay_path(
      merkle::leaf_hash(
          field_leaf_payload(field_path.leaf_index, field_leaf_digest)),
      field_path);
  return merkle::verify_membership(
      root,
      record_leaf_payload(record_path.leaf_index, record_id, record_root),
      record_path);
}

Commitment require_commitment(const Json& obj, const GroupParams& params) {
  return {require_int(obj, "commitment"), params.id};
}

Json paths_json(const PreservedCommitment& pc, std::size_t record,
                std::size_t field) {
  return {{"field_path", merkle::to_json(pc.field_path(record, field))},
          {"record_path", merkle::to_json(pc.record_path(record))}};
}

BigInt max_n_bits_bound(const BigInt& threshold, unsigned n_bits) {
  BigInt bound = 1;
  bound <<= n_bits;
  return threshold + bound;
}

// ---------------------------------------------------------------------------
// reveal

ValidationOutcome check_reveal(const GroupParams& params,
                               const LedgerState& state, const Json& statement,
                               const Json& proof) {
  if (auto early = check_envelope("reveal", params, statement, proof)) {
    return *early;
  }
  auto root = anchored_root(state, require_digest(statement, "anchor"));
  if (!root) return {false, std::string(kUnanchored)};
  const std::string record_id = require_string(statement, "record_id");
  const std::string field = require_string(statement, "field");
  const std::string type = require_string(statement, "value_type");
  Digest leaf;
  if (type == "text") {
    Bytes salt = from_hex(require_string(proof, "salt"));
    if (salt.size() != Salt{}.size()) return {false, "malformed-salt"};
    Salt s;
    std::copy(salt.begin(), salt.end(), s.begin());
    leaf = text_leaf(s, field, require_string(statement, "value"));
  } else if (type == "int") {
    const BigInt v = require_int(statement, "value");
    const BigInt r = require_int(proof, "blinding");
    if (!params.is_scalar(v) || !params.is_scalar(r)) {
      return {false, "scalar-out-of-range"};
    }
    leaf = numeric_leaf(field, crypto::pedersen_commit(v, r, params), params);
  } else {
    return {false, "malformed-value-type"};
  }
  if (!reaches_root(*root, record_id, leaf, proof)) {
    return {false, std::string(kSourceMismatch)};
  }
  return {true, "ok"};
}

// ---------------------------------------------------------------------------
// geq

ValidationOutcome check_geq(const GroupParams& params, const LedgerState& state,
                            const Json& statement, const Json& proof) {
  if (auto early = check_envelope("geq", params, statement, proof)) {
    return *early;
  }
  auto root = anchored_root(state, require_digest(statement, "anchor"));
  if (!root) return {false, std::string(kUnanchored)};
  const BigInt threshold = require_int(statement, "threshold");
  const std::uint64_t n_bits = require_u64(statement, "n_bits");
  if (n_bits == 0 || n_bits > 4096 ||
      max_n_bits_bound(threshold, static_cast<unsigned>(n_bits)) > params.q) {
    return {false, "threshold-out-of-range"};
  }
  const Commitment c = require_commitment(proof, params);
  if (!params.in_subgroup(c.value)) return {false, "not-in-subgroup"};
  const Digest leaf =
      numeric_leaf(require_string(statement, "field"), c, params);
  if (!reaches_root(*root, require_string(statement, "record_id"), leaf,
                    proof)) {
    return {false, std::string(kSourceMismatch)};
  }
  const Commitment shifted{
      params.mul(c.value, params.inverse(params.pow(params.g, threshold))),
      params.id};
  const crypto::RangeProof rp =
      crypto::range_proof_from_json(require(proof, "range_proof"), params.id);
  const Digest context = digest_of(statement);
  auto result = crypto::verify_range(shifted, rp, static_cast<unsigned>(n_bits),
                                     params, context.span());
  if (!result) {
    return {false, "computation-failed: " + std::string(result.reason())};
  }
  return {true, "ok"};
}

// ---------------------------------------------------------------------------
// sum

ValidationOutcome check_sum(const GroupParams& params, const LedgerState& state,
                            const Json& statement, const Json& proof) {
  if (auto early = check_envelope("sum", params, statement, proof)) {
    return *early;
  }
  const std::string field = require_string(statement, "field");
  const Json& items = require(statement, "items");
  const Json& proof_items = require(proof, "items");
  if (!items.is_array() || !proof_items.is_array() || items.empty() ||
      items.size() != proof_items.size()) {
    return {false, "length-mismatch"};
  }
  const BigInt total = require_int(statement, "total");
  const BigInt randomness = require_int(proof, "randomness");
  if (!params.is_scalar(total) || !params.is_scalar(randomness)) {
    return {false, "scalar-out-of-range"};
  }

  std::set<std::pair<Digest, std::string>> seen;
  BigInt product = 1;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Digest anchor = require_digest(items[i], "anchor");
    const std::string record_id = require_string(items[i], "record_id");
    if (!seen.emplace(anchor, record_id).second) {
      return {false, "duplicate-record"};
    }
    auto root = anchored_root(state, anchor);
    if (!root) return {false, std::string(kUnanchored)};
    const Commitment c = require_commitment(proof_items[i], params);
    if (!params.in_subgroup(c.value)) return {false, "not-in-subgroup"};
    if (!reaches_root(*root, record_id, numeric_leaf(field, c, params),
                      proof_items[i])) {
      return {false, std::string(kSourceMismatch)};
    }
    product = params.mul(product, c.value);
  }
  if (product != crypto::pedersen_commit(total, randomness, params).value) {
    return {false, "computation-failed: aggregate-mismatch"};
  }
  return {true, "ok"};
}

}  // namespace

Json to_json(const ZkLinkBundle& bundle) {
  return {{"proof", bundle.proof},
          {"statement", bundle.statement},
          {"validator_id", bundle.validator_id}};
}

ZkLinkBundle bundle_from_json(const Json& j) {
  ZkLinkBundle b;
  b.statement = require(j, "statement");
  b.proof = require(j, "proof");
  b.validator_id = require_string(j, "validator_id");
  if (!b.statement.is_object() || !b.proof.is_object()) {
    throw FormatError("bundle statement and proof must be objects");
  }
  return b;
}

std::vector<ComputationUnit> standard_units() {
  return {
      {{std::string(kRevealValidator), "1", "zk-reveal/v1"}, check_reveal},
      {{std::string(kGeqValidator), "1", "zk-geq/v1"}, check_geq},
      {{std::string(kSumValidator), "1", "zk-sum/v1"}, check_sum},
  };
}

ledger::ValidatorCatalog make_catalog(const std::vector<ComputationUnit>& units,
                                      const GroupParams& params) {
  ledger::ValidatorCatalog catalog;
  for (const auto& unit : units) {
    auto check = unit.check;
    catalog.add({unit.descriptor,
                 [check, params](const LedgerState& state, const Json& s,
                                 const Json& p) {
                   return check(params, state, s, p);
                 }});
  }
  return catalog;
}

ZkLinkBundle zkcu_reveal_field(const PreservedCommitment& pc,
                               std::string_view record_id,
                               std::string_view field,
                               const GroupParams& params) {
  require_anchored(pc);
  const std::size_t ri = pc.record_index(record_id);
  const std::size_t fi = pc.field_index(ri, field);
  const PreservedField& f = pc.records()[ri].fields[fi];

  Json statement = {{"anchor", pc.anchor().hex()},
                    {"field", f.name},
                    {"params", params.id.hex()},
                    {"record_id", std::string(record_id)},
                    {"unit", "reveal"}};
  Json proof = paths_json(pc, ri, fi);
  if (f.numeric()) {
    statement["value_type"] = "int";
    statement["value"] = hex_int(f.number());
    proof["blinding"] = hex_int(f.blinding);
  } else {
    statement["value_type"] = "text";
    statement["value"] = f.text();
    proof["salt"] = to_hex(ByteSpan(f.salt.data(), f.salt.size()));
  }
  return {statement, seal_proof(std::move(proof), statement),
          std::string(kRevealValidator)};
}

ZkLinkBundle zkcu_predicate_geq(const PreservedCommitment& pc,
                                std::string_view record_id,
                                std::string_view field,
                                const BigInt& threshold, unsigned n_bits,
                                ByteSpan rng_seed, const GroupParams& params) {
  require_anchored(pc);
  if (n_bits == 0 || sgn(threshold) < 0 ||
      max_n_bits_bound(threshold, n_bits) > params.q) {
    throw ParameterError("threshold + 2^n_bits must not exceed q");
  }
  const std::size_t ri = pc.record_index(record_id);
  const std::size_t fi = pc.field_index(ri, field);
  const PreservedField& f = pc.records()[ri].fields[fi];
  const Commitment c = field_commitment(f, params);
  if (f.number() < threshold) {
    throw ProofGenerationError("committed value is below the threshold");
  }
  const BigInt diff = f.number() - threshold;

  Json statement = {{"anchor", pc.anchor().hex()},
                    {"field", f.name},
                    {"n_bits", hex_int(std::uint64_t{n_bits})},
                    {"params", params.id.hex()},
                    {"record_id", std::string(record_id)},
                    {"threshold", hex_int(threshold)},
                    {"unit", "geq"}};
  const Commitment shifted{
      params.mul(c.value, params.inverse(params.pow(params.g, threshold))),
      params.id};
  const Digest context = digest_of(statement);
  crypto::RangeProof rp = crypto::prove_range(
      shifted, diff, f.blinding, n_bits, rng_seed, params, context.span());

  Json proof = paths_json(pc, ri, fi);
  proof["commitment"] = hex_int(c.value);
  proof["range_proof"] = crypto::to_json(rp);
  return {statement, seal_proof(std::move(proof), statement),
          std::string(kGeqValidator)};
}

ZkLinkBundle zkcu_aggregate_sum(const std::vector<RecordRef>& records,
                                std::string_view field,
                                const BigInt& claimed_total,
                                const GroupParams& params) {
  if (records.empty()) throw ParameterError("aggregate over no records");
  if (!params.is_scalar(claimed_total)) {
    throw RangeError("claimed total not in [0, q)");
  }
  Json items = Json::array();
  Json proof_items = Json::array();
  BigInt true_sum = 0;
  BigInt randomness = 0;
  std::set<std::pair<Digest, std::string>> seen;
  for (const auto& ref : records) {
    const PreservedCommitment& pc = require_anchored(*ref.source);
    if (!seen.emplace(pc.anchor(), ref.record_id).second) {
      throw ParameterError("record '" + ref.record_id + "' listed twice");
    }
    const std::size_t ri = pc.record_index(ref.record_id);
    const PreservedField* f = pc.records()[ri].field(field);
    if (f == nullptr || !f->numeric()) {
      throw ParameterError("record '" + ref.record_id +
                           "' has no numeric field '" + std::string(field) +
                           "'");
    }
    const std::size_t fi = pc.field_index(ri, field);
    true_sum += f->number();
    randomness = params.mod_q(randomness + f->blinding);
    items.push_back(
        {{"anchor", pc.anchor().hex()}, {"record_id", ref.record_id}});
    Json item = paths_json(pc, ri, fi);
    item["commitment"] = hex_int(field_commitment(*f, params).value);
    proof_items.push_back(std::move(item));
  }
  if (true_sum >= params.q) {
    throw RangeError("sum of values wraps around q");
  }
  Json statement = {{"field", std::string(field)},
                    {"items", std::move(items)},
                    {"params", params.id.hex()},
                    {"total", hex_int(claimed_total)},
                    {"unit", "sum"}};
  Json proof = {{"items", std::move(proof_items)},
                {"randomness", hex_int(randomness)}};
  return {statement, seal_proof(std::move(proof), statement),
          std::string(kSumValidator)};
}

ZkLinkBundle zkcu_aggregate_sum(const PreservedCommitment& pc,
                                const std::vector<std::string>& record_ids,
                                std::string_view field,
                                const BigInt& claimed_total,
                                const GroupParams& params) {
  std::vector<RecordRef> refs;
  for (const auto& id : record_ids) refs.push_back({&pc, id});
  return zkcu_aggregate_sum(refs, field, claimed_total, params);
}

ValidationOutcome check_bundle(const LedgerState& state,
                               const ZkLinkBundle& bundle,
                               const GroupParams& params) {
  for (const auto& unit : standard_units()) {
    if (unit.descriptor.id != bundle.validator_id) continue;
    try {
      return unit.check(params, state, bundle.statement, bundle.proof);
    } catch (const std::exception& e) {
      return {false, std::string("malformed: ") + e.what()};
    }
  }
  return {false, "unknown-validator"};
}

std::vector<Digest> bundle_anchors(const ZkLinkBundle& bundle) {
  std::vector<Digest> out;
  try {
    if (bundle.statement.contains("anchor")) {
      out.push_back(require_digest(bundle.statement, "anchor"));
    } else if (bundle.statement.contains("items")) {
      for (const auto& item : bundle.statement.at("items")) {
        out.push_back(require_digest(item, "anchor"));
      }
    }
  } catch (const std::exception&) {
    out.clear();
  }
  return out;
}

std::pair<LedgerState, ledger::VerificationResult> validate_shared(
    const LedgerState& state, const ledger::ValidatorCatalog& catalog,
    const ZkLinkBundle& bundle, std::uint64_t timestamp) {
  return ledger::invoke_validator(state, catalog, bundle.validator_id,
                                  bundle.statement, bundle.proof, timestamp);
}

}  // namespace proofchain::zk
