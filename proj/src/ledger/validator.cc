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

#include "proofchain/ledger/validator.h"

#include "proofchain/common/errors.h"

namespace proofchain::ledger {

void ValidatorCatalog::add(ValidatorProgram program) {
  std::string id = program.descriptor.id;
  programs_.insert_or_assign(std::move(id), std::move(program));
}

const ValidatorProgram* ValidatorCatalog::find(std::string_view id) const {
  auto it = programs_.find(id);
  return it == programs_.end() ? nullptr : &it->second;
}

std::vector<ValidatorDescriptor> ValidatorCatalog::descriptors() const {
  std::vector<ValidatorDescriptor> out;
  for (const auto& [id, program] : programs_) out.push_back(program.descriptor);
  return out;
}

namespace {

const ValidatorProgram& resolve(const LedgerState& state,
                                const ValidatorCatalog& catalog,
                                std::string_view validator_id) {
  auto registered = state.validator(validator_id);
  if (!registered) {
    throw LookupError("validator '" + std::string(validator_id) +
                      "' is not registered on the ledger");
  }
  const ValidatorProgram* program = catalog.find(validator_id);
  if (program == nullptr || program->descriptor != *registered) {
    throw LookupError("no program matches registered validator '" +
                      std::string(validator_id) + "' version " +
                      registered->version);
  }
  return *program;
}

ValidationOutcome run_program(const ValidatorProgram& program,
                              const LedgerState& state, const Json& statement,
                              const Json& proof) {
  try {
    return program.run(state, statement, proof);
  } catch (const std::exception& e) {
    return {false, std::string("malformed: ") + e.what()};
  }
}

}  // namespace

ValidationOutcome run_validator(const LedgerState& state,
                                const ValidatorCatalog& catalog,
                                std::string_view validator_id,
                                const Json& statement, const Json& proof) {
  return run_program(resolve(state, catalog, validator_id), state, statement,
                     proof);
}

std::pair<LedgerState, VerificationResult> invoke_validator(
    const LedgerState& state, const ValidatorCatalog& catalog,
    std::string_view validator_id, const Json& statement, const Json& proof,
    std::uint64_t timestamp, std::string_view author) {
  const ValidatorProgram& program = resolve(state, catalog, validator_id);
  ValidationOutcome outcome = run_program(program, state, statement, proof);

  VerificationResult result;
  result.validator_id = program.descriptor.id;
  result.version = program.descriptor.version;
  result.statement_digest = digest_of(statement);
  result.verdict = outcome.verdict;
  result.reason = outcome.reason;
  result.timestamp = timestamp;

  Json payload = {{"proof", proof},
                  {"reason", result.reason},
                  {"statement", statement},
                  {"statement_digest", result.statement_digest.hex()},
                  {"timestamp", hex_int(timestamp)},
                  {"validator_id", result.validator_id},
                  {"verdict", result.verdict},
                  {"version", result.version}};
  LedgerEntry entry = LedgerEntry::make(EntryKind::kVerificationResult,
                                        std::string(author), payload);
  result.entry_id = entry.entry_id;
  return {append_block(state, {std::move(entry)}, timestamp),
          std::move(result)};
}

LedgerState register_catalog(const LedgerState& state,
                             const ValidatorCatalog& catalog,
                             std::string_view author,
                             std::uint64_t timestamp) {
  std::vector<LedgerEntry> entries;
  for (const auto& d : catalog.descriptors()) {
    entries.push_back(LedgerEntry::make(
        EntryKind::kValidatorRegistration, std::string(author),
        {{"schema", d.schema},
         {"timestamp", hex_int(timestamp)},
         {"validator_id", d.id},
         {"version", d.version}}));
  }
  return append_block(state, std::move(entries), timestamp);
}

namespace {

struct RecordedVerification {
  VerificationResult result;
  Json statement;
  Json proof;
  std::size_t block = 0;
};

std::vector<RecordedVerification> recorded(const LedgerState& state) {
  std::vector<RecordedVerification> out;
  for (std::size_t i = 0; i < state.height(); ++i) {
    for (const auto& e : state.block(i).entries) {
      if (e.kind != EntryKind::kVerificationResult) continue;
      Json p = parse_json(e.payload);
      RecordedVerification rv;
      rv.result.validator_id = require_string(p, "validator_id");
      rv.result.version = require_string(p, "version");
      rv.result.statement_digest = require_digest(p, "statement_digest");
      const Json& verdict = require(p, "verdict");
      if (!verdict.is_boolean()) throw FormatError("verdict must be boolean");
      rv.result.verdict = verdict.get<bool>();
      rv.result.reason = require_string(p, "reason");
      rv.result.timestamp = require_u64(p, "timestamp");
      rv.result.entry_id = e.entry_id;
      rv.statement = require(p, "statement");
      rv.proof = require(p, "proof");
      rv.block = i;
      out.push_back(std::move(rv));
    }
  }
  return out;
}

}  // namespace

std::vector<VerificationResult> verification_results(const LedgerState& state) {
  std::vector<VerificationResult> out;
  for (auto& rv : recorded(state)) out.push_back(std::move(rv.result));
  return out;
}

std::vector<Digest> replay_verifications(const LedgerState& state,
                                         const ValidatorCatalog& catalog) {
  std::vector<Digest> mismatches;
  for (const auto& rv : recorded(state)) {
    const LedgerState before = state.prefix(rv.block);
    bool verdict = false;
    try {
      verdict = run_validator(before, catalog, rv.result.validator_id,
                              rv.statement, rv.proof)
                    .verdict;
    } catch (const LookupError&) {
      mismatches.push_back(rv.result.entry_id);
      continue;
    }
    if (verdict != rv.result.verdict ||
        digest_of(rv.statement) != rv.result.statement_digest) {
      mismatches.push_back(rv.result.entry_id);
    }
  }
  return mismatches;
}

}  // namespace proofchain::ledger
