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

#ifndef PROOFCHAIN_LEDGER_VALIDATOR_H_
#define PROOFCHAIN_LEDGER_VALIDATOR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proofchain/ledger/ledger.h"

namespace proofchain::ledger {

struct ValidationOutcome {
  bool verdict = false;
  std::string reason;
};

// A validator program must be a pure function of its arguments. It may
// throw on malformed input; the invocation layer turns that into a false
// verdict.
using ValidatorFn = std::function<ValidationOutcome(
    const LedgerState&, const Json& statement, const Json& proof)>;

struct ValidatorProgram {
  ValidatorDescriptor descriptor;
  ValidatorFn run;
};

// Off-ledger code for on-ledger validator descriptors, keyed by id.
class ValidatorCatalog {
 public:
  void add(ValidatorProgram program);
  const ValidatorProgram* find(std::string_view id) const;
  std::vector<ValidatorDescriptor> descriptors() const;

 private:
  std::map<std::string, ValidatorProgram, std::less<>> programs_;
};

struct VerificationResult {
  std::string validator_id;
  std::string version;
  Digest statement_digest;
  bool verdict = false;
  std::string reason;
  std::uint64_t timestamp = 0;
  Digest entry_id;
};

// Runs a validator without recording anything. Throws LookupError if the
// validator is not registered on the ledger or has no matching program.
ValidationOutcome run_validator(const LedgerState& state,
                                const ValidatorCatalog& catalog,
                                std::string_view validator_id,
                                const Json& statement, const Json& proof);

// Runs the validator and appends a VerificationResult entry carrying the
// statement, proof and verdict. The input state is unchanged on error.
std::pair<LedgerState, VerificationResult> invoke_validator(
    const LedgerState& state, const ValidatorCatalog& catalog,
    std::string_view validator_id, const Json& statement, const Json& proof,
    std::uint64_t timestamp, std::string_view author = "validator");

// Registers every catalog descriptor in one block.
LedgerState register_catalog(const LedgerState& state,
                             const ValidatorCatalog& catalog,
                             std::string_view author, std::uint64_t timestamp);

std::vector<VerificationResult> verification_results(const LedgerState& state);

// Re-runs every recorded verification against the ledger prefix that
// preceded it. Returns the entry ids whose verdict does not reproduce.
std::vector<Digest> replay_verifications(const LedgerState& state,
                                         const ValidatorCatalog& catalog);

}  // namespace proofchain::ledger

#endif  // PROOFCHAIN_LEDGER_VALIDATOR_H_
