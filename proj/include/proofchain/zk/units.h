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

#ifndef PROOFCHAIN_ZK_UNITS_H_
#define PROOFCHAIN_ZK_UNITS_H_

// Zero-knowledge computation units. Each unit turns anchored preserved data
// into a public statement plus proof, and ships a validator that checks the
// statement came from the anchored source (Merkle paths to the ledger root)
// and from the right computation (the unit's cryptographic check).

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/ledger/validator.h"
#include "proofchain/zk/preserved.h"

namespace proofchain::zk {

inline constexpr std::string_view kRevealValidator = "zk.reveal";
inline constexpr std::string_view kGeqValidator = "zk.geq";
inline constexpr std::string_view kSumValidator = "zk.sum";

struct ZkLinkBundle {
  Json statement;
  Json proof;
  std::string validator_id;

  friend bool operator==(const ZkLinkBundle&, const ZkLinkBundle&) = default;
};

Json to_json(const ZkLinkBundle& bundle);
ZkLinkBundle bundle_from_json(const Json& j);

// Unit descriptor: register one per unit kind; the validator catalog is
// built from these.
struct ComputationUnit {
  ledger::ValidatorDescriptor descriptor;
  std::function<ledger::ValidationOutcome(const crypto::GroupParams&,
                                          const ledger::LedgerState&,
                                          const Json& statement,
                                          const Json& proof)>
      check;
};

std::vector<ComputationUnit> standard_units();
ledger::ValidatorCatalog make_catalog(const std::vector<ComputationUnit>& units,
                                      const crypto::GroupParams& params);
inline ledger::ValidatorCatalog standard_catalog(
    const crypto::GroupParams& params) {
  return make_catalog(standard_units(), params);
}

// Selective disclosure of one field. Throws LookupError for unknown record
// or field, ParameterError if the commitment is not anchored.
ZkLinkBundle zkcu_reveal_field(const PreservedCommitment& pc,
                               std::string_view record_id,
                               std::string_view field,
                               const crypto::GroupParams& params);

// Proves field >= threshold without revealing the value, via a range proof
// on C / g^threshold. Requires threshold + 2^n_bits <= q. Throws
// ProofGenerationError when the value is below the threshold or the
// difference does not fit in n_bits.
ZkLinkBundle zkcu_predicate_geq(const PreservedCommitment& pc,
                                std::string_view record_id,
                                std::string_view field,
                                const crypto::BigInt& threshold,
                                unsigned n_bits, ByteSpan rng_seed,
                                const crypto::GroupParams& params);

struct RecordRef {
  const PreservedCommitment* source;
  std::string record_id;
};

// Claims the sum of `field` over the referenced records. The bundle carries
// each record's field commitment with its Merkle paths and the summed
// blinding factor; individual values and blindings stay hidden. The claimed
// total is not checked here: a wrong total yields a false verdict.
// Throws ParameterError when a record lacks a numeric `field`, when the
// list is empty or repeats a record, and RangeError if the true sum is >= q.
ZkLinkBundle zkcu_aggregate_sum(const std::vector<RecordRef>& records,
                                std::string_view field,
                                const crypto::BigInt& claimed_total,
                                const crypto::GroupParams& params);
ZkLinkBundle zkcu_aggregate_sum(const PreservedCommitment& pc,
                                const std::vector<std::string>& record_ids,
                                std::string_view field,
                                const crypto::BigInt& claimed_total,
                                const crypto::GroupParams& params);

// Pure check: anchor resolution, Merkle paths, unit-specific cryptography.
ledger::ValidationOutcome check_bundle(const ledger::LedgerState& state,
                                       const ZkLinkBundle& bundle,
                                       const crypto::GroupParams& params);

// Anchors named by a bundle's statement (empty if malformed).
std::vector<Digest> bundle_anchors(const ZkLinkBundle& bundle);

// Runs the registered validator and records the verdict on the ledger.
std::pair<ledger::LedgerState, ledger::VerificationResult> validate_shared(
    const ledger::LedgerState& state, const ledger::ValidatorCatalog& catalog,
    const ZkLinkBundle& bundle, std::uint64_t timestamp);

}  // namespace proofchain::zk

#endif  // PROOFCHAIN_ZK_UNITS_H_
