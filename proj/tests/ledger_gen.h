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

#ifndef PROOFCHAIN_TESTS_LEDGER_GEN_H_
#define PROOFCHAIN_TESTS_LEDGER_GEN_H_

// Random operation sequences over the ledger simulation, shared by the
// ledger unit tests and the acceptance suite.

#include <random>
#include <string>

#include "proofchain/common/errors.h"
#include "proofchain/ledger/ledger.h"
#include "proofchain/ledger/validator.h"

namespace proofchain::testing {

// Verdict true iff statement.n is even and proof.witness == n / 2.
inline ledger::ValidatorCatalog halving_catalog() {
  ledger::ValidatorCatalog catalog;
  catalog.add({{"test.halving", "1", "halving-statement"},
               [](const ledger::LedgerState&, const Json& statement,
                  const Json& proof) -> ledger::ValidationOutcome {
                 mpz_class n = require_int(statement, "n");
                 mpz_class w = require_int(proof, "witness");
                 if (n != 2 * w) return {false, "witness-mismatch"};
                 return {true, "ok"};
               }});
  return catalog;
}

inline Json halving_statement(unsigned long n) {
  return {{"n", hex_int(mpz_class(n))}};
}

inline Json halving_proof(unsigned long w) {
  return {{"witness", hex_int(mpz_class(w))}};
}

// Applies `ops` random successful operations; failed preconditions (label
// conflicts) are skipped, so the result is always a valid history.
inline ledger::LedgerState random_history(std::mt19937_64& rng, int ops) {
  auto catalog = halving_catalog();
  ledger::LedgerState state =
      ledger::register_catalog(ledger::LedgerState{}, catalog, "operator", 0);
  std::uint64_t tick = 0;
  for (int i = 0; i < ops; ++i) {
    tick += rng() % 3;
    const std::string party = "party-" + std::to_string(rng() % 4);
    try {
      switch (rng() % 4) {
        case 0: {
          Digest d{};
          d.bytes[0] = static_cast<std::uint8_t>(rng());
          d.bytes[31] = static_cast<std::uint8_t>(i);
          state = ledger::register_commitment(
                      state, party, d, "label-" + std::to_string(rng() % 5),
                      tick)
                      .first;
          break;
        }
        case 1:
          state = ledger::register_authority(state, party,
                                             mpz_class(4 + rng() % 1000), tick)
                      .first;
          break;
        case 2: {
          unsigned long n = rng() % 100;
          unsigned long w = rng() % 2 ? n / 2 : n / 2 + 1;
          state = ledger::invoke_validator(state, catalog, "test.halving",
                                           halving_statement(n),
                                           halving_proof(w), tick)
                      .first;
          break;
        }
        default: {
          std::vector<ledger::LedgerEntry> entries;
          const int n = 1 + static_cast<int>(rng() % 3);
          for (int k = 0; k < n; ++k) {
            entries.push_back(ledger::LedgerEntry::make(
                ledger::EntryKind::kCommitmentRecord, party,
                {{"commitment", Digest{}.hex()},
                 {"encoding", "sha256"},
                 {"label", "bulk-" + std::to_string(i) + "-" +
                               std::to_string(k)},
                 {"timestamp", hex_int(tick)}}));
          }
          state = ledger::append_block(state, std::move(entries), tick);
          break;
        }
      }
    } catch (const ConflictError&) {
      // Same (author, label) at the same tick: skipped.
    }
  }
  return state;
}

}  // namespace proofchain::testing

#endif  // PROOFCHAIN_TESTS_LEDGER_GEN_H_
