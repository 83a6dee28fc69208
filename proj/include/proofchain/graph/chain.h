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

#ifndef PROOFCHAIN_GRAPH_CHAIN_H_
#define PROOFCHAIN_GRAPH_CHAIN_H_

#include <string>
#include <string_view>
#include <vector>

#include "proofchain/crypto/group.h"
#include "proofchain/graph/proof_graph.h"
#include "proofchain/ledger/ledger.h"

namespace proofchain::graph {

struct LinkVerdict {
  bool ok = false;
  std::string reason;
};

// Kind-dispatched and pure. Logical links recompute the target from the
// recorded source payload; zero-knowledge links run the registered
// validator; authority links check a signature over the target digest
// against the ledger key; statistical links only match declared model
// metadata against its ledger descriptor.
LinkVerdict verify_link(const ProofLink& link, const ProofGraph& graph,
                        const ledger::LedgerState& ledger,
                        const crypto::GroupParams& params);

// Why an entity's own anchor does not hold, or empty if it holds or is
// unset. The anchor resolves to the latest record for its (author, label).
std::string anchor_problem(const DataEntity& entity,
                           const ledger::LedgerState& ledger);

struct Failure {
  std::string subject;  // Link or entity id.
  std::string reason;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct ChainReport {
  std::string target;
  bool verified = false;
  std::vector<std::string> anchors_reached;
  Strength chain_strength = Strength::kNone;
  std::size_t chain_length = 0;
  std::vector<Failure> failures;
  // Link ids of the path that sets chain_strength, anchor first.
  std::vector<std::string> best_path;

  friend bool operator==(const ChainReport&, const ChainReport&) = default;
};

// LookupError if the target does not exist. BuildError if the graph has a
// cycle.
ChainReport verify_chain(const ProofGraph& graph, std::string_view target,
                         const ledger::LedgerState& ledger,
                         const crypto::GroupParams& params);

struct LintWarning {
  std::string code;  // W1 .. W4
  std::string subject;
  std::string message;
  friend bool operator==(const LintWarning&, const LintWarning&) = default;
};

std::vector<LintWarning> lint_chain(const ProofGraph& graph,
                                    const ledger::LedgerState& ledger,
                                    const crypto::GroupParams& params);

Json to_json(const ChainReport& report);
ChainReport chain_report_from_json(const Json& j);
Json to_json(const LintWarning& warning);
Json to_json(const std::vector<LintWarning>& warnings);

}  // namespace proofchain::graph

#endif  // PROOFCHAIN_GRAPH_CHAIN_H_
