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

#ifndef PROOFCHAIN_SCENARIOS_SCENARIOS_H_
#define PROOFCHAIN_SCENARIOS_SCENARIOS_H_

// End-to-end case studies. Each run is a pure function of its config and
// yields a transcript that serializes to byte-identical canonical JSON.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/graph/chain.h"
#include "proofchain/graph/proof_graph.h"
#include "proofchain/ledger/ledger.h"
#include "proofchain/zk/preserved.h"

namespace proofchain::scenarios {

enum class ScenarioKind { kIdentity, kAudit, kSupplyChain };
std::string_view to_string(ScenarioKind kind);
// Accepts "identity", "audit", "supplychain". ParameterError otherwise.
ScenarioKind parse_scenario(std::string_view name);

struct ScenarioConfig {
  Bytes seed;
  crypto::Profile profile = crypto::Profile::kTest;
  // Identity.
  std::uint64_t age = 34;
  std::uint64_t threshold = 18;
  unsigned n_bits = 8;
  // Audit.
  std::uint32_t days = 30;
  // Supply chain.
  std::uint32_t shipments = 12;
  bool corrupt_ecosystem = false;
  // Scenario-specific tampering: mutated archive, misreported total, or
  // altered route list.
  bool tamper = false;
};

Json to_json(const ScenarioConfig& config, ScenarioKind kind);

struct StepVerdict {
  std::string subject;
  bool verdict = false;
  std::string reason;
  friend bool operator==(const StepVerdict&, const StepVerdict&) = default;
};

struct ScenarioStep {
  std::uint64_t tick = 0;
  std::string actor;
  std::string action;
  // Digest over the hashes of blocks appended during the step; zero when the
  // step did not touch the ledger.
  Digest ledger_delta;
  std::vector<StepVerdict> verdicts;
};

struct ScenarioTranscript {
  ScenarioKind kind = ScenarioKind::kIdentity;
  Json config;
  Digest params_id;
  std::vector<ScenarioStep> steps;
  std::vector<graph::ChainReport> reports;
  std::vector<graph::LintWarning> lint;
  std::vector<std::string> notes;
  Digest ledger_head;
  Digest graph_digest;
  bool final_verdict = false;
};

Json to_json(const ScenarioTranscript& transcript);
// Canonical JSON plus a trailing newline; the golden-file format.
std::string transcript_text(const ScenarioTranscript& transcript);

struct ScenarioRun {
  ScenarioTranscript transcript;
  ledger::LedgerState ledger;
  graph::ProofGraph graph;
  std::vector<std::string> targets;
  // Owner-side openings of every preserved commitment, in anchoring order.
  std::vector<zk::PreservedCommitment> openings;
};

// ParameterError on invalid configs.
ScenarioRun run_identity_scenario(const ScenarioConfig& config);
ScenarioRun run_audit_scenario(const ScenarioConfig& config);
ScenarioRun run_supplychain_scenario(const ScenarioConfig& config);
ScenarioRun run_scenario(ScenarioKind kind, const ScenarioConfig& config);

// Recomputes the chain reports, lint and final verdict of a transcript
// against the given ledger.
ScenarioTranscript reevaluate(const ScenarioTranscript& transcript,
                              const graph::ProofGraph& graph,
                              const std::vector<std::string>& targets,
                              const ledger::LedgerState& ledger);

// Re-executes the ledger's blocks on a fresh ledger, replays every recorded
// verification, and compares the transcript's validator verdicts with the
// ledger's. Returns human-readable discrepancies; empty means sound.
std::vector<std::string> replay_check(const ScenarioTranscript& transcript,
                                      const ledger::LedgerState& ledger);

}  // namespace proofchain::scenarios

#endif  // PROOFCHAIN_SCENARIOS_SCENARIOS_H_
