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

#include <gtest/gtest.h>

#include <random>

#include "graph_corpus.h"
#include "proofchain/common/errors.h"

namespace proofchain::graph {
namespace {

using proofchain::testing::brute_force_chain;
using proofchain::testing::GraphWorld;
using proofchain::testing::random_graph;

// Checks the reported best path: contiguous, ends at the target, and its
// weakest link equals the reported strength.
void expect_path_consistent(const GraphWorld& w, const ChainReport& r) {
  std::string at = r.target;
  Strength weakest = Strength::kStrong;
  for (auto it = r.best_path.rbegin(); it != r.best_path.rend(); ++it) {
    const ProofLink* l = w.graph.link(*it);
    ASSERT_NE(l, nullptr);
    EXPECT_EQ(l->target, at);
    weakest = std::min(weakest, l->strength());
    at = l->source;
  }
  const DataEntity* start = w.graph.entity(at);
  const bool ledger_anchor =
      start->anchor && anchor_problem(*start, w.ledger).empty();
  const Strength base = ledger_anchor ? Strength::kStrong : Strength::kAnchored;
  EXPECT_EQ(std::min(weakest, base), r.chain_strength);
}

TEST(ChainPropertyTest, MatchesPathEnumerationOracle) {
  std::mt19937_64 rng(2026);
  std::size_t verified = 0, total = 0;
  for (int round = 0; round < 150; ++round) {
    GraphWorld w = random_graph(rng, 8);
    for (const auto& [id, e] : w.graph.entities()) {
      const ChainReport r = w.chain(id);
      const auto oracle = brute_force_chain(w, id);
      ASSERT_EQ(r.verified, oracle.verified) << round << " " << id;
      ASSERT_EQ(r.chain_strength, oracle.strength) << round << " " << id;
      ASSERT_EQ(r.chain_length, oracle.length) << round << " " << id;
      if (r.verified) {
        expect_path_consistent(w, r);
        ++verified;
      }
      ++total;
    }
  }
  // The corpus exercises both outcomes.
  EXPECT_GT(verified, total / 10);
  EXPECT_LT(verified, total);
}

TEST(ChainPropertyTest, Monotonicity) {
  std::mt19937_64 rng(7);
  int added = 0;
  for (int round = 0; round < 40; ++round) {
    GraphWorld w = random_graph(rng, 8);
    const Json model = {{"model", "linear"}, {"version", "1"}};
    const Digest descriptor =
        w.ledger.latest_commitment("modeller", "model/linear")->entry_id;
    const std::size_t n = w.graph.entities().size();
    for (int attempt = 0; attempt < 10 && n > 1; ++attempt) {
      // Forward edges between "e<i>" ids keep the graph acyclic.
      std::size_t i = rng() % n, j = rng() % n;
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      const std::string src = "e" + std::to_string(i);
      const std::string dst = "e" + std::to_string(j);
      ProofLink candidate{"grow-" + std::to_string(attempt), src, dst,
                          LinkKind::kStatistical,
                          statistical_evidence(model, descriptor)};
      if (rng() % 2) {
        Json payload;
        for (std::uint64_t k : {0u, 1u}) {
          const Json p = {{"total", hex_int(k)}};
          if (digest_of(p) == w.graph.entity(src)->payload_digest) payload = p;
        }
        candidate.kind = LinkKind::kLogical;
        candidate.evidence =
            logical_evidence(Recipe::kSumOfFields, payload, true);
      }
      ProofGraph next = add_link(w.graph, candidate);
      if (!verify_link(candidate, next, w.ledger, w.gp).ok) continue;
      GraphWorld after = w;
      after.graph = next;
      for (const auto& [id, e] : w.graph.entities()) {
        const ChainReport before_r = w.chain(id);
        const ChainReport after_r = after.chain(id);
        ASSERT_GE(after_r.chain_strength, before_r.chain_strength) << id;
        ASSERT_GE(after_r.chain_length, before_r.chain_length) << id;
      }
      w = after;
      ++added;
    }
  }
  EXPECT_GT(added, 100);
}

// Single anchored root feeding a random DAG of logical and statistical
// links; mutating the root payload makes every downstream target fail.
TEST(ChainPropertyTest, TamperPropagation) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    GraphWorld w;
    const Json model = {{"model", "m"}};
    const Digest descriptor = w.register_model(model, "model/m");
    const Json root_payload = {{"total", "7"}};
    w.anchored("root", Domain::kPublic, Granularity::kTransactional,
               root_payload);
    const int n = 2 + static_cast<int>(rng() % 7);
    for (int i = 1; i < n; ++i) {
      const std::string id = "n" + std::to_string(i);
      w.plain(id, Domain::kPublic, Granularity::kDigest, root_payload);
      const int parents = 1 + static_cast<int>(rng() % 2);
      for (int p = 0; p < parents; ++p) {
        const int src = static_cast<int>(rng() % i);
        const std::string src_id = src == 0 ? "root" : "n" + std::to_string(src);
        const std::string lid = id + "-" + std::to_string(p);
        if (w.graph.link(lid)) continue;
        try {
          if (rng() % 3) {
            w.link(lid, src_id, id, LinkKind::kLogical,
                   logical_evidence(Recipe::kSumOfFields, root_payload));
          } else {
            w.link(lid, src_id, id, LinkKind::kStatistical,
                   statistical_evidence(model, descriptor));
          }
        } catch (const BuildError&) {
        }
      }
    }
    for (const auto& [id, e] : w.graph.entities()) {
      ASSERT_TRUE(w.chain(id).verified) << round << " " << id;
    }
    GraphWorld tampered = w;
    ProofGraph rebuilt;
    for (auto e : w.graph.entities()) {
      if (e.first == "root") {
        e.second.payload_digest = digest_of(Json{{"total", "8"}});
      }
      rebuilt = add_entity(rebuilt, e.second);
    }
    for (const auto& l : w.graph.links()) rebuilt = add_link(rebuilt, l);
    tampered.graph = rebuilt;
    for (const auto& [id, e] : tampered.graph.entities()) {
      const ChainReport r = tampered.chain(id);
      EXPECT_FALSE(r.verified) << round << " " << id;
      EXPECT_EQ(r.chain_strength, Strength::kNone);
    }
  }
}

TEST(ChainPropertyTest, VerifyChainIsPure) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    GraphWorld w = random_graph(rng, 8);
    const GraphWorld copy = w;
    for (const auto& [id, e] : w.graph.entities()) {
      const ChainReport a = w.chain(id);
      EXPECT_EQ(a, w.chain(id));
      EXPECT_EQ(a, copy.chain(id));
      EXPECT_EQ(canonical_dump(to_json(a)), canonical_dump(to_json(copy.chain(id))));
    }
  }
}

}  // namespace
}  // namespace proofchain::graph
