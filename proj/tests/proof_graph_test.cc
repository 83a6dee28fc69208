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

#include <numeric>

#include "graph_fixtures.h"
#include "lint_fixtures.h"
#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain::graph {
namespace {

using crypto::BigInt;
using proofchain::testing::GraphWorld;
using proofchain::testing::person;
using proofchain::testing::seed_bytes;
using proofchain::testing::w1_fixture;
using proofchain::testing::w2_fixture;
using proofchain::testing::w3_fixture;
using proofchain::testing::w4_fixture;
using proofchain::testing::weakest_link_fixture;

DataEntity entity(const std::string& id, Domain domain) {
  return {id, domain, Granularity::kDigest, digest_of(Json(id)), 0,
          std::nullopt};
}

ProofGraph pair_graph(Domain a, Domain b) {
  return add_entity(add_entity(ProofGraph{}, entity("a", a)), entity("b", b));
}

TEST(ProofGraphBuildTest, SelfLinkIsACycle) {
  ProofGraph g = pair_graph(Domain::kPublic, Domain::kPublic);
  EXPECT_THROW(add_link(g, {"l", "a", "a", LinkKind::kStatistical, {}}),
               BuildError);
}

TEST(ProofGraphBuildTest, LongerCycleRejected) {
  ProofGraph g = add_entity(pair_graph(Domain::kPublic, Domain::kPublic),
                            entity("c", Domain::kPublic));
  g = add_link(g, {"ab", "a", "b", LinkKind::kStatistical, {}});
  g = add_link(g, {"bc", "b", "c", LinkKind::kStatistical, {}});
  EXPECT_THROW(add_link(g, {"ca", "c", "a", LinkKind::kStatistical, {}}),
               BuildError);
  EXPECT_NO_THROW(add_link(g, {"ac", "a", "c", LinkKind::kStatistical, {}}));
}

TEST(ProofGraphBuildTest, ZeroKnowledgeMustCrossDomains) {
  EXPECT_THROW(add_link(pair_graph(Domain::kPublic, Domain::kPublic),
                        {"l", "a", "b", LinkKind::kZeroKnowledge, {}}),
               BuildError);
  EXPECT_THROW(add_link(pair_graph(Domain::kPrivate, Domain::kPrivate),
                        {"l", "a", "b", LinkKind::kZeroKnowledge, {}}),
               BuildError);
  ProofGraph ok = add_link(pair_graph(Domain::kPrivate, Domain::kPublic),
                           {"l", "a", "b", LinkKind::kZeroKnowledge, {}});
  EXPECT_EQ(ok.links().size(), 1u);
  // Shape-only assembly lets the violation through.
  EXPECT_NO_THROW(add_link_structural(pair_graph(Domain::kPublic, Domain::kPublic),
                                      {"l", "a", "b", LinkKind::kZeroKnowledge,
                                       {}}));
}

TEST(ProofGraphBuildTest, LogicalFromPrivateNeedsPublicInputs) {
  ProofGraph g = pair_graph(Domain::kPrivate, Domain::kPublic);
  EXPECT_THROW(
      add_link(g, {"l", "a", "b", LinkKind::kLogical,
                   logical_evidence(Recipe::kIdentity, Json("a"))}),
      BuildError);
  EXPECT_NO_THROW(
      add_link(g, {"l", "a", "b", LinkKind::kLogical,
                   logical_evidence(Recipe::kIdentity, Json("a"), true)}));
}

TEST(ProofGraphBuildTest, IdsAndEndpoints) {
  ProofGraph g = pair_graph(Domain::kPublic, Domain::kPublic);
  EXPECT_THROW(add_entity(g, entity("a", Domain::kPrivate)), BuildError);
  EXPECT_THROW(add_link(g, {"l", "a", "zz", LinkKind::kLogical, {}}),
               BuildError);
  g = add_link(g, {"l", "a", "b", LinkKind::kStatistical, {}});
  EXPECT_THROW(add_link(add_entity(g, entity("c", Domain::kPublic)),
                        {"l", "a", "c", LinkKind::kStatistical, {}}),
               BuildError);
}

TEST(ProofGraphBuildTest, FunctionalUpdate) {
  ProofGraph empty;
  ProofGraph one = add_entity(empty, entity("a", Domain::kPublic));
  EXPECT_TRUE(empty.entities().empty());
  EXPECT_EQ(one.entities().size(), 1u);
}

TEST(ProofGraphBuildTest, StrengthMapping) {
  EXPECT_EQ(strength_class(LinkKind::kLogical), Strength::kStrong);
  EXPECT_EQ(strength_class(LinkKind::kZeroKnowledge), Strength::kStrong);
  EXPECT_EQ(strength_class(LinkKind::kAuthority), Strength::kAnchored);
  EXPECT_EQ(strength_class(LinkKind::kStatistical), Strength::kWeak);
  EXPECT_LT(Strength::kNone, Strength::kWeak);
  EXPECT_LT(Strength::kAnchored, Strength::kStrong);
}

TEST(ProofGraphJsonTest, RoundTripAndStrictness) {
  ProofGraph g = pair_graph(Domain::kPrivate, Domain::kPublic);
  DataEntity c = entity("c", Domain::kPublic);
  c.anchor = sha256(std::string_view("anchor"));
  c.created_at = 77;
  g = add_entity(g, c);
  g = add_link(g, {"l", "a", "b", LinkKind::kZeroKnowledge, {{"bundle", {}}}});
  g = add_link(g, {"m", "b", "c", LinkKind::kStatistical, {}});
  Json j = parse_json(canonical_dump(to_json(g)));
  ProofGraph back = graph_from_json(j);
  EXPECT_EQ(to_json(back), to_json(g));
  EXPECT_EQ(*back.entity("c"), c);

  Json bad = j;
  bad["links"][1]["strength_class"] = "strong";
  EXPECT_THROW(graph_from_json(bad), FormatError);
  bad = j;
  bad["entities"][0]["domain"] = "secret";
  EXPECT_THROW(graph_from_json(bad), FormatError);
  bad = j;
  bad["links"].push_back(to_json(ProofLink{"x", "c", "a", LinkKind::kStatistical, {}}));
  EXPECT_THROW(graph_from_json(bad), BuildError);
}

TEST(RecipeTest, Transforms) {
  EXPECT_EQ(apply_recipe(Recipe::kIdentity, Json{{"k", "v"}}), (Json{{"k", "v"}}));
  EXPECT_EQ(apply_recipe(Recipe::kConcatHash, Json{"ab", "c"}),
            Json(sha256(std::string_view("abc")).hex()));
  EXPECT_EQ(apply_recipe(Recipe::kSumOfFields, Json{{"x", "a"}, {"y", 5}}),
            (Json{{"total", "f"}}));
  EXPECT_THROW(apply_recipe(Recipe::kConcatHash, Json{{"x", 1}}), FormatError);
  EXPECT_THROW(apply_recipe(Recipe::kSumOfFields, Json{{"x", "zz"}}),
               FormatError);
}

class LinkVerifyTest : public ::testing::Test {
 protected:
  GraphWorld w;
};

TEST_F(LinkVerifyTest, AuthorityLinks) {
  const BigInt sk = 12345;
  w.register_authority("registry", sk);
  w.plain("registry", Domain::kPublic, Granularity::kDigest, "registry");
  w.plain("doc", Domain::kPrivate, Granularity::kTransactional, "doc");
  w.link("signed", "registry", "doc", LinkKind::kAuthority,
         w.authority_evidence_for("registry", sk, "doc"));
  w.link("rogue", "registry", "doc", LinkKind::kAuthority,
         w.authority_evidence_for("registry", 999, "doc"));
  w.link("nobody", "registry", "doc", LinkKind::kAuthority,
         w.authority_evidence_for("nobody", sk, "doc"));
  auto verdict = [&](const std::string& id) {
    return verify_link(*w.graph.link(id), w.graph, w.ledger, w.gp);
  };
  EXPECT_TRUE(verdict("signed").ok);
  EXPECT_EQ(verdict("rogue").reason, "unanchored");
  EXPECT_EQ(verdict("nobody").reason, "unanchored");

  // Correct key, signature over a different digest.
  Json forged = graph::authority_evidence(
      "registry", crypto::sign_message(sk, Digest{}.span(), seed_bytes("x"), w.gp));
  w.link("forged", "registry", "doc", LinkKind::kAuthority, forged);
  EXPECT_FALSE(verdict("forged").ok);
  EXPECT_EQ(verdict("forged").reason.rfind("signature-invalid", 0), 0u);
}

// Independent recomputation: the plain integer total decides the verdict.
TEST_F(LinkVerifyTest, LogicalSumLink) {
  const Json readings = {{"mon", hex_int(std::uint64_t{120})},
                         {"tue", hex_int(std::uint64_t{80})},
                         {"wed", hex_int(std::uint64_t{55})}};
  const std::uint64_t oracle = 120 + 80 + 55;
  w.plain("readings", Domain::kPublic, Granularity::kTransactional, readings);
  w.plain("good", Domain::kPublic, Granularity::kDigest,
          Json{{"total", hex_int(oracle)}});
  w.plain("bad", Domain::kPublic, Granularity::kDigest,
          Json{{"total", hex_int(oracle + 1)}});
  const Json ev = logical_evidence(Recipe::kSumOfFields, readings);
  w.link("to-good", "readings", "good", LinkKind::kLogical, ev);
  w.link("to-bad", "readings", "bad", LinkKind::kLogical, ev);
  EXPECT_TRUE(verify_link(*w.graph.link("to-good"), w.graph, w.ledger, w.gp).ok);
  auto v = verify_link(*w.graph.link("to-bad"), w.graph, w.ledger, w.gp);
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.reason, "recomputation-mismatch");

  Json wrong_source = readings;
  wrong_source["wed"] = hex_int(std::uint64_t{56});
  w.link("lying", "readings", "bad", LinkKind::kLogical,
         logical_evidence(Recipe::kSumOfFields, wrong_source));
  EXPECT_EQ(verify_link(*w.graph.link("lying"), w.graph, w.ledger, w.gp).reason,
            "source-mismatch");
}

TEST_F(LinkVerifyTest, StatisticalLinks) {
  const Json model = {{"model", "arima"}, {"order", "3"}};
  const Digest descriptor = w.register_model(model, "model/arima");
  w.plain("history", Domain::kPublic, Granularity::kDigest, "h");
  w.plain("forecast", Domain::kPublic, Granularity::kDigest, "f");
  w.link("ok", "history", "forecast", LinkKind::kStatistical,
         statistical_evidence(model, descriptor));
  w.link("other", "history", "forecast", LinkKind::kStatistical,
         statistical_evidence(Json{{"model", "lstm"}}, descriptor));
  w.link("missing", "history", "forecast", LinkKind::kStatistical,
         statistical_evidence(model, Digest{}));
  w.link("junk", "history", "forecast", LinkKind::kStatistical, Json::object());
  auto reason = [&](const std::string& id) {
    auto v = verify_link(*w.graph.link(id), w.graph, w.ledger, w.gp);
    return v.ok ? std::string("ok") : v.reason;
  };
  EXPECT_EQ(reason("ok"), "ok");
  EXPECT_EQ(reason("other"), "model-mismatch");
  EXPECT_EQ(reason("missing"), "unanchored");
  EXPECT_EQ(reason("junk").rfind("malformed", 0), 0u);
}

TEST_F(LinkVerifyTest, ZeroKnowledgeLinks) {
  auto [next, pc] = zk::commit_preserved({person("ann", 30, "west", w.gp)},
                                         "registry", "archive", w.ledger, 2, w.gp);
  w.ledger = next;
  w.tick = 2;
  const zk::ZkLinkBundle bundle =
      zk::zkcu_predicate_geq(pc, "ann", "age", 21, 8, seed_bytes("z"), w.gp);
  DataEntity archive = w.make("archive", Domain::kPrivate,
                              Granularity::kTransactional, Json{});
  archive.payload_digest = pc.root();
  archive.anchor = pc.anchor();
  w.graph = add_entity(w.graph, archive);
  DataEntity claim = w.make("claim", Domain::kPublic, Granularity::kDigest, Json{});
  claim.payload_digest = digest_of(bundle.statement);
  w.graph = add_entity(w.graph, claim);
  w.plain("other", Domain::kPublic, Granularity::kDigest, "other");
  w.link("zk", "archive", "claim", LinkKind::kZeroKnowledge, zk_evidence(bundle));
  w.link("zk-other", "archive", "other", LinkKind::kZeroKnowledge,
         zk_evidence(bundle));
  zk::ZkLinkBundle edited = bundle;
  edited.statement["threshold"] = hex_int(std::uint64_t{22});
  w.plain("edited", Domain::kPublic, Granularity::kDigest, "e");
  DataEntity edited_claim = w.make("edited-claim", Domain::kPublic,
                                   Granularity::kDigest, Json{});
  edited_claim.payload_digest = digest_of(edited.statement);
  w.graph = add_entity(w.graph, edited_claim);
  w.link("zk-edited", "archive", "edited-claim", LinkKind::kZeroKnowledge,
         zk_evidence(edited));

  auto reason = [&](const std::string& id) {
    auto v = verify_link(*w.graph.link(id), w.graph, w.ledger, w.gp);
    return v.ok ? std::string("ok") : v.reason;
  };
  EXPECT_EQ(reason("zk"), "ok");
  EXPECT_EQ(reason("zk-other"), "statement-mismatch");
  EXPECT_EQ(reason("zk-edited"), "statement-digest-mismatch");

  // Source entity that is not the bundle's anchored data.
  w.anchored("impostor", Domain::kPrivate, Granularity::kTransactional, "imp");
  w.link("zk-impostor", "impostor", "claim", LinkKind::kZeroKnowledge,
         zk_evidence(bundle));
  EXPECT_EQ(reason("zk-impostor"), "source-mismatch");

  // Ledger without the validators registered.
  ledger::LedgerState bare;
  auto [bare_next, pc2] = zk::commit_preserved(
      {person("ann", 30, "west", w.gp)}, "registry", "archive", bare, 2, w.gp);
  EXPECT_EQ(pc2.anchor(), pc.anchor());
  auto v = verify_link(*w.graph.link("zk"), w.graph, bare_next, w.gp);
  EXPECT_EQ(v.reason, "unregistered-validator");
}

class ChainExampleTest : public ::testing::Test {
 protected:
  GraphWorld w;
};

TEST_F(ChainExampleTest, VacuousChain) {
  w.plain("lonely", Domain::kPublic, Granularity::kDigest, "x");
  ChainReport r = w.chain("lonely");
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kNone);
  EXPECT_EQ(r.chain_length, 0u);
  EXPECT_TRUE(r.anchors_reached.empty());
  EXPECT_THROW(w.chain("missing"), LookupError);
}

TEST_F(ChainExampleTest, AnchoredEntityIsItsOwnChain) {
  const DataEntity& e =
      w.anchored("root", Domain::kPublic, Granularity::kDigest, "root");
  ChainReport r = w.chain("root");
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kStrong);
  EXPECT_EQ(r.chain_length, 0u);
  EXPECT_EQ(r.anchors_reached, std::vector<std::string>{e.anchor->hex()});
}

TEST_F(ChainExampleTest, ZeroKnowledgeThenLogicalIsStrong) {
  auto [next, pc] = zk::commit_preserved({person("ann", 30, "west", w.gp)},
                                         "registry", "archive", w.ledger, 2, w.gp);
  w.ledger = next;
  const zk::ZkLinkBundle bundle = zk::zkcu_reveal_field(pc, "ann", "region", w.gp);
  DataEntity archive = w.make("archive", Domain::kPrivate,
                              Granularity::kTransactional, Json{});
  archive.payload_digest = pc.root();
  archive.anchor = pc.anchor();
  w.graph = add_entity(w.graph, archive);
  DataEntity claim = w.make("claim", Domain::kPublic, Granularity::kDigest, Json{});
  claim.payload_digest = digest_of(bundle.statement);
  w.graph = add_entity(w.graph, claim);
  w.plain("published", Domain::kPublic, Granularity::kDigest, bundle.statement);
  w.link("zk", "archive", "claim", LinkKind::kZeroKnowledge, zk_evidence(bundle));
  w.link("copy", "claim", "published", LinkKind::kLogical,
         logical_evidence(Recipe::kIdentity, bundle.statement));
  ChainReport r = w.chain("published");
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kStrong);
  EXPECT_EQ(r.chain_length, 2u);
  EXPECT_EQ(r.best_path, (std::vector<std::string>{"zk", "copy"}));
  EXPECT_EQ(r.anchors_reached, std::vector<std::string>{pc.anchor().hex()});
  EXPECT_TRUE(r.failures.empty());
}

TEST(WeakestLinkTest, LogicalThenStatisticalIsWeak) {
  GraphWorld w = weakest_link_fixture();
  EXPECT_EQ(w.chain("total").chain_strength, Strength::kStrong);
  ChainReport r = w.chain("forecast");
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kWeak);
  EXPECT_EQ(r.chain_length, 2u);
}

TEST_F(ChainExampleTest, AuthorityChainAndBestPath) {
  const BigInt sk = 777;
  w.register_authority("registry", sk);
  w.plain("registry", Domain::kPublic, Granularity::kDigest, "registry");
  w.plain("doc", Domain::kPublic, Granularity::kDigest, "doc");
  w.link("sig", "registry", "doc", LinkKind::kAuthority,
         w.authority_evidence_for("registry", sk, "doc"));
  ChainReport r = w.chain("doc");
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kAnchored);
  EXPECT_EQ(r.chain_length, 1u);
  EXPECT_EQ(r.anchors_reached, std::vector<std::string>{"authority:registry"});
  EXPECT_EQ(w.chain("registry").chain_strength, Strength::kAnchored);
}

TEST_F(ChainExampleTest, FailingInLinkBlocksTarget) {
  w.anchored("src", Domain::kPublic, Granularity::kDigest, "s");
  w.plain("dst", Domain::kPublic, Granularity::kDigest, "s");
  w.plain("liar", Domain::kPublic, Granularity::kDigest, "l");
  w.link("good", "src", "dst", LinkKind::kLogical,
         logical_evidence(Recipe::kIdentity, "s"));
  EXPECT_TRUE(w.chain("dst").verified);
  w.link("bad", "liar", "dst", LinkKind::kLogical,
         logical_evidence(Recipe::kIdentity, "l"));
  ChainReport r = w.chain("dst");
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.chain_strength, Strength::kNone);
  EXPECT_EQ(r.failures,
            (std::vector<Failure>{{"bad", "recomputation-mismatch"}}));
}

TEST_F(ChainExampleTest, SupersededAnchorFails) {
  w.anchored("doc", Domain::kPublic, Granularity::kDigest, "v1");
  EXPECT_TRUE(w.chain("doc").verified);
  w.anchor_digest(digest_of(Json("v2")), "entity/doc");
  ChainReport r = w.chain("doc");
  EXPECT_FALSE(r.verified);
  EXPECT_EQ(r.failures, (std::vector<Failure>{{"doc", "anchor-mismatch"}}));
}

TEST_F(ChainExampleTest, ReportJsonRoundTrip) {
  w.anchored("src", Domain::kPublic, Granularity::kDigest, "s");
  w.plain("dst", Domain::kPublic, Granularity::kDigest, "s");
  w.link("good", "src", "dst", LinkKind::kLogical,
         logical_evidence(Recipe::kIdentity, "s"));
  ChainReport r = w.chain("dst");
  EXPECT_EQ(chain_report_from_json(parse_json(canonical_dump(to_json(r)))), r);
}

// Dedicated fixtures: each warning fires alone.
void expect_single(const GraphWorld& w, const std::string& code,
                   const std::string& subject) {
  auto warnings = w.lint();
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_EQ(warnings[0].code, code);
  EXPECT_EQ(warnings[0].subject, subject);
}

TEST(LintFixtureTest, W1NoAnchor) { expect_single(w1_fixture(), "W1", "claim"); }

TEST(LintFixtureTest, W2UnanchoredSensor) {
  GraphWorld w = w2_fixture();
  EXPECT_TRUE(w.chain("location").verified);
  expect_single(w, "W2", "sensor");
}

TEST(LintFixtureTest, W3NeedlessZeroKnowledge) {
  GraphWorld w = w3_fixture();
  // Policy refuses the same link.
  const ProofLink planted = *w.graph.link("planted");
  GraphWorld bare = w;
  bare.graph = ProofGraph{};
  for (const auto& [id, e] : w.graph.entities()) {
    bare.graph = add_entity(bare.graph, e);
  }
  EXPECT_THROW(add_link(bare.graph, planted), BuildError);
  expect_single(w, "W3", "planted");
}

TEST(LintFixtureTest, W4WeakLinksOnly) {
  expect_single(w4_fixture(), "W4", "forecast");
}

TEST(LintFixtureTest, AnchoredStrongGraphIsClean) {
  GraphWorld w;
  w.anchored("src", Domain::kPrivate, Granularity::kTransactional, "s");
  w.plain("dst", Domain::kPublic, Granularity::kDigest, "s");
  w.link("copy", "src", "dst", LinkKind::kLogical,
         logical_evidence(Recipe::kIdentity, "s", true));
  EXPECT_TRUE(w.lint().empty());
}

}  // namespace
}  // namespace proofchain::graph
