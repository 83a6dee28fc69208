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

#include "proofchain/scenarios/scenarios.h"

#include <algorithm>
#include <optional>
#include <utility>

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"
#include "proofchain/crypto/drbg.h"
#include "proofchain/crypto/signature.h"
#include "proofchain/ledger/validator.h"
#include "proofchain/zk/preserved.h"
#include "proofchain/zk/units.h"

namespace proofchain::scenarios {

namespace {

using crypto::BigInt;
using graph::DataEntity;
using graph::Domain;
using graph::Granularity;
using graph::LinkKind;

constexpr std::string_view kValidateAction = "validate";

constexpr std::string_view kCollusionCaveat =
    "corrupt ecosystem: every proof verifies, yet a proof-chain cannot "
    "detect collusion across the whole supply chain; anchored data is only "
    "as honest as the parties who anchor it";

Bytes subseed(const Bytes& seed, std::string_view purpose) {
  Sha256 h;
  h.update(ByteSpan(seed.data(), seed.size()));
  h.update(purpose);
  const Digest d = h.finish();
  return Bytes(d.bytes.begin(), d.bytes.end());
}

std::uint64_t draw_u16(crypto::Drbg& drbg) {
  const Bytes b = drbg.bytes(2);
  return (std::uint64_t{b[0]} << 8) | b[1];
}

// Accumulates ledger, graph and transcript steps for one run.
class Session {
 public:
  Session(ScenarioKind kind, const ScenarioConfig& config)
      : config_(config),
        params_(crypto::group_params(config.profile)),
        catalog_(zk::standard_catalog(params_)) {
    run_.transcript.kind = kind;
    run_.transcript.config = to_json(config, kind);
    run_.transcript.params_id = params_.id;
    mark();
    ledger() = ledger::register_catalog(ledger::LedgerState{}, catalog_,
                                        "operator", 0);
    step(0, "operator", "register-validators");
  }

  const crypto::GroupParams& params() const { return params_; }
  const ledger::ValidatorCatalog& catalog() const { return catalog_; }
  ledger::LedgerState& ledger() { return run_.ledger; }
  Bytes seed(std::string_view purpose) const {
    return subseed(config_.seed, purpose);
  }

  // Remembers the ledger height so the next step can digest its delta.
  void mark() { height_ = run_.ledger.height(); }

  void step(std::uint64_t tick, std::string actor, std::string action,
            std::vector<StepVerdict> verdicts = {}) {
    ScenarioStep s{tick, std::move(actor), std::move(action), Digest{},
                   std::move(verdicts)};
    if (run_.ledger.height() > height_) {
      Json hashes = Json::array();
      for (std::size_t i = height_; i < run_.ledger.height(); ++i) {
        hashes.push_back(run_.ledger.block(i).block_hash.hex());
      }
      s.ledger_delta = digest_of(hashes);
    }
    run_.transcript.steps.push_back(std::move(s));
    mark();
  }

  StepVerdict validate(const zk::ZkLinkBundle& bundle, std::uint64_t tick,
                       const std::string& subject) {
    auto [next, result] =
        zk::validate_shared(run_.ledger, catalog_, bundle, tick);
    run_.ledger = next;
    StepVerdict v{subject, result.verdict, result.reason};
    step(tick, "verifier", std::string(kValidateAction) + "-" + subject, {v});
    return v;
  }

  void entity(DataEntity e) { run_.graph = graph::add_entity(run_.graph, e); }
  void link(std::string id, std::string source, std::string target,
            LinkKind kind, Json evidence) {
    run_.graph = graph::add_link(
        run_.graph, {std::move(id), std::move(source), std::move(target), kind,
                     std::move(evidence)});
  }
  graph::LinkVerdict check_link(std::string_view id) const {
    return graph::verify_link(*run_.graph.link(id), run_.graph, run_.ledger,
                              params_);
  }
  void note(std::string text) {
    run_.transcript.notes.push_back(std::move(text));
  }
  void target(std::string id) { run_.targets.push_back(std::move(id)); }
  void keep(const zk::PreservedCommitment& pc) { run_.openings.push_back(pc); }

  ScenarioRun finish() {
    run_.transcript =
        reevaluate(run_.transcript, run_.graph, run_.targets, run_.ledger);
    return std::move(run_);
  }

 private:
  ScenarioConfig config_;
  crypto::GroupParams params_;
  ledger::ValidatorCatalog catalog_;
  ScenarioRun run_;
  std::size_t height_ = 0;
};

DataEntity make_entity(std::string id, Domain domain, Granularity granularity,
                       const Digest& payload, std::uint64_t tick,
                       std::optional<Digest> anchor = std::nullopt) {
  return {std::move(id), domain, granularity, payload, tick, anchor};
}

void require_seed(const ScenarioConfig& config) {
  if (config.seed.empty()) throw ParameterError("scenario seed is empty");
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kIdentity:
      return "identity";
    case ScenarioKind::kAudit:
      return "audit";
    case ScenarioKind::kSupplyChain:
      return "supplychain";
  }
  return "?";
}

ScenarioKind parse_scenario(std::string_view name) {
  for (auto k : {ScenarioKind::kIdentity, ScenarioKind::kAudit,
                 ScenarioKind::kSupplyChain}) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown scenario: " + std::string(name));
}

Json to_json(const ScenarioConfig& c, ScenarioKind kind) {
  Json j = {{"profile", crypto::profile_name(c.profile)},
            {"seed", to_hex(ByteSpan(c.seed.data(), c.seed.size()))},
            {"tamper", c.tamper}};
  switch (kind) {
    case ScenarioKind::kIdentity:
      j["age"] = hex_int(c.age);
      j["threshold"] = hex_int(c.threshold);
      j["n_bits"] = hex_int(std::uint64_t{c.n_bits});
      break;
    case ScenarioKind::kAudit:
      j["days"] = hex_int(std::uint64_t{c.days});
      break;
    case ScenarioKind::kSupplyChain:
      j["shipments"] = hex_int(std::uint64_t{c.shipments});
      j["corrupt_ecosystem"] = c.corrupt_ecosystem;
      break;
  }
  return j;
}

Json to_json(const ScenarioTranscript& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json verdicts = Json::array();
    for (const auto& v : s.verdicts) {
      verdicts.push_back(
          {{"reason", v.reason}, {"subject", v.subject}, {"verdict", v.verdict}});
    }
    steps.push_back({{"action", s.action},
                     {"actor", s.actor},
                     {"ledger_delta", s.ledger_delta.hex()},
                     {"tick", hex_int(s.tick)},
                     {"verdicts", verdicts}});
  }
  Json reports = Json::array();
  for (const auto& r : t.reports) reports.push_back(graph::to_json(r));
  return {{"config", t.config},
          {"final_verdict", t.final_verdict},
          {"graph_digest", t.graph_digest.hex()},
          {"ledger_head", t.ledger_head.hex()},
          {"lint", graph::to_json(t.lint)},
          {"notes", t.notes},
          {"params", t.params_id.hex()},
          {"reports", reports},
          {"scenario", to_string(t.kind)},
          {"steps", steps}};
}

std::string transcript_text(const ScenarioTranscript& t) {
  return canonical_dump(to_json(t)) + "\n";
}

ScenarioTranscript reevaluate(const ScenarioTranscript& transcript,
                              const graph::ProofGraph& graph,
                              const std::vector<std::string>& targets,
                              const ledger::LedgerState& ledger) {
  const crypto::GroupParams params = crypto::group_params(
      crypto::parse_profile(transcript.config.at("profile").get<std::string>()));
  ScenarioTranscript t = transcript;
  t.reports.clear();
  bool ok = true;
  for (const auto& target : targets) {
    t.reports.push_back(graph::verify_chain(graph, target, ledger, params));
    ok = ok && t.reports.back().verified;
  }
  for (const auto& s : t.steps) {
    for (const auto& v : s.verdicts) ok = ok && v.verdict;
  }
  t.lint = graph::lint_chain(graph, ledger, params);
  t.ledger_head = ledger.empty() ? Digest{} : ledger.tip().block_hash;
  t.graph_digest = digest_of(graph::to_json(graph));
  t.final_verdict = ok;
  return t;
}

std::vector<std::string> replay_check(const ScenarioTranscript& transcript,
                                      const ledger::LedgerState& ledger) {
  std::vector<std::string> problems;
  const crypto::GroupParams params = crypto::group_params(
      crypto::parse_profile(transcript.config.at("profile").get<std::string>()));
  ledger::LedgerState fresh;
  for (const auto& block : ledger.blocks()) {
    fresh = ledger::append_block(fresh, block.entries, block.timestamp);
    if (fresh.tip().block_hash != block.block_hash) {
      problems.push_back("block " + std::to_string(block.index) +
                         " re-executes to a different hash");
    }
  }
  if (!ledger::audit_chain(fresh)) problems.push_back("audit failed");
  for (const auto& id :
       ledger::replay_verifications(fresh, zk::standard_catalog(params))) {
    problems.push_back("verification " + id.hex() + " does not replay");
  }
  std::vector<StepVerdict> recorded;
  for (const auto& s : transcript.steps) {
    if (s.action.rfind(kValidateAction, 0) == 0) {
      recorded.insert(recorded.end(), s.verdicts.begin(), s.verdicts.end());
    }
  }
  const auto results = ledger::verification_results(fresh);
  if (results.size() != recorded.size()) {
    problems.push_back("transcript and ledger disagree on verification count");
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].verdict != recorded[i].verdict ||
          results[i].reason != recorded[i].reason) {
        problems.push_back("verdict mismatch for " + recorded[i].subject);
      }
    }
  }
  return problems;
}

ScenarioRun run_identity_scenario(const ScenarioConfig& config) {
  require_seed(config);
  Session s(ScenarioKind::kIdentity, config);
  const auto& gp = s.params();
  if (config.n_bits == 0 || config.n_bits > 64 ||
      BigInt(std::to_string(config.threshold)) +
              (BigInt(1) << config.n_bits) >
          gp.q ||
      BigInt(std::to_string(config.age)) >= gp.q) {
    throw ParameterError("age, threshold or n_bits do not fit the group");
  }
  const std::string authority = "registry";
  const std::string record_id = "citizen-42";

  const BigInt sk = crypto::Drbg(s.seed("identity/authority-key"), "scenario")
                        .nonzero_scalar(gp.q);
  const BigInt pk = crypto::public_key(sk, gp);
  s.ledger() = ledger::register_authority(s.ledger(), authority, pk, 1).first;
  s.step(1, authority, "register-authority-key");
  s.entity(make_entity(authority, Domain::kPublic, Granularity::kDigest,
                       digest_of(Json{{"authority", authority},
                                      {"public_key", hex_int(pk)}}),
                       1));

  auto seal = [&](std::uint64_t age) {
    return zk::seal_record(record_id,
                           {{"name", std::string("Citizen 42")},
                            {"age", BigInt(std::to_string(age))},
                            {"region", std::string("north")}},
                           s.seed("identity/archive"), gp);
  };
  auto [next, pc] = zk::commit_preserved({seal(config.age)}, authority,
                                         "archive/" + record_id, s.ledger(), 2,
                                         gp);
  s.ledger() = next;
  s.step(2, authority, "anchor-archive");
  s.keep(pc);

  const crypto::Signature sig =
      crypto::sign_message(sk, pc.root().span(), s.seed("identity/sign"), gp);
  s.step(3, authority, "sign-archive-root");

  zk::PreservedCommitment held = pc;
  if (config.tamper) {
    held = zk::PreservedCommitment::build(authority, pc.label(),
                                          {seal(config.age + 1)}, gp)
               .with_anchor(pc.anchor());
    s.step(3, authority, "mutate-archive-after-anchoring");
    s.note("tamper: archive mutated after its root was anchored");
  }
  s.entity(make_entity("archive", Domain::kPrivate, Granularity::kTransactional,
                       held.root(), 2, held.anchor()));
  s.link("attest", authority, "archive", LinkKind::kAuthority,
         graph::authority_evidence(authority, sig));

  std::optional<zk::ZkLinkBundle> bundle;
  try {
    bundle = zk::zkcu_predicate_geq(held, record_id, "age",
                                    BigInt(std::to_string(config.threshold)),
                                    config.n_bits, s.seed("identity/predicate"),
                                    gp);
    s.step(4, authority, "prove-age-geq", {{"age-claim", true, "proved"}});
  } catch (const ProofGenerationError&) {
    s.step(4, authority, "prove-age-geq",
           {{"age-claim", false, "proving-refused"}});
  }
  const Json request = {{"anchor", pc.anchor().hex()},
                        {"field", "age"},
                        {"record_id", record_id},
                        {"threshold", hex_int(config.threshold)},
                        {"unit", "geq"}};
  s.entity(make_entity("age-claim", Domain::kPublic, Granularity::kDigest,
                       digest_of(bundle ? bundle->statement : request), 4));
  if (bundle) {
    s.validate(*bundle, 5, "age-claim");
    s.link("age-proof", "archive", "age-claim", LinkKind::kZeroKnowledge,
           graph::zk_evidence(*bundle));
  }
  s.target("age-claim");
  return s.finish();
}

ScenarioRun run_audit_scenario(const ScenarioConfig& config) {
  require_seed(config);
  if (config.days == 0) throw ParameterError("audit needs at least one day");
  Session s(ScenarioKind::kAudit, config);
  const auto& gp = s.params();
  const std::string auditee = "acme";

  crypto::Drbg amounts(s.seed("audit/amounts"), "scenario");
  std::vector<zk::PreservedCommitment> days;
  std::uint64_t total = 0;
  for (std::uint32_t d = 1; d <= config.days; ++d) {
    const std::uint64_t amount = 50 + draw_u16(amounts) % 951;
    total += amount;
    const std::string id = "day-" + std::to_string(d);
    auto record = zk::seal_record(
        id,
        {{"amount", BigInt(std::to_string(amount))},
         {"memo", "close of day " + std::to_string(d)}},
        s.seed("audit/records"), gp);
    auto [next, pc] = zk::commit_preserved({record}, auditee, "books/" + id,
                                           s.ledger(), d, gp);
    s.ledger() = next;
    s.step(d, auditee, "anchor-" + id);
    s.entity(make_entity(id, Domain::kPrivate, Granularity::kTransactional,
                         pc.root(), d, pc.anchor()));
    days.push_back(pc);
    s.keep(pc);
  }
  if (BigInt(std::to_string(total)) >= gp.q) {
    throw ParameterError("period total does not fit the group");
  }

  const std::uint64_t tick = config.days + 1;
  const std::uint64_t claimed = config.tamper ? total + 1 : total;
  if (config.tamper) s.note("tamper: claimed total misreported by one");
  std::vector<zk::RecordRef> refs;
  for (std::size_t i = 0; i < days.size(); ++i) {
    refs.push_back({&days[i], "day-" + std::to_string(i + 1)});
  }
  const zk::ZkLinkBundle bundle = zk::zkcu_aggregate_sum(
      refs, "amount", BigInt(std::to_string(claimed)), gp);
  s.step(tick, auditee, "report-period-total");
  s.entity(make_entity("period-total", Domain::kPublic, Granularity::kDigest,
                       digest_of(bundle.statement), tick));
  s.validate(bundle, tick + 1, "period-total");
  for (std::size_t i = 0; i < days.size(); ++i) {
    const std::string id = "day-" + std::to_string(i + 1);
    s.link("sum-" + id, id, "period-total", LinkKind::kZeroKnowledge,
           graph::zk_evidence(bundle));
  }
  s.target("period-total");
  return s.finish();
}

ScenarioRun run_supplychain_scenario(const ScenarioConfig& config) {
  require_seed(config);
  if (config.shipments == 0) {
    throw ParameterError("supply chain needs at least one shipment");
  }
  Session s(ScenarioKind::kSupplyChain, config);
  const auto& gp = s.params();
  const std::string maker = "manufacturer";
  static constexpr std::string_view kPorts[] = {
      "Rotterdam", "Shanghai", "Santos", "Mombasa", "Busan", "Valencia"};
  static constexpr std::string_view kCarriers[] = {"north-line", "blue-sea",
                                                   "coastal"};

  crypto::Drbg draws(s.seed("supplychain/shipments"), "scenario");
  std::vector<zk::PreservedRecord> records;
  Json routes = Json::array();
  std::uint64_t total = 0;
  for (std::uint32_t i = 1; i <= config.shipments; ++i) {
    const std::uint64_t units = 1 + draw_u16(draws) % 500;
    const std::uint64_t from = draw_u16(draws) % 6;
    const std::uint64_t to = (from + 1 + draw_u16(draws) % 5) % 6;
    const std::string route =
        std::string(kPorts[from]) + " -> " + std::string(kPorts[to]);
    total += units;
    routes.push_back(route);
    records.push_back(zk::seal_record(
        "shipment-" + std::to_string(i),
        {{"units", BigInt(std::to_string(units))},
         {"route", route},
         {"carrier", std::string(kCarriers[i % 3])}},
        s.seed("supplychain/records"), gp));
  }
  if (BigInt(std::to_string(total)) >= gp.q) {
    throw ParameterError("monthly total does not fit the group");
  }
  auto [next, pc] = zk::commit_preserved(records, maker, "shipments/month",
                                         s.ledger(), 1, gp);
  s.ledger() = next;
  s.step(1, maker, "anchor-shipments");
  s.keep(pc);
  s.entity(make_entity("shipments", Domain::kPrivate,
                       Granularity::kTransactional, pc.root(), 1, pc.anchor()));

  auto [with_routes, routes_anchor] = ledger::register_commitment(
      s.ledger(), maker, digest_of(routes), "routes/month", 2);
  s.ledger() = with_routes;
  s.step(2, maker, "publish-route-list");
  s.entity(make_entity("route-list", Domain::kPublic,
                       Granularity::kTransactional, digest_of(routes), 2,
                       routes_anchor));

  Json published_from = routes;
  if (config.tamper) {
    published_from[0] = "Unlisted Port -> " + std::string(kPorts[0]);
    s.note("tamper: route digest computed from an altered route list");
  }
  const Digest route_digest = digest_of(
      graph::apply_recipe(graph::Recipe::kConcatHash, published_from));
  s.entity(make_entity("route-digest", Domain::kPublic, Granularity::kDigest,
                       route_digest, 3));
  s.link("route-recompute", "route-list", "route-digest", LinkKind::kLogical,
         graph::logical_evidence(graph::Recipe::kConcatHash, routes));
  s.step(3, maker, "publish-route-digest");
  const graph::LinkVerdict recomputed = s.check_link("route-recompute");
  s.step(3, "public", "recompute-route-digest",
         {{"route-digest", recomputed.ok,
           recomputed.ok ? "recomputed" : recomputed.reason}});

  std::vector<std::string> ids;
  for (const auto& r : pc.records()) ids.push_back(r.record_id);
  const zk::ZkLinkBundle bundle = zk::zkcu_aggregate_sum(
      pc, ids, "units", BigInt(std::to_string(total)), gp);
  s.step(4, maker, "prove-monthly-total");
  s.entity(make_entity("monthly-total", Domain::kPublic, Granularity::kDigest,
                       digest_of(bundle.statement), 4));
  s.link("total-proof", "shipments", "monthly-total", LinkKind::kZeroKnowledge,
         graph::zk_evidence(bundle));
  s.validate(bundle, 5, "monthly-total");

  if (config.corrupt_ecosystem) s.note(std::string(kCollusionCaveat));
  s.target("monthly-total");
  s.target("route-digest");
  return s.finish();
}

ScenarioRun run_scenario(ScenarioKind kind, const ScenarioConfig& config) {
  switch (kind) {
    case ScenarioKind::kIdentity:
      return run_identity_scenario(config);
    case ScenarioKind::kAudit:
      return run_audit_scenario(config);
    case ScenarioKind::kSupplyChain:
      return run_supplychain_scenario(config);
  }
  throw ParameterError("unknown scenario");
}

}  // namespace proofchain::scenarios
