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

#include "proofchain/graph/chain.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "proofchain/common/errors.h"
#include "proofchain/crypto/signature.h"
#include "proofchain/zk/units.h"

namespace proofchain::graph {

namespace {

LinkVerdict fail(std::string reason) { return {false, std::move(reason)}; }

LinkVerdict verify_logical(const ProofLink& link, const DataEntity& src,
                           const DataEntity& dst) {
  const Recipe recipe = parse_recipe(require_string(link.evidence, "recipe"));
  const Json& payload = require(link.evidence, "source_payload");
  if (digest_of(payload) != src.payload_digest) return fail("source-mismatch");
  if (digest_of(apply_recipe(recipe, payload)) != dst.payload_digest) {
    return fail("recomputation-mismatch");
  }
  return {true, ""};
}

LinkVerdict verify_zero_knowledge(const ProofLink& link, const DataEntity& src,
                                  const DataEntity& dst,
                                  const ledger::LedgerState& ledger,
                                  const ledger::ValidatorCatalog& catalog) {
  const zk::ZkLinkBundle bundle =
      zk::bundle_from_json(require(link.evidence, "bundle"));
  if (digest_of(bundle.statement) != dst.payload_digest) {
    return fail("statement-mismatch");
  }
  if (!src.anchor) return fail("source-mismatch");
  const auto anchors = zk::bundle_anchors(bundle);
  if (std::find(anchors.begin(), anchors.end(), *src.anchor) ==
      anchors.end()) {
    return fail("source-mismatch");
  }
  const auto record = ledger.commitment_record(*src.anchor);
  if (!record) return fail("unanchored");
  if (record->value != src.payload_digest.hex()) {
    return fail("source-mismatch");
  }
  ledger::ValidationOutcome outcome;
  try {
    outcome = ledger::run_validator(ledger, catalog, bundle.validator_id,
                                    bundle.statement, bundle.proof);
  } catch (const LookupError&) {
    return fail("unregistered-validator");
  }
  return {outcome.verdict, outcome.reason};
}

LinkVerdict verify_authority(const ProofLink& link, const DataEntity& dst,
                             const ledger::LedgerState& ledger,
                             const crypto::GroupParams& params) {
  const auto key =
      ledger.authority_key(require_string(link.evidence, "authority"));
  if (!key) return fail("unanchored");
  const crypto::Signature sig =
      crypto::signature_from_json(require(link.evidence, "signature"));
  if (sig.signer_key != *key) return fail("unanchored");
  auto result = crypto::verify_signature(sig, dst.payload_digest.span(), params);
  if (!result) return fail("signature-invalid: " + std::string(result.reason()));
  return {true, ""};
}

LinkVerdict verify_statistical(const ProofLink& link,
                               const ledger::LedgerState& ledger) {
  const auto record =
      ledger.commitment_record(require_digest(link.evidence, "descriptor"));
  if (!record) return fail("unanchored");
  if (record->encoding != "sha256" ||
      record->value != digest_of(require(link.evidence, "model")).hex()) {
    return fail("model-mismatch");
  }
  return {true, ""};
}

LinkVerdict verify_with(const ProofLink& link, const ProofGraph& graph,
                        const ledger::LedgerState& ledger,
                        const crypto::GroupParams& params,
                        const ledger::ValidatorCatalog& catalog) {
  const DataEntity* src = graph.entity(link.source);
  const DataEntity* dst = graph.entity(link.target);
  if (!src || !dst) return fail("dangling-endpoint");
  try {
    switch (link.kind) {
      case LinkKind::kLogical:
        return verify_logical(link, *src, *dst);
      case LinkKind::kZeroKnowledge:
        return verify_zero_knowledge(link, *src, *dst, ledger, catalog);
      case LinkKind::kAuthority:
        return verify_authority(link, *dst, ledger, params);
      case LinkKind::kStatistical:
        return verify_statistical(link, ledger);
    }
  } catch (const std::exception& e) {
    return fail(std::string("malformed: ") + e.what());
  }
  return fail("unknown-kind");
}

struct Candidate {
  Strength strength = Strength::kNone;
  std::vector<std::string> path;
  std::string anchor;

  // Stronger first, then longer, then lexicographically smaller path.
  bool better_than(const Candidate& o) const {
    if (strength != o.strength) return strength > o.strength;
    if (path.size() != o.path.size()) return path.size() > o.path.size();
    return path < o.path;
  }
};

struct EntityState {
  bool ok = false;
  bool ledger_anchor = false;
  std::vector<std::string> authorities;
  std::string anchor_problem;
  Candidate best;
  std::size_t longest = 0;
  std::set<std::string> anchors;
};

class Analysis {
 public:
  Analysis(const ProofGraph& graph, const ledger::LedgerState& ledger,
           const crypto::GroupParams& params)
      : graph_(graph),
        ledger_(ledger),
        params_(params),
        catalog_(zk::standard_catalog(params)) {}

  const LinkVerdict& verdict(const ProofLink& link) {
    auto it = verdicts_.find(link.id);
    if (it == verdicts_.end()) {
      it = verdicts_
               .emplace(link.id,
                        verify_with(link, graph_, ledger_, params_, catalog_))
               .first;
    }
    return it->second;
  }

  const EntityState& state(const std::string& id) {
    if (auto it = states_.find(id); it != states_.end()) return it->second;
    const DataEntity& e = *graph_.entity(id);
    EntityState s;
    s.anchor_problem = anchor_problem(e, ledger_);
    s.ledger_anchor = e.anchor.has_value() && s.anchor_problem.empty();
    for (const auto* l : graph_.out_links(id)) {
      if (l->kind == LinkKind::kAuthority && verdict(*l).ok) {
        s.authorities.push_back("authority:" +
                                l->evidence["authority"].get<std::string>());
      }
    }
    std::sort(s.authorities.begin(), s.authorities.end());
    s.authorities.erase(std::unique(s.authorities.begin(), s.authorities.end()),
                        s.authorities.end());

    bool local_ok = s.anchor_problem.empty();
    std::optional<Candidate> best;
    auto offer = [&](Candidate c) {
      if (!best || c.better_than(*best)) best = std::move(c);
    };
    if (s.ledger_anchor) {
      offer({Strength::kStrong, {}, e.anchor->hex()});
      s.anchors.insert(e.anchor->hex());
    }
    for (const auto& a : s.authorities) {
      offer({Strength::kAnchored, {}, a});
      s.anchors.insert(a);
    }
    for (const auto* l : graph_.in_links(id)) {
      if (!verdict(*l).ok) {
        local_ok = false;
        continue;
      }
      const EntityState& up = state(l->source);
      if (!up.ok) continue;
      Candidate c = up.best;
      c.strength = std::min(c.strength, l->strength());
      c.path.push_back(l->id);
      offer(std::move(c));
      s.longest = std::max(s.longest, up.longest + 1);
      s.anchors.insert(up.anchors.begin(), up.anchors.end());
    }
    s.ok = local_ok && best.has_value();
    if (s.ok) {
      s.best = std::move(*best);
    } else {
      s.longest = 0;
      s.anchors.clear();
    }
    return states_.emplace(id, std::move(s)).first->second;
  }

 private:
  const ProofGraph& graph_;
  const ledger::LedgerState& ledger_;
  const crypto::GroupParams& params_;
  ledger::ValidatorCatalog catalog_;
  std::map<std::string, LinkVerdict> verdicts_;
  std::map<std::string, EntityState> states_;
};

}  // namespace

LinkVerdict verify_link(const ProofLink& link, const ProofGraph& graph,
                        const ledger::LedgerState& ledger,
                        const crypto::GroupParams& params) {
  return verify_with(link, graph, ledger, params, zk::standard_catalog(params));
}

std::string anchor_problem(const DataEntity& entity,
                           const ledger::LedgerState& ledger) {
  if (!entity.anchor) return "";
  const auto record = ledger.commitment_record(*entity.anchor);
  if (!record) return "unanchored";
  const auto latest = ledger.latest_commitment(record->author, record->label);
  if (latest->encoding != "sha256" ||
      latest->value != entity.payload_digest.hex()) {
    return "anchor-mismatch";
  }
  return "";
}

ChainReport verify_chain(const ProofGraph& graph, std::string_view target,
                         const ledger::LedgerState& ledger,
                         const crypto::GroupParams& params) {
  if (!graph.entity(target)) {
    throw LookupError("unknown entity: " + std::string(target));
  }
  // Backward breadth-first walk over the target's ancestry.
  std::vector<std::string> order{std::string(target)};
  std::set<std::string> seen{std::string(target)};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto* l : graph.in_links(order[i])) {
      if (seen.insert(l->source).second) order.push_back(l->source);
    }
  }

  Analysis analysis(graph, ledger, params);
  ChainReport report;
  report.target = std::string(target);
  for (const auto& id : order) {
    for (const auto* l : graph.in_links(id)) {
      const LinkVerdict& v = analysis.verdict(*l);
      if (!v.ok) report.failures.push_back({l->id, v.reason});
    }
    const std::string problem = anchor_problem(*graph.entity(id), ledger);
    if (!problem.empty()) report.failures.push_back({id, problem});
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) {
              return std::tie(a.subject, a.reason) <
                     std::tie(b.subject, b.reason);
            });

  const EntityState& s = analysis.state(report.target);
  report.verified = s.ok;
  if (s.ok) {
    report.chain_strength = s.best.strength;
    report.chain_length = s.longest;
    report.best_path = s.best.path;
    report.anchors_reached.assign(s.anchors.begin(), s.anchors.end());
  }
  return report;
}

std::vector<LintWarning> lint_chain(const ProofGraph& graph,
                                    const ledger::LedgerState& ledger,
                                    const crypto::GroupParams& params) {
  Analysis analysis(graph, ledger, params);
  std::vector<LintWarning> out;
  for (const auto& [id, e] : graph.entities()) {
    const EntityState& s = analysis.state(id);
    if (e.domain == Domain::kPublic && !s.ok) {
      out.push_back({"W1", id, "public entity has no verified proof-chain "
                               "to a ledger anchor or registered authority"});
    }
    if (e.domain == Domain::kPublic && s.ok &&
        s.best.strength == Strength::kWeak) {
      out.push_back({"W4", id, "every anchor path contains a statistical "
                               "link"});
    }
    if (e.granularity == Granularity::kTransactional &&
        graph.in_links(id).empty() && !graph.out_links(id).empty() &&
        !s.ledger_anchor && s.authorities.empty()) {
      out.push_back({"W2", id, "unanchored transactional source is free to "
                               "fake"});
    }
  }
  for (const auto& l : graph.links()) {
    if (l.kind == LinkKind::kZeroKnowledge &&
        graph.entity(l.source)->domain == Domain::kPublic) {
      out.push_back({"W3", l.id, "zero-knowledge link from a public source; "
                                 "a logical link suffices"});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LintWarning& a, const LintWarning& b) {
              return std::tie(a.code, a.subject) < std::tie(b.code, b.subject);
            });
  return out;
}

Json to_json(const ChainReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"reason", f.reason}, {"subject", f.subject}});
  }
  return {{"anchors_reached", r.anchors_reached},
          {"best_path", r.best_path},
          {"chain_length", hex_int(static_cast<std::uint64_t>(r.chain_length))},
          {"chain_strength", to_string(r.chain_strength)},
          {"failures", failures},
          {"target", r.target},
          {"verified", r.verified}};
}

ChainReport chain_report_from_json(const Json& j) {
  ChainReport r;
  try {
    r.target = require_string(j, "target");
    r.verified = require(j, "verified").get<bool>();
    r.anchors_reached =
        require(j, "anchors_reached").get<std::vector<std::string>>();
    r.best_path = require(j, "best_path").get<std::vector<std::string>>();
    r.chain_strength = parse_strength(require_string(j, "chain_strength"));
    r.chain_length = require_u64(j, "chain_length");
    for (const auto& f : require(j, "failures")) {
      r.failures.push_back(
          {require_string(f, "subject"), require_string(f, "reason")});
    }
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed chain report: ") + e.what());
  }
  return r;
}

Json to_json(const LintWarning& w) {
  return {{"code", w.code}, {"message", w.message}, {"subject", w.subject}};
}

Json to_json(const std::vector<LintWarning>& warnings) {
  Json out = Json::array();
  for (const auto& w : warnings) out.push_back(to_json(w));
  return out;
}

}  // namespace proofchain::graph
