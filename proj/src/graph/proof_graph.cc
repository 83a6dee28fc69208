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

#include "proofchain/graph/proof_graph.h"

#include <algorithm>
#include <set>
#include <utility>

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain::graph {

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view s, const std::pair<E, std::string_view> (&table)[N],
             std::string_view what) {
  for (const auto& [value, name] : table) {
    if (name == s) return value;
  }
  throw FormatError("unknown " + std::string(what) + ": " + std::string(s));
}

template <typename E, std::size_t N>
std::string_view name_of(E v, const std::pair<E, std::string_view> (&table)[N]) {
  for (const auto& [value, name] : table) {
    if (value == v) return name;
  }
  return "?";
}

constexpr std::pair<Domain, std::string_view> kDomains[] = {
    {Domain::kPrivate, "private"}, {Domain::kPublic, "public"}};
constexpr std::pair<Granularity, std::string_view> kGranularities[] = {
    {Granularity::kTransactional, "transactional"},
    {Granularity::kDigest, "digest"}};
constexpr std::pair<LinkKind, std::string_view> kKinds[] = {
    {LinkKind::kLogical, "logical"},
    {LinkKind::kZeroKnowledge, "zero-knowledge"},
    {LinkKind::kAuthority, "authority"},
    {LinkKind::kStatistical, "statistical"}};
constexpr std::pair<Strength, std::string_view> kStrengths[] = {
    {Strength::kNone, "none"},
    {Strength::kWeak, "weak"},
    {Strength::kAnchored, "anchored"},
    {Strength::kStrong, "strong"}};
constexpr std::pair<Recipe, std::string_view> kRecipes[] = {
    {Recipe::kIdentity, "identity"},
    {Recipe::kConcatHash, "concat-hash"},
    {Recipe::kSumOfFields, "sum-of-fields"}};

crypto::BigInt json_integer(const Json& v) {
  if (v.is_string()) return parse_hex_int(v.get<std::string>());
  if (v.is_number_unsigned() ||
      (v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    return crypto::BigInt(std::to_string(v.get<std::uint64_t>()));
  }
  throw FormatError("expected a non-negative integer");
}

}  // namespace

std::string_view to_string(Domain d) { return name_of(d, kDomains); }
std::string_view to_string(Granularity g) { return name_of(g, kGranularities); }
std::string_view to_string(LinkKind k) { return name_of(k, kKinds); }
std::string_view to_string(Strength s) { return name_of(s, kStrengths); }
std::string_view to_string(Recipe r) { return name_of(r, kRecipes); }
Domain parse_domain(std::string_view s) {
  return parse_enum(s, kDomains, "domain");
}
Granularity parse_granularity(std::string_view s) {
  return parse_enum(s, kGranularities, "granularity");
}
LinkKind parse_link_kind(std::string_view s) {
  return parse_enum(s, kKinds, "link kind");
}
Strength parse_strength(std::string_view s) {
  return parse_enum(s, kStrengths, "strength");
}
Recipe parse_recipe(std::string_view s) {
  return parse_enum(s, kRecipes, "recipe");
}

Strength strength_class(LinkKind kind) {
  switch (kind) {
    case LinkKind::kLogical:
    case LinkKind::kZeroKnowledge:
      return Strength::kStrong;
    case LinkKind::kAuthority:
      return Strength::kAnchored;
    case LinkKind::kStatistical:
      return Strength::kWeak;
  }
  return Strength::kNone;
}

const DataEntity* ProofGraph::entity(std::string_view id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const ProofLink* ProofGraph::link(std::string_view id) const {
  for (const auto& l : links_) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

std::vector<const ProofLink*> ProofGraph::in_links(
    std::string_view entity_id) const {
  std::vector<const ProofLink*> out;
  for (const auto& l : links_) {
    if (l.target == entity_id) out.push_back(&l);
  }
  return out;
}

std::vector<const ProofLink*> ProofGraph::out_links(
    std::string_view entity_id) const {
  std::vector<const ProofLink*> out;
  for (const auto& l : links_) {
    if (l.source == entity_id) out.push_back(&l);
  }
  return out;
}

bool ProofGraph::reaches(std::string_view from, std::string_view to) const {
  std::vector<std::string> stack{std::string(from)};
  std::set<std::string, std::less<>> seen{std::string(from)};
  while (!stack.empty()) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    if (cur == to) return true;
    for (const auto* l : out_links(cur)) {
      if (seen.insert(l->target).second) stack.push_back(l->target);
    }
  }
  return false;
}

ProofGraph add_entity(const ProofGraph& graph, DataEntity entity) {
  if (entity.id.empty()) throw BuildError("entity id is empty");
  if (graph.entities_.count(entity.id)) {
    throw BuildError("duplicate entity id: " + entity.id);
  }
  ProofGraph next = graph;
  std::string id = entity.id;
  next.entities_.emplace(std::move(id), std::move(entity));
  return next;
}

ProofGraph add_link_structural(const ProofGraph& graph, ProofLink link) {
  if (link.id.empty()) throw BuildError("link id is empty");
  if (graph.link(link.id)) throw BuildError("duplicate link id: " + link.id);
  for (const auto& end : {link.source, link.target}) {
    if (!graph.entity(end)) throw BuildError("dangling endpoint: " + end);
  }
  if (link.source == link.target || graph.reaches(link.target, link.source)) {
    throw BuildError("link " + link.id + " introduces a cycle");
  }
  ProofGraph next = graph;
  next.links_.push_back(std::move(link));
  return next;
}

std::optional<std::string> policy_violation(const ProofGraph& graph,
                                            const ProofLink& link) {
  const DataEntity* src = graph.entity(link.source);
  const DataEntity* dst = graph.entity(link.target);
  if (!src || !dst) return std::nullopt;
  if (link.kind == LinkKind::kZeroKnowledge &&
      (src->domain != Domain::kPrivate || dst->domain != Domain::kPublic)) {
    return "zero-knowledge link " + link.id +
           " must cross from the private to the public domain";
  }
  if (link.kind == LinkKind::kLogical && src->domain == Domain::kPrivate) {
    const bool public_inputs = link.evidence.is_object() &&
                               link.evidence.contains("public_inputs") &&
                               link.evidence["public_inputs"] == true;
    if (!public_inputs) {
      return "logical link " + link.id +
             " starts at a private entity without public inputs";
    }
  }
  return std::nullopt;
}

ProofGraph add_link(const ProofGraph& graph, ProofLink link) {
  if (auto why = policy_violation(graph, link)) {
    if (graph.entity(link.source) && graph.entity(link.target)) {
      throw BuildError(*why);
    }
  }
  return add_link_structural(graph, std::move(link));
}

Json to_json(const DataEntity& e) {
  Json j = {{"created_at", hex_int(e.created_at)},
            {"domain", to_string(e.domain)},
            {"granularity", to_string(e.granularity)},
            {"id", e.id},
            {"payload_digest", e.payload_digest.hex()}};
  if (e.anchor) j["anchor"] = e.anchor->hex();
  return j;
}

Json to_json(const ProofLink& l) {
  return {{"evidence", l.evidence},
          {"id", l.id},
          {"kind", to_string(l.kind)},
          {"source", l.source},
          {"strength_class", to_string(l.strength())},
          {"target", l.target}};
}

Json to_json(const ProofGraph& graph) {
  Json entities = Json::array();
  for (const auto& [id, e] : graph.entities()) entities.push_back(to_json(e));
  Json links = Json::array();
  for (const auto& l : graph.links()) links.push_back(to_json(l));
  return {{"entities", entities}, {"links", links}};
}

DataEntity entity_from_json(const Json& j) {
  DataEntity e;
  e.id = require_string(j, "id");
  e.domain = parse_domain(require_string(j, "domain"));
  e.granularity = parse_granularity(require_string(j, "granularity"));
  e.payload_digest = require_digest(j, "payload_digest");
  e.created_at = require_u64(j, "created_at");
  if (j.contains("anchor")) e.anchor = require_digest(j, "anchor");
  return e;
}

ProofLink link_from_json(const Json& j) {
  ProofLink l;
  l.id = require_string(j, "id");
  l.source = require_string(j, "source");
  l.target = require_string(j, "target");
  l.kind = parse_link_kind(require_string(j, "kind"));
  l.evidence = j.contains("evidence") ? j["evidence"] : Json::object();
  if (j.contains("strength_class") &&
      parse_strength(require_string(j, "strength_class")) != l.strength()) {
    throw FormatError("strength_class does not match kind for link " + l.id);
  }
  return l;
}

ProofGraph graph_from_json(const Json& j, bool enforce_policy) {
  if (!j.is_object()) throw FormatError("graph must be an object");
  const Json& entities = require(j, "entities");
  const Json& links = require(j, "links");
  if (!entities.is_array() || !links.is_array()) {
    throw FormatError("entities and links must be arrays");
  }
  ProofGraph g;
  for (const auto& e : entities) g = add_entity(g, entity_from_json(e));
  for (const auto& l : links) {
    g = enforce_policy ? add_link(g, link_from_json(l))
                       : add_link_structural(g, link_from_json(l));
  }
  return g;
}

Json apply_recipe(Recipe recipe, const Json& payload) {
  switch (recipe) {
    case Recipe::kIdentity:
      return payload;
    case Recipe::kConcatHash: {
      if (!payload.is_array()) throw FormatError("concat-hash needs an array");
      Sha256 h;
      for (const auto& item : payload) {
        if (!item.is_string()) {
          throw FormatError("concat-hash items must be strings");
        }
        h.update(item.get<std::string>());
      }
      return h.finish().hex();
    }
    case Recipe::kSumOfFields: {
      if (!payload.is_object()) {
        throw FormatError("sum-of-fields needs an object");
      }
      crypto::BigInt total = 0;
      for (const auto& [name, value] : payload.items()) {
        total += json_integer(value);
      }
      return Json{{"total", hex_int(total)}};
    }
  }
  throw FormatError("unknown recipe");
}

Json logical_evidence(Recipe recipe, const Json& source_payload,
                      bool public_inputs) {
  Json j = {{"recipe", to_string(recipe)}, {"source_payload", source_payload}};
  if (public_inputs) j["public_inputs"] = true;
  return j;
}

Json zk_evidence(const zk::ZkLinkBundle& bundle) {
  return {{"bundle", zk::to_json(bundle)}};
}

Json authority_evidence(std::string_view authority,
                        const crypto::Signature& signature) {
  return {{"authority", authority}, {"signature", crypto::to_json(signature)}};
}

Json statistical_evidence(const Json& model, const Digest& descriptor) {
  return {{"descriptor", descriptor.hex()}, {"model", model}};
}

}  // namespace proofchain::graph
