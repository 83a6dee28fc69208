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

#ifndef PROOFCHAIN_GRAPH_PROOF_GRAPH_H_
#define PROOFCHAIN_GRAPH_PROOF_GRAPH_H_

// Proof-chain graphs: data entities in the private or public domain joined
// by typed proof links. Graphs are immutable values; every builder returns a
// new graph.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/signature.h"
#include "proofchain/zk/units.h"

namespace proofchain::graph {

enum class Domain { kPrivate, kPublic };
enum class Granularity { kTransactional, kDigest };
enum class LinkKind { kLogical, kZeroKnowledge, kAuthority, kStatistical };
// Ordinal; comparisons follow the numeric values.
enum class Strength { kNone = 0, kWeak = 1, kAnchored = 2, kStrong = 3 };

std::string_view to_string(Domain d);
std::string_view to_string(Granularity g);
std::string_view to_string(LinkKind k);
std::string_view to_string(Strength s);
Domain parse_domain(std::string_view s);
Granularity parse_granularity(std::string_view s);
LinkKind parse_link_kind(std::string_view s);
Strength parse_strength(std::string_view s);

// Fixed kind -> class mapping.
Strength strength_class(LinkKind kind);

struct DataEntity {
  std::string id;
  Domain domain = Domain::kPrivate;
  Granularity granularity = Granularity::kTransactional;
  Digest payload_digest;
  std::uint64_t created_at = 0;
  std::optional<Digest> anchor;

  friend bool operator==(const DataEntity&, const DataEntity&) = default;
};

struct ProofLink {
  std::string id;
  std::string source;
  std::string target;
  LinkKind kind = LinkKind::kLogical;
  Json evidence;

  Strength strength() const { return strength_class(kind); }
  friend bool operator==(const ProofLink&, const ProofLink&) = default;
};

class ProofGraph {
 public:
  const std::map<std::string, DataEntity, std::less<>>& entities() const {
    return entities_;
  }
  const std::vector<ProofLink>& links() const { return links_; }
  const DataEntity* entity(std::string_view id) const;
  const ProofLink* link(std::string_view id) const;
  std::vector<const ProofLink*> in_links(std::string_view entity_id) const;
  std::vector<const ProofLink*> out_links(std::string_view entity_id) const;
  // True if `to` is reachable from `from` along link direction.
  bool reaches(std::string_view from, std::string_view to) const;

  friend ProofGraph add_entity(const ProofGraph& graph, DataEntity entity);
  friend ProofGraph add_link_structural(const ProofGraph& graph,
                                        ProofLink link);

 private:
  std::map<std::string, DataEntity, std::less<>> entities_;
  std::vector<ProofLink> links_;
};

// BuildError on duplicate id.
ProofGraph add_entity(const ProofGraph& graph, DataEntity entity);
// Enforces only graph shape: fresh id, existing endpoints, acyclicity.
ProofGraph add_link_structural(const ProofGraph& graph, ProofLink link);
// Shape plus domain rules: zero-knowledge links cross Private -> Public, and
// logical links leave a Private entity only when their inputs are public.
ProofGraph add_link(const ProofGraph& graph, ProofLink link);

// Reason the link breaks a domain rule, if any.
std::optional<std::string> policy_violation(const ProofGraph& graph,
                                            const ProofLink& link);

Json to_json(const DataEntity& entity);
Json to_json(const ProofLink& link);
Json to_json(const ProofGraph& graph);
DataEntity entity_from_json(const Json& j);
ProofLink link_from_json(const Json& j);
// FormatError on malformed input, BuildError on shape or policy problems.
// With enforce_policy false only the shape is checked, so files that break
// domain rules can still be loaded for linting.
ProofGraph graph_from_json(const Json& j, bool enforce_policy = true);

// Evidence payloads.
enum class Recipe { kIdentity, kConcatHash, kSumOfFields };
std::string_view to_string(Recipe r);
Recipe parse_recipe(std::string_view s);
// Deterministic transform of a source payload. FormatError if the payload
// has the wrong shape for the recipe.
Json apply_recipe(Recipe recipe, const Json& source_payload);

Json logical_evidence(Recipe recipe, const Json& source_payload,
                      bool public_inputs = false);
Json zk_evidence(const zk::ZkLinkBundle& bundle);
Json authority_evidence(std::string_view authority,
                        const crypto::Signature& signature);
Json statistical_evidence(const Json& model, const Digest& descriptor);

}  // namespace proofchain::graph

#endif  // PROOFCHAIN_GRAPH_PROOF_GRAPH_H_
