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

#ifndef PROOFCHAIN_TESTS_GRAPH_CORPUS_H_
#define PROOFCHAIN_TESTS_GRAPH_CORPUS_H_

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "graph_fixtures.h"

namespace proofchain::testing {

// Random DAG of up to `max_entities` entities mixing logical, authority and
// statistical links, roughly half of which verify. Anchors are correct,
// superseded, or absent.
inline GraphWorld random_graph(std::mt19937_64& rng, int max_entities) {
  using graph::Domain;
  using graph::Granularity;
  using graph::LinkKind;
  GraphWorld w;
  const crypto::BigInt good_sk = 1 + random_below(rng, w.gp.q - 1);
  const crypto::BigInt rogue_sk = 1 + random_below(rng, w.gp.q - 1);
  w.register_authority("notary", good_sk);
  const Json model = {{"model", "linear"}, {"version", "1"}};
  const Digest descriptor = w.register_model(model, "model/linear");

  const int n = 1 + static_cast<int>(rng() % max_entities);
  std::vector<Json> payloads;
  for (int i = 0; i < n; ++i) {
    const std::string id = "e" + std::to_string(i);
    payloads.push_back({{"total", hex_int(std::uint64_t{rng() % 2})}});
    const Domain domain = rng() % 2 ? Domain::kPublic : Domain::kPrivate;
    const Granularity gran =
        rng() % 2 ? Granularity::kDigest : Granularity::kTransactional;
    switch (rng() % 4) {
      case 0:
        w.anchored(id, domain, gran, payloads.back());
        break;
      case 1: {
        w.anchored(id, domain, gran, payloads.back());
        w.anchor_digest(digest_of(Json{{"superseded", id}}), "entity/" + id);
        break;
      }
      default:
        w.plain(id, domain, gran, payloads.back());
    }
  }
  int link_no = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng() % 100 >= 35) continue;
      const std::string src = "e" + std::to_string(i);
      const std::string dst = "e" + std::to_string(j);
      const std::string id = "l" + std::to_string(link_no++);
      switch (rng() % 3) {
        case 0: {
          Json source = payloads[i];
          if (rng() % 10 == 0) source["extra"] = "0";
          w.link(id, src, dst, LinkKind::kLogical,
                 graph::logical_evidence(graph::Recipe::kSumOfFields, source,
                                         true));
          break;
        }
        case 1:
          w.link(id, src, dst, LinkKind::kAuthority,
                 w.authority_evidence_for(
                     "notary", rng() % 10 < 7 ? good_sk : rogue_sk, dst));
          break;
        default:
          w.link(id, src, dst, LinkKind::kStatistical,
                 graph::statistical_evidence(
                     rng() % 4 ? model : Json{{"model", "other"}},
                     descriptor));
      }
    }
  }
  return w;
}

struct OracleChain {
  bool verified = false;
  graph::Strength strength = graph::Strength::kNone;
  std::size_t length = 0;
};

// Enumerates every path that ends at `target` and keeps those that start at
// an anchor and only touch entities whose own anchor holds and whose
// in-links all verify.
inline OracleChain brute_force_chain(const GraphWorld& w,
                                     const std::string& target) {
  using graph::Strength;
  std::map<std::string, bool> link_ok;
  for (const auto& l : w.graph.links()) {
    link_ok[l.id] = graph::verify_link(l, w.graph, w.ledger, w.gp).ok;
  }
  auto sound = [&](const std::string& id) {
    if (!graph::anchor_problem(*w.graph.entity(id), w.ledger).empty()) {
      return false;
    }
    for (const auto& l : w.graph.links()) {
      if (l.target == id && !link_ok[l.id]) return false;
    }
    return true;
  };
  auto base = [&](const std::string& id) {
    if (w.graph.entity(id)->anchor && sound(id)) return Strength::kStrong;
    for (const auto& l : w.graph.links()) {
      if (l.source == id && l.kind == graph::LinkKind::kAuthority &&
          link_ok[l.id]) {
        return Strength::kAnchored;
      }
    }
    return Strength::kNone;
  };
  OracleChain out;
  std::function<void(const std::string&, Strength, std::size_t)> walk =
      [&](const std::string& id, Strength weakest, std::size_t len) {
        if (!sound(id)) return;
        const Strength b = base(id);
        if (b != Strength::kNone) {
          out.verified = true;
          out.strength = std::max(out.strength, std::min(weakest, b));
          out.length = std::max(out.length, len);
        }
        for (const auto& l : w.graph.links()) {
          if (l.target == id && link_ok[l.id]) {
            walk(l.source, std::min(weakest, l.strength()), len + 1);
          }
        }
      };
  walk(target, Strength::kStrong, 0);
  return out;
}

}  // namespace proofchain::testing

#endif  // PROOFCHAIN_TESTS_GRAPH_CORPUS_H_
