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

#include "proofchain/cli/cli.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "proofchain/common/canonical_json.h"
#include "proofchain/common/errors.h"
#include "proofchain/crypto/group.h"
#include "proofchain/graph/chain.h"
#include "proofchain/graph/proof_graph.h"
#include "proofchain/ledger/ledger.h"
#include "proofchain/ledger/validator.h"
#include "proofchain/scenarios/scenarios.h"
#include "proofchain/zk/preserved.h"
#include "proofchain/zk/units.h"

namespace proofchain::cli {

namespace {

using crypto::BigInt;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) throw IoError("cannot write " + path);
}

Json read_json(const std::string& path) { return parse_json(read_file(path)); }

ledger::LedgerState read_ledger(const std::string& path) {
  return ledger::import_jsonl(read_file(path));
}

void write_ledger(const std::string& path, const ledger::LedgerState& state) {
  write_file(path, ledger::export_jsonl(state));
}

// Decimal, or hexadecimal with a 0x prefix.
BigInt parse_number(const std::string& text, std::string_view what) {
  BigInt v;
  const bool hex = text.size() > 2 && text[0] == '0' &&
                   (text[1] == 'x' || text[1] == 'X');
  const std::string digits = hex ? text.substr(2) : text;
  const bool ok =
      !digits.empty() &&
      std::all_of(digits.begin(), digits.end(), [hex](char c) {
        return hex ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                   : std::isdigit(static_cast<unsigned char>(c)) != 0;
      }) &&
      v.set_str(digits, hex ? 16 : 10) == 0;
  if (!ok) {
    throw ParameterError(std::string(what) + " is not a non-negative integer: " +
                         text);
  }
  return v;
}

// Records file: {"records": [{"id": ..., "fields": [{"name": ..., "value":
// <unsigned integer | string>}, ...]}, ...]}.
std::vector<zk::PreservedRecord> read_records(const std::string& path,
                                              ByteSpan seed,
                                              const crypto::GroupParams& gp) {
  const Json j = read_json(path);
  const Json& list = require(j, "records");
  if (!list.is_array()) throw FormatError("records must be an array");
  std::vector<zk::PreservedRecord> out;
  for (const auto& r : list) {
    std::vector<zk::RawField> fields;
    const Json& fs = require(r, "fields");
    if (!fs.is_array()) throw FormatError("fields must be an array");
    for (const auto& f : fs) {
      const Json& value = require(f, "value");
      zk::RawField raw{require_string(f, "name"), std::string()};
      if (value.is_string()) {
        raw.value = value.get<std::string>();
      } else if (value.is_number_unsigned() ||
                 (value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        raw.value = BigInt(std::to_string(value.get<std::uint64_t>()));
      } else {
        throw FormatError("field values must be strings or unsigned integers");
      }
      fields.push_back(std::move(raw));
    }
    out.push_back(
        zk::seal_record(require_string(r, "id"), std::move(fields), seed, gp));
  }
  return out;
}

struct Invocation {
  bool json = false;
  std::string profile;
  std::string seed_hex;
  crypto::GroupParams params;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  Json seed_used;  // Set once a seed has been resolved.

  Bytes seed() {
    Bytes bytes;
    if (!seed_hex.empty()) {
      bytes = from_hex(seed_hex);
    } else {
      std::random_device rd;
      bytes.resize(32);
      for (auto& b : bytes) b = static_cast<std::uint8_t>(rd());
      *err << "seed: " << to_hex(ByteSpan(bytes.data(), bytes.size())) << "\n";
    }
    seed_used = to_hex(ByteSpan(bytes.data(), bytes.size()));
    return bytes;
  }

  int emit(Json result, const std::string& human, int code) {
    if (!seed_used.is_null()) result["seed"] = seed_used;
    if (json) {
      *out << canonical_dump(result) << "\n";
    } else {
      *out << human;
    }
    return code;
  }
};

std::string verdict_line(bool verdict, const std::string& reason) {
  return std::string("verdict: ") + (verdict ? "true" : "false") +
         (reason.empty() ? "" : " (" + reason + ")") + "\n";
}

std::string report_text(const graph::ChainReport& r) {
  std::ostringstream s;
  s << "target: " << r.target << "\n"
    << "verified: " << (r.verified ? "true" : "false") << "\n"
    << "chain strength: " << graph::to_string(r.chain_strength) << "\n"
    << "chain length: " << r.chain_length << "\n";
  for (const auto& a : r.anchors_reached) s << "anchor: " << a << "\n";
  for (const auto& f : r.failures) {
    s << "failure: " << f.subject << ": " << f.reason << "\n";
  }
  return s.str();
}

std::string lint_text(const std::vector<graph::LintWarning>& warnings) {
  std::ostringstream s;
  for (const auto& w : warnings) {
    s << w.code << " " << w.subject << ": " << w.message << "\n";
  }
  if (warnings.empty()) s << "no warnings\n";
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const std::optional<std::string>& profile_env) {
  Invocation inv;
  inv.out = &out;
  inv.err = &err;
  inv.profile = profile_env.value_or("test");

  CLI::App app{"Proof-chain toolkit: ledger, commitments, zero-knowledge "
               "links and proof-chain analysis",
               "proofchain"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", inv.json, "Emit canonical JSON on stdout");
  app.add_option("--profile", inv.profile,
                 "Group profile: toy or test (default from PROOFCHAIN_PROFILE, "
                 "else test)");
  app.add_option("--seed", inv.seed_hex,
                 "Hex seed for all randomness; drawn from the system and "
                 "printed when absent");

  std::map<const CLI::App*, std::function<int()>> handlers;
  auto on = [&](CLI::App* sub, std::function<int()> fn) {
    handlers[sub] = std::move(fn);
  };

  // ledger ------------------------------------------------------------------
  auto* ledger_cmd = app.add_subcommand("ledger", "Manage the ledger file");
  ledger_cmd->require_subcommand(1);

  std::string ledger_path, in_path, out_path, author, label, value, kind;
  std::uint64_t timestamp = 0;
  bool bare = false, force = false, record = false;

  auto* init = ledger_cmd->add_subcommand(
      "init", "Create a ledger with the standard validators registered");
  init->add_option("--ledger", ledger_path, "Ledger file")->required();
  init->add_flag("--bare", bare, "Create an empty ledger");
  init->add_flag("--force", force, "Overwrite an existing file");
  on(init, [&] {
    if (!force && std::filesystem::exists(ledger_path)) {
      throw IoError(ledger_path + " exists; pass --force to overwrite");
    }
    ledger::LedgerState state;
    if (!bare) {
      state = ledger::register_catalog(state, zk::standard_catalog(inv.params),
                                       "operator", 0);
    }
    write_ledger(ledger_path, state);
    return inv.emit({{"height", hex_int(std::uint64_t{state.height()})},
                     {"ledger", ledger_path}},
                    "initialized " + ledger_path + " (" +
                        std::to_string(state.height()) + " blocks)\n",
                    kExitOk);
  });

  auto* append = ledger_cmd->add_subcommand(
      "append", "Append a commitment record or authority key");
  append->add_option("--ledger", ledger_path, "Ledger file")->required();
  append->add_option("--kind", kind, "commitment or authority")
      ->required()
      ->check(CLI::IsMember({"commitment", "authority"}));
  append->add_option("--author", author, "Author or authority name")
      ->required();
  append->add_option("--label", label, "Commitment label");
  append->add_option("--value", value,
                     "Commitment digest (64 hex chars) or public key (hex)")
      ->required();
  append->add_option("--timestamp", timestamp, "Block timestamp")->required();
  on(append, [&] {
    ledger::LedgerState state = read_ledger(ledger_path);
    std::pair<ledger::LedgerState, Digest> result;
    if (kind == "commitment") {
      result = ledger::register_commitment(state, author, Digest::from_hex(value),
                                           label, timestamp);
    } else {
      result = ledger::register_authority(state, author, parse_hex_int(value),
                                          timestamp);
    }
    write_ledger(ledger_path, result.first);
    return inv.emit({{"entry_id", result.second.hex()},
                     {"height", hex_int(std::uint64_t{result.first.height()})}},
                    "appended entry " + result.second.hex() + "\n", kExitOk);
  });

  auto* export_cmd =
      ledger_cmd->add_subcommand("export", "Write the ledger as JSON lines");
  export_cmd->add_option("--ledger", ledger_path, "Ledger file")->required();
  export_cmd->add_option("--out", out_path, "Output file (default stdout)");
  on(export_cmd, [&] {
    const ledger::LedgerState state = read_ledger(ledger_path);
    const std::string text = ledger::export_jsonl(state);
    if (!out_path.empty()) {
      write_file(out_path, text);
      return inv.emit({{"height", hex_int(std::uint64_t{state.height()})},
                       {"out", out_path}},
                      "exported " + std::to_string(state.height()) +
                          " blocks to " + out_path + "\n",
                      kExitOk);
    }
    Json blocks = Json::array();
    for (const auto& b : state.blocks()) {
      blocks.push_back(ledger::block_to_json(b));
    }
    return inv.emit({{"blocks", blocks}}, text, kExitOk);
  });

  auto* import_cmd = ledger_cmd->add_subcommand(
      "import", "Audit a JSON-lines ledger and store it");
  import_cmd->add_option("-f,--file", in_path, "JSON-lines input")->required();
  import_cmd->add_option("--ledger", ledger_path, "Ledger file to write")
      ->required();
  on(import_cmd, [&] {
    const ledger::LedgerState state = ledger::import_jsonl(read_file(in_path));
    if (!ledger::audit_chain(state)) {
      return inv.emit({{"imported", false}, {"reason", "audit-failed"}},
                      "import refused: audit failed\n", kExitVerdictFalse);
    }
    write_ledger(ledger_path, state);
    return inv.emit({{"height", hex_int(std::uint64_t{state.height()})},
                     {"imported", true}},
                    "imported " + std::to_string(state.height()) + " blocks\n",
                    kExitOk);
  });

  auto* audit = ledger_cmd->add_subcommand(
      "audit", "Check chain integrity and replay recorded verifications");
  audit->add_option("--ledger", ledger_path, "Ledger file")->required();
  on(audit, [&] {
    const ledger::LedgerState state = read_ledger(ledger_path);
    const bool intact = ledger::audit_chain(state);
    std::vector<std::string> mismatched;
    if (intact) {
      for (const auto& id : ledger::replay_verifications(
               state, zk::standard_catalog(inv.params))) {
        mismatched.push_back(id.hex());
      }
    }
    const bool ok = intact && mismatched.empty();
    std::string text = std::string("integrity: ") + (intact ? "ok" : "broken") +
                       "\n";
    for (const auto& m : mismatched) text += "replay mismatch: " + m + "\n";
    return inv.emit({{"height", hex_int(std::uint64_t{state.height()})},
                     {"integrity", intact},
                     {"replay_mismatches", mismatched},
                     {"verdict", ok}},
                    text, ok ? kExitOk : kExitVerdictFalse);
  });

  // commit ------------------------------------------------------------------
  auto* commit = app.add_subcommand(
      "commit", "Seal records and anchor their root on the ledger");
  commit->add_option("-f,--file", in_path, "Records JSON")->required();
  commit->add_option("--owner", author, "Data owner")->required();
  commit->add_option("--label", label, "Commitment label")->required();
  commit->add_option("--ledger", ledger_path, "Ledger file")->required();
  commit->add_option("--timestamp", timestamp, "Block timestamp")->required();
  commit->add_option("--out", out_path, "Openings file to write")->required();
  on(commit, [&] {
    const ledger::LedgerState state = read_ledger(ledger_path);
    const Bytes seed = inv.seed();
    auto records = read_records(in_path, seed, inv.params);
    auto [next, pc] = zk::commit_preserved(std::move(records), author, label,
                                           state, timestamp, inv.params);
    write_file(out_path, canonical_dump(zk::to_json(pc)) + "\n");
    write_ledger(ledger_path, next);
    return inv.emit({{"anchor", pc.anchor().hex()}, {"root", pc.root().hex()}},
                    "anchored root " + pc.root().hex() + "\nentry " +
                        pc.anchor().hex() + "\n",
                    kExitOk);
  });

  // prove -------------------------------------------------------------------
  auto* prove = app.add_subcommand("prove", "Produce a zero-knowledge bundle");
  prove->require_subcommand(1);
  std::vector<std::string> openings_paths, record_ids;
  std::string record_id, field, threshold_text, total_text;
  unsigned n_bits = 8;

  auto load_openings = [&](const std::string& path) {
    return zk::preserved_commitment_from_json(read_json(path), inv.params);
  };
  auto write_bundle = [&](const zk::ZkLinkBundle& bundle) {
    write_file(out_path, canonical_dump(zk::to_json(bundle)) + "\n");
    return inv.emit({{"out", out_path},
                     {"statement_digest", digest_of(bundle.statement).hex()},
                     {"validator_id", bundle.validator_id}},
                    "wrote " + out_path + "\n", kExitOk);
  };

  auto* reveal = prove->add_subcommand("reveal", "Disclose one field");
  reveal->add_option("-f,--file", in_path, "Openings file")->required();
  reveal->add_option("--record", record_id, "Record id")->required();
  reveal->add_option("--field", field, "Field name")->required();
  reveal->add_option("--out", out_path, "Bundle file (.zkb)")->required();
  on(reveal, [&] {
    return write_bundle(
        zk::zkcu_reveal_field(load_openings(in_path), record_id, field,
                              inv.params));
  });

  auto* geq = prove->add_subcommand("geq", "Prove field >= threshold");
  geq->add_option("-f,--file", in_path, "Openings file")->required();
  geq->add_option("--record", record_id, "Record id")->required();
  geq->add_option("--field", field, "Field name")->required();
  geq->add_option("--threshold", threshold_text, "Threshold")->required();
  geq->add_option("--bits", n_bits, "Range width in bits (default 8)");
  geq->add_option("--out", out_path, "Bundle file (.zkb)")->required();
  on(geq, [&] {
    const BigInt threshold = parse_number(threshold_text, "--threshold");
    const auto pc = load_openings(in_path);
    const Bytes seed = inv.seed();
    zk::ZkLinkBundle bundle;
    try {
      bundle = zk::zkcu_predicate_geq(pc, record_id, field, threshold, n_bits,
                                      seed, inv.params);
    } catch (const ProofGenerationError& e) {
      return inv.emit({{"proved", false}, {"reason", e.what()}},
                      std::string("proving refused: ") + e.what() + "\n",
                      kExitVerdictFalse);
    }
    return write_bundle(bundle);
  });

  auto* sum = prove->add_subcommand("sum", "Prove the sum of a field");
  sum->add_option("-f,--file", openings_paths, "Openings file(s)")->required();
  sum->add_option("--records", record_ids,
                  "Record ids (default: every record)")
      ->delimiter(',');
  sum->add_option("--field", field, "Field name")->required();
  sum->add_option("--total", total_text, "Claimed total")->required();
  sum->add_option("--out", out_path, "Bundle file (.zkb)")->required();
  on(sum, [&] {
    const BigInt total = parse_number(total_text, "--total");
    std::vector<zk::PreservedCommitment> sources;
    for (const auto& p : openings_paths) sources.push_back(load_openings(p));
    std::vector<zk::RecordRef> refs;
    auto find_source = [&](const std::string& id) {
      const zk::PreservedCommitment* hit = nullptr;
      for (const auto& pc : sources) {
        for (const auto& r : pc.records()) {
          if (r.record_id != id) continue;
          if (hit) throw ParameterError("record " + id + " is ambiguous");
          hit = &pc;
        }
      }
      if (!hit) throw LookupError("unknown record: " + id);
      return hit;
    };
    if (record_ids.empty()) {
      for (const auto& pc : sources) {
        for (const auto& r : pc.records()) {
          refs.push_back({find_source(r.record_id), r.record_id});
        }
      }
    } else {
      for (const auto& id : record_ids) refs.push_back({find_source(id), id});
    }
    return write_bundle(zk::zkcu_aggregate_sum(refs, field, total, inv.params));
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Validate a bundle against the ledger (read-only by default)");
  verify->add_option("-f,--file", in_path, "Bundle file (.zkb)")->required();
  verify->add_option("--ledger", ledger_path, "Ledger file")->required();
  verify->add_flag("--record", record,
                   "Record the verdict on the ledger (needs --timestamp)");
  auto* verify_ts =
      verify->add_option("--timestamp", timestamp, "Timestamp for --record");
  on(verify, [&] {
    const zk::ZkLinkBundle bundle = zk::bundle_from_json(read_json(in_path));
    const ledger::LedgerState state = read_ledger(ledger_path);
    const auto catalog = zk::standard_catalog(inv.params);
    ledger::ValidationOutcome outcome;
    Json result;
    if (record) {
      if (verify_ts->count() == 0) {
        throw ParameterError("--record needs --timestamp");
      }
      auto [next, vr] = zk::validate_shared(state, catalog, bundle, timestamp);
      write_ledger(ledger_path, next);
      outcome = {vr.verdict, vr.reason};
      result["entry_id"] = vr.entry_id.hex();
    } else {
      outcome = ledger::run_validator(state, catalog, bundle.validator_id,
                                      bundle.statement, bundle.proof);
    }
    result["reason"] = outcome.reason;
    result["statement_digest"] = digest_of(bundle.statement).hex();
    result["validator_id"] = bundle.validator_id;
    result["verdict"] = outcome.verdict;
    return inv.emit(result, verdict_line(outcome.verdict, outcome.reason),
                    outcome.verdict ? kExitOk : kExitVerdictFalse);
  });

  // chain -------------------------------------------------------------------
  auto* chain = app.add_subcommand("chain", "Proof-chain graphs");
  chain->require_subcommand(1);
  std::string target;

  auto* build = chain->add_subcommand(
      "build", "Check a graph file and write its canonical form");
  build->add_option("-f,--file", in_path, "Graph JSON")->required();
  build->add_option("--out", out_path, "Canonical graph output");
  on(build, [&] {
    const graph::ProofGraph g = graph::graph_from_json(read_json(in_path));
    const Json canonical = graph::to_json(g);
    if (!out_path.empty()) write_file(out_path, canonical_dump(canonical) + "\n");
    return inv.emit({{"entities", hex_int(std::uint64_t{g.entities().size()})},
                     {"graph_digest", digest_of(canonical).hex()},
                     {"links", hex_int(std::uint64_t{g.links().size()})}},
                    "graph ok: " + std::to_string(g.entities().size()) +
                        " entities, " + std::to_string(g.links().size()) +
                        " links\n",
                    kExitOk);
  });

  auto* chain_verify =
      chain->add_subcommand("verify", "Verify the proof-chain of a target");
  chain_verify->add_option("-f,--file", in_path, "Graph JSON")->required();
  chain_verify->add_option("--target", target, "Target entity id")
      ->required();
  chain_verify->add_option("--ledger", ledger_path, "Ledger file")
      ->required();
  on(chain_verify, [&] {
    const graph::ProofGraph g = graph::graph_from_json(read_json(in_path));
    const graph::ChainReport r = graph::verify_chain(
        g, target, read_ledger(ledger_path), inv.params);
    return inv.emit(graph::to_json(r), report_text(r),
                    r.verified ? kExitOk : kExitVerdictFalse);
  });

  auto* lint = chain->add_subcommand("lint", "Check proof-chain guidelines");
  lint->add_option("-f,--file", in_path, "Graph JSON")->required();
  lint->add_option("--ledger", ledger_path,
                   "Ledger file (default: an empty ledger)");
  on(lint, [&] {
    // Domain-rule violations are loaded rather than rejected so that lint
    // can report them.
    const graph::ProofGraph g =
        graph::graph_from_json(read_json(in_path), false);
    const ledger::LedgerState state =
        ledger_path.empty() ? ledger::LedgerState{} : read_ledger(ledger_path);
    const auto warnings = graph::lint_chain(g, state, inv.params);
    return inv.emit({{"warnings", graph::to_json(warnings)}},
                    lint_text(warnings),
                    warnings.empty() ? kExitOk : kExitVerdictFalse);
  });

  // scenario ----------------------------------------------------------------
  auto* scenario = app.add_subcommand("scenario", "Run a case study");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "Run a scenario");
  std::string scenario_name, ledger_out, graph_out;
  scenarios::ScenarioConfig config;
  run->add_option("name", scenario_name, "identity, audit or supplychain")
      ->required()
      ->check(CLI::IsMember({"identity", "audit", "supplychain"}));
  run->add_option("--out", out_path, "Transcript file")->required();
  run->add_option("--ledger-out", ledger_out, "Write the final ledger");
  run->add_option("--graph-out", graph_out, "Write the final graph");
  run->add_flag("--tamper", config.tamper, "Run the tamper variant");
  run->add_option("--age", config.age, "Identity: archived age");
  run->add_option("--threshold", config.threshold, "Identity: age threshold");
  run->add_option("--bits", config.n_bits, "Identity: range width");
  run->add_option("--days", config.days, "Audit: number of days");
  run->add_option("--shipments", config.shipments,
                  "Supply chain: number of shipments");
  run->add_flag("--corrupt-ecosystem", config.corrupt_ecosystem,
                "Supply chain: annotate the collusion caveat");
  on(run, [&] {
    config.seed = inv.seed();
    config.profile = inv.params.profile;
    const auto result =
        scenarios::run_scenario(scenarios::parse_scenario(scenario_name), config);
    write_file(out_path, scenarios::transcript_text(result.transcript));
    if (!ledger_out.empty()) write_ledger(ledger_out, result.ledger);
    if (!graph_out.empty()) {
      write_file(graph_out, canonical_dump(graph::to_json(result.graph)) + "\n");
    }
    const bool ok = result.transcript.final_verdict;
    return inv.emit({{"final_verdict", ok},
                     {"out", out_path},
                     {"scenario", scenario_name}},
                    std::string("final verdict: ") + (ok ? "true" : "false") +
                        "\n",
                    ok ? kExitOk : kExitVerdictFalse);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    inv.params = crypto::group_params(crypto::parse_profile(inv.profile));
    const CLI::App* leaf = &app;
    while (!leaf->get_subcommands().empty()) {
      leaf = leaf->get_subcommands().front();
    }
    auto it = handlers.find(leaf);
    if (it == handlers.end()) {
      err << "error: incomplete command\n" << app.help();
      return kExitUsage;
    }
    return it->second();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace proofchain::cli
