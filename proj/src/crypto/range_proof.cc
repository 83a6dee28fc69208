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

#include "proofchain/crypto/range_proof.h"

#include "proofchain/common/errors.h"
#include "proofchain/crypto/drbg.h"
#include "proofchain/crypto/transcript.h"

namespace proofchain::crypto {
namespace {

bool range_fits(unsigned n_bits, const GroupParams& params) {
  if (n_bits == 0) return false;
  BigInt bound = 1;
  bound <<= n_bits;
  return bound <= params.q;
}

// The per-bit challenges bind the target, every bit commitment and the
// caller's context; only the bit index differs between them.
Json core_statement(const Commitment& target,
                    const std::vector<Commitment>& bits, unsigned n_bits,
                    ByteSpan context) {
  Json list = Json::array();
  for (const auto& b : bits) list.push_back(hex_int(b.value));
  return {{"bit_commitments", std::move(list)},
          {"context", to_hex(context)},
          {"n_bits", hex_int(std::uint64_t{n_bits})},
          {"target", hex_int(target.value)}};
}

Json bit_statement(const std::string& core_digest, unsigned index) {
  return {{"core", core_digest}, {"index", hex_int(std::uint64_t{index})}};
}

Json bit_first_messages(const BigInt& a0, const BigInt& a1) {
  return {{"a0", hex_int(a0)}, {"a1", hex_int(a1)}};
}

}  // namespace

RangeProof prove_range(const Commitment& c, const BigInt& v, const BigInt& r,
                       unsigned n_bits, ByteSpan rng_seed,
                       const GroupParams& params, ByteSpan context) {
  if (!range_fits(n_bits, params)) {
    throw ParameterError("n_bits must satisfy 0 < 2^n_bits <= q");
  }
  if (!params.is_scalar(v) || !params.is_scalar(r)) {
    throw RangeError("opening scalars not in [0, q)");
  }
  BigInt bound = 1;
  bound <<= n_bits;
  if (v >= bound) {
    throw ProofGenerationError("value does not fit in n_bits");
  }
  if (pedersen_commit(v, r, params) != c) {
    throw ProofGenerationError("opening does not match commitment");
  }

  Bytes witness;
  append_length_prefixed(witness, as_bytes(hex_int(c.value)));
  append_length_prefixed(witness, as_bytes(hex_int(v)));
  append_length_prefixed(witness, as_bytes(hex_int(r)));
  append_length_prefixed(witness, context);
  append_u32be(witness, n_bits);
  Drbg rng(rng_seed, kBitTag, witness);

  // Blinding factors with sum_i 2^i r_i = r (mod q): draw r_1..r_{n-1} and
  // solve for r_0.
  std::vector<BigInt> blinds(n_bits);
  BigInt weighted = 0;
  for (unsigned i = 1; i < n_bits; ++i) {
    blinds[i] = rng.scalar(params.q);
    weighted += blinds[i] << i;
  }
  blinds[0] = params.mod_q(r - weighted);

  RangeProof proof;
  proof.n_bits = n_bits;
  proof.domain_tag = std::string(kBitTag);
  std::vector<int> bits(n_bits);
  for (unsigned i = 0; i < n_bits; ++i) {
    bits[i] = mpz_tstbit(v.get_mpz_t(), i);
    proof.bit_commitments.push_back(
        pedersen_commit(BigInt(bits[i]), blinds[i], params));
  }

  const std::string core =
      digest_of(core_statement(c, proof.bit_commitments, n_bits, context))
          .hex();
  const BigInt g_inv = params.inverse(params.g);
  for (unsigned i = 0; i < n_bits; ++i) {
    const BigInt& ci = proof.bit_commitments[i].value;
    // Statement bases: Y0 = C, Y1 = C / g; the prover knows log_h(Y_bit).
    const BigInt y[2] = {ci, params.mul(ci, g_inv)};
    const int real = bits[i];
    const int fake = 1 - real;

    BigInt a[2], ch[2], z[2];
    const BigInt k = rng.scalar(params.q);
    ch[fake] = rng.scalar(params.q);
    z[fake] = rng.scalar(params.q);
    a[real] = params.pow(params.h, k);
    // a_fake = h^z * Y_fake^{-c_fake}
    a[fake] = params.mul(params.pow(params.h, z[fake]),
                         params.inverse(params.pow(y[fake], ch[fake])));
    const BigInt e = fiat_shamir(kBitTag, params, bit_statement(core, i),
                                 bit_first_messages(a[0], a[1]));
    ch[real] = params.mod_q(e - ch[fake]);
    z[real] = params.mod_q(k + ch[real] * blinds[i]);
    proof.bit_proofs.push_back({a[0], a[1], ch[0], ch[1], z[0], z[1]});
  }
  return proof;
}

VerifyResult verify_range(const Commitment& c, const RangeProof& proof,
                          unsigned n_bits, const GroupParams& params,
                          ByteSpan context) {
  if (!range_fits(n_bits, params)) return VerifyCode::kLengthMismatch;
  if (proof.n_bits != n_bits || proof.bit_commitments.size() != n_bits ||
      proof.bit_proofs.size() != n_bits) {
    return VerifyCode::kLengthMismatch;
  }
  if (proof.domain_tag != kBitTag) return VerifyCode::kDomainTag;
  if (c.params_id != params.id) return VerifyCode::kParamsMismatch;
  if (!params.in_subgroup(c.value)) return VerifyCode::kNotInSubgroup;
  for (const auto& bc : proof.bit_commitments) {
    if (bc.params_id != params.id) return VerifyCode::kParamsMismatch;
    if (!params.in_subgroup(bc.value)) return VerifyCode::kNotInSubgroup;
  }
  for (const auto& bp : proof.bit_proofs) {
    if (!params.in_subgroup(bp.a0) || !params.in_subgroup(bp.a1)) {
      return VerifyCode::kNotInSubgroup;
    }
    for (const BigInt* s : {&bp.c0, &bp.c1, &bp.z0, &bp.z1}) {
      if (!params.is_scalar(*s)) return VerifyCode::kScalarOutOfRange;
    }
  }

  BigInt recombined = 1;
  for (unsigned i = 0; i < n_bits; ++i) {
    BigInt weight = 1;
    weight <<= i;
    recombined = params.mul(
        recombined, params.pow(proof.bit_commitments[i].value, weight));
  }
  if (recombined != c.value) return VerifyCode::kRecombination;

  const std::string core =
      digest_of(core_statement(c, proof.bit_commitments, n_bits, context))
          .hex();
  const BigInt g_inv = params.inverse(params.g);
  for (unsigned i = 0; i < n_bits; ++i) {
    const BitProof& bp = proof.bit_proofs[i];
    const BigInt& ci = proof.bit_commitments[i].value;
    const BigInt e = fiat_shamir(kBitTag, params, bit_statement(core, i),
                                 bit_first_messages(bp.a0, bp.a1));
    if (params.mod_q(bp.c0 + bp.c1) != e) return VerifyCode::kChallengeSplit;
    const BigInt y1 = params.mul(ci, g_inv);
    if (params.pow(params.h, bp.z0) !=
        params.mul(bp.a0, params.pow(ci, bp.c0))) {
      return VerifyCode::kEquationFailed;
    }
    if (params.pow(params.h, bp.z1) !=
        params.mul(bp.a1, params.pow(y1, bp.c1))) {
      return VerifyCode::kEquationFailed;
    }
  }
  return VerifyCode::kOk;
}

Json to_json(const RangeProof& proof) {
  Json commitments = Json::array();
  for (const auto& c : proof.bit_commitments) {
    commitments.push_back(hex_int(c.value));
  }
  Json bit_proofs = Json::array();
  for (const auto& bp : proof.bit_proofs) {
    bit_proofs.push_back({{"a0", hex_int(bp.a0)},
                          {"a1", hex_int(bp.a1)},
                          {"c0", hex_int(bp.c0)},
                          {"c1", hex_int(bp.c1)},
                          {"z0", hex_int(bp.z0)},
                          {"z1", hex_int(bp.z1)}});
  }
  return {{"bit_commitments", std::move(commitments)},
          {"bit_proofs", std::move(bit_proofs)},
          {"domain_tag", proof.domain_tag},
          {"n_bits", hex_int(std::uint64_t{proof.n_bits})}};
}

RangeProof range_proof_from_json(const Json& j, const Digest& params_id) {
  RangeProof proof;
  const std::uint64_t n_bits = require_u64(j, "n_bits");
  if (n_bits > 4096) throw FormatError("n_bits too large");
  proof.n_bits = static_cast<unsigned>(n_bits);
  proof.domain_tag = require_string(j, "domain_tag");
  const Json& commitments = require(j, "bit_commitments");
  const Json& bit_proofs = require(j, "bit_proofs");
  if (!commitments.is_array() || !bit_proofs.is_array()) {
    throw FormatError("range proof lists must be arrays");
  }
  for (const auto& c : commitments) {
    if (!c.is_string()) throw FormatError("bit commitment must be a string");
    proof.bit_commitments.push_back(
        {parse_hex_int(c.get<std::string>()), params_id});
  }
  for (const auto& bp : bit_proofs) {
    proof.bit_proofs.push_back({require_int(bp, "a0"), require_int(bp, "a1"),
                                require_int(bp, "c0"), require_int(bp, "c1"),
                                require_int(bp, "z0"), require_int(bp, "z1")});
  }
  return proof;
}

}  // namespace proofchain::crypto
