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

#include "proofchain/crypto/pedersen.h"

#include "proofchain/common/errors.h"
#include "proofchain/crypto/drbg.h"
#include "proofchain/crypto/transcript.h"

namespace proofchain::crypto {
namespace {

Json opening_statement(const Commitment& c, ByteSpan context) {
  return {{"commitment", hex_int(c.value)}, {"context", to_hex(context)}};
}

Bytes witness_context(const Json& statement, const BigInt& v,
                      const BigInt& r) {
  Bytes out;
  append_length_prefixed(out, as_bytes(canonical_dump(statement)));
  append_length_prefixed(out, as_bytes(hex_int(v)));
  append_length_prefixed(out, as_bytes(hex_int(r)));
  return out;
}

}  // namespace

Commitment pedersen_commit(const BigInt& v, const BigInt& r,
                           const GroupParams& params) {
  if (!params.is_scalar(v)) throw RangeError("committed value not in [0, q)");
  if (!params.is_scalar(r)) throw RangeError("blinding factor not in [0, q)");
  return {params.mul(params.pow(params.g, v), params.pow(params.h, r)),
          params.id};
}

Commitment combine(const Commitment& a, const Commitment& b,
                   const GroupParams& params) {
  if (a.params_id != params.id || b.params_id != params.id) {
    throw ParameterError("commitments belong to different parameters");
  }
  return {params.mul(a.value, b.value), params.id};
}

Json to_json(const Commitment& c) {
  return {{"params", c.params_id.hex()}, {"value", hex_int(c.value)}};
}

Commitment commitment_from_json(const Json& j) {
  return {require_int(j, "value"), require_digest(j, "params")};
}

OpeningProof prove_opening(const Commitment& c, const BigInt& v,
                           const BigInt& r, ByteSpan rng_seed,
                           const GroupParams& params, ByteSpan context) {
  if (pedersen_commit(v, r, params) != c) {
    throw ProofGenerationError("opening does not match commitment");
  }
  const Json statement = opening_statement(c, context);
  Drbg rng(rng_seed, kOpeningTag, witness_context(statement, v, r));
  const BigInt a = rng.scalar(params.q);
  const BigInt b = rng.scalar(params.q);
  OpeningProof proof;
  proof.domain_tag = std::string(kOpeningTag);
  proof.t = params.mul(params.pow(params.g, a), params.pow(params.h, b));
  const BigInt e =
      fiat_shamir(kOpeningTag, params, statement, {{"t", hex_int(proof.t)}});
  proof.z1 = params.mod_q(a + e * v);
  proof.z2 = params.mod_q(b + e * r);
  return proof;
}

VerifyResult verify_opening(const Commitment& c, const OpeningProof& proof,
                            const GroupParams& params, ByteSpan context) {
  if (c.params_id != params.id) return VerifyCode::kParamsMismatch;
  if (proof.domain_tag != kOpeningTag) return VerifyCode::kDomainTag;
  if (!params.in_subgroup(c.value) || !params.in_subgroup(proof.t)) {
    return VerifyCode::kNotInSubgroup;
  }
  if (!params.is_scalar(proof.z1) || !params.is_scalar(proof.z2)) {
    return VerifyCode::kScalarOutOfRange;
  }
  const BigInt e = fiat_shamir(kOpeningTag, params,
                               opening_statement(c, context),
                               {{"t", hex_int(proof.t)}});
  const BigInt lhs =
      params.mul(params.pow(params.g, proof.z1), params.pow(params.h, proof.z2));
  const BigInt rhs = params.mul(proof.t, params.pow(c.value, e));
  return lhs == rhs ? VerifyCode::kOk : VerifyCode::kEquationFailed;
}

Json to_json(const OpeningProof& proof) {
  return {{"domain_tag", proof.domain_tag},
          {"t", hex_int(proof.t)},
          {"z1", hex_int(proof.z1)},
          {"z2", hex_int(proof.z2)}};
}

OpeningProof opening_proof_from_json(const Json& j) {
  return {require_int(j, "t"), require_int(j, "z1"), require_int(j, "z2"),
          require_string(j, "domain_tag")};
}

}  // namespace proofchain::crypto
