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

#include "proofchain/crypto/signature.h"

#include "proofchain/common/errors.h"
#include "proofchain/crypto/drbg.h"
#include "proofchain/crypto/transcript.h"

namespace proofchain::crypto {
namespace {

Json signature_statement(const BigInt& pk, ByteSpan message) {
  return {{"message", to_hex(message)}, {"public_key", hex_int(pk)}};
}

}  // namespace

BigInt public_key(const BigInt& secret_key, const GroupParams& params) {
  if (secret_key == 0) throw ParameterError("secret key must be non-zero");
  if (!params.is_scalar(secret_key)) {
    throw RangeError("secret key not in (0, q)");
  }
  return params.pow(params.g, secret_key);
}

Signature sign_message(const BigInt& secret_key, ByteSpan message,
                       ByteSpan rng_seed, const GroupParams& params) {
  const BigInt pk = public_key(secret_key, params);
  const Json statement = signature_statement(pk, message);
  Bytes witness;
  append_length_prefixed(witness, as_bytes(canonical_dump(statement)));
  append_length_prefixed(witness, as_bytes(hex_int(secret_key)));
  Drbg rng(rng_seed, kSignatureTag, witness);
  const BigInt k = rng.nonzero_scalar(params.q);
  Signature sig;
  sig.signer_key = pk;
  sig.r_point = params.pow(params.g, k);
  const BigInt e = fiat_shamir(kSignatureTag, params, statement,
                               {{"R", hex_int(sig.r_point)}});
  sig.s = params.mod_q(k + e * secret_key);
  return sig;
}

VerifyResult verify_signature(const Signature& sig, ByteSpan message,
                              const GroupParams& params) {
  if (!params.in_subgroup(sig.r_point) || !params.in_subgroup(sig.signer_key)) {
    return VerifyCode::kNotInSubgroup;
  }
  if (!params.is_scalar(sig.s)) return VerifyCode::kScalarOutOfRange;
  const BigInt e =
      fiat_shamir(kSignatureTag, params,
                  signature_statement(sig.signer_key, message),
                  {{"R", hex_int(sig.r_point)}});
  const BigInt lhs = params.pow(params.g, sig.s);
  const BigInt rhs = params.mul(sig.r_point, params.pow(sig.signer_key, e));
  return lhs == rhs ? VerifyCode::kOk : VerifyCode::kEquationFailed;
}

Json to_json(const Signature& sig) {
  return {{"R", hex_int(sig.r_point)},
          {"s", hex_int(sig.s)},
          {"signer_key", hex_int(sig.signer_key)}};
}

Signature signature_from_json(const Json& j) {
  return {require_int(j, "R"), require_int(j, "s"),
          require_int(j, "signer_key")};
}

}  // namespace proofchain::crypto
