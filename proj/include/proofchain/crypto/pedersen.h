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

#ifndef PROOFCHAIN_CRYPTO_PEDERSEN_H_
#define PROOFCHAIN_CRYPTO_PEDERSEN_H_

#include <string>

#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/crypto/verify_result.h"

namespace proofchain::crypto {

struct Commitment {
  BigInt value;
  Digest params_id;

  friend bool operator==(const Commitment&, const Commitment&) = default;
};

// g^v * h^r mod p. Throws RangeError unless 0 <= v, r < q.
Commitment pedersen_commit(const BigInt& v, const BigInt& r,
                           const GroupParams& params);

// Group operation on commitments: opens to (v1 + v2, r1 + r2) mod q.
Commitment combine(const Commitment& a, const Commitment& b,
                   const GroupParams& params);

Json to_json(const Commitment& c);
Commitment commitment_from_json(const Json& j);

// Non-interactive Schnorr proof of knowledge of (v, r) with C = g^v h^r.
struct OpeningProof {
  BigInt t;
  BigInt z1;
  BigInt z2;
  std::string domain_tag;

  friend bool operator==(const OpeningProof&, const OpeningProof&) = default;
};

// `context` is bound into the challenge; pass the same bytes to verify.
// Throws ProofGenerationError if (v, r) does not open c.
OpeningProof prove_opening(const Commitment& c, const BigInt& v,
                           const BigInt& r, ByteSpan rng_seed,
                           const GroupParams& params, ByteSpan context = {});

VerifyResult verify_opening(const Commitment& c, const OpeningProof& proof,
                            const GroupParams& params, ByteSpan context = {});

Json to_json(const OpeningProof& proof);
OpeningProof opening_proof_from_json(const Json& j);

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_PEDERSEN_H_
