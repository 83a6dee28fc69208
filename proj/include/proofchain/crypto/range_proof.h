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

#ifndef PROOFCHAIN_CRYPTO_RANGE_PROOF_H_
#define PROOFCHAIN_CRYPTO_RANGE_PROOF_H_

#include <string>
#include <vector>

#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/pedersen.h"

namespace proofchain::crypto {

// One CDS OR-proof that a bit commitment C opens to 0 or 1, i.e. knowledge
// of r with C = h^r (branch 0) or C / g = h^r (branch 1).
struct BitProof {
  BigInt a0;
  BigInt a1;
  BigInt c0;
  BigInt c1;
  BigInt z0;
  BigInt z1;

  friend bool operator==(const BitProof&, const BitProof&) = default;
};

// Proof that a commitment opens to some v in [0, 2^n_bits).
struct RangeProof {
  unsigned n_bits = 0;
  std::vector<Commitment> bit_commitments;
  std::vector<BitProof> bit_proofs;
  std::string domain_tag;

  friend bool operator==(const RangeProof&, const RangeProof&) = default;
};

// Throws ParameterError when n_bits == 0 or 2^n_bits > q, RangeError for
// out-of-range scalars, and ProofGenerationError when v >= 2^n_bits or
// (v, r) does not open c.
RangeProof prove_range(const Commitment& c, const BigInt& v, const BigInt& r,
                       unsigned n_bits, ByteSpan rng_seed,
                       const GroupParams& params, ByteSpan context = {});

VerifyResult verify_range(const Commitment& c, const RangeProof& proof,
                          unsigned n_bits, const GroupParams& params,
                          ByteSpan context = {});

Json to_json(const RangeProof& proof);
RangeProof range_proof_from_json(const Json& j, const Digest& params_id);

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_RANGE_PROOF_H_
