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

#ifndef PROOFCHAIN_CRYPTO_SIGNATURE_H_
#define PROOFCHAIN_CRYPTO_SIGNATURE_H_

#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"
#include "proofchain/crypto/verify_result.h"

namespace proofchain::crypto {

// Schnorr signature (R, s) with g^s = R * pk^e, e = H(tag, pk, R, message).
struct Signature {
  BigInt r_point;
  BigInt s;
  BigInt signer_key;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Throws ParameterError for a zero key and RangeError for a key >= q.
BigInt public_key(const BigInt& secret_key, const GroupParams& params);

Signature sign_message(const BigInt& secret_key, ByteSpan message,
                       ByteSpan rng_seed, const GroupParams& params);

VerifyResult verify_signature(const Signature& sig, ByteSpan message,
                              const GroupParams& params);

Json to_json(const Signature& sig);
Signature signature_from_json(const Json& j);

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_SIGNATURE_H_
