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

#ifndef PROOFCHAIN_CRYPTO_DRBG_H_
#define PROOFCHAIN_CRYPTO_DRBG_H_

#include <cstdint>
#include <string_view>

#include "proofchain/common/bytes.h"
#include "proofchain/crypto/group.h"

namespace proofchain::crypto {

// Hash-counter deterministic generator. The key mixes the caller's seed with
// a purpose label and a context (statement and witness), so reusing one seed
// for two different proofs never reuses a nonce.
class Drbg {
 public:
  Drbg(ByteSpan seed, std::string_view purpose, ByteSpan context = {});

  Bytes bytes(std::size_t n);
  // Uniform up to 2^-256 statistical distance: 64 bytes reduced mod q.
  BigInt scalar(const BigInt& q);
  BigInt nonzero_scalar(const BigInt& q);

 private:
  Digest key_;
  std::uint64_t counter_ = 0;
};

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_DRBG_H_
