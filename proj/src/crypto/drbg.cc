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

#include "proofchain/crypto/drbg.h"

#include "proofchain/common/sha256.h"

namespace proofchain::crypto {

Drbg::Drbg(ByteSpan seed, std::string_view purpose, ByteSpan context) {
  Bytes material;
  append_length_prefixed(material, seed);
  append_length_prefixed(material, as_bytes(purpose));
  append_length_prefixed(material, context);
  key_ = sha256(material);
}

Bytes Drbg::bytes(std::size_t n) {
  Bytes out;
  out.reserve(n + 32);
  while (out.size() < n) {
    Bytes block;
    append(block, key_.span());
    append_u64be(block, counter_++);
    append(out, sha256(block).span());
  }
  out.resize(n);
  return out;
}

BigInt Drbg::scalar(const BigInt& q) {
  Bytes raw = bytes(64);
  BigInt x;
  mpz_import(x.get_mpz_t(), raw.size(), 1, 1, 1, 0, raw.data());
  return x % q;
}

BigInt Drbg::nonzero_scalar(const BigInt& q) {
  for (;;) {
    BigInt x = scalar(q);
    if (x != 0) return x;
  }
}

}  // namespace proofchain::crypto
