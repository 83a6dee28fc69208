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

#ifndef PROOFCHAIN_CRYPTO_GROUP_H_
#define PROOFCHAIN_CRYPTO_GROUP_H_

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "proofchain/common/bytes.h"

namespace proofchain::crypto {

using BigInt = mpz_class;

enum class Profile {
  kToy,   // p = 23. Insecure; exists for brute-force oracles in tests.
  kTest,  // Fixed 256-bit safe prime.
};

std::string_view profile_name(Profile profile);
// Accepts "toy" / "test" (case-insensitive). Throws ParameterError otherwise.
Profile parse_profile(std::string_view name);

// Order-q subgroup of Z_p^* for a safe prime p = 2q + 1, with two generators
// g and h whose mutual discrete log is unknown (except in the Toy profile).
struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt g;
  BigInt h;
  Profile profile = Profile::kToy;
  // SHA-256 over the canonical JSON of {g, h, p, q}.
  Digest id;

  // 1 <= x < p and x^q = 1 (mod p).
  bool in_subgroup(const BigInt& x) const;
  bool is_scalar(const BigInt& x) const { return sgn(x) >= 0 && x < q; }

  BigInt pow(const BigInt& base, const BigInt& exponent) const;
  BigInt mul(const BigInt& a, const BigInt& b) const;
  BigInt inverse(const BigInt& a) const;
  BigInt mod_q(const BigInt& x) const;

  // Byte width of a serialized group element (big-endian, zero padded).
  std::size_t element_width() const;
  Bytes element_bytes(const BigInt& x) const;
};

// Deterministic, compiled-in parameters.
GroupParams group_params(Profile profile);

// Nothing-up-my-sleeve subgroup element: (SHA256(seed || be32(counter)) mod
// p)^2 mod p for the first counter giving a value outside {0, 1}.
BigInt derive_generator(std::string_view seed, const BigInt& p);

inline constexpr std::string_view kGeneratorSeed = "proofchain/h/v1";

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_GROUP_H_
