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

#include "proofchain/crypto/group.h"

#include <algorithm>
#include <cctype>

#include "proofchain/common/canonical_json.h"
#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain::crypto {
namespace {

// Largest 256-bit safe prime: q is the first prime below 2^255 with 2q+1
// also prime.
constexpr const char* kTestP =
    "ffffffffffffffffffffffffffffffffffffffffffffffffffffffffffff72ef";
constexpr const char* kTestQ =
    "7fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffb977";

BigInt from_be_bytes(ByteSpan data) {
  BigInt out;
  mpz_import(out.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return out;
}

Digest params_digest(const GroupParams& gp) {
  Json j = {{"g", hex_int(gp.g)},
            {"h", hex_int(gp.h)},
            {"p", hex_int(gp.p)},
            {"q", hex_int(gp.q)}};
  return digest_of(j);
}

}  // namespace

std::string_view profile_name(Profile profile) {
  switch (profile) {
    case Profile::kToy:
      return "toy";
    case Profile::kTest:
      return "test";
  }
  return "unknown";
}

Profile parse_profile(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "toy") return Profile::kToy;
  if (lower == "test") return Profile::kTest;
  throw ParameterError("unknown profile '" + std::string(name) + "'");
}

bool GroupParams::in_subgroup(const BigInt& x) const {
  if (x < 1 || x >= p) return false;
  return pow(x, q) == 1;
}

BigInt GroupParams::pow(const BigInt& base, const BigInt& exponent) const {
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           p.get_mpz_t());
  return out;
}

BigInt GroupParams::mul(const BigInt& a, const BigInt& b) const {
  BigInt out = a * b;
  mpz_mod(out.get_mpz_t(), out.get_mpz_t(), p.get_mpz_t());
  return out;
}

BigInt GroupParams::inverse(const BigInt& a) const {
  BigInt out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw RangeError("element has no inverse mod p");
  }
  return out;
}

BigInt GroupParams::mod_q(const BigInt& x) const {
  BigInt out;
  mpz_mod(out.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
  return out;
}

std::size_t GroupParams::element_width() const {
  return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8;
}

Bytes GroupParams::element_bytes(const BigInt& x) const {
  if (sgn(x) < 0 || x >= p) throw RangeError("value is not a group element");
  const std::size_t width = element_width();
  Bytes out(width, 0);
  std::size_t count = 0;
  Bytes raw((mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(raw.data(), &count, 1, 1, 1, 0, x.get_mpz_t());
  std::copy(raw.begin(), raw.begin() + count, out.end() - count);
  return out;
}

BigInt derive_generator(std::string_view seed, const BigInt& p) {
  for (std::uint32_t counter = 0;; ++counter) {
    Bytes input;
    append(input, seed);
    append_u32be(input, counter);
    BigInt x = from_be_bytes(sha256(input).span()) % p;
    BigInt h = (x * x) % p;
    if (h != 0 && h != 1) return h;
  }
}

GroupParams group_params(Profile profile) {
  GroupParams gp;
  gp.profile = profile;
  switch (profile) {
    case Profile::kToy:
      gp.p = 23;
      gp.q = 11;
      gp.g = 2;
      gp.h = 3;
      break;
    case Profile::kTest:
      gp.p = BigInt(kTestP, 16);
      gp.q = BigInt(kTestQ, 16);
      gp.g = 4;
      gp.h = derive_generator(kGeneratorSeed, gp.p);
      break;
  }
  gp.id = params_digest(gp);
  return gp;
}

}  // namespace proofchain::crypto
