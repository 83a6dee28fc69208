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

#include <gtest/gtest.h>

#include <random>

#include "proofchain/common/errors.h"
#include "proofchain/crypto/signature.h"
#include "test_util.h"

namespace proofchain::crypto {
namespace {

using proofchain::testing::random_below;
using proofchain::testing::seed_bytes;

class SignatureTest : public ::testing::Test {
 protected:
  GroupParams gp = group_params(Profile::kTest);
  mpz_class sk = mpz_class("1234567890abcdef1234567890abcdef", 16);
  Bytes message = seed_bytes("archive root 42");
};

TEST_F(SignatureTest, CompletenessAndDeterminism) {
  Signature a = sign_message(sk, message, seed_bytes("n"), gp);
  Signature b = sign_message(sk, message, seed_bytes("n"), gp);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(verify_signature(a, message, gp));
  EXPECT_EQ(a.signer_key, public_key(sk, gp));
  EXPECT_EQ(signature_from_json(to_json(a)), a);
}

TEST_F(SignatureTest, FlippedMessageBitRejected) {
  Signature sig = sign_message(sk, message, seed_bytes("n"), gp);
  for (std::size_t bit = 0; bit < message.size() * 8; ++bit) {
    Bytes flipped = message;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    EXPECT_FALSE(verify_signature(sig, flipped, gp)) << bit;
  }
}

TEST_F(SignatureTest, WrongKeyAndResponseRejected) {
  Signature sig = sign_message(sk, message, seed_bytes("n"), gp);
  Signature other_key = sig;
  other_key.signer_key = public_key(sk + 1, gp);
  EXPECT_EQ(verify_signature(other_key, message, gp).code(),
            VerifyCode::kEquationFailed);
  Signature bumped = sig;
  bumped.s = gp.mod_q(sig.s + 1);
  EXPECT_FALSE(verify_signature(bumped, message, gp));
  Signature outside = sig;
  outside.r_point = gp.p - 1;
  EXPECT_EQ(verify_signature(outside, message, gp).code(),
            VerifyCode::kNotInSubgroup);
}

TEST_F(SignatureTest, KeyValidation) {
  EXPECT_THROW(sign_message(0, message, seed_bytes("n"), gp), ParameterError);
  EXPECT_THROW(sign_message(gp.q, message, seed_bytes("n"), gp), RangeError);
}

TEST_F(SignatureTest, RandomKeysAndMessages) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    mpz_class key = 1 + random_below(rng, gp.q - 1);
    Bytes msg = proofchain::testing::random_bytes(rng, i % 40);
    Signature sig = sign_message(key, msg, seed_bytes("r"), gp);
    ASSERT_TRUE(verify_signature(sig, msg, gp));
  }
}

}  // namespace
}  // namespace proofchain::crypto
