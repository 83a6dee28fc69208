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

#include <map>
#include <random>

#include "proofchain/common/errors.h"
#include "proofchain/crypto/pedersen.h"
#include "test_util.h"

namespace proofchain::crypto {
namespace {

using proofchain::testing::naive_powm;
using proofchain::testing::random_below;
using proofchain::testing::seed_bytes;

// Direct modular-arithmetic oracle for g^v h^r mod p.
mpz_class commit_oracle(const GroupParams& gp, const mpz_class& v,
                        const mpz_class& r) {
  return (naive_powm(gp.g, v, gp.p) * naive_powm(gp.h, r, gp.p)) % gp.p;
}

TEST(PedersenTest, ToyWorkedExamples) {
  GroupParams gp = group_params(Profile::kToy);
  EXPECT_EQ(pedersen_commit(0, 0, gp).value, 1);
  EXPECT_EQ(commit_oracle(gp, 3, 5), 12);
  EXPECT_EQ(pedersen_commit(3, 5, gp).value, 12);
  EXPECT_EQ(commit_oracle(gp, 4, 2), 6);
  EXPECT_EQ(pedersen_commit(4, 2, gp).value, 6);
  EXPECT_EQ(commit_oracle(gp, 7, 7), 3);
  EXPECT_EQ((12 * 6) % 23, 3);
  Commitment product =
      combine(pedersen_commit(3, 5, gp), pedersen_commit(4, 2, gp), gp);
  EXPECT_EQ(product, pedersen_commit(7, 7, gp));
}

TEST(PedersenTest, RejectsOutOfRangeScalars) {
  GroupParams gp = group_params(Profile::kToy);
  EXPECT_THROW(pedersen_commit(11, 0, gp), RangeError);
  EXPECT_THROW(pedersen_commit(0, 11, gp), RangeError);
  EXPECT_THROW(pedersen_commit(-1, 0, gp), RangeError);
}

// Every commitment value in the Toy group is hit by exactly q openings.
TEST(PedersenTest, ToyHidingEnumeration) {
  GroupParams gp = group_params(Profile::kToy);
  std::map<unsigned long, int> counts;
  for (int v = 0; v < 11; ++v) {
    for (int r = 0; r < 11; ++r) {
      Commitment c = pedersen_commit(v, r, gp);
      EXPECT_EQ(c.value, commit_oracle(gp, v, r));
      ++counts[c.value.get_ui()];
    }
  }
  EXPECT_EQ(counts.size(), 11u);
  for (const auto& [value, n] : counts) EXPECT_EQ(n, 11) << value;
}

class PedersenProfileTest : public ::testing::TestWithParam<Profile> {};

TEST_P(PedersenProfileTest, HomomorphismProperty) {
  GroupParams gp = group_params(GetParam());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    mpz_class v1 = random_below(rng, gp.q), r1 = random_below(rng, gp.q);
    mpz_class v2 = random_below(rng, gp.q), r2 = random_below(rng, gp.q);
    Commitment lhs =
        combine(pedersen_commit(v1, r1, gp), pedersen_commit(v2, r2, gp), gp);
    Commitment rhs = pedersen_commit(gp.mod_q(v1 + v2), gp.mod_q(r1 + r2), gp);
    ASSERT_EQ(lhs, rhs);
  }
}

INSTANTIATE_TEST_SUITE_P(BothProfiles, PedersenProfileTest,
                         ::testing::Values(Profile::kToy, Profile::kTest));

class OpeningProofTest : public ::testing::Test {
 protected:
  GroupParams gp = group_params(Profile::kTest);
  std::mt19937_64 rng{99};
};

TEST_F(OpeningProofTest, CompletenessAndDeterminism) {
  for (int i = 0; i < 50; ++i) {
    mpz_class v = random_below(rng, gp.q), r = random_below(rng, gp.q);
    Commitment c = pedersen_commit(v, r, gp);
    OpeningProof p1 = prove_opening(c, v, r, seed_bytes("seed"), gp);
    OpeningProof p2 = prove_opening(c, v, r, seed_bytes("seed"), gp);
    EXPECT_EQ(p1, p2);
    EXPECT_EQ(canonical_dump(to_json(p1)), canonical_dump(to_json(p2)));
    EXPECT_TRUE(verify_opening(c, p1, gp));
    EXPECT_EQ(opening_proof_from_json(to_json(p1)), p1);
  }
}

TEST_F(OpeningProofTest, SameSeedDifferentStatementUsesFreshNonce) {
  Commitment c1 = pedersen_commit(1, 2, gp);
  Commitment c2 = pedersen_commit(3, 4, gp);
  OpeningProof p1 = prove_opening(c1, 1, 2, seed_bytes("s"), gp);
  OpeningProof p2 = prove_opening(c2, 3, 4, seed_bytes("s"), gp);
  EXPECT_NE(p1.t, p2.t);
}

TEST_F(OpeningProofTest, MismatchedOpeningRefused) {
  Commitment c = pedersen_commit(5, 6, gp);
  EXPECT_THROW(prove_opening(c, 5, 7, seed_bytes("s"), gp),
               ProofGenerationError);
}

TEST_F(OpeningProofTest, TamperedFieldsRejected) {
  mpz_class v = random_below(rng, gp.q), r = random_below(rng, gp.q);
  Commitment c = pedersen_commit(v, r, gp);
  const OpeningProof good = prove_opening(c, v, r, seed_bytes("t"), gp);

  OpeningProof p = good;
  p.z1 = gp.mod_q(p.z1 + 1);
  EXPECT_FALSE(verify_opening(c, p, gp));
  p = good;
  p.z2 = gp.mod_q(p.z2 + 1);
  EXPECT_FALSE(verify_opening(c, p, gp));
  p = good;
  p.t = gp.mul(p.t, gp.g);
  EXPECT_EQ(verify_opening(c, p, gp).code(), VerifyCode::kEquationFailed);
  p = good;
  p.domain_tag = "proofchain/other/v1";
  EXPECT_EQ(verify_opening(c, p, gp).code(), VerifyCode::kDomainTag);

  // t = 1 with zero responses: the challenge binds t, so this only passes
  // if c^e = 1, which happens with probability 1/q.
  p = {1, 0, 0, good.domain_tag};
  EXPECT_FALSE(verify_opening(c, p, gp));

  Commitment other = pedersen_commit(gp.mod_q(v + 1), r, gp);
  EXPECT_FALSE(verify_opening(other, good, gp));

  EXPECT_FALSE(verify_opening(c, good, gp, seed_bytes("other context")));
}

TEST_F(OpeningProofTest, NonSubgroupElementHasDistinctCode) {
  Commitment c = pedersen_commit(3, 4, gp);
  OpeningProof p = prove_opening(c, 3, 4, seed_bytes("x"), gp);
  OpeningProof bad = p;
  bad.t = gp.p - 1;  // order 2, outside the order-q subgroup
  EXPECT_EQ(verify_opening(c, bad, gp).code(), VerifyCode::kNotInSubgroup);
  Commitment bad_c = c;
  bad_c.value = 0;
  EXPECT_EQ(verify_opening(bad_c, p, gp).code(), VerifyCode::kNotInSubgroup);
  bad = p;
  bad.z1 = gp.q;
  EXPECT_EQ(verify_opening(c, bad, gp).code(), VerifyCode::kScalarOutOfRange);
  Commitment toy_c = pedersen_commit(1, 1, group_params(Profile::kToy));
  EXPECT_EQ(verify_opening(toy_c, p, gp).code(), VerifyCode::kParamsMismatch);
}

}  // namespace
}  // namespace proofchain::crypto
