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

#ifndef PROOFCHAIN_CRYPTO_VERIFY_RESULT_H_
#define PROOFCHAIN_CRYPTO_VERIFY_RESULT_H_

#include <string_view>

namespace proofchain::crypto {

enum class VerifyCode {
  kOk,
  kNotInSubgroup,     // A group element failed the subgroup membership test.
  kScalarOutOfRange,  // A response or challenge is not in [0, q).
  kEquationFailed,    // Well-formed transcript, verification equation false.
  kChallengeSplit,    // OR-proof challenges do not sum to the full challenge.
  kLengthMismatch,
  kRecombination,     // Bit commitments do not recombine to the target.
  kParamsMismatch,
  kDomainTag,
};

std::string_view to_string(VerifyCode code);

class VerifyResult {
 public:
  VerifyResult() = default;
  constexpr VerifyResult(VerifyCode code) : code_(code) {}  // NOLINT

  bool ok() const { return code_ == VerifyCode::kOk; }
  explicit operator bool() const { return ok(); }
  VerifyCode code() const { return code_; }
  std::string_view reason() const { return to_string(code_); }

 private:
  VerifyCode code_ = VerifyCode::kOk;
};

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_VERIFY_RESULT_H_
