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

#include "proofchain/crypto/verify_result.h"

namespace proofchain::crypto {

std::string_view to_string(VerifyCode code) {
  switch (code) {
    case VerifyCode::kOk:
      return "ok";
    case VerifyCode::kNotInSubgroup:
      return "not-in-subgroup";
    case VerifyCode::kScalarOutOfRange:
      return "scalar-out-of-range";
    case VerifyCode::kEquationFailed:
      return "equation-failed";
    case VerifyCode::kChallengeSplit:
      return "challenge-split";
    case VerifyCode::kLengthMismatch:
      return "length-mismatch";
    case VerifyCode::kRecombination:
      return "recombination-failed";
    case VerifyCode::kParamsMismatch:
      return "params-mismatch";
    case VerifyCode::kDomainTag:
      return "domain-tag-mismatch";
  }
  return "unknown";
}

}  // namespace proofchain::crypto
