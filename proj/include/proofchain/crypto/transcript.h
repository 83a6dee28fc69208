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

#ifndef PROOFCHAIN_CRYPTO_TRANSCRIPT_H_
#define PROOFCHAIN_CRYPTO_TRANSCRIPT_H_

#include <string_view>

#include "proofchain/common/canonical_json.h"
#include "proofchain/crypto/group.h"

namespace proofchain::crypto {

inline constexpr std::string_view kOpeningTag = "proofchain/opening/v1";
inline constexpr std::string_view kBitTag = "proofchain/bit/v1";
inline constexpr std::string_view kSignatureTag = "proofchain/signature/v1";

// Fiat-Shamir challenge: SHA-256 over the length-prefixed concatenation
//   domain_tag || params id || canonical(statement) || canonical(first)
// read as a big-endian integer and reduced mod q.
BigInt fiat_shamir(std::string_view domain_tag, const GroupParams& params,
                   const Json& statement, const Json& first_messages);

}  // namespace proofchain::crypto

#endif  // PROOFCHAIN_CRYPTO_TRANSCRIPT_H_
