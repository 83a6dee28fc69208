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

#include "proofchain/crypto/transcript.h"

#include "proofchain/common/sha256.h"

namespace proofchain::crypto {

BigInt fiat_shamir(std::string_view domain_tag, const GroupParams& params,
                   const Json& statement, const Json& first_messages) {
  Bytes transcript;
  append_length_prefixed(transcript, as_bytes(domain_tag));
  append_length_prefixed(transcript, params.id.span());
  append_length_prefixed(transcript, as_bytes(canonical_dump(statement)));
  append_length_prefixed(transcript, as_bytes(canonical_dump(first_messages)));
  Digest d = sha256(transcript);
  BigInt e;
  mpz_import(e.get_mpz_t(), d.bytes.size(), 1, 1, 1, 0, d.bytes.data());
  return params.mod_q(e);
}

}  // namespace proofchain::crypto
