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

#ifndef PROOFCHAIN_COMMON_CANONICAL_JSON_H_
#define PROOFCHAIN_COMMON_CANONICAL_JSON_H_

// Canonical JSON: UTF-8, object keys sorted bytewise, no insignificant
// whitespace, integers carried as lowercase hex strings without leading
// zeros ("0" for zero). Floats are never produced and are rejected on input.

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "json.hpp"
#include "proofchain/common/bytes.h"

namespace proofchain {

using Json = nlohmann::json;

std::string canonical_dump(const Json& value);
// Parses and rejects floating-point numbers anywhere in the document.
Json parse_json(std::string_view text);

Digest digest_of(const Json& value);

std::string hex_int(const mpz_class& v);
std::string hex_int(std::uint64_t v);
// Strict: lowercase hex, no leading zeros, no sign.
mpz_class parse_hex_int(std::string_view hex);

// Field accessors that raise FormatError with the key name on mismatch.
const Json& require(const Json& obj, std::string_view key);
std::string require_string(const Json& obj, std::string_view key);
mpz_class require_int(const Json& obj, std::string_view key);
// Accepts a canonical hex string, or a plain JSON unsigned integer for
// hand-written input files.
std::uint64_t require_u64(const Json& obj, std::string_view key);
Digest require_digest(const Json& obj, std::string_view key);

}  // namespace proofchain

#endif  // PROOFCHAIN_COMMON_CANONICAL_JSON_H_
