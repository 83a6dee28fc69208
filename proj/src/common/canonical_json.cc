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

#include "proofchain/common/canonical_json.h"

#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain {
namespace {

void reject_floats(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float:
      throw FormatError("floating-point numbers are not allowed");
    case Json::value_t::array:
    case Json::value_t::object:
      for (const auto& child : v) reject_floats(child);
      break;
    default:
      break;
  }
}

}  // namespace

std::string canonical_dump(const Json& value) {
  // nlohmann::json keeps object members in a std::map, so keys come out in
  // bytewise order; indent -1 emits no whitespace.
  return value.dump(-1, ' ', /*ensure_ascii=*/false,
                    Json::error_handler_t::strict);
}

Json parse_json(std::string_view text) {
  Json v;
  try {
    v = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  reject_floats(v);
  return v;
}

Digest digest_of(const Json& value) { return sha256(canonical_dump(value)); }

std::string hex_int(const mpz_class& v) {
  if (sgn(v) < 0) throw RangeError("negative integer cannot be encoded");
  return v.get_str(16);
}

std::string hex_int(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), kDigits[v & 0xf]);
    v >>= 4;
  }
  return out;
}

mpz_class parse_hex_int(std::string_view hex) {
  if (hex.empty()) throw FormatError("empty integer string");
  if (hex.size() > 1 && hex[0] == '0') {
    throw FormatError("integer has leading zeros");
  }
  for (char c : hex) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) throw FormatError("integer must be lowercase hex");
  }
  return mpz_class(std::string(hex), 16);
}

const Json& require(const Json& obj, std::string_view key) {
  if (!obj.is_object()) throw FormatError("expected JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw FormatError("missing field '" + std::string(key) + "'");
  }
  return *it;
}

std::string require_string(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) {
    throw FormatError("field '" + std::string(key) + "' must be a string");
  }
  return v.get<std::string>();
}

mpz_class require_int(const Json& obj, std::string_view key) {
  return parse_hex_int(require_string(obj, key));
}

std::uint64_t require_u64(const Json& obj, std::string_view key) {
  const Json& v = require(obj, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    throw FormatError("field '" + std::string(key) + "' must be non-negative");
  }
  mpz_class n = require_int(obj, key);
  if (!n.fits_ulong_p() || sizeof(unsigned long) < sizeof(std::uint64_t)) {
    throw RangeError("field '" + std::string(key) + "' exceeds 64 bits");
  }
  return n.get_ui();
}

Digest require_digest(const Json& obj, std::string_view key) {
  return Digest::from_hex(require_string(obj, key));
}

}  // namespace proofchain
