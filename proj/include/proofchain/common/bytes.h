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

#ifndef PROOFCHAIN_COMMON_BYTES_H_
#define PROOFCHAIN_COMMON_BYTES_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proofchain {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

// A 32-byte SHA-256 digest. Serializes as 64 lowercase hex characters.
struct Digest {
  std::array<std::uint8_t, 32> bytes{};

  std::string hex() const;
  static Digest from_hex(std::string_view hex);
  static Digest zero() { return Digest{}; }

  ByteSpan span() const { return ByteSpan(bytes.data(), bytes.size()); }
  friend auto operator<=>(const Digest&, const Digest&) = default;
};

std::string to_hex(ByteSpan data);
// Throws FormatError on odd length or non-hex characters. Accepts upper case.
Bytes from_hex(std::string_view hex);

inline ByteSpan as_bytes(std::string_view s) {
  return ByteSpan(reinterpret_cast<const std::uint8_t*>(s.data()), s.size());
}

void append(Bytes& out, ByteSpan data);
void append(Bytes& out, std::string_view data);
void append_u32be(Bytes& out, std::uint32_t v);
void append_u64be(Bytes& out, std::uint64_t v);
// u64 big-endian length followed by the data.
void append_length_prefixed(Bytes& out, ByteSpan data);

}  // namespace proofchain

#endif  // PROOFCHAIN_COMMON_BYTES_H_
