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

#include "proofchain/common/bytes.h"
#include "proofchain/common/canonical_json.h"
#include "proofchain/common/errors.h"
#include "proofchain/common/sha256.h"

namespace proofchain {
namespace {

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(sha256(std::string_view("abc")).hex(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(sha256(std::string_view("")).hex(),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Sha256Test, IncrementalMatchesOneShot) {
  Digest a = Sha256().update("ab").update(std::uint8_t{'c'}).finish();
  EXPECT_EQ(a, sha256(std::string_view("abc")));
}

TEST(HexTest, RoundTripAndErrors) {
  Bytes raw = {0x00, 0x0f, 0xa0, 0xff};
  EXPECT_EQ(to_hex(raw), "000fa0ff");
  EXPECT_EQ(from_hex("000FA0ff"), raw);
  EXPECT_THROW(from_hex("abc"), FormatError);
  EXPECT_THROW(from_hex("zz"), FormatError);
  EXPECT_THROW(Digest::from_hex("00"), FormatError);
  EXPECT_THROW(Digest::from_hex(std::string(64, 'A')), FormatError);
}

TEST(CanonicalJsonTest, SortedKeysNoWhitespace) {
  Json j = parse_json(R"({ "b": [1, {"z": true, "a": null}], "a": "x" })");
  EXPECT_EQ(canonical_dump(j), R"({"a":"x","b":[1,{"a":null,"z":true}]})");
}

TEST(CanonicalJsonTest, Utf8PassesThrough) {
  Json j = {{"name", "Zo\xc3\xab"}};
  EXPECT_EQ(canonical_dump(j), "{\"name\":\"Zo\xc3\xab\"}");
}

TEST(CanonicalJsonTest, RejectsFloats) {
  EXPECT_THROW(parse_json(R"({"a": [1.5]})"), FormatError);
  EXPECT_THROW(parse_json("{"), FormatError);
}

TEST(CanonicalJsonTest, HexIntegers) {
  EXPECT_EQ(hex_int(mpz_class(0)), "0");
  EXPECT_EQ(hex_int(std::uint64_t{0}), "0");
  EXPECT_EQ(hex_int(mpz_class(255)), "ff");
  EXPECT_EQ(hex_int(std::uint64_t{0x1234abcd}), "1234abcd");
  EXPECT_EQ(parse_hex_int("ff"), 255);
  EXPECT_EQ(parse_hex_int("0"), 0);
  EXPECT_THROW(parse_hex_int("0ff"), FormatError);
  EXPECT_THROW(parse_hex_int("FF"), FormatError);
  EXPECT_THROW(parse_hex_int("-1"), FormatError);
  EXPECT_THROW(parse_hex_int(""), FormatError);
  EXPECT_THROW(hex_int(mpz_class(-1)), RangeError);
}

TEST(CanonicalJsonTest, RequireU64AcceptsPlainIntegers) {
  Json j = parse_json(R"({"a": 17, "b": "11", "c": -1})");
  EXPECT_EQ(require_u64(j, "a"), 17u);
  EXPECT_EQ(require_u64(j, "b"), 17u);
  EXPECT_THROW(require_u64(j, "c"), FormatError);
  EXPECT_THROW(require_u64(j, "missing"), FormatError);
}

}  // namespace
}  // namespace proofchain
