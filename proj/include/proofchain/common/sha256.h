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

#ifndef PROOFCHAIN_COMMON_SHA256_H_
#define PROOFCHAIN_COMMON_SHA256_H_

#include <memory>
#include <string_view>

#include "proofchain/common/bytes.h"

struct evp_md_ctx_st;

namespace proofchain {

// Incremental SHA-256 over OpenSSL's EVP interface.
class Sha256 {
 public:
  Sha256();
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;
  ~Sha256();

  Sha256& update(ByteSpan data);
  Sha256& update(std::string_view data);
  Sha256& update(std::uint8_t byte);
  // Finalizes the context; the object must not be updated afterwards.
  Digest finish();

 private:
  struct CtxDeleter {
    void operator()(evp_md_ctx_st* ctx) const;
  };
  std::unique_ptr<evp_md_ctx_st, CtxDeleter> ctx_;
};

Digest sha256(ByteSpan data);
Digest sha256(std::string_view data);

}  // namespace proofchain

#endif  // PROOFCHAIN_COMMON_SHA256_H_
