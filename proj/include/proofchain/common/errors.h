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

#ifndef PROOFCHAIN_COMMON_ERRORS_H_
#define PROOFCHAIN_COMMON_ERRORS_H_

#include <stdexcept>
#include <string>

namespace proofchain {

// Base class for every error raised by the framework. Verification failures
// are not errors: verifiers return a result value instead of throwing.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar or integer argument lies outside its permitted range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid argument (empty list, bad size, zero key, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The prover was asked to prove a false statement.
class ProofGenerationError : public Error {
 public:
  using Error::Error;
};

// Logical timestamp went backwards.
class OrderingError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

// Proof-graph construction rejected (duplicate id, dangling endpoint, cycle,
// illegal domain crossing).
class BuildError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace proofchain

#endif  // PROOFCHAIN_COMMON_ERRORS_H_
