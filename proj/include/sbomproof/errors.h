// Copyright 2026 The sbomproof Authors.
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

#ifndef SBOMPROOF_ERRORS_H_
#define SBOMPROOF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbomproof {

enum class ErrorCode {
  kUsage,
  kIo,
  kParse,
  kSchema,
  kDuplicatePackage,
  kDanglingDependency,
  kIndexCollision,
  kUnresolvableDependency,
  kNonCompliantStep,
  kBackend,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base for every error the library raises. Verification never throws; it
// reports through VerifyResult instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message)
      : Error(ErrorCode::kUsage, message) {}
};

// Malformed input. `line` is 1-based for line-oriented inputs, 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IndexCollisionError : public Error {
 public:
  IndexCollisionError(std::string first_key, std::string second_key,
                      unsigned long long index);

  const std::string& first_key() const { return first_key_; }
  const std::string& second_key() const { return second_key_; }
  unsigned long long index() const { return index_; }

 private:
  std::string first_key_;
  std::string second_key_;
  unsigned long long index_;
};

// Prove-time failure tied to one SBOM step. The message names only the
// 1-based step ordinal; callers that want the dependency identity in a
// human-readable log must look it up themselves.
class StepError : public Error {
 public:
  StepError(ErrorCode code, std::size_t ordinal);

  std::size_t ordinal() const { return ordinal_; }

 private:
  std::size_t ordinal_;
};

}  // namespace sbomproof

#endif  // SBOMPROOF_ERRORS_H_
