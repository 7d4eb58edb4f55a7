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

#include "sbomproof/errors.h"

#include <utility>

namespace sbomproof {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
      return "UsageError";
    case ErrorCode::kIo:
      return "IoError";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kSchema:
      return "SchemaError";
    case ErrorCode::kDuplicatePackage:
      return "DuplicatePackage";
    case ErrorCode::kDanglingDependency:
      return "DanglingDependency";
    case ErrorCode::kIndexCollision:
      return "IndexCollision";
    case ErrorCode::kUnresolvableDependency:
      return "UnresolvableDependency";
    case ErrorCode::kNonCompliantStep:
      return "NonCompliantStep";
    case ErrorCode::kBackend:
      return "BackendError";
  }
  return "Unknown";
}

ParseError::ParseError(const std::string& message, std::size_t line)
    : Error(ErrorCode::kParse,
            line == 0 ? message
                      : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

IndexCollisionError::IndexCollisionError(std::string first_key,
                                         std::string second_key,
                                         unsigned long long index)
    : Error(ErrorCode::kIndexCollision,
            "index collision at slot " + std::to_string(index) + ": '" +
                first_key + "' and '" + second_key + "'"),
      first_key_(std::move(first_key)),
      second_key_(std::move(second_key)),
      index_(index) {}

StepError::StepError(ErrorCode code, std::size_t ordinal)
    : Error(code, std::string(ErrorCodeName(code)) + "(" +
                      std::to_string(ordinal) + ")"),
      ordinal_(ordinal) {}

}  // namespace sbomproof
