// Copyright 2026 The tropcheck Authors.
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropcheck {

enum class ErrorKind {
  kDimensionMismatch,
  kNotSquare,
  kNonFiniteEntries,
  kEmptyPolytope,
  kPositiveCycle,
  kNotIdempotent,
  kNotMember,
  kNotFullRank,
  kNotAnIdempotentColumnSpace,
  kScaleLimitExceeded,
  kInvalidArgument,
  kParse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kNonFiniteEntries: return "NonFiniteEntries";
    case ErrorKind::kEmptyPolytope: return "EmptyPolytope";
    case ErrorKind::kPositiveCycle: return "PositiveCycle";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kNotMember: return "NotMember";
    case ErrorKind::kNotFullRank: return "NotFullRank";
    case ErrorKind::kNotAnIdempotentColumnSpace:
      return "NotAnIdempotentColumnSpace";
    case ErrorKind::kScaleLimitExceeded: return "ScaleLimitExceeded";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the kinds above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tropcheck
