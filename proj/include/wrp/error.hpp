// Copyright 2026 The wrp-srg Authors.
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

#ifndef WRP_ERROR_HPP_
#define WRP_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wrp {

enum class ErrorCode {
  kNotPrime,
  kEvenCharacteristic,
  kReducibleModulus,
  kInvalidDegree,
  kFieldTooLarge,
  kMixedFields,
  kMixedPrimes,
  kZeroArgument,
  kExponentZero,
  kParsevalViolation,
  kProfileNotWeaklyRegular,
  kParityViolation,
  kZeroNotInSupport,
  kDualNonzeroAtOrigin,
  kNotWrpCertified,
  kUnsupportedSelector,
  kNonIntegralPrediction,
  kNotSymmetric,
  kContainsIdentity,
  kIdentityViolation,
  kEmptyClass,
  kNotConstantOnClass,
  kNotInSpan,
  kInvalidBudget,
  kIoFailure,
  kParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kEvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::kReducibleModulus: return "ReducibleModulus";
    case ErrorCode::kInvalidDegree: return "InvalidDegree";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kMixedPrimes: return "MixedPrimes";
    case ErrorCode::kZeroArgument: return "ZeroArgument";
    case ErrorCode::kExponentZero: return "ExponentZero";
    case ErrorCode::kParsevalViolation: return "ParsevalViolation";
    case ErrorCode::kProfileNotWeaklyRegular: return "ProfileNotWeaklyRegular";
    case ErrorCode::kParityViolation: return "ParityViolation";
    case ErrorCode::kZeroNotInSupport: return "ZeroNotInSupport";
    case ErrorCode::kDualNonzeroAtOrigin: return "DualNonzeroAtOrigin";
    case ErrorCode::kNotWrpCertified: return "NotWrpCertified";
    case ErrorCode::kUnsupportedSelector: return "UnsupportedSelector";
    case ErrorCode::kNonIntegralPrediction: return "NonIntegralPrediction";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kContainsIdentity: return "ContainsIdentity";
    case ErrorCode::kIdentityViolation: return "IdentityViolation";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kNotConstantOnClass: return "NotConstantOnClass";
    case ErrorCode::kNotInSpan: return "NotInSpan";
    case ErrorCode::kInvalidBudget: return "InvalidBudget";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

inline std::optional<ErrorCode> error_code_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kParseError); ++i) {
    auto code = static_cast<ErrorCode>(i);
    if (to_string(code) == name) return code;
  }
  return std::nullopt;
}

// All library failures are reported through this exception type; `code()`
// identifies the failure class, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wrp

#endif  // WRP_ERROR_HPP_
