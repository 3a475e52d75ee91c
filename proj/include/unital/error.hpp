// Copyright 2026 The Unital Authors
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

#ifndef UNITAL_ERROR_HPP_
#define UNITAL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace unital {

enum class ErrorCode {
  // algebra
  kCompositeCharacteristic,
  kTooLarge,
  kInvalidArgument,
  kDivisionByZero,
  kMixedFields,
  kNotQuadraticExtension,
  // incidence
  kMalformedStructure,
  kNotPrimePower,
  kInvalidPointSet,
  kInternalCheckFailed,
  kDegeneratePoint,
  kIncidentPair,
  kNotLinearSpace,
  kNotPartialLinearSpace,
  // confluence
  kNonNegativeSmallestEigenvalue,
  kIrrationalEigenvalues,
  kMalformedGraph,
  // cliques
  kNotAClique,
  kWrongCliqueSize,
  kGraphTooLarge,
  // linspace
  kLemmaViolation,
  kQTooSmall,
  kAssumptionViolation,
  kNotAffinePlane,
  kConstructionFailed,
  kNoEmbeddingFound,
  kQTooLargeForSearch,
  kPreconditionViolation,
  kNotInScope,
  // reconstruct
  kNotAUnitalGraph,
  kNotAGraphIsomorphism,
  kPencilImageNotAPencil,
  // io
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the failure class, `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace unital

#endif  // UNITAL_ERROR_HPP_
