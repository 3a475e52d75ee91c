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

#include "unital/error.hpp"

namespace unital {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kNotQuadraticExtension: return "NotQuadraticExtension";
    case ErrorCode::kMalformedStructure: return "MalformedStructure";
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kInvalidPointSet: return "InvalidPointSet";
    case ErrorCode::kInternalCheckFailed: return "InternalCheckFailed";
    case ErrorCode::kDegeneratePoint: return "DegeneratePoint";
    case ErrorCode::kIncidentPair: return "IncidentPair";
    case ErrorCode::kNotLinearSpace: return "NotLinearSpace";
    case ErrorCode::kNotPartialLinearSpace: return "NotPartialLinearSpace";
    case ErrorCode::kNonNegativeSmallestEigenvalue: return "NonNegativeSmallestEigenvalue";
    case ErrorCode::kIrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorCode::kMalformedGraph: return "MalformedGraph";
    case ErrorCode::kNotAClique: return "NotAClique";
    case ErrorCode::kWrongCliqueSize: return "WrongCliqueSize";
    case ErrorCode::kGraphTooLarge: return "GraphTooLarge";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kQTooSmall: return "QTooSmall";
    case ErrorCode::kAssumptionViolation: return "AssumptionViolation";
    case ErrorCode::kNotAffinePlane: return "NotAffinePlane";
    case ErrorCode::kConstructionFailed: return "ConstructionFailed";
    case ErrorCode::kNoEmbeddingFound: return "NoEmbeddingFound";
    case ErrorCode::kQTooLargeForSearch: return "QTooLargeForSearch";
    case ErrorCode::kPreconditionViolation: return "PreconditionViolation";
    case ErrorCode::kNotInScope: return "NotInScope";
    case ErrorCode::kNotAUnitalGraph: return "NotAUnitalGraph";
    case ErrorCode::kNotAGraphIsomorphism: return "NotAGraphIsomorphism";
    case ErrorCode::kPencilImageNotAPencil: return "PencilImageNotAPencil";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace unital
