/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sigmacode/error.hpp"

namespace sigmacode {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::UnsupportedSize: return "UnsupportedSize";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NoEmbedding: return "NoEmbedding";
        case ErrorCode::UnsupportedModel: return "UnsupportedModel";
        case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
        case ErrorCode::UnsupportedFactor: return "UnsupportedFactor";
        case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::HasseWeilViolation: return "HasseWeilViolation";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::FunctionalEquation: return "FunctionalEquation";
        case ErrorCode::UnsupportedSupport: return "UnsupportedSupport";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NoDisjointSupport: return "NoDisjointSupport";
        case ErrorCode::UnsupportedS: return "UnsupportedS";
        case ErrorCode::DuplicateCodeword: return "DuplicateCodeword";
        case ErrorCode::BadMagic: return "BadMagic";
        case ErrorCode::BadVersion: return "BadVersion";
        case ErrorCode::TruncatedFile: return "TruncatedFile";
        case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::BadAlphabets: return "BadAlphabets";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace sigmacode
