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

#ifndef SIGMACODE_ERROR_HPP
#define SIGMACODE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmacode {

enum class ErrorCode {
    // gf
    NotPrime,
    UnsupportedSize,
    ReducibleModulus,
    DivisionByZero,
    NoEmbedding,
    // curve
    UnsupportedModel,
    UnsupportedDegree,
    UnsupportedFactor,
    PrecisionExceeded,
    ParseError,
    // zeta
    HasseWeilViolation,
    NotASquare,
    FunctionalEquation,
    // rrspace
    UnsupportedSupport,
    DimensionMismatch,
    TooLarge,
    // codes
    NoDisjointSupport,
    UnsupportedS,
    DuplicateCodeword,
    BadMagic,
    BadVersion,
    TruncatedFile,
    SymbolOutOfRange,
    // bounds
    EmptyDomain,
    BadAlphabets,
    NotPrimePower,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace sigmacode

#endif
