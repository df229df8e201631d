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

#ifndef SIGMACODE_BIGINT_HPP
#define SIGMACODE_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sigmacode {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned exponent);
BigInt ipow(std::uint64_t base, unsigned exponent);

/// Ceiling of num/den for den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Largest r with r*r <= n, n >= 0.
BigInt isqrt(const BigInt& n);

std::string to_decimal(const BigInt& v);

/// 1234567 -> "1,234,567".
std::string with_commas(const BigInt& v);

enum class SciRounding { Nearest, Truncate };

/// Three significant digits, e.g. "4.85×10^19". Values below 1000 print exactly.
std::string scientific3(const BigInt& v, SciRounding mode, std::string_view times = "×");

}  // namespace sigmacode

#endif
