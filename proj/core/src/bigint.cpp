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

#include "sigmacode/bigint.hpp"

namespace sigmacode {

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

BigInt ipow(std::uint64_t base, unsigned exponent) { return ipow(BigInt(base), exponent); }

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    BigInt quot = num / den;
    if (quot * den < num) ++quot;
    return quot;
}

BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string with_commas(const BigInt& v) {
    std::string digits = (v < 0 ? BigInt(-v) : v).str();
    std::string out;
    const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    out.append(digits, 0, lead);
    for (std::size_t i = lead; i < digits.size(); i += 3) {
        out += ',';
        out.append(digits, i, 3);
    }
    return v < 0 ? "-" + out : out;
}

std::string scientific3(const BigInt& v, SciRounding mode, std::string_view times) {
    if (v < 0) return "-" + scientific3(-v, mode, times);
    if (v < 1000) return v.str();
    std::size_t exponent = v.str().size() - 1;
    const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(exponent - 2));
    BigInt mant = v / scale;
    if (mode == SciRounding::Nearest && (v % scale) * 2 >= scale) ++mant;
    if (mant >= 1000) {
        mant /= 10;
        ++exponent;
    }
    const std::string m = mant.str();
    std::string out;
    out += m[0];
    out += '.';
    out.append(m, 1, 2);
    out += times;
    out += "10^";
    out += std::to_string(exponent);
    return out;
}

}  // namespace sigmacode
