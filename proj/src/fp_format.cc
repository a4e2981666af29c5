// Copyright 2026 The qfloat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfloat/fp_format.h"

#include <bit>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qfloat {

void FpFormat::validate() const {
    if (exponent_bits < 2 || mantissa_bits < 1 || width() > 64 || mantissa_bits > 58) {
        throw std::invalid_argument("unsupported floating-point format " + str() +
                                    " (need E >= 2, 1 <= M <= 58, 1 + M + E <= 64)");
    }
}

FpFormat FpFormat::parse(const std::string& text) {
    static const std::regex re("e([0-9]+)m([0-9]+)", std::regex::icase);
    std::smatch m;
    if (!std::regex_match(text, m, re)) {
        throw std::invalid_argument("bad format '" + text + "', expected eEmM such as e8m7");
    }
    FpFormat f{std::stoi(m[1]), std::stoi(m[2])};
    f.validate();
    return f;
}

std::string FpFormat::str() const {
    return "e" + std::to_string(exponent_bits) + "m" + std::to_string(mantissa_bits);
}

FpFormat FpFormat::for_width(int bits) {
    switch (bits) {
        case 16:
            return {8, 7};
        case 32:
            return {8, 23};
        case 64:
            return {11, 52};
        default:
            throw std::invalid_argument("no standard layout for width " + std::to_string(bits));
    }
}

double FpValue::to_double(const FpFormat& format) const {
    double s = sign ? -1.0 : 1.0;
    switch (cls) {
        case FpClass::Zero:
            return 0.0;
        case FpClass::Infinity:
            return s * HUGE_VAL;
        case FpClass::Normal:
            break;
    }
    return s * std::ldexp(static_cast<double>(mantissa), static_cast<int>(exponent - format.mantissa_bits));
}

std::string FpValue::str(const FpFormat& format) const {
    std::ostringstream out;
    switch (cls) {
        case FpClass::Zero:
            return "0";
        case FpClass::Infinity:
            return sign ? "-inf" : "inf";
        case FpClass::Normal:
            out.precision(17);
            out << to_double(format);
            return out.str();
    }
    return "?";
}

EncodedFp encode(const FpFormat& format, const FpValue& value) {
    const int M = format.mantissa_bits;
    const int E = format.exponent_bits;
    const std::uint64_t exp_mask = (std::uint64_t{1} << E) - 1;
    std::uint64_t sign = 0, fraction = 0;
    std::int64_t exponent = 0;
    switch (value.cls) {
        case FpClass::Zero:
            exponent = format.zero_exponent();
            break;
        case FpClass::Infinity:
            sign = value.sign;
            exponent = format.inf_exponent();
            break;
        case FpClass::Normal:
            if (value.mantissa >> M != 1) {
                throw std::invalid_argument("mantissa " + std::to_string(value.mantissa) +
                                            " is not normalized to " + std::to_string(M + 1) + " bits");
            }
            if (value.exponent < format.min_exponent() || value.exponent > format.max_exponent()) {
                throw std::invalid_argument("exponent " + std::to_string(value.exponent) + " out of range for " +
                                            format.str());
            }
            sign = value.sign;
            fraction = value.mantissa & ((std::uint64_t{1} << M) - 1);
            exponent = value.exponent;
            break;
    }
    std::uint64_t bits = (sign << (M + E)) | (fraction << E) | (static_cast<std::uint64_t>(exponent) & exp_mask);
    return {bits};
}

FpValue decode(const FpFormat& format, EncodedFp encoded) {
    const int M = format.mantissa_bits;
    const int E = format.exponent_bits;
    std::uint64_t raw_exp = encoded.bits & ((std::uint64_t{1} << E) - 1);
    std::int64_t exponent = static_cast<std::int64_t>(raw_exp);
    if (raw_exp >> (E - 1)) {
        exponent -= std::int64_t{1} << E;
    }
    bool sign = (encoded.bits >> (M + E)) & 1;
    if (exponent == format.zero_exponent()) {
        return FpValue::zero();
    }
    if (exponent == format.inf_exponent()) {
        return FpValue::infinity(sign);
    }
    std::uint64_t fraction = (encoded.bits >> E) & ((std::uint64_t{1} << M) - 1);
    return FpValue::normal(sign, fraction | (std::uint64_t{1} << M), exponent);
}

FpValue from_double(const FpFormat& format, double x) {
    if (std::isnan(x)) {
        throw std::invalid_argument("NaN has no encoding");
    }
    if (x == 0.0) {
        return FpValue::zero();
    }
    bool sign = std::signbit(x);
    if (std::isinf(x)) {
        return FpValue::infinity(sign);
    }
    int e2;
    double frac = std::frexp(std::fabs(x), &e2);  // |x| = frac * 2^e2, frac in [0.5, 1)
    std::int64_t exponent = e2 - 1;
    auto mantissa = static_cast<std::uint64_t>(std::ldexp(frac, format.mantissa_bits + 1));
    if (exponent < format.min_exponent()) {
        return FpValue::zero();
    }
    if (exponent > format.max_exponent()) {
        return FpValue::infinity(sign);
    }
    return FpValue::normal(sign, mantissa, exponent);
}

namespace {

using u128 = unsigned __int128;

int floor_log2(u128 v) {
    auto hi = static_cast<std::uint64_t>(v >> 64);
    if (hi != 0) {
        return 127 - std::countl_zero(hi);
    }
    return 63 - std::countl_zero(static_cast<std::uint64_t>(v));
}

FpValue saturate(const FpFormat& format, bool sign, std::uint64_t mantissa, std::int64_t exponent) {
    if (exponent <= format.zero_exponent()) {
        return FpValue::zero();
    }
    if (exponent >= format.inf_exponent()) {
        return FpValue::infinity(sign);
    }
    return FpValue::normal(sign, mantissa, exponent);
}

}  // namespace

FpValue fp_add_ref(const FpFormat& format, const FpValue& a, const FpValue& b) {
    if (a.is_inf() || b.is_inf()) {
        if (a.is_inf() && b.is_inf()) {
            return FpValue::infinity(a.sign && b.sign);
        }
        return FpValue::infinity(a.is_inf() ? a.sign : b.sign);
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.is_zero()) {
        return b;
    }
    const int M = format.mantissa_bits;
    const int guard = M + 1;
    FpValue x = a, y = b;
    if (std::pair(x.exponent, x.mantissa) < std::pair(y.exponent, y.mantissa)) {
        std::swap(x, y);
    }
    std::int64_t gap = x.exponent - y.exponent;
    u128 big = u128{x.mantissa} << guard;
    u128 small = gap >= alignment_cutoff(format) ? 0 : (u128{y.mantissa} << guard) >> gap;
    u128 sum = x.sign == y.sign ? big + small : big - small;
    if (sum == 0) {
        return FpValue::zero();
    }
    int top = floor_log2(sum);
    auto mantissa = static_cast<std::uint64_t>(sum >> (top - M));
    return saturate(format, x.sign, mantissa, x.exponent - M - guard + top);
}

FpValue fp_mul_ref(const FpFormat& format, const FpValue& a, const FpValue& b) {
    if (a.is_zero() || b.is_zero()) {
        return FpValue::zero();
    }
    bool sign = a.sign != b.sign;
    if (a.is_inf() || b.is_inf()) {
        return FpValue::infinity(sign);
    }
    const int M = format.mantissa_bits;
    u128 product = u128{a.mantissa} * b.mantissa;
    int overflow = static_cast<int>(product >> (2 * M + 1));
    auto mantissa = static_cast<std::uint64_t>(product >> (M + overflow));
    return saturate(format, sign, mantissa, a.exponent + b.exponent + overflow);
}

}  // namespace qfloat
