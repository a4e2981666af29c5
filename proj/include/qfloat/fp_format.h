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

#ifndef QFLOAT_FP_FORMAT_H
#define QFLOAT_FP_FORMAT_H

#include <cstdint>
#include <string>

namespace qfloat {

/// A binary floating-point layout: 1 sign bit, M stored fraction bits (the
/// leading 1 is implicit) and an E-bit two's-complement exponent.
///
/// The most negative exponent code is reserved for zero and the most positive
/// one for infinity, whatever the fraction bits hold. Canonical encodings:
/// zero is sign 0, fraction 0, exponent 100..0; infinity is fraction 0,
/// exponent 011..1 with its sign.
struct FpFormat {
    int exponent_bits = 8;
    int mantissa_bits = 7;

    int width() const { return 1 + mantissa_bits + exponent_bits; }

    /// Exponent codes, as signed integers.
    std::int64_t zero_exponent() const { return -(std::int64_t{1} << (exponent_bits - 1)); }
    std::int64_t inf_exponent() const { return (std::int64_t{1} << (exponent_bits - 1)) - 1; }
    std::int64_t min_exponent() const { return zero_exponent() + 1; }
    std::int64_t max_exponent() const { return inf_exponent() - 1; }

    /// Throws std::invalid_argument unless E >= 2, M >= 1 and the width fits 64 bits.
    void validate() const;

    /// Parses "eEmM", e.g. "e8m7".
    static FpFormat parse(const std::string& text);
    std::string str() const;

    /// Layout used for a standard width: 16 -> e8m7, 32 -> e8m23, 64 -> e11m52.
    static FpFormat for_width(int bits);

    bool operator==(const FpFormat&) const = default;
};

enum class FpClass { Normal, Zero, Infinity };

/// A decoded value: (-1)^sign * mantissa * 2^(exponent - M).
///
/// For normal values `mantissa` has M + 1 bits with the top one set; zero and
/// infinity carry mantissa 0.
struct FpValue {
    bool sign = false;
    std::uint64_t mantissa = 0;
    std::int64_t exponent = 0;
    FpClass cls = FpClass::Zero;

    static FpValue zero() { return {}; }
    static FpValue infinity(bool sign) { return {sign, 0, 0, FpClass::Infinity}; }
    static FpValue normal(bool sign, std::uint64_t mantissa, std::int64_t exponent) {
        return {sign, mantissa, exponent, FpClass::Normal};
    }

    bool is_zero() const { return cls == FpClass::Zero; }
    bool is_inf() const { return cls == FpClass::Infinity; }
    bool is_normal() const { return cls == FpClass::Normal; }

    double to_double(const FpFormat& format) const;
    std::string str(const FpFormat& format) const;

    bool operator==(const FpValue&) const = default;
};

/// Raw bit pattern: bit layout, from the top, sign | fraction | exponent.
struct EncodedFp {
    std::uint64_t bits = 0;
    bool operator==(const EncodedFp&) const = default;
};

EncodedFp encode(const FpFormat& format, const FpValue& value);
FpValue decode(const FpFormat& format, EncodedFp bits);

/// Truncates a double toward zero into the format; out-of-range magnitudes
/// become zero or infinity.
FpValue from_double(const FpFormat& format, double x);

/// Software reference for the adder circuit. Operands are ordered by
/// magnitude, the smaller is aligned with M + 1 guard bits (dropped entirely
/// when the exponent gap is M + 2 or more), and the sum is truncated toward zero.
FpValue fp_add_ref(const FpFormat& format, const FpValue& a, const FpValue& b);

/// Software reference for the multiplier circuit: full (M+1)x(M+1) product,
/// one-bit overflow renormalization, truncation toward zero.
FpValue fp_mul_ref(const FpFormat& format, const FpValue& a, const FpValue& b);

/// Alignment cutoff: operands further apart than this many binades are not added.
inline int alignment_cutoff(const FpFormat& format) { return format.mantissa_bits + 2; }

}  // namespace qfloat

#endif
