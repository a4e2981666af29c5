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

#ifndef QFLOAT_FP_CIRCUITS_H
#define QFLOAT_FP_CIRCUITS_H

#include <string>

#include "qfloat/circuit.h"
#include "qfloat/fp_format.h"

namespace qfloat {

/// Qubits holding one floating-point value.
struct FpRegisters {
    FpFormat format;
    Register exponent;
    Register mantissa;  // stored fraction bits, without the implicit 1
    Qubit sign = 0;

    /// All bits in encoding order, exponent bit 0 first and the sign last.
    Register all() const { return exponent.concat(mantissa).concat(sign); }
};

/// Allocates exponent, fraction and sign registers (in that order).
FpRegisters alloc_fp(Circuit& c, const FpFormat& format, const std::string& name);

enum class ShiftDirection { Left, Right };

/// x <- x * 2^s (left) or x / 2^s (right).
///
/// Stage k swaps bits 2^k apart, controlled on s[k]. The bits shifted out
/// must be 0; otherwise they wrap around and the result is garbage.
void build_shifter(Circuit& c, const Register& s, const Register& x, ShiftDirection direction);

/// Arithmetic right shift of a two's-complement x by s. The low s bits of x
/// must be 0.
void build_shifter_signed(Circuit& c, const Register& s, const Register& x);

/// p <- floor(log2 x) and f <- [x == 0]. p and f must start at 0 and p needs
/// ceil(log2 n) bits (at least 1).
void build_first_one(Circuit& c, const Register& x, const Register& p, Qubit f);

/// z <- number of leading zeros of x, f <- [x == 0] (z = 0 then).
void build_leading_zeros(Circuit& c, const Register& x, const Register& z, Qubit f);

/// Result of build_renormalize. Both registers stay allocated and hold
/// garbage that the caller uncomputes.
struct Renormalized {
    Register shift;
    Register zero_flag;
};

/// Shifts `mantissa` left until its top bit is 1 and subtracts the shift
/// from the two's-complement `exponent`. A zero mantissa sets zero_flag and
/// leaves both registers alone. `exponent` must be wider than the shift.
Renormalized build_renormalize(Circuit& c, const Register& mantissa, const Register& exponent);

/// out <- x + y, truncated (see fp_add_ref). out must hold 0.
void build_fp_adder(Circuit& c, const FpRegisters& x, const FpRegisters& y, const FpRegisters& out);

/// out <- x * y, truncated (see fp_mul_ref). out must hold 0.
void build_fp_multiplier(Circuit& c, const FpRegisters& x, const FpRegisters& y, const FpRegisters& out);

}  // namespace qfloat

#endif
