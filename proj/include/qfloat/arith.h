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

#ifndef QFLOAT_ARITH_H
#define QFLOAT_ARITH_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qfloat/circuit.h"

namespace qfloat {

// Reversible integer blocks. Registers are little-endian and, unless noted,
// every block restores its inputs and returns any ancillae it borrows from
// the pool in the |0> state.

enum class Signedness { Unsigned, TwosComplement };

struct IntOperandSpec {
    std::size_t width;
    Signedness signedness = Signedness::Unsigned;
};

/// A control that fires on |1> (positive) or on |0> (negative).
struct Control {
    Qubit qubit;
    bool positive = true;
};

/// target ^= AND of all controls. Three or more controls are decomposed into
/// Toffolis over a chain of pool ancillae (2k - 3 Toffolis for k controls).
void build_mcx(Circuit& c, std::span<const Control> controls, Qubit target);
void build_mcx(Circuit& c, std::initializer_list<Control> controls, Qubit target);

/// target ^= [read(reg) == value].
void build_equals_const(Circuit& c, const Register& reg, std::uint64_t value, Qubit target);

/// b <- a + b mod 2^n. Ancilla-free ripple adder of Takahashi, Tani and Kunihiro.
void build_adder(Circuit& c, const Register& a, const Register& b);

/// b <- a + b mod 2^n, carry_out ^= bit n of a + b.
void build_adder_with_carry(Circuit& c, const Register& a, const Register& b, Qubit carry_out);

/// b <- b - a mod 2^n.
void build_subtractor(Circuit& c, const Register& a, const Register& b);

/// result ^= [a < b] (unsigned). Subtracts on n + 1 bits, then adds back on n bits.
void build_comparator(Circuit& c, const Register& a, const Register& b, Qubit result);

/// result ^= [a < b] from the carry of ~a + b alone, through a majority
/// chain that is undone in place: 2n Toffolis and one pool ancilla.
void build_less_than(Circuit& c, const Register& a, const Register& b, Qubit result);

/// result ^= carry out of a + constant. Requires constant < 2^n.
void build_carry_const(Circuit& c, const Register& a, std::uint64_t constant, Qubit result);

/// If ctrl: b <- a + b mod 2^n.
void build_ctrl_adder(Circuit& c, Qubit ctrl, const Register& a, const Register& b);

/// If ctrl: a <- a + 1 mod 2^n. Uses n - 1 pool ancillae.
void build_incrementer(Circuit& c, Qubit ctrl, const Register& a);

/// If sign: m <- -m mod 2^n (two's complement negation).
void build_twos_complement(Circuit& c, Qubit sign, const Register& m);

/// Same as build_twos_complement but ancilla-free: `borrowed` is any register
/// of the same width, disjoint from sign and m, in an arbitrary state. It is
/// restored afterwards. Uses m - g - ~g = m + 1.
void build_twos_complement_borrowed(Circuit& c, Qubit sign, const Register& m, const Register& borrowed);

/// out <- a * b via shift-and-add over the bits of a, least significant first.
///
/// `out` must be 2n wide and hold 0; anything else gives an unspecified (but
/// still reversible) result. `zero_scratch`, when given, is a qubit known to
/// be |0> that the multiplier may borrow; otherwise one is taken from the pool.
void build_multiplier(Circuit& c, const Register& a, const Register& b, const Register& out,
                      std::optional<Qubit> zero_scratch = std::nullopt);

}  // namespace qfloat

#endif
