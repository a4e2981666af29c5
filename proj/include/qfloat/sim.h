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

#ifndef QFLOAT_SIM_H
#define QFLOAT_SIM_H

#include <cstdint>
#include <string>
#include <vector>

#include "qfloat/circuit.h"

namespace qfloat {

/// A computational basis state, one byte per qubit (0 or 1).
class BasisState {
   public:
    BasisState() = default;
    explicit BasisState(std::size_t n) : bits_(n, 0) {}

    std::size_t size() const { return bits_.size(); }
    bool get(Qubit q) const { return bits_.at(q) != 0; }
    void set(Qubit q, bool v) { bits_.at(q) = v ? 1 : 0; }

    std::uint8_t* data() { return bits_.data(); }
    const std::uint8_t* data() const { return bits_.data(); }

    /// Hex string, most significant nibble first; qubit 0 is bit 0.
    std::string to_hex() const;
    /// Binary string, qubit 0 last.
    std::string to_bin() const;
    /// Parses `to_hex` output (an optional 0x prefix is accepted) into `n` qubits.
    static BasisState from_hex(const std::string& hex, std::size_t n);

    bool operator==(const BasisState&) const = default;

   private:
    std::vector<std::uint8_t> bits_;
};

/// Applies every gate of `circuit` to `state` in place.
void simulate_inplace(const Circuit& circuit, BasisState& state);

/// Pure form of `simulate_inplace`.
BasisState simulate(const Circuit& circuit, BasisState state);

/// Little-endian value of a register (at most 64 qubits).
std::uint64_t read_register(const BasisState& state, const Register& reg);

/// Writes the low `reg.width()` bits of `value` into the register's qubits.
void write_register(BasisState& state, const Register& reg, std::uint64_t value);

}  // namespace qfloat

#endif
