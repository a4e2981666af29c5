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

#include "qfloat/sim.h"

#include <algorithm>
#include <cctype>

namespace qfloat {

std::string BasisState::to_hex() const {
    static const char digits[] = "0123456789abcdef";
    std::size_t nibbles = std::max<std::size_t>(1, (bits_.size() + 3) / 4);
    std::string out(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; k++) {
        int v = 0;
        for (std::size_t b = 0; b < 4; b++) {
            std::size_t q = 4 * k + b;
            if (q < bits_.size() && bits_[q]) {
                v |= 1 << b;
            }
        }
        out[nibbles - 1 - k] = digits[v];
    }
    return out;
}

std::string BasisState::to_bin() const {
    std::string out(bits_.size(), '0');
    for (std::size_t q = 0; q < bits_.size(); q++) {
        out[bits_.size() - 1 - q] = bits_[q] ? '1' : '0';
    }
    return out;
}

BasisState BasisState::from_hex(const std::string& hex, std::size_t n) {
    std::string s = hex;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s = s.substr(2);
    }
    BasisState state(n);
    std::size_t q = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else {
            throw CircuitError(std::string("bad hex digit '") + *it + "'");
        }
        for (int b = 0; b < 4; b++, q++) {
            if ((v >> b) & 1) {
                if (q >= n) {
                    throw CircuitError("hex state has more bits than the circuit has qubits");
                }
                state.set(static_cast<Qubit>(q), true);
            }
        }
    }
    return state;
}

void simulate_inplace(const Circuit& circuit, BasisState& state) {
    if (state.size() != circuit.qubit_count()) {
        throw CircuitError("basis state length " + std::to_string(state.size()) +
                           " does not match circuit qubit count " +
                           std::to_string(circuit.qubit_count()));
    }
    std::uint8_t* b = state.data();
    for (const Gate& g : circuit.gates()) {
        const auto& q = g.qubits;
        switch (g.kind) {
            case GateKind::X:
                b[q[0]] ^= 1;
                break;
            case GateKind::CNOT:
                b[q[1]] ^= b[q[0]];
                break;
            case GateKind::Toffoli:
                b[q[2]] ^= b[q[0]] & b[q[1]];
                break;
            case GateKind::Fredkin: {
                std::uint8_t diff = (b[q[1]] ^ b[q[2]]) & b[q[0]];
                b[q[1]] ^= diff;
                b[q[2]] ^= diff;
                break;
            }
        }
    }
}

BasisState simulate(const Circuit& circuit, BasisState state) {
    simulate_inplace(circuit, state);
    return state;
}

std::uint64_t read_register(const BasisState& state, const Register& reg) {
    if (reg.width() > 64) {
        throw CircuitError("register too wide to read as an integer: " + reg.name());
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < reg.width(); i++) {
        if (state.get(reg[i])) {
            v |= std::uint64_t{1} << i;
        }
    }
    return v;
}

void write_register(BasisState& state, const Register& reg, std::uint64_t value) {
    if (reg.width() > 64) {
        throw CircuitError("register too wide to write as an integer: " + reg.name());
    }
    for (std::size_t i = 0; i < reg.width(); i++) {
        state.set(reg[i], (value >> i) & 1);
    }
}

}  // namespace qfloat
