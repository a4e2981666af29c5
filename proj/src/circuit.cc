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

#include "qfloat/circuit.h"

#include <algorithm>
#include <sstream>

namespace qfloat {

std::size_t Gate::arity() const {
    switch (kind) {
        case GateKind::X:
            return 1;
        case GateKind::CNOT:
            return 2;
        default:
            return 3;
    }
}

std::size_t Gate::num_controls() const {
    switch (kind) {
        case GateKind::X:
            return 0;
        case GateKind::CNOT:
        case GateKind::Fredkin:
            return 1;
        case GateKind::Toffoli:
            return 2;
    }
    return 0;
}

bool Gate::operator==(const Gate& other) const {
    if (kind != other.kind) {
        return false;
    }
    auto a = all();
    auto b = other.all();
    return std::equal(a.begin(), a.end(), b.begin());
}

std::string Gate::str() const {
    std::ostringstream out;
    switch (kind) {
        case GateKind::X:
            out << "x";
            break;
        case GateKind::CNOT:
            out << "cx";
            break;
        case GateKind::Toffoli:
            out << "ccx";
            break;
        case GateKind::Fredkin:
            out << "cswap";
            break;
    }
    for (Qubit q : all()) {
        out << ' ' << q;
    }
    return out.str();
}

Register Register::slice(std::size_t lo, std::size_t len) const {
    if (lo + len > qubits_.size()) {
        throw CircuitError("register slice out of range: " + name_);
    }
    return Register(name_, std::vector<Qubit>(qubits_.begin() + lo, qubits_.begin() + lo + len));
}

Register Register::concat(const Register& high) const {
    std::vector<Qubit> q = qubits_;
    q.insert(q.end(), high.qubits_.begin(), high.qubits_.end());
    return Register(name_ + "+" + high.name_, std::move(q));
}

Register Register::concat(Qubit high) const {
    std::vector<Qubit> q = qubits_;
    q.push_back(high);
    return Register(name_, std::move(q));
}

Register Circuit::alloc_register(std::size_t width, std::string name) {
    if (width == 0) {
        throw CircuitError("register width must be at least 1: " + name);
    }
    std::vector<Qubit> q;
    q.reserve(width);
    while (q.size() < width && !pool_.empty()) {
        q.push_back(*pool_.begin());
        pool_.erase(pool_.begin());
    }
    while (q.size() < width) {
        q.push_back(qubit_count_++);
    }
    std::uint64_t id = next_id_++;
    Register reg(std::move(name), std::move(q), id);
    live_.emplace(id, reg);
    return reg;
}

void Circuit::free_register(const Register& reg) {
    auto it = live_.find(reg.id());
    if (reg.id() == 0 || it == live_.end()) {
        throw CircuitError("freeing a register that is not live: " + reg.name());
    }
    for (Qubit q : it->second.qubits()) {
        pool_.insert(q);
    }
    live_.erase(it);
}

void Circuit::emit(const Gate& gate) {
    auto q = gate.all();
    for (std::size_t i = 0; i < q.size(); i++) {
        if (q[i] >= qubit_count_) {
            throw CircuitError("gate references unallocated qubit: " + gate.str());
        }
        for (std::size_t j = 0; j < i; j++) {
            if (q[i] == q[j]) {
                throw CircuitError("gate repeats a qubit: " + gate.str());
            }
        }
    }
    gates_.push_back(gate);
}

void Circuit::append_inverse_of(std::size_t begin, std::size_t end) {
    if (begin > end || end > gates_.size()) {
        throw CircuitError("bad gate range for uncompute");
    }
    gates_.reserve(gates_.size() + (end - begin));
    for (std::size_t k = end; k > begin; k--) {
        gates_.push_back(gates_[k - 1]);
    }
}

Circuit Circuit::inverse() const {
    Circuit result = *this;
    std::reverse(result.gates_.begin(), result.gates_.end());
    return result;
}

}  // namespace qfloat
