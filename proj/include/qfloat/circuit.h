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

#ifndef QFLOAT_CIRCUIT_H
#define QFLOAT_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfloat {

using Qubit = std::uint32_t;

/// Raised when a circuit is built or used in a way that breaks its invariants.
struct CircuitError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GateKind : std::uint8_t { X, CNOT, Toffoli, Fredkin };

/// One reversible primitive.
///
/// Qubits are stored controls first:
///   X        {target}
///   CNOT     {control, target}
///   Toffoli  {control, control, target}
///   Fredkin  {control, swap_a, swap_b}
/// Every gate is its own inverse.
struct Gate {
    GateKind kind;
    std::array<Qubit, 3> qubits;

    static Gate x(Qubit t) { return {GateKind::X, {t, 0, 0}}; }
    static Gate cx(Qubit c, Qubit t) { return {GateKind::CNOT, {c, t, 0}}; }
    static Gate ccx(Qubit c1, Qubit c2, Qubit t) { return {GateKind::Toffoli, {c1, c2, t}}; }
    static Gate cswap(Qubit c, Qubit a, Qubit b) { return {GateKind::Fredkin, {c, a, b}}; }

    std::size_t arity() const;
    std::size_t num_controls() const;
    std::span<const Qubit> all() const { return {qubits.data(), arity()}; }
    std::span<const Qubit> controls() const { return {qubits.data(), num_controls()}; }
    std::span<const Qubit> targets() const {
        return {qubits.data() + num_controls(), arity() - num_controls()};
    }
    /// True for gates that cost T gates after lowering (Toffoli and Fredkin).
    bool is_toffoli_class() const { return kind == GateKind::Toffoli || kind == GateKind::Fredkin; }

    bool operator==(const Gate& other) const;
    std::string str() const;
};

/// An ordered view onto circuit qubits. Bit 0 is the least significant.
///
/// Registers returned by Circuit::alloc_register carry a nonzero id and are
/// tracked as live by the circuit. Slices and concatenations are plain views
/// (id 0) and cannot be freed.
class Register {
   public:
    Register() = default;
    Register(std::string name, std::vector<Qubit> qubits, std::uint64_t id = 0)
        : name_(std::move(name)), qubits_(std::move(qubits)), id_(id) {}

    const std::string& name() const { return name_; }
    std::size_t width() const { return qubits_.size(); }
    std::uint64_t id() const { return id_; }
    const std::vector<Qubit>& qubits() const { return qubits_; }

    Qubit operator[](std::size_t i) const { return qubits_.at(i); }
    Qubit msb() const { return qubits_.back(); }

    /// Qubits [lo, lo + len).
    Register slice(std::size_t lo, std::size_t len) const;
    /// Low-order bits first: `*this` then `high`.
    Register concat(const Register& high) const;
    Register concat(Qubit high) const;

    auto begin() const { return qubits_.begin(); }
    auto end() const { return qubits_.end(); }

   private:
    std::string name_;
    std::vector<Qubit> qubits_;
    std::uint64_t id_ = 0;
};

/// Gate list plus qubit bookkeeping.
///
/// Qubits are global indices. Freed qubits go to an ancilla pool; the caller
/// guarantees they are back in |0> on every basis state before freeing them.
/// Construction only ever appends gates.
class Circuit {
   public:
    Circuit() = default;
    /// A circuit with `n` anonymous qubits already allocated (no registers).
    explicit Circuit(std::size_t n) : qubit_count_(static_cast<Qubit>(n)) {}

    Register alloc_register(std::size_t width, std::string name);
    Qubit alloc_qubit(std::string name) { return alloc_register(1, std::move(name))[0]; }
    void free_register(const Register& reg);
    bool is_live(const Register& reg) const { return live_.count(reg.id()) != 0; }

    void emit(const Gate& gate);
    void x(Qubit t) { emit(Gate::x(t)); }
    void cx(Qubit c, Qubit t) { emit(Gate::cx(c, t)); }
    void ccx(Qubit c1, Qubit c2, Qubit t) { emit(Gate::ccx(c1, c2, t)); }
    void cswap(Qubit c, Qubit a, Qubit b) { emit(Gate::cswap(c, a, b)); }

    /// Current end of the gate list, for use with `append_inverse_of`.
    std::size_t mark() const { return gates_.size(); }
    /// Appends the inverse of gates [begin, end): Bennett-style uncompute.
    void append_inverse_of(std::size_t begin, std::size_t end);

    /// Same qubits and registers, reversed gate list.
    Circuit inverse() const;

    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t qubit_count() const { return qubit_count_; }
    const std::set<Qubit>& ancilla_pool() const { return pool_; }
    const std::map<std::uint64_t, Register>& registers() const { return live_; }

   private:
    std::vector<Gate> gates_;
    Qubit qubit_count_ = 0;
    std::map<std::uint64_t, Register> live_;
    std::set<Qubit> pool_;
    std::uint64_t next_id_ = 1;
};

}  // namespace qfloat

#endif
