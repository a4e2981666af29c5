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

#include "qfloat/circuit_io.h"

#include <istream>
#include <ostream>
#include <sstream>

namespace qfloat {

void write_circuit(std::ostream& out, const Circuit& circuit) {
    out << "qubits " << circuit.qubit_count() << '\n';
    for (const Gate& g : circuit.gates()) {
        out << g.str() << '\n';
    }
}

std::string circuit_to_text(const Circuit& circuit) {
    std::ostringstream out;
    write_circuit(out, circuit);
    return out.str();
}

Circuit read_circuit(std::istream& in) {
    Circuit circuit;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw CircuitError("line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream words(line);
        std::string op;
        if (!(words >> op) || op[0] == '#') {
            continue;
        }
        if (op == "qubits") {
            long long n;
            if (have_header || !(words >> n) || n < 0) {
                fail("bad qubits header");
            }
            circuit = Circuit(static_cast<std::size_t>(n));
            have_header = true;
            continue;
        }
        if (!have_header) {
            fail("gate before 'qubits' header");
        }
        std::size_t arity;
        GateKind kind;
        if (op == "x") {
            kind = GateKind::X, arity = 1;
        } else if (op == "cx") {
            kind = GateKind::CNOT, arity = 2;
        } else if (op == "ccx") {
            kind = GateKind::Toffoli, arity = 3;
        } else if (op == "cswap") {
            kind = GateKind::Fredkin, arity = 3;
        } else {
            fail("unknown gate '" + op + "'");
        }
        Gate g{kind, {0, 0, 0}};
        for (std::size_t i = 0; i < arity; i++) {
            long long q;
            if (!(words >> q) || q < 0) {
                fail("expected " + std::to_string(arity) + " qubit indices");
            }
            g.qubits[i] = static_cast<Qubit>(q);
        }
        std::string extra;
        if (words >> extra) {
            fail("trailing text '" + extra + "'");
        }
        try {
            circuit.emit(g);
        } catch (const CircuitError& e) {
            fail(e.what());
        }
    }
    if (!have_header) {
        throw CircuitError("missing 'qubits' header");
    }
    return circuit;
}

Circuit circuit_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_circuit(in);
}

}  // namespace qfloat
