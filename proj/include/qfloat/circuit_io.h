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

#ifndef QFLOAT_CIRCUIT_IO_H
#define QFLOAT_CIRCUIT_IO_H

#include <iosfwd>
#include <string>

#include "qfloat/circuit.h"

namespace qfloat {

// Text format, one item per line:
//   qubits N
//   x t | cx c t | ccx c1 c2 t | cswap c a b
// Indices are zero-based. Blank lines and lines starting with '#' are ignored.

void write_circuit(std::ostream& out, const Circuit& circuit);
std::string circuit_to_text(const Circuit& circuit);

/// Parses the text format. Throws CircuitError with a line number on bad input.
Circuit read_circuit(std::istream& in);
Circuit circuit_from_text(const std::string& text);

}  // namespace qfloat

#endif
