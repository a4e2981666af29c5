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

#ifndef QFLOAT_RESOURCES_H
#define QFLOAT_RESOURCES_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qfloat/circuit.h"

namespace qfloat {

/// Clifford+T cost of a circuit. Toffolis cost 7 T gates in T-depth 3;
/// Fredkins are lowered to CNOT, Toffoli, CNOT first.
struct ResourceReport {
    std::uint64_t qubits = 0;
    std::uint64_t toffoli_count = 0;
    std::uint64_t fredkin_count = 0;
    std::uint64_t t_count = 0;
    std::uint64_t t_depth = 0;
    /// Largest number of T gates in one T layer: 3 per Toffoli in the widest
    /// Toffoli layer (each Toffoli puts at most 3 of its 7 T gates in a layer).
    std::uint64_t parallel_t_max = 0;
    std::uint64_t kq = 0;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv() const;
    std::string to_table() const;

    bool operator==(const ResourceReport&) const = default;
};

/// CNOT(b, a), Toffoli(c, a, b), CNOT(b, a).
std::array<Gate, 3> lower_fredkin(const Gate& cswap);

/// Same qubits, every Fredkin replaced by its lowering.
Circuit lower_fredkins(const Circuit& c);

/// ASAP layer (1-based) of every Toffoli-class gate, 0 for Clifford gates.
/// Each gate lands right after the last Toffoli layer of any of its qubits;
/// Clifford gates pass dependencies on without adding depth.
std::vector<std::uint64_t> toffoli_layers(const Circuit& c);

ResourceReport count_resources(const Circuit& c);

/// T-depth times qubits.
std::uint64_t compute_kq(const ResourceReport& r);

struct NamedReport {
    std::string name;
    ResourceReport report;
};

struct KqRatio {
    std::string numerator;
    std::string denominator;
    double ratio = 0;
};

/// KQ ratio of every ordered pair (i, j), i < j, as kq_i / kq_j. Needs at
/// least two reports.
std::vector<KqRatio> compare_formats(const std::vector<NamedReport>& reports);

/// 1 - kq / baseline, e.g. 0.393 for a 39.3% improvement.
double kq_improvement(std::uint64_t kq, std::uint64_t baseline);

}  // namespace qfloat

#endif
