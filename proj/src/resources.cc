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

#include "qfloat/resources.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qfloat {

std::string ResourceReport::to_json() const {
    nlohmann::ordered_json j;
    j["qubits"] = qubits;
    j["toffoli_count"] = toffoli_count;
    j["fredkin_count"] = fredkin_count;
    j["t_count"] = t_count;
    j["t_depth"] = t_depth;
    j["parallel_t_max"] = parallel_t_max;
    j["kq"] = kq;
    return j.dump(2);
}

std::string ResourceReport::csv_header() {
    return "qubits,toffoli_count,fredkin_count,t_count,t_depth,parallel_t_max,kq";
}

std::string ResourceReport::to_csv() const {
    std::ostringstream os;
    os << qubits << ',' << toffoli_count << ',' << fredkin_count << ',' << t_count << ',' << t_depth << ','
       << parallel_t_max << ',' << kq;
    return os.str();
}

std::string ResourceReport::to_table() const {
    std::ostringstream os;
    os << "qubits          " << qubits << '\n'
       << "toffoli_count   " << toffoli_count << '\n'
       << "fredkin_count   " << fredkin_count << '\n'
       << "t_count         " << t_count << '\n'
       << "t_depth         " << t_depth << '\n'
       << "parallel_t_max  " << parallel_t_max << '\n'
       << "kq              " << kq << '\n';
    return os.str();
}

std::array<Gate, 3> lower_fredkin(const Gate& g) {
    if (g.kind != GateKind::Fredkin) {
        throw CircuitError("lower_fredkin: not a Fredkin gate: " + g.str());
    }
    Qubit c = g.qubits[0], a = g.qubits[1], b = g.qubits[2];
    return {Gate::cx(b, a), Gate::ccx(c, a, b), Gate::cx(b, a)};
}

Circuit lower_fredkins(const Circuit& c) {
    Circuit out(c.qubit_count());
    for (const Gate& g : c.gates()) {
        if (g.kind == GateKind::Fredkin) {
            for (const Gate& h : lower_fredkin(g)) {
                out.emit(h);
            }
        } else {
            out.emit(g);
        }
    }
    return out;
}

std::vector<std::uint64_t> toffoli_layers(const Circuit& c) {
    std::vector<std::uint64_t> level(c.qubit_count(), 0);
    std::vector<std::uint64_t> layers;
    layers.reserve(c.gates().size());
    for (const Gate& g : c.gates()) {
        std::uint64_t at = 0;
        for (Qubit q : g.all()) {
            at = std::max(at, level[q]);
        }
        if (g.is_toffoli_class()) {
            at++;
        }
        for (Qubit q : g.all()) {
            level[q] = at;
        }
        layers.push_back(g.is_toffoli_class() ? at : 0);
    }
    return layers;
}

ResourceReport count_resources(const Circuit& c) {
    ResourceReport r;
    r.qubits = c.qubit_count();
    for (const Gate& g : c.gates()) {
        r.toffoli_count += g.kind == GateKind::Toffoli;
        r.fredkin_count += g.kind == GateKind::Fredkin;
    }
    r.t_count = 7 * (r.toffoli_count + r.fredkin_count);

    // A lowered Fredkin touches the same three qubits as its Toffoli, so the
    // layering is the same with or without lowering.
    std::vector<std::uint64_t> width;
    for (std::uint64_t layer : toffoli_layers(c)) {
        if (layer == 0) {
            continue;
        }
        if (width.size() < layer) {
            width.resize(layer, 0);
        }
        width[layer - 1]++;
    }
    r.t_depth = 3 * width.size();
    r.parallel_t_max = width.empty() ? 0 : 3 * *std::max_element(width.begin(), width.end());
    r.kq = compute_kq(r);
    return r;
}

std::uint64_t compute_kq(const ResourceReport& r) { return r.t_depth * r.qubits; }

std::vector<KqRatio> compare_formats(const std::vector<NamedReport>& reports) {
    if (reports.size() < 2) {
        throw std::invalid_argument("compare_formats needs at least two reports");
    }
    std::vector<KqRatio> out;
    for (std::size_t i = 0; i < reports.size(); i++) {
        for (std::size_t j = i + 1; j < reports.size(); j++) {
            double den = static_cast<double>(compute_kq(reports[j].report));
            double num = static_cast<double>(compute_kq(reports[i].report));
            out.push_back({reports[i].name, reports[j].name, den == 0 ? 0.0 : num / den});
        }
    }
    return out;
}

double kq_improvement(std::uint64_t kq, std::uint64_t baseline) {
    if (baseline == 0) {
        throw std::invalid_argument("kq_improvement: zero baseline");
    }
    return 1.0 - static_cast<double>(kq) / static_cast<double>(baseline);
}

}  // namespace qfloat
