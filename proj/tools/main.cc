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

// qfloat command-line front end.

#include "CLI11.hpp"
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qfloat/circuit_io.h"
#include "qfloat/resources.h"
#include "qfloat/sim.h"
#include "qfloat/verify.h"

using namespace qfloat;
using nlohmann::ordered_json;

namespace {

struct Globals {
    std::string format = "e8m7";
    std::uint64_t seed = 1;
    std::string out;
    bool json = false;
};

// Writes to --out when given, stdout otherwise.
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) {
        throw std::runtime_error("cannot write " + g.out);
    }
    f << text;
}

Circuit load(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot read " + path);
    }
    return read_circuit(f);
}

std::string register_comments(const BuiltBlock& b) {
    std::ostringstream os;
    os << "# block " << b.name << '\n';
    for (const Register& r : b.registers) {
        os << "# register " << r.name() << ':';
        for (Qubit q : r) {
            os << ' ' << q;
        }
        os << '\n';
    }
    return os.str();
}

int cmd_build(const Globals& g, const std::string& block, std::size_t width) {
    BuiltBlock b = build_block(block, width, FpFormat::parse(g.format));
    std::string text = register_comments(b) + circuit_to_text(b.circuit);
    if (g.out.empty() && g.json) {
        ordered_json j{{"block", block}, {"qubits", b.circuit.qubit_count()}, {"gates", b.circuit.gates().size()}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    emit(g, text);
    if (!g.out.empty()) {
        if (g.json) {
            ordered_json j{{"block", block},
                           {"qubits", b.circuit.qubit_count()},
                           {"gates", b.circuit.gates().size()},
                           {"file", g.out}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "qubits: " << b.circuit.qubit_count() << '\n';
        }
    }
    return 0;
}

int cmd_simulate(const Globals& g, const std::string& path, const std::string& input, const std::string& out_format) {
    Circuit c = load(path);
    BasisState s = BasisState::from_hex(input, c.qubit_count());
    simulate_inplace(c, s);
    std::string text = out_format == "bin" ? s.to_bin() : s.to_hex();
    if (g.json) {
        emit(g, ordered_json{{"qubits", c.qubit_count()}, {"output", text}}.dump(2) + "\n");
    } else {
        emit(g, text + "\n");
    }
    return 0;
}

int cmd_verify(const Globals& g, const std::string& block, const std::string& mode, std::uint64_t samples,
               unsigned threads) {
    if (block != "fpadd" && block != "fpmul") {
        throw std::invalid_argument("verify supports --block fpadd or fpmul");
    }
    VerifyPlan plan;
    plan.format = FpFormat::parse(g.format);
    plan.op = block == "fpadd" ? FpOp::Add : FpOp::Mul;
    plan.mode = mode == "exhaustive" ? VerifyMode::Exhaustive : VerifyMode::Random;
    plan.sample_count = samples;
    plan.seed = g.seed;
    plan.threads = threads;
    FpCircuit f = build_fp_circuit(plan.format, plan.op);
    VerifyReport r = verify_fp(f, plan);
    if (g.json) {
        ordered_json j{{"block", block},      {"format", plan.format.str()}, {"mode", mode},
                       {"seed", plan.seed},   {"checked", r.checked},        {"passed", r.passed},
                       {"ok", r.ok()}};
        if (r.first_failure) {
            const Counterexample& ce = *r.first_failure;
            j["counterexample"] = {{"x", ce.x}, {"y", ce.y}, {"expected", ce.expected}, {"got", ce.got},
                                   {"reason", ce.reason}};
        }
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, block + " " + plan.format.str() + " " + mode + ": " + r.summary(plan.format) + "\n");
    }
    return r.ok() ? 0 : 1;
}

int cmd_resources(const Globals& g, const std::string& path, const std::string& block, std::size_t width,
                  std::string style) {
    Circuit c = path.empty() ? build_block(block, width, FpFormat::parse(g.format)).circuit : load(path);
    ResourceReport r = count_resources(c);
    if (g.json) {
        style = "json";
    }
    if (style == "json") {
        emit(g, r.to_json() + "\n");
    } else if (style == "csv") {
        emit(g, ResourceReport::csv_header() + "\n" + r.to_csv() + "\n");
    } else {
        emit(g, r.to_table());
    }
    return 0;
}

int cmd_compare(const Globals& g, const std::vector<std::string>& paths, std::size_t fixed_width) {
    std::vector<NamedReport> reports;
    for (const std::string& p : paths) {
        reports.push_back({p, count_resources(load(p))});
    }
    if (reports.empty()) {
        FpFormat f = FpFormat::parse(g.format);
        reports.push_back({"fpmul " + f.str(), count_resources(build_fp_circuit(f, FpOp::Mul).circuit)});
        reports.push_back({"fixedmul " + std::to_string(fixed_width),
                           count_resources(build_fixed_multiplier(fixed_width).circuit)});
    }
    auto ratios = compare_formats(reports);
    if (g.json) {
        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const NamedReport& n : reports) {
            j["reports"].push_back({{"name", n.name}, {"kq", n.report.kq}, {"t_depth", n.report.t_depth},
                                    {"qubits", n.report.qubits}});
        }
        j["ratios"] = ordered_json::array();
        for (const KqRatio& r : ratios) {
            j["ratios"].push_back({{"numerator", r.numerator}, {"denominator", r.denominator}, {"ratio", r.ratio}});
        }
        emit(g, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream os;
    for (const NamedReport& n : reports) {
        os << n.name << ": qubits " << n.report.qubits << ", T-depth " << n.report.t_depth << ", KQ " << n.report.kq
           << '\n';
    }
    os.setf(std::ios::fixed);
    os.precision(3);
    for (const KqRatio& r : ratios) {
        os << "KQ(" << r.numerator << ") / KQ(" << r.denominator << ") = " << r.ratio << '\n';
    }
    emit(g, os.str());
    return 0;
}

int cmd_repro(const Globals& g, bool markdown) {
    auto rows = repro_rows();
    emit(g, markdown ? repro_markdown(rows) : repro_csv(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reversible floating-point circuits: build, simulate, verify and cost them."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Floating-point layout eEmM")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for random verification")->capture_default_str();
    app.add_option("--out", g.out, "Output file (stdout if omitted)");
    app.add_flag("--json", g.json, "JSON output");

    std::string block = "fpadd";
    std::size_t width = 8;
    auto* build = app.add_subcommand("build", "Build a block and write it in circuit text form");
    build->add_option("--block", block, "adder|comparator|multiplier|fixedmul|fpadd|fpmul")
        ->check(CLI::IsMember(block_names()))
        ->required();
    build->add_option("--width", width, "Operand width for integer blocks")->capture_default_str();

    std::string circuit_path, input, out_format = "hex";
    auto* sim = app.add_subcommand("simulate", "Run a circuit file on one basis state");
    sim->add_option("--circuit", circuit_path, "Circuit file")->required();
    sim->add_option("--in", input, "Input state in hex, qubit 0 = bit 0")->required();
    sim->add_option("--out-format", out_format, "hex|bin")->check(CLI::IsMember({"hex", "bin"}));

    std::string mode = "random";
    std::uint64_t samples = 100000;
    unsigned threads = 0;
    auto* ver = app.add_subcommand("verify", "Check an FP circuit against the reference model");
    ver->add_option("--block", block, "fpadd|fpmul")->check(CLI::IsMember({"fpadd", "fpmul"}));
    ver->add_option("--mode", mode, "exhaustive|random")->check(CLI::IsMember({"exhaustive", "random"}));
    ver->add_option("--samples", samples, "Random samples")->capture_default_str();
    ver->add_option("--threads", threads, "Worker threads (0: all cores)");

    std::string style = "table";
    auto* res = app.add_subcommand("resources", "Clifford+T resource counts");
    res->add_option("--circuit", circuit_path, "Circuit file (else --block is built)");
    res->add_option("--block", block, "Block to build")->check(CLI::IsMember(block_names()));
    res->add_option("--width", width, "Operand width for integer blocks");
    res->add_option("--out", style, "json|csv|table")->check(CLI::IsMember({"json", "csv", "table"}));

    std::vector<std::string> compare_paths;
    std::size_t fixed_width = 24;
    auto* cmp = app.add_subcommand("compare", "KQ ratios between circuits (default: FP vs fixed-point multiplier)");
    cmp->add_option("--circuit", compare_paths, "Circuit files to compare (two or more)");
    cmp->add_option("--fixed-width", fixed_width, "Fixed-point multiplier width")->capture_default_str();

    bool markdown = false;
    auto* repro = app.add_subcommand("repro-table", "Measured vs published resource counts");
    repro->add_flag("--markdown", markdown, "Markdown with deltas instead of CSV");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*build) {
            return cmd_build(g, block, width);
        }
        if (*sim) {
            return cmd_simulate(g, circuit_path, input, out_format);
        }
        if (*ver) {
            return cmd_verify(g, block, mode, samples, threads);
        }
        if (*res) {
            return cmd_resources(g, circuit_path, block, width, style);
        }
        if (*cmp) {
            if (compare_paths.size() == 1) {
                throw std::invalid_argument("compare needs two or more --circuit files");
            }
            if (compare_paths.empty() && !app.get_option("--format")->count()) {
                g.format = "e8m23";
            }
            return cmd_compare(g, compare_paths, fixed_width);
        }
        if (*repro) {
            return cmd_repro(g, markdown);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
