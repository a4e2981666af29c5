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

#include "qfloat/verify.h"

#include <algorithm>
#include <cstring>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qfloat/arith.h"
#include "qfloat/fp_circuits.h"
#include "qfloat/sim.h"

namespace qfloat {

namespace {

std::uint64_t low_mask(int bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

std::string hex(std::uint64_t v, int bits) {
    std::ostringstream os;
    os << "0x" << std::hex << std::setw((bits + 3) / 4) << std::setfill('0') << v;
    return os.str();
}

struct Outcome {
    std::uint64_t passed = 0;
    std::uint64_t first_index = UINT64_MAX;
    Counterexample first;
};

}  // namespace

FpCircuit build_fp_circuit(const FpFormat& format, FpOp op) {
    FpCircuit f;
    f.format = format;
    f.op = op;
    FpRegisters x = alloc_fp(f.circuit, format, "x");
    FpRegisters y = alloc_fp(f.circuit, format, "y");
    FpRegisters out = alloc_fp(f.circuit, format, "out");
    if (op == FpOp::Add) {
        build_fp_adder(f.circuit, x, y, out);
    } else {
        build_fp_multiplier(f.circuit, x, y, out);
    }
    f.x = x.all();
    f.y = y.all();
    f.out = out.all();
    return f;
}

std::string VerifyReport::summary(const FpFormat& format) const {
    std::ostringstream os;
    os << passed << '/' << checked << " pass";
    if (mode == VerifyMode::Random) {
        os << " (seed " << seed << ')';
    }
    if (first_failure) {
        const Counterexample& ce = *first_failure;
        int w = format.width();
        os << "\ncounterexample: x=" << hex(ce.x, w) << " y=" << hex(ce.y, w) << " expected=" << hex(ce.expected, w)
           << " got=" << hex(ce.got, w) << " (" << ce.reason << ')';
    }
    return os.str();
}

VerifyReport verify_fp(const FpCircuit& target, const VerifyPlan& plan) {
    const FpFormat& f = target.format;
    if (!(plan.format == f) || plan.op != target.op) {
        throw std::invalid_argument("verify plan does not match the circuit");
    }
    const int w = f.width();
    const std::uint64_t m = low_mask(w);

    std::uint64_t total = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
    if (plan.mode == VerifyMode::Exhaustive) {
        if (w > kMaxExhaustiveWidth) {
            throw std::invalid_argument("exhaustive verification limited to " + std::to_string(kMaxExhaustiveWidth) +
                                        "-bit operands; " + f.str() + " is " + std::to_string(w));
        }
        total = std::uint64_t{1} << (2 * w);
    } else {
        std::mt19937_64 rng(plan.seed);
        samples.reserve(plan.sample_count);
        for (std::uint64_t i = 0; i < plan.sample_count; i++) {
            std::uint64_t a = rng() & m;
            std::uint64_t b = rng() & m;
            samples.emplace_back(a, b);
        }
        total = plan.sample_count;
    }

    std::set<Qubit> io;
    for (const Register* r : {&target.x, &target.y, &target.out}) {
        io.insert(r->begin(), r->end());
    }
    std::vector<Qubit> others;
    for (Qubit q = 0; q < target.circuit.qubit_count(); q++) {
        if (!io.count(q)) {
            others.push_back(q);
        }
    }

    auto run = [&](std::uint64_t begin, std::uint64_t end, Outcome& res) {
        BasisState s(target.circuit.qubit_count());
        for (std::uint64_t i = begin; i < end; i++) {
            std::uint64_t a, b;
            if (plan.mode == VerifyMode::Exhaustive) {
                a = i >> w;
                b = i & m;
            } else {
                a = samples[i].first;
                b = samples[i].second;
            }
            FpValue va = decode(f, {a}), vb = decode(f, {b});
            std::uint64_t want =
                encode(f, target.op == FpOp::Add ? fp_add_ref(f, va, vb) : fp_mul_ref(f, va, vb)).bits;
            std::memset(s.data(), 0, s.size());
            write_register(s, target.x, a);
            write_register(s, target.y, b);
            simulate_inplace(target.circuit, s);
            std::uint64_t got = read_register(s, target.out);
            const char* reason = nullptr;
            if (got != want) {
                reason = "result";
            } else if (read_register(s, target.x) != a || read_register(s, target.y) != b) {
                reason = "input changed";
            } else if (std::any_of(others.begin(), others.end(), [&](Qubit q) { return s.get(q); })) {
                reason = "dirty ancilla";
            }
            if (!reason) {
                res.passed++;
            } else if (i < res.first_index) {
                res.first_index = i;
                res.first = {a, b, want, got, reason};
            }
        }
    };

    unsigned threads = plan.threads ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 256)));
    std::vector<Outcome> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; t++) {
        std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
        pool.emplace_back(run, lo, hi, std::ref(parts[t]));
    }
    for (auto& th : pool) {
        th.join();
    }

    VerifyReport rep;
    rep.checked = total;
    rep.seed = plan.seed;
    rep.mode = plan.mode;
    std::uint64_t best = UINT64_MAX;
    for (const Outcome& o : parts) {
        rep.passed += o.passed;
        if (o.first_index < best) {
            best = o.first_index;
            rep.first_failure = o.first;
        }
    }
    return rep;
}

FixedMultiplier build_fixed_multiplier(std::size_t n) {
    FixedMultiplier fm;
    fm.a = fm.circuit.alloc_register(n, "a");
    fm.b = fm.circuit.alloc_register(n, "b");
    fm.out = fm.circuit.alloc_register(n, "out");
    Register prod = fm.circuit.alloc_register(2 * n, "prod");
    std::size_t begin = fm.circuit.mark();
    build_multiplier(fm.circuit, fm.a, fm.b, prod);
    std::size_t end = fm.circuit.mark();
    for (std::size_t i = 0; i < n; i++) {
        fm.circuit.cx(prod[n + i], fm.out[i]);
    }
    fm.circuit.append_inverse_of(begin, end);
    fm.circuit.free_register(prod);
    return fm;
}

std::vector<std::string> block_names() { return {"adder", "comparator", "multiplier", "fixedmul", "fpadd", "fpmul"}; }

BuiltBlock build_block(const std::string& name, std::size_t width, const FpFormat& format) {
    BuiltBlock b;
    b.name = name;
    Circuit& c = b.circuit;
    bool integer = name == "adder" || name == "comparator" || name == "multiplier" || name == "fixedmul";
    if (integer && (width == 0 || width > 64)) {
        throw std::invalid_argument("width must be in [1, 64] for block " + name);
    }
    if (name == "adder") {
        Register x = c.alloc_register(width, "a"), y = c.alloc_register(width, "b");
        build_adder(c, x, y);
        b.registers = {x, y};
    } else if (name == "comparator") {
        Register x = c.alloc_register(width, "a"), y = c.alloc_register(width, "b");
        Register r = c.alloc_register(1, "lt");
        build_comparator(c, x, y, r[0]);
        b.registers = {x, y, r};
    } else if (name == "multiplier") {
        Register x = c.alloc_register(width, "a"), y = c.alloc_register(width, "b");
        Register out = c.alloc_register(2 * width, "out");
        build_multiplier(c, x, y, out);
        b.registers = {x, y, out};
    } else if (name == "fixedmul") {
        FixedMultiplier fm = build_fixed_multiplier(width);
        c = std::move(fm.circuit);
        b.registers = {fm.a, fm.b, fm.out};
    } else if (name == "fpadd" || name == "fpmul") {
        FpCircuit f = build_fp_circuit(format, name == "fpadd" ? FpOp::Add : FpOp::Mul);
        c = std::move(f.circuit);
        b.registers = {f.x, f.y, f.out};
    } else {
        throw std::invalid_argument("unknown block: " + name);
    }
    return b;
}

std::vector<ReproRow> repro_rows() {
    struct Published {
        const char* design;
        int width;
        std::uint64_t qubits, tcount, tdepth;
    };
    static const Published published[] = {
        {"adder", 16, 76, 4704, 1386},     {"adder", 32, 140, 11144, 3138},
        {"adder", 64, 268, 26348, 7224},   {"multiplier", 16, 81, 6328, 2580},
        {"multiplier", 32, 158, 26642, 11154}, {"multiplier", 64, 315, 122752, 52116},
    };
    std::vector<ReproRow> rows;
    for (const Published& p : published) {
        FpCircuit f = build_fp_circuit(FpFormat::for_width(p.width),
                                       std::string(p.design) == "adder" ? FpOp::Add : FpOp::Mul);
        rows.push_back({p.design, p.width, count_resources(f.circuit), p.qubits, p.tcount, p.tdepth});
    }
    return rows;
}

std::string repro_csv(const std::vector<ReproRow>& rows) {
    std::ostringstream os;
    os << "design,width,qubits_measured,qubits_paper,tcount_measured,tcount_paper,tdepth_measured,tdepth_paper,"
          "kq_measured,kq_paper\n";
    for (const ReproRow& r : rows) {
        os << r.design << ',' << r.width << ',' << r.measured.qubits << ',' << r.qubits_ref << ','
           << r.measured.t_count << ',' << r.tcount_ref << ',' << r.measured.t_depth << ',' << r.tdepth_ref << ','
           << r.measured.kq << ',' << r.kq_ref() << '\n';
    }
    return os.str();
}

std::string repro_markdown(const std::vector<ReproRow>& rows) {
    auto delta = [](std::uint64_t got, std::uint64_t ref) {
        std::ostringstream os;
        double d = 100.0 * (static_cast<double>(got) - static_cast<double>(ref)) / static_cast<double>(ref);
        os << std::showpos << std::fixed << std::setprecision(1) << d << '%';
        return os.str();
    };
    std::ostringstream os;
    os << "| design | width | qubits | ref | delta | T-count | ref | delta | T-depth | ref | delta | KQ | ref "
          "| delta |\n";
    os << "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const ReproRow& r : rows) {
        os << "| " << r.design << " | " << r.width << " | " << r.measured.qubits << " | " << r.qubits_ref << " | "
           << delta(r.measured.qubits, r.qubits_ref) << " | " << r.measured.t_count << " | " << r.tcount_ref
           << " | " << delta(r.measured.t_count, r.tcount_ref) << " | " << r.measured.t_depth << " | "
           << r.tdepth_ref << " | " << delta(r.measured.t_depth, r.tdepth_ref) << " | " << r.measured.kq << " | "
           << r.kq_ref() << " | " << delta(r.measured.kq, r.kq_ref()) << " |\n";
    }
    return os.str();
}

}  // namespace qfloat
