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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qfloat/arith.h"
#include "qfloat/fp_circuits.h"
#include "qfloat/resources.h"
#include "qfloat/sim.h"
#include "qfloat/verify.h"

using namespace qfloat;

namespace {

constexpr double kQubitTolerance = 0.15;
constexpr double kTTolerance = 0.30;
constexpr std::uint64_t kKqLimit = 723301;
constexpr double kRatioLow = 1.0, kRatioHigh = 2.0;
constexpr std::uint64_t kSampleCount = 100000;
constexpr std::uint64_t kSeed = 20260101;

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::uint64_t mask(std::size_t n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

std::size_t log2_ceil(std::size_t n) {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < n) {
        w++;
    }
    return w;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// True when no qubit outside `keep` is set.
bool clean(const BasisState& s, const std::vector<const Register*>& keep) {
    std::vector<bool> k(s.size());
    for (const Register* r : keep) {
        for (Qubit q : *r) {
            k[q] = true;
        }
    }
    for (Qubit q = 0; q < s.size(); q++) {
        if (!k[q] && s.get(q)) {
            return false;
        }
    }
    return true;
}

VerifyReport exhaustive_e3m4(FpOp op) {
    FpFormat f = FpFormat::parse("e3m4");
    VerifyPlan plan;
    plan.format = f;
    plan.op = op;
    plan.mode = VerifyMode::Exhaustive;
    return verify_fp(build_fp_circuit(f, op), plan);
}

void criterion_exhaustive(int id, FpOp op, const char* name, VerifyReport& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = exhaustive_e3m4(op);
    char buf[64];
    std::snprintf(buf, sizeof buf, " in %.1fs", seconds_since(t0));
    report(id, out.ok() && out.checked == 65536, std::string(name) + " e3m4 exhaustive",
           out.summary(FpFormat::parse("e3m4")) + buf);
}

void criterion_sampled() {
    FpFormat f = FpFormat::parse("e8m23");
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (FpOp op : {FpOp::Add, FpOp::Mul}) {
        VerifyPlan plan;
        plan.format = f;
        plan.op = op;
        plan.mode = VerifyMode::Random;
        plan.sample_count = kSampleCount;
        plan.seed = kSeed;
        VerifyReport r = verify_fp(build_fp_circuit(f, op), plan);
        ok = ok && r.ok() && r.checked == kSampleCount;
        detail += std::string(op == FpOp::Add ? "add " : "mul ") + r.summary(f) + "; ";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", seconds_since(t0));
    report(3, ok, "e8m23 sampled add and mul", detail + buf);
}

// Runs `check` on every value of the concatenated input registers.
using Check = std::function<bool(const BasisState&, std::uint64_t)>;
bool exhaust(const Circuit& c, const std::vector<Register>& inputs, const Check& check) {
    std::size_t bits = 0;
    for (const Register& r : inputs) {
        bits += r.width();
    }
    BasisState s(c.qubit_count());
    for (std::uint64_t v = 0; v <= mask(bits); v++) {
        std::fill(s.data(), s.data() + s.size(), 0);
        std::size_t off = 0;
        for (const Register& r : inputs) {
            write_register(s, r, (v >> off) & mask(r.width()));
            off += r.width();
        }
        simulate_inplace(c, s);
        if (!check(s, v)) {
            return false;
        }
    }
    return true;
}

void criterion_integer_blocks() {
    std::vector<std::string> bad;
    for (std::size_t n = 1; n <= 6; n++) {
        Circuit c;
        Register a = c.alloc_register(n, "a"), b = c.alloc_register(n, "b");
        build_adder(c, a, b);
        if (!exhaust(c, {a, b}, [&](const BasisState& s, std::uint64_t v) {
                std::uint64_t x = v & mask(n), y = v >> n;
                return read_register(s, a) == x && read_register(s, b) == ((x + y) & mask(n)) && clean(s, {&a, &b});
            })) {
            bad.push_back("adder n=" + std::to_string(n));
        }
    }
    for (std::size_t n = 1; n <= 5; n++) {
        Circuit c;
        Register a = c.alloc_register(n, "a"), b = c.alloc_register(n, "b"), r = c.alloc_register(1, "r");
        build_comparator(c, a, b, r[0]);
        if (!exhaust(c, {a, b}, [&](const BasisState& s, std::uint64_t v) {
                std::uint64_t x = v & mask(n), y = v >> n;
                return read_register(s, a) == x && read_register(s, b) == y && s.get(r[0]) == (x < y) &&
                       clean(s, {&a, &b, &r});
            })) {
            bad.push_back("comparator n=" + std::to_string(n));
        }
    }
    for (std::size_t n = 1; n <= 6; n++) {
        for (std::uint64_t k = 0; k <= mask(n); k++) {
            Circuit c;
            Register a = c.alloc_register(n, "a"), r = c.alloc_register(1, "r");
            build_carry_const(c, a, k, r[0]);
            if (!exhaust(c, {a}, [&](const BasisState& s, std::uint64_t x) {
                    return read_register(s, a) == x && s.get(r[0]) == (x + k > mask(n)) && clean(s, {&a, &r});
                })) {
                bad.push_back("carry_const n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    }
    for (std::size_t n = 1; n <= 5; n++) {
        Circuit c;
        Register a = c.alloc_register(n, "a"), b = c.alloc_register(n, "b"), o = c.alloc_register(2 * n, "o");
        build_multiplier(c, a, b, o);
        if (!exhaust(c, {a, b}, [&](const BasisState& s, std::uint64_t v) {
                std::uint64_t x = v & mask(n), y = v >> n;
                return read_register(s, a) == x && read_register(s, b) == y && read_register(s, o) == x * y &&
                       clean(s, {&a, &b, &o});
            })) {
            bad.push_back("multiplier n=" + std::to_string(n));
        }
    }
    // M = 4: 2-bit shift, 8-bit data. Only inputs whose vacated bits are 0.
    for (int kind = 0; kind < 3; kind++) {
        Circuit c;
        Register x = c.alloc_register(8, "x"), s2 = c.alloc_register(2, "s");
        if (kind == 0) {
            build_shifter(c, s2, x, ShiftDirection::Left);
        } else if (kind == 1) {
            build_shifter(c, s2, x, ShiftDirection::Right);
        } else {
            build_shifter_signed(c, s2, x);
        }
        if (!exhaust(c, {x, s2}, [&](const BasisState& s, std::uint64_t v) {
                std::uint64_t xv = v & 255, sv = v >> 8;
                bool valid = kind == 0 ? (xv >> (8 - sv)) == 0 : (xv & mask(sv)) == 0;
                if (!valid) {
                    return true;
                }
                std::uint64_t want = kind == 0   ? (xv << sv) & 255
                                     : kind == 1 ? xv >> sv
                                                 : static_cast<std::uint8_t>(static_cast<std::int8_t>(xv) >> sv);
                return read_register(s, x) == want && read_register(s, s2) == sv && clean(s, {&x, &s2});
            })) {
            bad.push_back(kind == 0 ? "shifter left" : kind == 1 ? "shifter right" : "shifter signed");
        }
    }
    for (std::size_t n = 1; n <= 16; n++) {
        Circuit c;
        Register x = c.alloc_register(n, "x"), p = c.alloc_register(std::max<std::size_t>(1, log2_ceil(n)), "p"),
                 f = c.alloc_register(1, "f");
        build_first_one(c, x, p, f[0]);
        if (!exhaust(c, {x}, [&](const BasisState& s, std::uint64_t v) {
                std::uint64_t want = v ? std::bit_width(v) - 1 : 0;
                return read_register(s, x) == v && read_register(s, p) == want && s.get(f[0]) == (v == 0) &&
                       clean(s, {&x, &p, &f});
            })) {
            bad.push_back("first_one n=" + std::to_string(n));
        }
    }
    std::string detail = "adder n<=6, comparator n<=5, carry_const n<=6, multiplier n<=5, shifters M=4, first_one n<=16";
    for (const std::string& b : bad) {
        detail += "; mismatch: " + b;
    }
    report(4, bad.empty(), "integer block oracles", detail);
}

double rel(double measured, double reference) { return (measured - reference) / reference; }

void criteria_resources(const std::vector<ReproRow>& rows) {
    bool q_ok = true, t_ok = true;
    std::string q_detail, t_detail;
    char buf[160];
    for (const ReproRow& r : rows) {
        double dq = rel(r.measured.qubits, r.qubits_ref);
        double dt = rel(r.measured.t_count, r.tcount_ref);
        double dd = rel(r.measured.t_depth, r.tdepth_ref);
        q_ok = q_ok && std::abs(dq) <= kQubitTolerance;
        t_ok = t_ok && std::abs(dt) <= kTTolerance && std::abs(dd) <= kTTolerance;
        std::snprintf(buf, sizeof buf, "%s%d %llu (%+.1f%%); ", r.design.c_str(), r.width,
                      static_cast<unsigned long long>(r.measured.qubits), 100 * dq);
        q_detail += buf;
        std::snprintf(buf, sizeof buf, "%s%d T %llu (%+.1f%%) depth %llu (%+.1f%%); ", r.design.c_str(), r.width,
                      static_cast<unsigned long long>(r.measured.t_count), 100 * dt,
                      static_cast<unsigned long long>(r.measured.t_depth), 100 * dd);
        t_detail += buf;
    }
    report(5, q_ok && rows.size() == 6, "qubit counts within 15%", q_detail);
    report(6, t_ok && rows.size() == 6, "T-count and T-depth within 30%", t_detail);
    for (const ReproRow& r : rows) {
        if (r.design == "adder" && r.width == 32) {
            report(7, r.measured.kq <= kKqLimit, "32-bit adder KQ <= 723301",
                   "KQ " + std::to_string(r.measured.kq) + " (" + std::to_string(r.measured.qubits) + " qubits x T-depth " +
                       std::to_string(r.measured.t_depth) + ")");
        }
    }
}

void criterion_ratio(const ReproRow& mul32) {
    FixedMultiplier fixed = build_fixed_multiplier(24);
    std::vector<NamedReport> reports{{"fpmul e8m23", mul32.measured}, {"fixedmul 24", count_resources(fixed.circuit)}};
    KqRatio r = compare_formats(reports).at(0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "KQ %llu / %llu = %.3f", static_cast<unsigned long long>(reports[0].report.kq),
                  static_cast<unsigned long long>(reports[1].report.kq), r.ratio);
    report(8, r.ratio >= kRatioLow && r.ratio <= kRatioHigh, "float32 vs fixed24 multiplier KQ ratio in [1, 2]", buf);
}

// Circuit then inverse restores every e3m4 input state.
bool inverse_identity(FpOp op, std::string& why) {
    FpFormat f = FpFormat::parse("e3m4");
    FpCircuit fc = build_fp_circuit(f, op);
    Circuit inv = fc.circuit.inverse();
    BasisState s(fc.circuit.qubit_count());
    for (std::uint64_t v = 0; v < 65536; v++) {
        std::fill(s.data(), s.data() + s.size(), 0);
        write_register(s, fc.x, v >> 8);
        write_register(s, fc.y, v & 255);
        BasisState start = s;
        simulate_inplace(fc.circuit, s);
        simulate_inplace(inv, s);
        if (!(s == start)) {
            why = "inverse does not restore input " + std::to_string(v);
            return false;
        }
    }
    return true;
}

void criterion_structure(const VerifyReport& add, const VerifyReport& mul) {
    std::string why;
    bool ok = add.ok() && mul.ok();
    if (!ok) {
        why = "exhaustive runs reported " + (add.first_failure ? add.first_failure->reason : mul.first_failure->reason);
    }
    ok = ok && inverse_identity(FpOp::Add, why) && inverse_identity(FpOp::Mul, why);
    report(9, ok, "inverse identity, clean ancillae, preserved inputs (e3m4 add and mul)",
           ok ? "131072 cases each" : why);
}

void criterion_shifter() {
    bool ok = true;
    std::string detail;
    std::size_t prev = 0;
    for (std::size_t m : {8u, 16u, 32u, 64u}) {
        Circuit c;
        Register s = c.alloc_register(log2_ceil(m), "s");
        Register x = c.alloc_register(2 * m, "x");
        build_shifter(c, s, x, ShiftDirection::Right);
        std::size_t n = count_resources(c).fredkin_count;
        if (m <= 32) {
            ok = ok && n < m * (m - 1);
            detail += "M=" + std::to_string(m) + ": " + std::to_string(n) + " < " + std::to_string(m * (m - 1)) + "; ";
        }
        if (prev) {
            double ratio = static_cast<double>(n) / prev;
            ok = ok && ratio < 3.0;
            char buf[64];
            std::snprintf(buf, sizeof buf, "ratio %zu/%zu = %.2f; ", m, m / 2, ratio);
            detail += buf;
        }
        prev = n;
    }
    report(10, ok, "shifter Fredkin count subquadratic", detail);
}

}  // namespace

int main() {
    VerifyReport add, mul;
    criterion_exhaustive(1, FpOp::Add, "fp adder", add);
    criterion_exhaustive(2, FpOp::Mul, "fp multiplier", mul);
    criterion_sampled();
    criterion_integer_blocks();
    std::vector<ReproRow> rows = repro_rows();
    criteria_resources(rows);
    for (const ReproRow& r : rows) {
        if (r.design == "multiplier" && r.width == 32) {
            criterion_ratio(r);
        }
    }
    criterion_structure(add, mul);
    criterion_shifter();
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
