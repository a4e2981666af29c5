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

#include "qfloat/fp_circuits.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "qfloat/arith.h"

namespace qfloat {

namespace {

// Copies of each shift control used inside the fp circuits.
constexpr std::size_t kFanout = 2;

std::uint64_t low_bits(std::int64_t v, int width) {
    return static_cast<std::uint64_t>(v) & ((std::uint64_t{1} << width) - 1);
}

// Positions of x that may hold nonzero data; everything else is 0.
struct Window {
    std::size_t lo;
    std::size_t hi;
};

// One shifter stage: move x by t positions if the control is set, touching
// only swaps that can move data. `ctrl` holds copies of the control; swaps
// take turns among them so neighbouring swaps can run in parallel.
void shift_stage(Circuit& c, const Register& ctrl, const Register& x, std::size_t t, ShiftDirection dir,
                 Window& w, bool sign_fill) {
    std::size_t n = x.width();
    if (t >= n) {
        return;
    }
    std::size_t turn = 0;
    auto next = [&] { return ctrl[turn++ % ctrl.width()]; };
    if (dir == ShiftDirection::Right) {
        std::size_t first = w.lo >= t ? w.lo - t : 0;
        for (std::size_t a = first; a + t < w.hi; a++) {
            c.cswap(next(), x[a], x[a + t]);
        }
        w.lo = first;
        if (sign_fill) {
            for (std::size_t i = n - t; i < n; i++) {
                c.ccx(next(), x[n - 1 - t], x[i]);
            }
        }
    } else {
        std::size_t stop = std::min(w.hi, n - t);
        for (std::size_t a = stop; a-- > w.lo;) {
            c.cswap(next(), x[a], x[a + t]);
        }
        w.hi = std::min(n, w.hi + t);
    }
}

// Shifter over s with `copies` - 1 pool qubits fanning out each control bit.
void shift_fanned(Circuit& c, const Register& s, const Register& x, ShiftDirection dir, Window w,
                  std::size_t copies) {
    Register fan = c.alloc_register(copies - 1, "shift.fan");
    for (std::size_t j = 0; j < s.width() && j < 63; j++) {
        for (Qubit q : fan) {
            c.cx(s[j], q);
        }
        shift_stage(c, Register("", {s[j]}).concat(fan), x, std::size_t{1} << j, dir, w, false);
        for (Qubit q : fan) {
            c.cx(s[j], q);
        }
    }
    c.free_register(fan);
}

// Scans x from the top. The k-th bit from the top gets label offset + k; p
// receives the label of the first 1 and f is cleared there. Labels increase,
// so the flag test needs positive controls only.
void scan_first_one(Circuit& c, const Register& x, const Register& p, Qubit f, std::uint64_t offset) {
    std::size_t n = x.width();
    std::size_t w = p.width();
    if (w == 0 || w >= 64 || offset + n > (std::uint64_t{1} << w)) {
        throw CircuitError("first_one: position register too narrow");
    }
    c.x(f);
    for (std::size_t k = 0; k < n; k++) {
        Qubit xi = x[n - 1 - k];
        std::uint64_t v = offset + k;
        if (v == 0) {
            c.cx(xi, f);
            continue;
        }
        std::vector<Control> bits;
        for (std::size_t b = 0; b < w; b++) {
            if ((v >> b) & 1) {
                c.ccx(f, xi, p[b]);
                bits.push_back({p[b]});
            }
        }
        if (bits.size() == 1) {
            c.cx(bits[0].qubit, f);
        } else {
            build_mcx(c, bits, f);
        }
    }
}

std::size_t bits_for(std::uint64_t v) { return std::max<std::size_t>(1, std::bit_width(v)); }

// flag ^= [r >= value], r two's complement.
void signed_geq(Circuit& c, const Register& r, std::int64_t value, Qubit flag) {
    std::size_t w = r.width();
    std::int64_t shifted = value + (std::int64_t{1} << (w - 1));
    if (shifted <= 0) {
        c.x(flag);
        return;
    }
    c.x(r.msb());
    build_carry_const(c, r, (std::uint64_t{1} << w) - static_cast<std::uint64_t>(shifted), flag);
    c.x(r.msb());
}

void check_operands(const FpRegisters& x, const FpRegisters& y, const FpRegisters& out) {
    if (!(x.format == y.format) || !(x.format == out.format)) {
        throw CircuitError("fp operands use different formats");
    }
    x.format.validate();
}

// Registers allocated during the compute phase, freed after the uncompute.
class Scratch {
   public:
    explicit Scratch(Circuit& c) : c_(c) {}
    Register take(std::size_t w, const std::string& name) {
        regs_.push_back(c_.alloc_register(w, name));
        return regs_.back();
    }
    Qubit flag(const std::string& name) { return take(1, name)[0]; }
    void add(const Register& r) { regs_.push_back(r); }
    void release() {
        for (auto it = regs_.rbegin(); it != regs_.rend(); ++it) {
            c_.free_register(*it);
        }
        regs_.clear();
    }

   private:
    Circuit& c_;
    std::vector<Register> regs_;
};

}  // namespace

FpRegisters alloc_fp(Circuit& c, const FpFormat& format, const std::string& name) {
    format.validate();
    FpRegisters r;
    r.format = format;
    r.exponent = c.alloc_register(static_cast<std::size_t>(format.exponent_bits), name + ".e");
    r.mantissa = c.alloc_register(static_cast<std::size_t>(format.mantissa_bits), name + ".m");
    r.sign = c.alloc_qubit(name + ".s");
    return r;
}

void build_shifter(Circuit& c, const Register& s, const Register& x, ShiftDirection direction) {
    Window w{0, x.width()};
    for (std::size_t j = 0; j < s.width() && j < 63; j++) {
        shift_stage(c, s.slice(j, 1), x, std::size_t{1} << j, direction, w, false);
    }
}

void build_shifter_signed(Circuit& c, const Register& s, const Register& x) {
    Window w{0, x.width()};
    for (std::size_t j = 0; j < s.width() && j < 63; j++) {
        shift_stage(c, s.slice(j, 1), x, std::size_t{1} << j, ShiftDirection::Right, w, true);
    }
}

void build_first_one(Circuit& c, const Register& x, const Register& p, Qubit f) {
    std::size_t w = p.width();
    if (w == 0 || w >= 64) {
        throw CircuitError("first_one: bad position width");
    }
    std::uint64_t span = std::uint64_t{1} << w;
    if (x.width() > span) {
        throw CircuitError("first_one: position register too narrow");
    }
    // Label bit i with (2^w - 1) - i, then complement; x = 0 leaves p = 0.
    scan_first_one(c, x, p, f, span - x.width());
    for (Qubit q : p) {
        c.x(q);
        c.cx(f, q);
    }
}

void build_leading_zeros(Circuit& c, const Register& x, const Register& z, Qubit f) {
    scan_first_one(c, x, z, f, 0);
}

Renormalized build_renormalize(Circuit& c, const Register& mantissa, const Register& exponent) {
    std::size_t w = bits_for(mantissa.width() - 1);
    if (exponent.width() <= w) {
        throw CircuitError("renormalize: exponent register too narrow");
    }
    Renormalized r{c.alloc_register(w, "rn.shift"), c.alloc_register(1, "rn.zero")};
    build_leading_zeros(c, mantissa, r.shift, r.zero_flag[0]);
    shift_fanned(c, r.shift, mantissa, ShiftDirection::Left, Window{0, mantissa.width()}, kFanout);
    Register ext = c.alloc_register(exponent.width() - w, "rn.ext");
    build_subtractor(c, r.shift.concat(ext), exponent);
    c.free_register(ext);
    return r;
}

void build_fp_adder(Circuit& c, const FpRegisters& x, const FpRegisters& y, const FpRegisters& out) {
    check_operands(x, y, out);
    const FpFormat& fmt = x.format;
    const int E = fmt.exponent_bits;
    const std::size_t M = static_cast<std::size_t>(fmt.mantissa_bits);
    const std::size_t G = M + 1;
    const std::uint64_t cutoff = static_cast<std::uint64_t>(alignment_cutoff(fmt));
    if (E >= 63 || (std::uint64_t{1} << E) <= cutoff) {
        throw CircuitError("fp_adder: exponent too narrow for " + fmt.str());
    }
    const std::size_t n = G + M + 2;
    const std::uint64_t zero_code = low_bits(fmt.zero_exponent(), E);
    const std::uint64_t inf_code = low_bits(fmt.inf_exponent(), E);

    Scratch scratch(c);
    std::size_t begin = c.mark();

    // Order by magnitude: key is (exponent, fraction) with the exponent read as signed.
    Qubit swap = scratch.flag("add.swap");
    c.x(x.exponent.msb());
    c.x(y.exponent.msb());
    build_less_than(c, x.mantissa.concat(x.exponent), y.mantissa.concat(y.exponent), swap);
    c.x(x.exponent.msb());
    c.x(y.exponent.msb());
    Register xa = x.all();
    Register ya = y.all();
    for (std::size_t i = 0; i < xa.width(); i++) {
        c.cswap(swap, xa[i], ya[i]);
    }

    Qubit hx = scratch.flag("add.hx");
    build_equals_const(c, x.exponent, zero_code, hx);
    c.x(hx);
    Qubit xinf = scratch.flag("add.xinf");
    build_equals_const(c, x.exponent, inf_code, xinf);

    // x.exponent <- d = ex - ey >= 0. y takes part only if nonzero and d < cutoff.
    build_subtractor(c, y.exponent, x.exponent);
    Qubit yzero = scratch.flag("add.yzero");
    build_equals_const(c, y.exponent, zero_code, yzero);
    Qubit far = scratch.flag("add.far");
    build_carry_const(c, x.exponent, (std::uint64_t{1} << E) - cutoff, far);
    Qubit hy = scratch.flag("add.hy");
    build_mcx(c, {{yzero, false}, {far, false}}, hy);

    // B = [guard | fraction of y | implicit bit | sign]; a dropped y parks its
    // fraction in the guard bits, below anything the result keeps.
    Register guard = scratch.take(G, "add.guard");
    Qubit lead = scratch.flag("add.lead");
    Qubit top = scratch.flag("add.top");
    c.cx(hy, lead);
    Register b = guard.concat(y.mantissa).concat(lead).concat(top);
    c.x(hy);
    for (std::size_t i = 0; i < M; i++) {
        c.cswap(hy, b[G + i], b[i]);
    }
    c.x(hy);

    Qubit sub = scratch.flag("add.sub");
    c.cx(x.sign, y.sign);
    c.ccx(hy, y.sign, sub);
    c.cx(x.sign, y.sign);
    build_twos_complement_borrowed(c, sub, b.slice(G, M + 2), out.all().slice(0, M + 2));

    // y == +inf, for the sign of an inf result; independent of the mantissa path.
    Qubit ypos_inf = scratch.flag("add.ypinf");
    {
        std::vector<Control> pos_inf{{y.sign, false}};
        for (int i = 0; i < E; i++) {
            pos_inf.push_back({y.exponent[i], ((inf_code >> i) & 1) != 0});
        }
        build_mcx(c, pos_inf, ypos_inf);
    }

    std::size_t k = bits_for(cutoff - 1);
    {
        Register gate = c.alloc_register(kFanout, "add.gate");
        Window w{G, n};
        for (std::size_t j = 0; j < k; j++) {
            c.ccx(x.exponent[j], hy, gate[0]);
            for (std::size_t i = 1; i < kFanout; i++) {
                c.cx(gate[0], gate[i]);
            }
            shift_stage(c, gate, b, std::size_t{1} << j, ShiftDirection::Right, w, true);
            for (std::size_t i = 1; i < kFanout; i++) {
                c.cx(gate[0], gate[i]);
            }
            c.ccx(x.exponent[j], hy, gate[0]);
        }
        c.free_register(gate);
    }

    build_adder_with_carry(c, x.mantissa.concat(hx), b.slice(G, M + 1), b[n - 1]);

    // The top bit of the window has exponent ex + 1 = d + ey + 1, built in
    // place over d; r ends up holding that minus the normalizing shift.
    Register win = b.slice(G - 1, M + 3);
    std::size_t er = static_cast<std::size_t>(E) + 1;
    while ((std::int64_t{1} << (er - 1)) < (std::int64_t{1} << (E - 1)) + static_cast<std::int64_t>(M)) {
        er++;
    }
    Register r = x.exponent.concat(scratch.take(er - E, "add.exp"));
    {
        // Two extra low bits, both 1, feed a carry-in of 1.
        Register tmp = c.alloc_register(er - E + 2, "add.tmp");
        Register ext = tmp.slice(2, er - E);
        for (Qubit q : ext) {
            c.cx(y.exponent.msb(), q);
        }
        c.x(tmp[0]);
        c.x(tmp[1]);
        build_adder(c, tmp.slice(0, 1).concat(y.exponent).concat(ext), tmp.slice(1, 1).concat(r));
        c.x(tmp[0]);
        for (Qubit q : ext) {
            c.cx(y.exponent.msb(), q);
        }
        c.free_register(tmp);
    }
    Renormalized rn = build_renormalize(c, win, r);
    scratch.add(rn.shift);
    scratch.add(rn.zero_flag);
    Qubit of = scratch.flag("add.of");
    signed_geq(c, r, fmt.inf_exponent(), of);
    Qubit uf = scratch.flag("add.uf");
    signed_geq(c, r, fmt.zero_exponent() + 1, uf);
    c.x(uf);
    std::size_t compute_end = c.mark();

    // Copy out.
    Register flags = c.alloc_register(3, "add.flags");
    Qubit normal = flags[0], inf = flags[1], normal2 = flags[2];
    Qubit fz = rn.zero_flag[0];
    std::size_t f0 = c.mark();
    build_mcx(c, {{hx}, {xinf, false}, {fz, false}, {of, false}, {uf, false}}, normal);
    c.cx(xinf, inf);
    build_mcx(c, {{xinf, false}, {hx}, {fz, false}, {of}}, inf);
    c.cx(normal, normal2);
    std::size_t f1 = c.mark();

    c.ccx(x.sign, normal, out.sign);
    build_mcx(c, {{x.sign}, {inf}, {ypos_inf, false}}, out.sign);
    for (std::size_t j = 0; j < M; j++) {
        c.ccx(j % 2 ? normal2 : normal, win[2 + j], out.mantissa[j]);
    }
    for (int i = 0; i < E; i++) {
        c.ccx(i % 2 ? normal : normal2, r[i], out.exponent[i]);
    }
    for (int i = 0; i + 1 < E; i++) {
        c.cx(inf, out.exponent[i]);
    }
    // The zero code's top bit: set unless normal or inf (never both).
    c.x(out.exponent.msb());
    c.cx(normal, out.exponent.msb());
    c.cx(inf, out.exponent.msb());

    c.append_inverse_of(f0, f1);
    c.free_register(flags);
    c.append_inverse_of(begin, compute_end);
    scratch.release();
}

void build_fp_multiplier(Circuit& c, const FpRegisters& x, const FpRegisters& y, const FpRegisters& out) {
    check_operands(x, y, out);
    const FpFormat& fmt = x.format;
    const int E = fmt.exponent_bits;
    const std::size_t M = static_cast<std::size_t>(fmt.mantissa_bits);
    const std::uint64_t zero_code = low_bits(fmt.zero_exponent(), E);
    const std::uint64_t inf_code = low_bits(fmt.inf_exponent(), E);

    Scratch scratch(c);
    std::size_t begin = c.mark();

    Qubit hx = scratch.flag("mul.hx");
    build_equals_const(c, x.exponent, zero_code, hx);
    c.x(hx);
    Qubit hy = scratch.flag("mul.hy");
    build_equals_const(c, y.exponent, zero_code, hy);
    c.x(hy);

    Register p = scratch.take(2 * (M + 1), "mul.prod");
    build_multiplier(c, x.mantissa.concat(hx), y.mantissa.concat(hy), p);
    // A product of 2 or more is shifted right by one; the dropped low bit
    // wraps to the top, which nothing reads.
    Qubit ov = scratch.flag("mul.ov");
    c.cx(p.msb(), ov);
    for (std::size_t a = 0; a + 1 < p.width(); a++) {
        c.cswap(ov, p[a], p[a + 1]);
    }

    Qubit xinf = scratch.flag("mul.xinf");
    build_equals_const(c, x.exponent, inf_code, xinf);

    // r = x.exponent plus a sign bit, r += ey + ov only when both operands are nonzero.
    Qubit nz = scratch.flag("mul.nz");
    c.ccx(hx, hy, nz);
    Register r = x.exponent.concat(scratch.flag("mul.exp"));
    c.cx(x.exponent.msb(), r.msb());
    {
        // ov enters as a carry-in through an extra low bit pair.
        Register tmp = c.alloc_register(2, "mul.tmp");
        Qubit low = tmp[0], ext = tmp[1];
        c.cx(y.exponent.msb(), ext);
        c.ccx(nz, ov, low);
        Register a = Register("", {ov}).concat(y.exponent).concat(ext);
        build_ctrl_adder(c, nz, a, Register("", {low}).concat(r));
        c.cx(y.exponent.msb(), ext);
        c.free_register(tmp);
    }
    Qubit of = scratch.flag("mul.of");
    signed_geq(c, r, fmt.inf_exponent(), of);
    Qubit uf = scratch.flag("mul.uf");
    signed_geq(c, r, fmt.zero_exponent() + 1, uf);
    c.x(uf);
    std::size_t compute_end = c.mark();

    Register flags = c.alloc_register(5, "mul.flags");
    Qubit yinf = flags[0], finite = flags[1], normal = flags[2], inf = flags[3], zero = flags[4];
    std::size_t f0 = c.mark();
    build_equals_const(c, y.exponent, inf_code, yinf);
    build_mcx(c, {{xinf, false}, {yinf, false}, {of, false}}, finite);
    build_mcx(c, {{nz}, {finite}, {uf, false}}, normal);
    build_mcx(c, {{nz}, {finite, false}}, inf);
    build_mcx(c, {{normal, false}, {inf, false}}, zero);
    std::size_t f1 = c.mark();

    c.cx(x.sign, y.sign);
    build_mcx(c, {{y.sign}, {zero, false}}, out.sign);
    c.cx(x.sign, y.sign);
    for (std::size_t j = 0; j < M; j++) {
        c.ccx(normal, p[M + j], out.mantissa[j]);
    }
    for (int i = 0; i < E; i++) {
        c.ccx(normal, r[i], out.exponent[i]);
    }
    for (int i = 0; i + 1 < E; i++) {
        c.cx(inf, out.exponent[i]);
    }
    c.cx(zero, out.exponent.msb());

    c.append_inverse_of(f0, f1);
    c.free_register(flags);
    c.append_inverse_of(begin, compute_end);
    scratch.release();
}

}  // namespace qfloat
