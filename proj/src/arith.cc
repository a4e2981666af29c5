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

#include "qfloat/arith.h"

namespace qfloat {

namespace {

void require_same_width(const Register& a, const Register& b, const char* what) {
    if (a.width() != b.width() || a.width() == 0) {
        throw CircuitError(std::string(what) + ": operand widths differ (" + std::to_string(a.width()) +
                           " vs " + std::to_string(b.width()) + ")");
    }
}

void flip_negatives(Circuit& c, std::span<const Control> controls) {
    for (const Control& k : controls) {
        if (!k.positive) {
            c.x(k.qubit);
        }
    }
}

}  // namespace

void build_mcx(Circuit& c, std::span<const Control> controls, Qubit target) {
    flip_negatives(c, controls);
    std::size_t k = controls.size();
    if (k == 0) {
        c.x(target);
    } else if (k == 1) {
        c.cx(controls[0].qubit, target);
    } else if (k == 2) {
        c.ccx(controls[0].qubit, controls[1].qubit, target);
    } else {
        Register chain = c.alloc_register(k - 2, "mcx_chain");
        c.ccx(controls[0].qubit, controls[1].qubit, chain[0]);
        for (std::size_t i = 1; i < k - 2; i++) {
            c.ccx(controls[i + 1].qubit, chain[i - 1], chain[i]);
        }
        c.ccx(controls[k - 1].qubit, chain[k - 3], target);
        for (std::size_t i = k - 3; i >= 1; i--) {
            c.ccx(controls[i + 1].qubit, chain[i - 1], chain[i]);
        }
        c.ccx(controls[0].qubit, controls[1].qubit, chain[0]);
        c.free_register(chain);
    }
    flip_negatives(c, controls);
}

void build_mcx(Circuit& c, std::initializer_list<Control> controls, Qubit target) {
    build_mcx(c, std::span<const Control>(controls.begin(), controls.size()), target);
}

void build_equals_const(Circuit& c, const Register& reg, std::uint64_t value, Qubit target) {
    std::vector<Control> controls;
    for (std::size_t i = 0; i < reg.width(); i++) {
        controls.push_back({reg[i], ((value >> i) & 1) != 0});
    }
    build_mcx(c, controls, target);
}

namespace {

// Takahashi-Tani-Kunihiro ripple adder. With `carry` set, the carry out is
// xored into it. With `ctrl` set, the sum is only applied when ctrl is 1: the
// carry network runs unconditionally (it cleans itself up either way) and
// only the gates that leave a net change on b are controlled.
void takahashi(Circuit& c, const Register& a, const Register& b, std::optional<Qubit> carry,
               std::optional<Qubit> ctrl) {
    std::size_t n = a.width();
    auto into_b = [&](std::size_t i) {
        if (ctrl) {
            c.ccx(*ctrl, a[i], b[i]);
        } else {
            c.cx(a[i], b[i]);
        }
    };
    if (n == 1) {
        if (carry) {
            if (ctrl) {
                build_mcx(c, {{*ctrl}, {a[0]}, {b[0]}}, *carry);
            } else {
                c.ccx(a[0], b[0], *carry);
            }
        }
        into_b(0);
        return;
    }
    for (std::size_t i = 1; i < n; i++) {
        c.cx(a[i], b[i]);
    }
    if (carry) {
        if (ctrl) {
            c.ccx(*ctrl, a[n - 1], *carry);
        } else {
            c.cx(a[n - 1], *carry);
        }
    }
    for (std::size_t i = n - 2; i >= 1; i--) {
        c.cx(a[i], a[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < n; i++) {
        c.ccx(b[i], a[i], a[i + 1]);
    }
    if (carry) {
        if (ctrl) {
            build_mcx(c, {{*ctrl}, {b[n - 1]}, {a[n - 1]}}, *carry);
        } else {
            c.ccx(b[n - 1], a[n - 1], *carry);
        }
    }
    for (std::size_t i = n - 1; i >= 1; i--) {
        into_b(i);
        c.ccx(b[i - 1], a[i - 1], a[i]);
    }
    for (std::size_t i = 1; i + 1 < n; i++) {
        c.cx(a[i], a[i + 1]);
    }
    for (std::size_t i = 1; i < n; i++) {
        c.cx(a[i], b[i]);
    }
    into_b(0);
}

}  // namespace

void build_adder(Circuit& c, const Register& a, const Register& b) {
    require_same_width(a, b, "adder");
    takahashi(c, a, b, std::nullopt, std::nullopt);
}

void build_adder_with_carry(Circuit& c, const Register& a, const Register& b, Qubit carry_out) {
    require_same_width(a, b, "adder_with_carry");
    takahashi(c, a, b, carry_out, std::nullopt);
}

void build_subtractor(Circuit& c, const Register& a, const Register& b) {
    require_same_width(a, b, "subtractor");
    for (Qubit q : b) {
        c.x(q);
    }
    build_adder(c, a, b);
    for (Qubit q : b) {
        c.x(q);
    }
}

void build_comparator(Circuit& c, const Register& a, const Register& b, Qubit result) {
    require_same_width(a, b, "comparator");
    // (~a + b) carries out exactly when b > a; complementing again leaves a - b.
    for (Qubit q : a) {
        c.x(q);
    }
    build_adder_with_carry(c, b, a, result);
    for (Qubit q : a) {
        c.x(q);
    }
    build_adder(c, b, a);
}

void build_less_than(Circuit& c, const Register& a, const Register& b, Qubit result) {
    require_same_width(a, b, "less_than");
    std::size_t n = a.width();
    Register c0 = c.alloc_register(1, "lt.c0");
    for (Qubit q : a) {
        c.x(q);
    }
    std::size_t begin = c.mark();
    for (std::size_t i = 0; i < n; i++) {
        Qubit carry = i == 0 ? c0[0] : a[i - 1];
        c.cx(a[i], b[i]);
        c.cx(a[i], carry);
        c.ccx(carry, b[i], a[i]);
    }
    std::size_t end = c.mark();
    c.cx(a[n - 1], result);
    c.append_inverse_of(begin, end);
    for (Qubit q : a) {
        c.x(q);
    }
    c.free_register(c0);
}

void build_carry_const(Circuit& c, const Register& a, std::uint64_t constant, Qubit result) {
    std::size_t n = a.width();
    if (n == 0 || (n < 64 && constant >> n) != 0) {
        throw CircuitError("carry_const: constant " + std::to_string(constant) + " does not fit in " +
                           std::to_string(n) + " bits");
    }
    auto bit = [&](std::size_t i) { return ((constant >> i) & 1) != 0; };
    // carry[i+1] = bit(i) ? a_i OR carry[i] : a_i AND carry[i], carry[0] = 0.
    // Below the lowest set bit of the constant every carry is 0.
    std::size_t lo = 0;
    while (lo < n && !bit(lo)) {
        lo++;
    }
    if (lo == n) {
        return;
    }
    // Carry into position lo + 1 is just a_lo.
    if (lo == n - 1) {
        c.cx(a[lo], result);
        return;
    }
    // Carries into lo + 2 .. n - 1 live on pool ancillae; the last one goes to result.
    std::size_t chain_len = n - lo - 2;
    Register chain;
    if (chain_len > 0) {
        chain = c.alloc_register(chain_len, "carry_chain");
    }
    auto carry_into = [&](std::size_t pos) -> Qubit {
        return pos == n ? result : chain[pos - lo - 2];
    };
    auto step = [&](std::size_t i) {
        // Writes the carry into position i + 1 from a_i and the carry into i.
        Qubit prev = (i == lo + 1) ? a[lo] : carry_into(i);
        Qubit t = carry_into(i + 1);
        if (bit(i)) {
            c.x(a[i]);
            c.x(prev);
            c.ccx(a[i], prev, t);
            c.x(a[i]);
            c.x(prev);
            c.x(t);
        } else {
            c.ccx(a[i], prev, t);
        }
    };
    std::size_t mark = c.mark();
    for (std::size_t i = lo + 1; i + 1 < n; i++) {
        step(i);
    }
    std::size_t end = c.mark();
    step(n - 1);
    c.append_inverse_of(mark, end);
    if (chain_len > 0) {
        c.free_register(chain);
    }
}

void build_ctrl_adder(Circuit& c, Qubit ctrl, const Register& a, const Register& b) {
    require_same_width(a, b, "ctrl_adder");
    takahashi(c, a, b, std::nullopt, ctrl);
}

void build_incrementer(Circuit& c, Qubit ctrl, const Register& a) {
    std::size_t n = a.width();
    if (n == 0) {
        return;
    }
    if (n == 1) {
        c.cx(ctrl, a[0]);
        return;
    }
    // g[i] = ctrl AND a_0 AND ... AND a_{i-1}, for i in [1, n).
    Register g = c.alloc_register(n - 1, "inc_chain");
    auto gq = [&](std::size_t i) { return i == 0 ? ctrl : g[i - 1]; };
    for (std::size_t i = 1; i < n; i++) {
        c.ccx(gq(i - 1), a[i - 1], gq(i));
    }
    for (std::size_t i = n - 1; i >= 1; i--) {
        c.cx(gq(i), a[i]);
        c.ccx(gq(i - 1), a[i - 1], gq(i));
    }
    c.cx(ctrl, a[0]);
    c.free_register(g);
}

void build_twos_complement(Circuit& c, Qubit sign, const Register& m) {
    for (Qubit q : m) {
        c.cx(sign, q);
    }
    build_incrementer(c, sign, m);
}

void build_twos_complement_borrowed(Circuit& c, Qubit sign, const Register& m, const Register& borrowed) {
    require_same_width(m, borrowed, "twos_complement_borrowed");
    auto flip = [&](const Register& r) {
        for (Qubit q : r) {
            c.cx(sign, q);
        }
    };
    // sign = 0: m - g + g. sign = 1: ~m - g - ~g = ~m + 1.
    flip(m);
    build_subtractor(c, borrowed, m);
    flip(borrowed);
    flip(m);
    build_adder(c, borrowed, m);
    flip(m);
    flip(borrowed);
}

void build_multiplier(Circuit& c, const Register& a, const Register& b, const Register& out,
                      std::optional<Qubit> zero_scratch) {
    require_same_width(a, b, "multiplier");
    std::size_t n = a.width();
    if (out.width() != 2 * n) {
        throw CircuitError("multiplier: output must be 2n = " + std::to_string(2 * n) + " qubits wide");
    }
    // The first partial product lands on an all-zero register: a controlled copy.
    for (std::size_t j = 0; j < n; j++) {
        c.ccx(a[0], b[j], out[j]);
    }
    if (n == 1) {
        return;
    }
    Register owned;
    Qubit ext;
    if (zero_scratch) {
        ext = *zero_scratch;
    } else {
        owned = c.alloc_register(1, "mul_ext");
        ext = owned[0];
    }
    Register b_ext = b.concat(ext);
    for (std::size_t i = 1; i < n; i++) {
        build_ctrl_adder(c, a[i], b_ext, out.slice(i, n + 1));
    }
    if (!zero_scratch) {
        c.free_register(owned);
    }
}

}  // namespace qfloat
