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

#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "qfloat/fp_circuits.h"
#include "qfloat/sim.h"
#include "test_util.h"

using namespace qfloat;
using qfloat::testing::others_zero;

namespace {

std::uint64_t mask(std::size_t n) { return (std::uint64_t{1} << n) - 1; }

std::size_t count_kind(const Circuit& c, GateKind k) {
    std::size_t n = 0;
    for (const Gate& g : c.gates()) {
        n += g.kind == k;
    }
    return n;
}

struct FpBench {
    FpFormat f;
    Circuit c;
    FpRegisters x, y, out;
    Register xa, ya, oa;
    FpBench(FpFormat format, bool multiply) : f(format) {
        x = alloc_fp(c, f, "x");
        y = alloc_fp(c, f, "y");
        out = alloc_fp(c, f, "out");
        if (multiply) {
            build_fp_multiplier(c, x, y, out);
        } else {
            build_fp_adder(c, x, y, out);
        }
        xa = x.all();
        ya = y.all();
        oa = out.all();
    }
    // Runs one pair; checks inputs and ancillae, returns the output bits.
    std::uint64_t run(std::uint64_t a, std::uint64_t b) const {
        BasisState s(c.qubit_count());
        write_register(s, xa, a);
        write_register(s, ya, b);
        simulate_inplace(c, s);
        EXPECT_EQ(read_register(s, xa), a);
        EXPECT_EQ(read_register(s, ya), b);
        EXPECT_TRUE(others_zero(s, {&xa, &ya, &oa}));
        return read_register(s, oa);
    }
};

void exhaustive(const FpFormat& f, bool multiply) {
    FpBench bench(f, multiply);
    std::uint64_t top = mask(static_cast<std::size_t>(f.width()));
    for (std::uint64_t a = 0; a <= top; a++) {
        for (std::uint64_t b = 0; b <= top; b++) {
            FpValue va = decode(f, {a}), vb = decode(f, {b});
            FpValue want = multiply ? fp_mul_ref(f, va, vb) : fp_add_ref(f, va, vb);
            std::uint64_t got = bench.run(a, b);
            ASSERT_EQ(got, encode(f, want).bits) << va.str(f) << (multiply ? " * " : " + ") << vb.str(f)
                                                 << " gave " << decode(f, {got}).str(f);
            if (::testing::Test::HasFailure()) {
                return;
            }
        }
    }
}

}  // namespace

TEST(shifter, examples_and_exhaustive_m4) {
    for (ShiftDirection dir : {ShiftDirection::Left, ShiftDirection::Right}) {
        Circuit c;
        Register s = c.alloc_register(2, "s");
        Register x = c.alloc_register(8, "x");
        build_shifter(c, s, x, dir);
        EXPECT_EQ(c.qubit_count(), 10u);
        for (std::uint64_t sv = 0; sv < 4; sv++) {
            for (std::uint64_t xv = 0; xv < 256; xv++) {
                bool valid = dir == ShiftDirection::Left ? (xv >> (8 - sv)) == 0 : (xv & mask(sv)) == 0;
                if (!valid) {
                    continue;
                }
                BasisState st(c.qubit_count());
                write_register(st, s, sv);
                write_register(st, x, xv);
                simulate_inplace(c, st);
                ASSERT_EQ(read_register(st, s), sv);
                ASSERT_EQ(read_register(st, x), dir == ShiftDirection::Left ? (xv << sv) & 255 : xv >> sv);
            }
        }
    }
}

TEST(shifter, three_bit_amount) {
    Circuit c;
    Register s = c.alloc_register(2, "s");
    Register x = c.alloc_register(8, "x");
    build_shifter(c, s, x, ShiftDirection::Left);
    BasisState st(c.qubit_count());
    write_register(st, s, 3);
    write_register(st, x, 0b101);
    simulate_inplace(c, st);
    EXPECT_EQ(read_register(st, x), 0b101000u);
}

TEST(shifter, fredkin_count_is_subquadratic) {
    std::size_t prev = 0;
    for (std::size_t m : {4u, 8u, 16u, 32u, 64u}) {
        Circuit c;
        std::size_t lg = 0;
        while ((std::size_t{1} << lg) < m) {
            lg++;
        }
        Register s = c.alloc_register(lg, "s");
        Register x = c.alloc_register(2 * m, "x");
        build_shifter(c, s, x, ShiftDirection::Right);
        std::size_t n = count_kind(c, GateKind::Fredkin);
        EXPECT_LE(n, 2 * m * lg);
        if (m >= 8) {
            EXPECT_LT(n, m * (m - 1));
        }
        if (m >= 16) {
            EXPECT_LT(static_cast<double>(n) / prev, 3.0);
        }
        prev = n;
    }
}

TEST(shifter_signed, arithmetic_shift_exhaustive) {
    Circuit c;
    Register s = c.alloc_register(2, "s");
    Register x = c.alloc_register(8, "x");
    build_shifter_signed(c, s, x);
    for (std::uint64_t sv = 0; sv < 4; sv++) {
        for (std::uint64_t xv = 0; xv < 256; xv++) {
            if (xv & mask(sv)) {
                continue;
            }
            BasisState st(c.qubit_count());
            write_register(st, s, sv);
            write_register(st, x, xv);
            simulate_inplace(c, st);
            auto sx = static_cast<std::int8_t>(xv);
            ASSERT_EQ(read_register(st, x), static_cast<std::uint8_t>(sx >> sv)) << xv << " >> " << sv;
        }
    }
    BasisState st(c.qubit_count());
    write_register(st, s, 2);
    write_register(st, x, static_cast<std::uint8_t>(-8));
    simulate_inplace(c, st);
    EXPECT_EQ(read_register(st, x), static_cast<std::uint8_t>(-2));
}

TEST(first_one, exhaustive) {
    for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 16u}) {
        std::size_t w = 1;
        while ((std::size_t{1} << w) < n) {
            w++;
        }
        Circuit c;
        Register x = c.alloc_register(n, "x");
        Register p = c.alloc_register(w, "p");
        Register f = c.alloc_register(1, "f");
        build_first_one(c, x, p, f[0]);
        for (std::uint64_t v = 0; v <= mask(n); v++) {
            BasisState st(c.qubit_count());
            write_register(st, x, v);
            simulate_inplace(c, st);
            ASSERT_EQ(read_register(st, x), v);
            ASSERT_EQ(read_register(st, p), v ? std::bit_width(v) - 1 : 0u) << "n=" << n << " x=" << v;
            ASSERT_EQ(st.get(f[0]), v == 0);
            ASSERT_TRUE(others_zero(st, {&x, &p, &f}));
        }
    }
}

TEST(leading_zeros, exhaustive) {
    for (std::size_t n : {4u, 7u, 8u}) {
        std::size_t w = 1;
        while ((std::size_t{1} << w) < n) {
            w++;
        }
        Circuit c;
        Register x = c.alloc_register(n, "x");
        Register z = c.alloc_register(w, "z");
        Register f = c.alloc_register(1, "f");
        build_leading_zeros(c, x, z, f[0]);
        for (std::uint64_t v = 0; v <= mask(n); v++) {
            BasisState st(c.qubit_count());
            write_register(st, x, v);
            simulate_inplace(c, st);
            ASSERT_EQ(read_register(st, z), v ? n - std::bit_width(v) : 0u);
            ASSERT_EQ(st.get(f[0]), v == 0);
        }
    }
}

TEST(renormalize, shifts_and_adjusts_exponent) {
    Circuit c;
    Register m = c.alloc_register(8, "m");
    Register e = c.alloc_register(6, "e");
    Renormalized rn = build_renormalize(c, m, e);
    for (std::uint64_t v = 0; v < 256; v++) {
        BasisState st(c.qubit_count());
        write_register(st, m, v);
        write_register(st, e, 10);
        simulate_inplace(c, st);
        std::uint64_t lz = v ? 8 - std::bit_width(v) : 0;
        ASSERT_EQ(read_register(st, m), (v << lz) & 255);
        ASSERT_EQ(read_register(st, e), 10 - lz);
        ASSERT_EQ(st.get(rn.zero_flag[0]), v == 0);
    }
}

TEST(fp_adder, examples) {
    FpFormat toy{3, 4};
    FpBench bench(toy, false);
    auto enc = [&](double d) { return encode(toy, from_double(toy, d)).bits; };
    EXPECT_EQ(bench.run(enc(1.5), enc(2.5)), enc(4.0));
    EXPECT_EQ(bench.run(enc(-1.5), enc(0.0)), enc(-1.5));
    EXPECT_EQ(bench.run(enc(1.5), enc(-1.5)), enc(0.0));
}

TEST(fp_adder, exhaustive_toy) { exhaustive(FpFormat{3, 4}, false); }
TEST(fp_adder, exhaustive_narrow) { exhaustive(FpFormat{3, 2}, false); }

TEST(fp_multiplier, examples) {
    FpFormat toy{3, 4};
    FpBench bench(toy, true);
    auto enc = [&](double d) { return encode(toy, from_double(toy, d)).bits; };
    EXPECT_EQ(bench.run(enc(-1.5), enc(2.0)), enc(-3.0));
    EXPECT_EQ(bench.run(enc(1.25), enc(1.0)), enc(1.25));
}

TEST(fp_multiplier, exhaustive_toy) { exhaustive(FpFormat{3, 4}, true); }
TEST(fp_multiplier, exhaustive_narrow) { exhaustive(FpFormat{2, 3}, true); }

TEST(fp_circuits, commutative_outputs_sampled) {
    FpFormat half{8, 7};
    for (bool mul : {false, true}) {
        FpBench bench(half, mul);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 2000; i++) {
            std::uint64_t a = rng() & 0xffff, b = rng() & 0xffff;
            ASSERT_EQ(bench.run(a, b), bench.run(b, a));
        }
    }
}

TEST(fp_circuits, rejects_mismatched_formats) {
    Circuit c;
    FpRegisters x = alloc_fp(c, FpFormat{3, 4}, "x");
    FpRegisters y = alloc_fp(c, FpFormat{4, 4}, "y");
    FpRegisters o = alloc_fp(c, FpFormat{3, 4}, "o");
    EXPECT_THROW(build_fp_adder(c, x, y, o), CircuitError);
    FpRegisters a = alloc_fp(c, FpFormat{2, 4}, "a");
    FpRegisters b = alloc_fp(c, FpFormat{2, 4}, "b");
    FpRegisters d = alloc_fp(c, FpFormat{2, 4}, "d");
    EXPECT_THROW(build_fp_adder(c, a, b, d), CircuitError);
}
