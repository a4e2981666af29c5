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

#ifndef QFLOAT_VERIFY_H
#define QFLOAT_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfloat/circuit.h"
#include "qfloat/fp_format.h"
#include "qfloat/resources.h"

namespace qfloat {

enum class FpOp { Add, Mul };
enum class VerifyMode { Exhaustive, Random };

/// Largest operand width for which exhaustive verification is allowed.
inline constexpr int kMaxExhaustiveWidth = 18;

/// A built FP circuit. Operands and result are encoded bit patterns,
/// exponent bit 0 first.
struct FpCircuit {
    FpFormat format;
    FpOp op = FpOp::Add;
    Circuit circuit;
    Register x, y, out;
};

FpCircuit build_fp_circuit(const FpFormat& format, FpOp op);

struct VerifyPlan {
    FpFormat format;
    FpOp op = FpOp::Add;
    VerifyMode mode = VerifyMode::Random;
    std::uint64_t sample_count = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct Counterexample {
    std::uint64_t x = 0, y = 0;
    std::uint64_t expected = 0, got = 0;
    std::string reason;  // "result", "input changed" or "dirty ancilla"
};

struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
    std::uint64_t seed = 0;
    VerifyMode mode = VerifyMode::Random;
    std::optional<Counterexample> first_failure;  // lowest-numbered failing case

    bool ok() const { return checked == passed; }
    /// e.g. "65536/65536 pass", followed by the first counterexample in hex.
    std::string summary(const FpFormat& format) const;
};

/// Checks output, input preservation and ancilla cleanliness on every case.
/// Random cases come from std::mt19937_64 seeded with plan.seed. Throws
/// std::invalid_argument for an exhaustive plan wider than kMaxExhaustiveWidth.
VerifyReport verify_fp(const FpCircuit& target, const VerifyPlan& plan);

/// Fixed-point multiplier: out <- high n bits of a * b through a full
/// 2n-bit product that is uncomputed afterwards.
struct FixedMultiplier {
    Circuit circuit;
    Register a, b, out;
};
FixedMultiplier build_fixed_multiplier(std::size_t n);

/// A circuit built by name for the CLI. Blocks: adder, comparator,
/// multiplier, fixedmul (take `width`), fpadd, fpmul (take `format`).
struct BuiltBlock {
    std::string name;
    Circuit circuit;
    std::vector<Register> registers;  // operands then results
};
BuiltBlock build_block(const std::string& name, std::size_t width, const FpFormat& format);
std::vector<std::string> block_names();

/// One reproduction row: measured values next to the published reference.
struct ReproRow {
    std::string design;  // "adder" or "multiplier"
    int width = 0;
    ResourceReport measured;
    std::uint64_t qubits_ref = 0, tcount_ref = 0, tdepth_ref = 0;
    std::uint64_t kq_ref() const { return qubits_ref * tdepth_ref; }
};

/// Builds the six reference FP circuits (adder and multiplier at 16, 32, 64 bits).
std::vector<ReproRow> repro_rows();
std::string repro_csv(const std::vector<ReproRow>& rows);
/// Markdown table with percentage deltas.
std::string repro_markdown(const std::vector<ReproRow>& rows);

}  // namespace qfloat

#endif
