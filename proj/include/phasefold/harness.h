// Copyright 2026 The phasefold Authors
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

#ifndef PHASEFOLD_HARNESS_H
#define PHASEFOLD_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phasefold/circuit.h"
#include "phasefold/fold.h"

namespace phasefold {

/// I.i.d. gates drawn uniformly from {H, X, T, Tdg, S, Z, CX}, qubits
/// uniform (and distinct for CX). CX is left out of the draw on one qubit.
Circuit random_circuit(uint32_t num_qubits, size_t num_gates, uint64_t seed);

inline constexpr uint32_t kTChainQubits = 12;

/// Benchmark family that keeps folding busy at any size: on 12 qubits,
/// alternate a layer of 3 random CX gates with 3 rotations drawn from
/// {T, Tdg, S} on random qubits. Without Hadamards every parity stays in a
/// 2^12-element space, so rotations keep colliding and merging.
Circuit tchain_cx_circuit(size_t num_gates, uint64_t seed);

struct OptimizeOptions {
    unsigned width = kMaxWidth;
    uint64_t seed = 0;
    bool precancel = true;
    /// Extra cancel+fold rounds; round r uses seed + r.
    unsigned rounds = 1;
    bool record_merges = false;
};

struct OptimizeResult {
    Circuit circuit;
    /// Report of the first fold round (merge pairs refer to `folded_input`).
    FoldReport report;
    /// The circuit the first fold round ran on (after precancel).
    Circuit folded_input;
    size_t merges = 0;
    size_t pairs_cancelled = 0;
    /// Time spent in cancel + fold only.
    uint64_t pass_ns = 0;
};

/// cancel_adjacent (optional) followed by fold, `rounds` times.
OptimizeResult optimize(const Circuit &input, const OptimizeOptions &options);

/// One CSV row. Column order is fixed.
struct StatsRecord {
    std::string name;
    uint32_t n_qubits = 0;
    size_t gates_in = 0;
    size_t t_in = 0;
    size_t gates_out = 0;
    size_t t_out = 0;
    size_t merges = 0;
    uint64_t wall_time_ns = 0;
    uint64_t seed = 0;
    unsigned width = 0;
};

std::string csv_header();
std::string csv_row(const StatsRecord &r);

StatsRecord make_record(const std::string &name, const Circuit &in, const OptimizeResult &result,
                        const OptimizeOptions &options);

enum class VerifyStatus { Pass, Fail, Refused };

struct VerifyOutcome {
    VerifyStatus status = VerifyStatus::Pass;
    double max_error = 0;
    std::string message;
};

inline constexpr double kVerifyTolerance = 1e-9;

/// Optimizes and checks the result against the input with the dense
/// simulator. `tamper`, when set, edits the optimized circuit first (used to
/// check that a broken optimizer is caught).
VerifyOutcome verify_optimization(const Circuit &input, const OptimizeOptions &options,
                                  const std::function<void(Circuit &)> &tamper = {});

struct FuzzConfig {
    size_t trials = 0;
    uint32_t max_qubits = 6;
    size_t max_gates = 60;
    unsigned width = 64;
    uint64_t seed = 0;
    bool precancel = true;
};

struct FuzzSummary {
    size_t trials = 0;
    size_t equivalence_failures = 0;
    size_t agreement_failures = 0;
    size_t t_increases = 0;
    /// Trials where a second cancel+fold round (fresh seed) merged more.
    size_t second_round_merges = 0;
    /// Same, with the second round running fold alone (no precancel).
    size_t second_round_fold_only_merges = 0;
    size_t total_merges = 0;
    double worst_error = 0;

    size_t failures() const { return equivalence_failures + agreement_failures + t_increases; }
};

/// Trial i uses seed + i for both the generator and the optimizer. Failing
/// trials are written to `failure_log` with their seed and circuit.
FuzzSummary run_fuzz(const FuzzConfig &config, std::ostream *failure_log = nullptr);

struct BenchConfig {
    std::string family = "tchain-cx";
    std::vector<size_t> sizes;
    uint64_t seed = 0;
    unsigned width = kMaxWidth;
    bool precancel = true;
};

/// Generates one circuit per size and times cancel + fold on it. Small sizes
/// are repeated and the fastest run kept. Throws std::invalid_argument for
/// an unknown family or non-ascending sizes.
std::vector<StatsRecord> run_bench(const BenchConfig &config);

/// Least-squares slope of log(y) against log(x). Empty with fewer than two
/// distinct x values.
std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace phasefold

#endif
