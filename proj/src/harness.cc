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

#include "phasefold/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "phasefold/cancel.h"
#include "phasefold/oracle/dense.h"
#include "phasefold/oracle/parity.h"
#include "phasefold/qasm.h"

namespace phasefold {

namespace {

// Unbiased-enough bounded draw that does not depend on the standard
// library's distribution implementation.
uint32_t below(std::mt19937_64 &rng, uint32_t n) {
    return static_cast<uint32_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

uint64_t now_ns() {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now().time_since_epoch())
            .count());
}

void append_cx(Circuit &c, std::mt19937_64 &rng) {
    uint32_t a = below(rng, c.num_qubits());
    uint32_t b = below(rng, c.num_qubits() - 1);
    if (b >= a) {
        ++b;
    }
    c.cx(a, b);
}

}  // namespace

Circuit random_circuit(uint32_t num_qubits, size_t num_gates, uint64_t seed) {
    if (num_qubits < 1) {
        throw std::invalid_argument("random_circuit needs at least one qubit");
    }
    std::mt19937_64 rng(seed);
    Circuit c(num_qubits);
    c.reserve(num_gates);
    const uint32_t kinds = num_qubits > 1 ? 7 : 6;
    for (size_t i = 0; i < num_gates; i++) {
        uint32_t kind = below(rng, kinds);
        if (kind == 6) {
            append_cx(c, rng);
            continue;
        }
        uint32_t q = below(rng, num_qubits);
        switch (kind) {
            case 0:
                c.h(q);
                break;
            case 1:
                c.x(q);
                break;
            case 2:
                c.rz(Angle::t(), q);
                break;
            case 3:
                c.rz(Angle::tdg(), q);
                break;
            case 4:
                c.rz(Angle::s(), q);
                break;
            default:
                c.rz(Angle::z(), q);
                break;
        }
    }
    return c;
}

Circuit tchain_cx_circuit(size_t num_gates, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Circuit c(kTChainQubits);
    c.reserve(num_gates);
    static const Angle rotations[] = {Angle::t(), Angle::tdg(), Angle::s()};
    for (size_t i = 0; i < num_gates; i++) {
        if (i % 6 < 3) {
            append_cx(c, rng);
        } else {
            c.rz(rotations[below(rng, 3)], below(rng, kTChainQubits));
        }
    }
    return c;
}

OptimizeResult optimize(const Circuit &input, const OptimizeOptions &options) {
    OptimizeResult result{Circuit(input.num_qubits()), {}, Circuit(input.num_qubits()), 0, 0, 0};
    uint64_t start = now_ns();
    const Circuit *current = &input;
    Circuit cancelled;
    for (unsigned round = 0; round < std::max(1u, options.rounds); round++) {
        if (options.precancel) {
            CancelReport cr;
            cancelled = cancel_adjacent(*current, &cr);
            result.pairs_cancelled += cr.pairs_cancelled;
            current = &cancelled;
        }
        FoldOptions fo{options.width, options.seed + round, options.record_merges && round == 0};
        FoldResult folded = fold(*current, fo);
        result.merges += folded.report.merges;
        if (round == 0) {
            result.report = std::move(folded.report);
            if (options.record_merges) {
                result.folded_input = *current;
            }
        }
        result.circuit = std::move(folded.circuit);
        current = &result.circuit;
    }
    result.pass_ns = now_ns() - start;
    return result;
}

std::string csv_header() {
    return "name,n_qubits,gates_in,t_in,gates_out,t_out,merges,wall_time_ns,seed,width";
}

std::string csv_row(const StatsRecord &r) {
    // std::to_string on integers is locale-independent.
    return r.name + "," + std::to_string(r.n_qubits) + "," + std::to_string(r.gates_in) + "," +
           std::to_string(r.t_in) + "," + std::to_string(r.gates_out) + "," + std::to_string(r.t_out) + "," +
           std::to_string(r.merges) + "," + std::to_string(r.wall_time_ns) + "," + std::to_string(r.seed) + "," +
           std::to_string(r.width);
}

StatsRecord make_record(const std::string &name, const Circuit &in, const OptimizeResult &result,
                        const OptimizeOptions &options) {
    CircuitStats before = in.stats();
    CircuitStats after = result.circuit.stats();
    StatsRecord r;
    r.name = name;
    r.n_qubits = in.num_qubits();
    r.gates_in = before.total_gates;
    r.t_in = before.t_count;
    r.gates_out = after.total_gates;
    r.t_out = after.t_count;
    r.merges = result.merges;
    r.wall_time_ns = result.pass_ns;
    r.seed = options.seed;
    r.width = options.width;
    return r;
}

VerifyOutcome verify_optimization(const Circuit &input, const OptimizeOptions &options,
                                  const std::function<void(Circuit &)> &tamper) {
    VerifyOutcome outcome;
    if (input.num_qubits() > oracle::kMaxDenseQubits) {
        outcome.status = VerifyStatus::Refused;
        outcome.message = "circuit has " + std::to_string(input.num_qubits()) +
                          " qubits; dense verification is limited to " + std::to_string(oracle::kMaxDenseQubits);
        return outcome;
    }
    Circuit out = optimize(input, options).circuit;
    if (tamper) {
        tamper(out);
    }
    outcome.max_error = oracle::simulate(input).max_abs_diff(oracle::simulate(out));
    if (outcome.max_error <= kVerifyTolerance) {
        outcome.status = VerifyStatus::Pass;
        outcome.message = "equivalent";
    } else {
        outcome.status = VerifyStatus::Fail;
        outcome.message = "NOT equivalent: max entrywise error " + std::to_string(outcome.max_error);
    }
    return outcome;
}

FuzzSummary run_fuzz(const FuzzConfig &config, std::ostream *failure_log) {
    if (config.max_qubits < 1 || config.max_qubits > oracle::kMaxDenseQubits) {
        throw std::invalid_argument("fuzz max qubits must be in [1, 10]");
    }
    FuzzSummary summary;
    for (size_t trial = 0; trial < config.trials; trial++) {
        uint64_t seed = config.seed + trial;
        std::mt19937_64 shape(seed);
        uint32_t n = 1 + below(shape, config.max_qubits);
        size_t m = static_cast<size_t>(shape() % (config.max_gates + 1));
        Circuit input = random_circuit(n, m, seed);

        OptimizeOptions opts;
        opts.width = config.width;
        opts.seed = seed;
        opts.precancel = config.precancel;
        opts.record_merges = true;
        OptimizeResult result = optimize(input, opts);
        summary.total_merges += result.merges;

        double err = oracle::simulate(input).max_abs_diff(oracle::simulate(result.circuit));
        summary.worst_error = std::max(summary.worst_error, err);
        bool equivalent = err <= kVerifyTolerance;
        bool agrees = oracle::symbolic_merge_set(result.folded_input) == result.report.merge_pairs;
        bool t_ok = result.circuit.stats().t_count <= input.stats().t_count;

        OptimizeOptions again = opts;
        again.seed = seed ^ 0x5DEECE66Dull;
        again.record_merges = false;
        if (optimize(result.circuit, again).merges > 0) {
            ++summary.second_round_merges;
        }
        again.precancel = false;
        if (optimize(result.circuit, again).merges > 0) {
            ++summary.second_round_fold_only_merges;
        }

        summary.equivalence_failures += !equivalent;
        summary.agreement_failures += !agrees;
        summary.t_increases += !t_ok;
        ++summary.trials;
        if ((!equivalent || !agrees || !t_ok) && failure_log != nullptr) {
            *failure_log << "# trial " << trial << " seed " << seed << " width " << config.width
                         << (equivalent ? "" : " [not equivalent]") << (agrees ? "" : " [oracle disagreement]")
                         << (t_ok ? "" : " [T-count increased]") << "\n"
                         << emit_qasm(input);
        }
    }
    return summary;
}

std::vector<StatsRecord> run_bench(const BenchConfig &config) {
    if (config.family != "tchain-cx" && config.family != "random") {
        throw std::invalid_argument("unknown bench family '" + config.family + "' (expected tchain-cx or random)");
    }
    if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
        throw std::invalid_argument("bench sizes must be ascending");
    }
    std::vector<StatsRecord> records;
    for (size_t m : config.sizes) {
        Circuit c = config.family == "tchain-cx" ? tchain_cx_circuit(m, config.seed)
                                                 : random_circuit(32, m, config.seed);
        OptimizeOptions opts;
        opts.width = config.width;
        opts.seed = config.seed;
        opts.precancel = config.precancel;
        size_t reps = std::clamp<size_t>(2'000'000 / std::max<size_t>(m, 1), 1, 50);
        OptimizeResult best = optimize(c, opts);
        for (size_t r = 1; r < reps; r++) {
            OptimizeResult again = optimize(c, opts);
            if (again.pass_ns < best.pass_ns) {
                best.pass_ns = again.pass_ns;
            }
        }
        records.push_back(make_record(config.family + "-" + std::to_string(m), c, best, opts));
    }
    return records;
}

std::optional<double> loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        return std::nullopt;
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); i++) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

}  // namespace phasefold
