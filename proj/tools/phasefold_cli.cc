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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phasefold/abstract_state.h"
#include "phasefold/fold.h"
#include "phasefold/harness.h"
#include "phasefold/qasm.h"

using namespace phasefold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t effective_seed(const std::optional<uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("PHASEFOLD_SEED"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 0);
        if (end == env || *end != '\0') {
            throw UsageError(std::string("PHASEFOLD_SEED is not an integer: ") + env);
        }
        return v;
    }
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw UsageError("cannot write " + path);
    }
}

Circuit load(const std::string &path, bool decompose_ccx) {
    ParseResult r = parse_qasm(read_file(path), ParseOptions{decompose_ccx});
    if (!r.ok()) {
        for (const auto &d : r.diagnostics) {
            std::cerr << path << ":" << d.str() << "\n";
        }
        throw UsageError("failed to parse " + path);
    }
    return std::move(*r.circuit);
}

uint64_t elapsed_ns(std::chrono::steady_clock::time_point since) {
    return static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - since).count());
}

struct OptimizeArgs {
    std::string input;
    std::string output;
    std::optional<uint64_t> seed;
    std::optional<unsigned> width;
    std::optional<double> epsilon;
    bool no_precancel = false;
    bool decompose_ccx = false;
    std::string stats_csv;
    unsigned rounds = 1;
};

OptimizeOptions resolve_options(const Circuit &c, const OptimizeArgs &a, std::ostream &report) {
    OptimizeOptions o;
    o.seed = effective_seed(a.seed);
    o.precancel = !a.no_precancel;
    o.rounds = a.rounds;
    if (a.epsilon) {
        WidthChoice w = required_width(std::max<uint64_t>(1, c.size()), *a.epsilon);
        o.width = w.width;
        if (w.capped) {
            report << "warning: requested epsilon needs more than " << kMaxWidth << " bits; using " << kMaxWidth
                   << "\n";
        }
    } else if (a.width) {
        o.width = *a.width;
    }
    report << "seed " << o.seed << "\nwidth " << o.width << "\n";
    return o;
}

int cmd_optimize(const OptimizeArgs &a) {
    auto start = std::chrono::steady_clock::now();
    Circuit in = load(a.input, a.decompose_ccx);
    std::ostream &report = a.output.empty() ? std::cerr : std::cout;
    OptimizeOptions opts = resolve_options(in, a, report);
    OptimizeResult result = optimize(in, opts);
    std::string text = emit_qasm(result.circuit);
    if (a.output.empty()) {
        std::cout << text;
    } else {
        write_file(a.output, text);
    }
    StatsRecord rec = make_record(a.input, in, result, opts);
    if (!a.stats_csv.empty()) {
        write_file(a.stats_csv, csv_header() + "\n" + csv_row(rec) + "\n");
    }
    report << csv_header() << "\n" << csv_row(rec) << "\n";
    report << "pairs_cancelled " << result.pairs_cancelled << "\n";
    report << "pass_time_ns " << result.pass_ns << "\n";
    report << "end_to_end_ns " << elapsed_ns(start) << "\n";
    return kExitOk;
}

int cmd_stats(const std::string &input, bool decompose_ccx) {
    Circuit c = load(input, decompose_ccx);
    CircuitStats s = c.stats();
    std::cout << "qubits " << s.num_qubits << "\n"
              << "gates " << s.total_gates << "\n"
              << "t " << s.t_count << "\n"
              << "rz " << s.rz_count << "\n"
              << "cx " << s.cx_count << "\n"
              << "h " << s.h_count << "\n"
              << "x " << s.x_count << "\n";
    return kExitOk;
}

int cmd_verify(const OptimizeArgs &a) {
    Circuit in = load(a.input, a.decompose_ccx);
    OptimizeOptions opts = resolve_options(in, a, std::cout);
    VerifyOutcome v = verify_optimization(in, opts);
    switch (v.status) {
        case VerifyStatus::Pass:
            std::cout << "PASS max_error " << v.max_error << "\n";
            return kExitOk;
        case VerifyStatus::Fail:
            std::cout << "FAIL " << v.message << "\n";
            return kExitVerifyFailed;
        case VerifyStatus::Refused:
            std::cout << "REFUSED " << v.message << "\n";
            return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"phasefold: randomized phase folding for Clifford+T circuits"};
    app.require_subcommand(1);

    OptimizeArgs opt;
    auto *optimize_cmd = app.add_subcommand("optimize", "Optimize an OpenQASM 2.0 file");
    optimize_cmd->add_option("input", opt.input, "Input .qasm")->required()->check(CLI::ExistingFile);
    optimize_cmd->add_option("-o,--output", opt.output, "Output .qasm (default: stdout)");
    optimize_cmd->add_option("--seed", opt.seed, "RNG seed (default: $PHASEFOLD_SEED or OS entropy)");
    auto *width_opt = optimize_cmd->add_option("--width", opt.width, "Bitstring width k")->check(CLI::Range(1, 128));
    optimize_cmd->add_option("--epsilon", opt.epsilon, "Target failure probability; picks k")
        ->check(CLI::Range(0.0, 1.0))
        ->excludes(width_opt);
    optimize_cmd->add_flag("--no-precancel", opt.no_precancel, "Skip adjacent-gate cancellation");
    optimize_cmd->add_flag("--decompose-ccx", opt.decompose_ccx, "Lower ccx to Clifford+T");
    optimize_cmd->add_option("--stats", opt.stats_csv, "Write a CSV stats row here");
    optimize_cmd->add_option("--rounds", opt.rounds, "Cancel+fold rounds")->check(CLI::Range(1, 64));

    std::string stats_input;
    bool stats_ccx = false;
    auto *stats_cmd = app.add_subcommand("stats", "Print gate counts");
    stats_cmd->add_option("input", stats_input)->required()->check(CLI::ExistingFile);
    stats_cmd->add_flag("--decompose-ccx", stats_ccx);

    OptimizeArgs ver;
    auto *verify_cmd = app.add_subcommand("verify", "Optimize and check equivalence (n <= 10)");
    verify_cmd->add_option("input", ver.input)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--seed", ver.seed);
    verify_cmd->add_option("--width", ver.width)->check(CLI::Range(1, 128));
    verify_cmd->add_flag("--no-precancel", ver.no_precancel);
    verify_cmd->add_flag("--decompose-ccx", ver.decompose_ccx);

    uint32_t gen_n = 1;
    size_t gen_m = 0;
    std::optional<uint64_t> gen_seed;
    std::string gen_out;
    auto *gen_cmd = app.add_subcommand("gen", "Emit a random Clifford+T circuit");
    gen_cmd->add_option("-n", gen_n, "Qubits")->required()->check(CLI::Range(1u, 1u << 20));
    gen_cmd->add_option("-m", gen_m, "Gates")->required();
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("-o,--output", gen_out);

    FuzzConfig fuzz;
    fuzz.trials = 1000;
    std::optional<uint64_t> fuzz_seed;
    bool fuzz_no_precancel = false;
    auto *fuzz_cmd = app.add_subcommand("fuzz", "Random circuits checked against the oracles");
    fuzz_cmd->add_option("--trials", fuzz.trials);
    fuzz_cmd->add_option("--max-qubits", fuzz.max_qubits)->check(CLI::Range(1, 10));
    fuzz_cmd->add_option("--max-gates", fuzz.max_gates);
    fuzz_cmd->add_option("--width", fuzz.width)->check(CLI::Range(1, 128));
    fuzz_cmd->add_option("--seed", fuzz_seed);
    fuzz_cmd->add_flag("--no-precancel", fuzz_no_precancel);

    BenchConfig bench;
    std::optional<uint64_t> bench_seed;
    std::string bench_out;
    auto *bench_cmd = app.add_subcommand("bench", "Time cancel+fold across sizes; CSV out");
    bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"tchain-cx", "random"}));
    bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',')->required();
    bench_cmd->add_option("--seed", bench_seed);
    bench_cmd->add_option("--width", bench.width)->check(CLI::Range(1, 128));
    bench_cmd->add_option("-o,--output", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*optimize_cmd) {
            return cmd_optimize(opt);
        }
        if (*stats_cmd) {
            return cmd_stats(stats_input, stats_ccx);
        }
        if (*verify_cmd) {
            return cmd_verify(ver);
        }
        if (*gen_cmd) {
            uint64_t seed = effective_seed(gen_seed);
            std::cerr << "seed " << seed << "\n";
            std::string text = emit_qasm(random_circuit(gen_n, gen_m, seed));
            if (gen_out.empty()) {
                std::cout << text;
            } else {
                write_file(gen_out, text);
            }
            return kExitOk;
        }
        if (*fuzz_cmd) {
            fuzz.seed = effective_seed(fuzz_seed);
            fuzz.precancel = !fuzz_no_precancel;
            std::cout << "seed " << fuzz.seed << "\nwidth " << fuzz.width << "\n";
            FuzzSummary s = run_fuzz(fuzz, &std::cerr);
            std::cout << "trials " << s.trials << "\n"
                      << "equivalence_failures " << s.equivalence_failures << "\n"
                      << "agreement_failures " << s.agreement_failures << "\n"
                      << "t_increases " << s.t_increases << "\n"
                      << "second_round_merges " << s.second_round_merges << "\n"
                      << "second_round_fold_only_merges " << s.second_round_fold_only_merges << "\n"
                      << "total_merges " << s.total_merges << "\n"
                      << "worst_error " << s.worst_error << "\n";
            return s.failures() == 0 ? kExitOk : kExitVerifyFailed;
        }
        if (*bench_cmd) {
            bench.seed = effective_seed(bench_seed);
            std::cerr << "seed " << bench.seed << "\nwidth " << bench.width << "\n";
            std::vector<StatsRecord> records = run_bench(bench);
            std::ostringstream csv;
            csv << csv_header() << "\n";
            std::vector<double> xs, ys;
            for (const auto &r : records) {
                csv << csv_row(r) << "\n";
                xs.push_back(static_cast<double>(r.gates_in));
                ys.push_back(static_cast<double>(std::max<uint64_t>(r.wall_time_ns, 1)));
                std::cerr << r.name << " t_out/t_in " << r.t_out << "/" << r.t_in << "\n";
            }
            if (bench_out.empty()) {
                std::cout << csv.str();
            } else {
                write_file(bench_out, csv.str());
            }
            if (auto slope = loglog_slope(xs, ys)) {
                std::cerr << "loglog_slope " << *slope << "\n";
            } else {
                std::cerr << "loglog_slope undefined\n";
            }
            return kExitOk;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
