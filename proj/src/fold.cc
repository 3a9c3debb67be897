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

#include "phasefold/fold.h"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace phasefold {

FoldResult fold(const Circuit &input, const FoldOptions &options) {
    return fold(input, AbstractState(input.num_qubits(), options.width, options.seed), options);
}

FoldResult fold(const Circuit &input, AbstractState state, const FoldOptions &options) {
    if (state.num_qubits() != input.num_qubits()) {
        throw std::invalid_argument("abstract state size does not match circuit");
    }
    FoldReport report;
    report.width = options.width;
    report.seed = options.seed;

    Circuit out(input.num_qubits());
    out.reserve(input.size());
    std::unordered_map<BitString, FoldEntry, BitStringHash> table;

    size_t rotation = 0;
    for (const Gate &g : input) {
        if (!g.is_rotation()) {
            state.apply(g);
            ++report.transfers;
            out.append(g);
            continue;
        }
        if (g.angle().t_class() == TClass::TGate) {
            ++report.t_before;
        }
        ++report.rotations_in;
        QubitId q = g.qubit();
        const BitString &key = state[q];
        Angle theta = g.angle();

        ++report.map_ops;
        auto it = table.find(key);
        if (it != table.end()) {
            FoldEntry &prior = it->second;
            out.erase(prior.handle);
            theta += prior.angle;
            ++report.merges;
            if (options.record_merges) {
                report.merge_pairs.emplace_back(prior.rotation, rotation);
            }
            if (theta.is_zero()) {
                table.erase(it);
                ++report.map_ops;
                ++rotation;
                continue;
            }
            // Removal then reinsertion at the same key is an overwrite.
            prior = FoldEntry{theta, q, out.rz(theta, q.index), rotation};
            ++report.map_ops;
        } else if (!theta.is_zero()) {
            table.emplace(key, FoldEntry{theta, q, out.rz(theta, q.index), rotation});
            ++report.map_ops;
        }
        ++rotation;
    }

    for (const Gate &g : out) {
        if (g.is_rotation()) {
            ++report.rotations_out;
            if (g.angle().t_class() == TClass::TGate) {
                ++report.t_after;
            }
        }
    }
    return FoldResult{std::move(out), std::move(report)};
}

WidthChoice required_width(uint64_t gate_count, double epsilon) {
    if (gate_count < 1) {
        throw std::invalid_argument("gate count must be at least 1");
    }
    if (!(epsilon > 0 && epsilon < 1)) {
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
    }
    double bound = 2.0 * std::log2(static_cast<double>(gate_count)) + std::log2(1.0 / epsilon);
    double k = std::floor(bound) + 1;
    if (k > kMaxWidth) {
        return WidthChoice{kMaxWidth, true};
    }
    return WidthChoice{static_cast<unsigned>(k), false};
}

}  // namespace phasefold
