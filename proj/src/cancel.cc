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

#include "phasefold/cancel.h"

#include <vector>

namespace phasefold {

Circuit cancel_adjacent(const Circuit &input, CancelReport *report) {
    Circuit out(input.num_qubits());
    out.reserve(input.size());
    // Per qubit, the handles of live output gates touching it, most recent last.
    std::vector<std::vector<GateHandle>> stacks(input.num_qubits());
    size_t cancelled = 0;

    auto top_matches = [&](QubitId q, const Gate &g) -> const GateHandle * {
        const auto &stack = stacks[q.index];
        if (stack.empty()) {
            return nullptr;
        }
        const GateHandle &h = stack.back();
        return out.at(h) == g ? &h : nullptr;
    };

    for (const Gate &g : input) {
        switch (g.kind()) {
            case GateKind::H:
            case GateKind::X: {
                QubitId q = g.qubit();
                if (const GateHandle *h = top_matches(q, g)) {
                    out.erase(*h);
                    stacks[q.index].pop_back();
                    ++cancelled;
                    continue;
                }
                stacks[q.index].push_back(out.append(g));
                break;
            }
            case GateKind::CX: {
                QubitId c = g.control();
                QubitId t = g.target();
                const GateHandle *hc = top_matches(c, g);
                const GateHandle *ht = top_matches(t, g);
                if (hc != nullptr && ht != nullptr && *hc == *ht) {
                    out.erase(*hc);
                    stacks[c.index].pop_back();
                    stacks[t.index].pop_back();
                    ++cancelled;
                    continue;
                }
                GateHandle h = out.append(g);
                stacks[c.index].push_back(h);
                stacks[t.index].push_back(h);
                break;
            }
            case GateKind::Rz:
                stacks[g.qubit().index].push_back(out.append(g));
                break;
        }
    }
    if (report != nullptr) {
        report->pairs_cancelled = cancelled;
    }
    return out;
}

}  // namespace phasefold
