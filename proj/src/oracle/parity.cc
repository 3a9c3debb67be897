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

#include "phasefold/oracle/parity.h"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

namespace phasefold::oracle {

Parity Parity::operator^(const Parity &other) const {
    Parity result;
    result.constant = constant != other.constant;
    std::set_symmetric_difference(
        vars.begin(), vars.end(), other.vars.begin(), other.vars.end(), std::back_inserter(result.vars));
    return result;
}

BitString Parity::evaluate(std::span<const BitString> assignment, unsigned width) const {
    BitString result;
    for (uint32_t v : vars) {
        if (v >= assignment.size()) {
            throw std::out_of_range("parity references an unassigned variable");
        }
        result ^= assignment[v];
    }
    if (constant) {
        result ^= BitString::ones(width);
    }
    return result;
}

std::string Parity::str() const {
    std::string s = constant ? "1" : "0";
    for (uint32_t v : vars) {
        s += " + v" + std::to_string(v);
    }
    return s;
}

SymbolicState::SymbolicState(uint32_t num_qubits) : next_fresh_(num_qubits) {
    parities_.reserve(num_qubits);
    for (uint32_t q = 0; q < num_qubits; q++) {
        parities_.push_back(Parity::variable(q));
    }
}

void SymbolicState::apply(const Gate &g) {
    switch (g.kind()) {
        case GateKind::X:
            parities_[g.qubit().index].constant = !parities_[g.qubit().index].constant;
            break;
        case GateKind::CX:
            parities_[g.target().index] = parities_[g.target().index] ^ parities_[g.control().index];
            break;
        case GateKind::H:
            parities_[g.qubit().index] = Parity::variable(next_fresh_++);
            break;
        case GateKind::Rz:
            break;
    }
}

void symbolic_transfer(SymbolicState &state, const Gate &g) {
    state.apply(g);
}

std::vector<RotationSite> rotation_parities(const Circuit &c) {
    std::vector<RotationSite> sites;
    SymbolicState state(c.num_qubits());
    for (const Gate &g : c) {
        if (g.is_rotation()) {
            sites.push_back(RotationSite{g.qubit(), state[g.qubit()]});
        } else {
            state.apply(g);
        }
    }
    return sites;
}

bool symbolic_mergeable(const Circuit &c, size_t i, size_t j) {
    auto sites = rotation_parities(c);
    if (i >= j || j >= sites.size()) {
        throw std::out_of_range("rotation indices must satisfy i < j < rotation count");
    }
    return sites[i].parity == sites[j].parity;
}

std::vector<MergePair> symbolic_merge_set(const Circuit &c) {
    struct Pending {
        Angle angle;
        size_t rotation;
    };
    std::map<Parity, Pending> pending;
    std::vector<MergePair> merges;
    SymbolicState state(c.num_qubits());
    size_t rotation = 0;
    for (const Gate &g : c) {
        if (!g.is_rotation()) {
            state.apply(g);
            continue;
        }
        const Parity &key = state[g.qubit()];
        auto it = pending.find(key);
        if (it == pending.end()) {
            if (!g.angle().is_zero()) {
                pending.emplace(key, Pending{g.angle(), rotation});
            }
        } else {
            merges.emplace_back(it->second.rotation, rotation);
            Angle sum = it->second.angle + g.angle();
            if (sum.is_zero()) {
                pending.erase(it);
            } else {
                it->second = Pending{sum, rotation};
            }
        }
        ++rotation;
    }
    return merges;
}

}  // namespace phasefold::oracle
