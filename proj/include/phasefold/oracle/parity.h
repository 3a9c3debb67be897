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

#ifndef PHASEFOLD_ORACLE_PARITY_H
#define PHASEFOLD_ORACLE_PARITY_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "phasefold/abstract_state.h"
#include "phasefold/circuit.h"
#include "phasefold/fold.h"

namespace phasefold::oracle {

/// An affine Boolean function: constant XOR the listed variables.
///
/// Variables 0..n-1 are the initial qubit values; variable n + l is the
/// outcome of the l-th Hadamard in circuit order.
struct Parity {
    bool constant = false;
    std::vector<uint32_t> vars;  // sorted, unique

    static Parity variable(uint32_t v) { return Parity{false, {v}}; }

    Parity operator^(const Parity &other) const;
    auto operator<=>(const Parity &) const = default;
    bool operator==(const Parity &) const = default;

    /// Value of the parity with every variable replaced by its bit string.
    BitString evaluate(std::span<const BitString> assignment, unsigned width) const;

    std::string str() const;
};

/// Exact per-qubit parities, updated gate by gate.
class SymbolicState {
   public:
    explicit SymbolicState(uint32_t num_qubits);

    const Parity &operator[](QubitId q) const { return parities_[q.index]; }
    uint32_t next_fresh() const { return next_fresh_; }
    uint32_t num_qubits() const { return static_cast<uint32_t>(parities_.size()); }

    void apply(const Gate &g);

   private:
    std::vector<Parity> parities_;
    uint32_t next_fresh_;
};

void symbolic_transfer(SymbolicState &state, const Gate &g);

struct RotationSite {
    QubitId qubit;
    Parity parity;  // exact parity on `qubit` just before the rotation
};

/// Parity seen by each live rotation, in rotation order.
std::vector<RotationSite> rotation_parities(const Circuit &c);

/// Whether rotations i < j (ordinals among live rotations) see the same exact
/// parity. Throws std::out_of_range for bad indices.
bool symbolic_mergeable(const Circuit &c, size_t i, size_t j);

/// The merge pairs chosen by the folding scan when the abstract bitstring is
/// replaced by the exact parity. Written independently of fold().
std::vector<MergePair> symbolic_merge_set(const Circuit &c);

}  // namespace phasefold::oracle

#endif
