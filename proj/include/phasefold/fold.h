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

#ifndef PHASEFOLD_FOLD_H
#define PHASEFOLD_FOLD_H

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "phasefold/abstract_state.h"
#include "phasefold/circuit.h"

namespace phasefold {

/// A merge of rotation `earlier` into rotation `later`. Both are ordinals
/// among the live rotations of the input circuit. When rotations chain
/// (a into b, then b into c) `earlier` is the rotation currently carrying the
/// accumulated angle, i.e. (a, b) then (b, c).
using MergePair = std::pair<size_t, size_t>;

struct FoldEntry {
    Angle angle;
    QubitId qubit;
    GateHandle handle;
    size_t rotation = 0;
};

struct FoldOptions {
    unsigned width = kMaxWidth;
    uint64_t seed = 0;
    bool record_merges = false;
};

struct FoldReport {
    size_t merges = 0;
    size_t rotations_in = 0;
    size_t rotations_out = 0;
    size_t t_before = 0;
    size_t t_after = 0;
    unsigned width = 0;
    uint64_t seed = 0;
    size_t transfers = 0;
    size_t map_ops = 0;
    std::vector<MergePair> merge_pairs;

    size_t rotations_eliminated() const { return rotations_in - rotations_out; }
};

struct FoldResult {
    Circuit circuit;
    FoldReport report;
};

/// Randomized phase folding: one left-to-right scan that merges two
/// rotations whenever the abstract bitstring on the later rotation's qubit
/// equals the one recorded for an earlier rotation. The surviving rotation
/// is the later one; a merged angle of zero removes both.
///
/// The output may contain tombstoned slots. Throws std::invalid_argument if
/// the width is outside [1, 128].
FoldResult fold(const Circuit &input, const FoldOptions &options);

/// As above, starting from a caller-supplied abstract state instead of fresh
/// draws. The report's width and seed are taken from `options`.
FoldResult fold(const Circuit &input, AbstractState initial, const FoldOptions &options);

struct WidthChoice {
    unsigned width = 0;
    /// True when the bound asked for more than 128 bits.
    bool capped = false;
};

/// Smallest integer k with k > 2 log2(m) + log2(1/epsilon), capped at 128.
/// Throws std::invalid_argument unless m >= 1 and 0 < epsilon < 1.
WidthChoice required_width(uint64_t gate_count, double epsilon);

}  // namespace phasefold

#endif
