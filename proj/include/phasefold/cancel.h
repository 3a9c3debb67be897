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

#ifndef PHASEFOLD_CANCEL_H
#define PHASEFOLD_CANCEL_H

#include <cstddef>

#include "phasefold/circuit.h"

namespace phasefold {

struct CancelReport {
    size_t pairs_cancelled = 0;
};

/// Removes pairs of identical self-inverse gates (X X, H H, CX a b; CX a b)
/// with no live gate between them on any qubit they touch. Cancellations
/// cascade, so H X X H disappears entirely. Rz gates never cancel here but
/// block adjacency on their qubit. O(n + m).
Circuit cancel_adjacent(const Circuit &input, CancelReport *report = nullptr);

}  // namespace phasefold

#endif
