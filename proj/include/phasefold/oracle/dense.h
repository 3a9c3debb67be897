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

#ifndef PHASEFOLD_ORACLE_DENSE_H
#define PHASEFOLD_ORACLE_DENSE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasefold/circuit.h"

namespace phasefold::oracle {

inline constexpr uint32_t kMaxDenseQubits = 10;

/// A 2^n x 2^n complex matrix. Entry (out, in) is the amplitude with which
/// basis state `in` maps to basis state `out`. Qubit 0 is the least
/// significant bit of a basis-state index.
class DenseUnitary {
   public:
    /// The identity. Throws std::invalid_argument if n > kMaxDenseQubits.
    explicit DenseUnitary(uint32_t num_qubits);

    uint32_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return dim_; }

    std::complex<double> &operator()(size_t out, size_t in) { return data_[out * dim_ + in]; }
    const std::complex<double> &operator()(size_t out, size_t in) const { return data_[out * dim_ + in]; }

    /// Left-multiplies by the gate's matrix (the gate runs after this).
    void apply(const Gate &g);

    /// Largest entrywise |a - b|. Throws std::invalid_argument on size mismatch.
    double max_abs_diff(const DenseUnitary &other) const;
    /// Largest entrywise deviation of U * U^dagger from the identity.
    double unitarity_error() const;

   private:
    uint32_t num_qubits_;
    size_t dim_;
    std::vector<std::complex<double>> data_;
};

/// The matrix of the circuit. Throws std::invalid_argument above 10 qubits.
DenseUnitary simulate(const Circuit &c);

/// Exact equality of the two matrices within `tol`, with no global phase
/// quotient. Throws std::invalid_argument on mismatched qubit counts.
bool equivalent(const Circuit &a, const Circuit &b, double tol);

}  // namespace phasefold::oracle

#endif
