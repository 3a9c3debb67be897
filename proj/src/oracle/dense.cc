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

#include "phasefold/oracle/dense.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phasefold::oracle {

DenseUnitary::DenseUnitary(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits > kMaxDenseQubits) {
        throw std::invalid_argument(
            "dense simulation supports at most " + std::to_string(kMaxDenseQubits) + " qubits, got " +
            std::to_string(num_qubits));
    }
    dim_ = size_t{1} << num_qubits;
    data_.assign(dim_ * dim_, 0.0);
    for (size_t i = 0; i < dim_; i++) {
        (*this)(i, i) = 1.0;
    }
}

void DenseUnitary::apply(const Gate &g) {
    // Every gate acts on rows only: row x' of the result collects the rows x
    // that the gate sends to x'.
    auto row = [&](size_t r) { return data_.begin() + static_cast<std::ptrdiff_t>(r * dim_); };
    switch (g.kind()) {
        case GateKind::Rz: {
            size_t bit = size_t{1} << g.qubit().index;
            std::complex<double> phase = std::polar(1.0, g.angle().to_radians());
            for (size_t r = 0; r < dim_; r++) {
                if (r & bit) {
                    std::for_each(row(r), row(r + 1), [&](auto &v) { v *= phase; });
                }
            }
            break;
        }
        case GateKind::X: {
            size_t bit = size_t{1} << g.qubit().index;
            for (size_t r = 0; r < dim_; r++) {
                if (!(r & bit)) {
                    std::swap_ranges(row(r), row(r + 1), row(r | bit));
                }
            }
            break;
        }
        case GateKind::CX: {
            size_t cbit = size_t{1} << g.control().index;
            size_t tbit = size_t{1} << g.target().index;
            for (size_t r = 0; r < dim_; r++) {
                if ((r & cbit) && !(r & tbit)) {
                    std::swap_ranges(row(r), row(r + 1), row(r | tbit));
                }
            }
            break;
        }
        case GateKind::H: {
            size_t bit = size_t{1} << g.qubit().index;
            const double s = 1.0 / std::numbers::sqrt2;
            for (size_t r = 0; r < dim_; r++) {
                if (r & bit) {
                    continue;
                }
                auto lo = row(r);
                auto hi = row(r | bit);
                for (size_t c = 0; c < dim_; c++) {
                    auto a = lo[static_cast<std::ptrdiff_t>(c)];
                    auto b = hi[static_cast<std::ptrdiff_t>(c)];
                    lo[static_cast<std::ptrdiff_t>(c)] = s * (a + b);
                    hi[static_cast<std::ptrdiff_t>(c)] = s * (a - b);
                }
            }
            break;
        }
    }
}

double DenseUnitary::max_abs_diff(const DenseUnitary &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot compare unitaries of different sizes");
    }
    double worst = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

double DenseUnitary::unitarity_error() const {
    double worst = 0;
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            std::complex<double> acc = 0;
            for (size_t k = 0; k < dim_; k++) {
                acc += (*this)(i, k) * std::conj((*this)(j, k));
            }
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

DenseUnitary simulate(const Circuit &c) {
    DenseUnitary u(c.num_qubits());
    for (const Gate &g : c) {
        u.apply(g);
    }
    return u;
}

bool equivalent(const Circuit &a, const Circuit &b, double tol) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("circuits have different qubit counts");
    }
    return simulate(a).max_abs_diff(simulate(b)) <= tol;
}

}  // namespace phasefold::oracle
