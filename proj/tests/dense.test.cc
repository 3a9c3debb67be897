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

#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "phasefold/fold.h"
#include "phasefold/harness.h"

using namespace phasefold;
using namespace phasefold::oracle;

namespace {

using C = std::complex<double>;

void expect_matrix(const DenseUnitary &u, const std::vector<std::vector<C>> &m) {
    ASSERT_EQ(u.dim(), m.size());
    for (size_t r = 0; r < m.size(); r++) {
        for (size_t c = 0; c < m.size(); c++) {
            EXPECT_NEAR(std::abs(u(r, c) - m[r][c]), 0.0, 1e-12) << r << "," << c;
        }
    }
}

// Plain triple loop: (a * b)(r, c) = sum_k a(r, k) b(k, c).
DenseUnitary multiply(const DenseUnitary &a, const DenseUnitary &b) {
    DenseUnitary out(a.num_qubits());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            C acc = 0;
            for (size_t k = 0; k < a.dim(); k++) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

}  // namespace

TEST(dense, x_matrix) {
    Circuit c(1);
    c.x(0);
    expect_matrix(simulate(c), {{0, 1}, {1, 0}});
}

TEST(dense, x_on_first_of_two_qubits) {
    Circuit c(2);
    c.x(0);
    DenseUnitary u = simulate(c);
    // Input 00 goes to the state with qubit 0 set (index 1); 10 goes to 11.
    EXPECT_EQ(u(1, 0), C(1));
    EXPECT_EQ(u(3, 2), C(1));
    EXPECT_EQ(u(0, 0), C(0));
}

TEST(dense, h_matrix) {
    Circuit c(1);
    c.h(0);
    double s = 1 / std::numbers::sqrt2;
    expect_matrix(simulate(c), {{s, s}, {s, -s}});
}

TEST(dense, t_matrix) {
    Circuit c(1);
    c.rz(Angle::t(), 0);
    expect_matrix(simulate(c), {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}});
}

TEST(dense, cx_matrix) {
    Circuit c(2);
    c.cx(0, 1);
    // Control is qubit 0 (low bit): 01 <-> 11 in (q1 q0) order, i.e. index 1 <-> 3.
    expect_matrix(simulate(c), {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
}

TEST(dense, equivalent_examples) {
    Circuit tt(1);
    tt.rz(Angle::t(), 0);
    tt.rz(Angle::t(), 0);
    Circuit s(1);
    s.rz(Angle::s(), 0);
    EXPECT_TRUE(equivalent(tt, s, 1e-9));

    Circuit h(1);
    h.h(0);
    Circuit x(1);
    x.x(0);
    EXPECT_FALSE(equivalent(h, x, 1e-9));

    Circuit swap(2);
    swap.rz(Angle::exact(1, 8), 0);
    swap.cx(0, 1);
    swap.cx(1, 0);
    swap.cx(0, 1);
    swap.rz(Angle::exact(3, 8), 1);
    EXPECT_TRUE(equivalent(swap, fold(swap, FoldOptions{}).circuit, 1e-9));

    EXPECT_THROW(equivalent(Circuit(1), Circuit(2), 1e-9), std::invalid_argument);
}

TEST(dense, global_phase_is_not_quotiented) {
    // Z X Z X = -I.
    Circuit c(1);
    c.rz(Angle::z(), 0);
    c.x(0);
    c.rz(Angle::z(), 0);
    c.x(0);
    EXPECT_FALSE(equivalent(c, Circuit(1), 1e-9));
}

TEST(dense, size_limit) {
    EXPECT_THROW(simulate(Circuit(11)), std::invalid_argument);
    EXPECT_NO_THROW(simulate(Circuit(10)));
}

TEST(dense, composition_and_unitarity) {
    std::mt19937_64 rng(3);
    for (uint64_t seed = 0; seed < 60; seed++) {
        uint32_t n = 1 + static_cast<uint32_t>(seed % 5);
        Circuit whole = random_circuit(n, 30, seed);
        size_t split = rng() % (whole.size() + 1);
        Circuit first(n), second(n);
        size_t i = 0;
        for (const Gate &g : whole) {
            (i++ < split ? first : second).append(g);
        }
        DenseUnitary composed = multiply(simulate(second), simulate(first));
        ASSERT_LE(simulate(whole).max_abs_diff(composed), 1e-12);
        ASSERT_LE(simulate(whole).unitarity_error(), 1e-9);
    }
}
