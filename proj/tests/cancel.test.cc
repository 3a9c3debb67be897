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

#include "gtest/gtest.h"
#include "phasefold/harness.h"
#include "phasefold/oracle/dense.h"

using namespace phasefold;

TEST(cancel, hh) {
    Circuit c(1);
    c.h(0);
    c.h(0);
    CancelReport r;
    EXPECT_TRUE(cancel_adjacent(c, &r).empty());
    EXPECT_EQ(r.pairs_cancelled, 1u);
}

TEST(cancel, cascade_h_x_x_h) {
    Circuit c(1);
    c.h(0);
    c.x(0);
    c.x(0);
    c.h(0);
    EXPECT_TRUE(oracle::equivalent(c, Circuit(1), 1e-12));
    EXPECT_TRUE(cancel_adjacent(c).empty());
}

TEST(cancel, rotation_blocks) {
    Circuit c(1);
    c.h(0);
    c.rz(Angle::t(), 0);
    c.h(0);
    EXPECT_EQ(cancel_adjacent(c), c);

    Circuit t2(1);
    t2.rz(Angle::t(), 0);
    t2.rz(Angle::tdg(), 0);
    EXPECT_EQ(cancel_adjacent(t2), t2);
}

TEST(cancel, disjoint_qubits_do_not_block) {
    Circuit c(3);
    c.h(0);
    c.x(2);
    c.rz(Angle::t(), 1);
    c.h(0);
    Circuit expected(3);
    expected.x(2);
    expected.rz(Angle::t(), 1);
    EXPECT_EQ(cancel_adjacent(c), expected);
}

TEST(cancel, cx_needs_same_orientation) {
    Circuit same(2);
    same.cx(0, 1);
    same.cx(0, 1);
    EXPECT_TRUE(cancel_adjacent(same).empty());

    Circuit flipped(2);
    flipped.cx(0, 1);
    flipped.cx(1, 0);
    EXPECT_EQ(cancel_adjacent(flipped), flipped);
}

TEST(cancel, cx_blocked_on_either_qubit) {
    for (uint32_t blocked : {0u, 1u}) {
        Circuit c(2);
        c.cx(0, 1);
        c.x(blocked);
        c.cx(0, 1);
        EXPECT_EQ(cancel_adjacent(c), c) << blocked;
    }
}

TEST(cancel, cx_cascade_through_single_qubit_pair) {
    Circuit c(2);
    c.cx(0, 1);
    c.h(1);
    c.h(1);
    c.cx(0, 1);
    EXPECT_TRUE(cancel_adjacent(c).empty());
}

TEST(cancel, preserves_semantics_and_is_idempotent) {
    for (uint64_t seed = 0; seed < 400; seed++) {
        uint32_t n = 1 + static_cast<uint32_t>(seed % 8);
        Circuit c = random_circuit(n, 80, seed);
        Circuit once = cancel_adjacent(c);
        ASSERT_TRUE(oracle::equivalent(c, once, 1e-9)) << "seed " << seed;
        CancelReport r;
        Circuit twice = cancel_adjacent(once, &r);
        ASSERT_EQ(r.pairs_cancelled, 0u) << "seed " << seed;
        ASSERT_EQ(twice, once);
        ASSERT_LE(once.size(), c.size());
    }
}
