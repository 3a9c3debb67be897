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

#include "gtest/gtest.h"
#include "phasefold/harness.h"
#include "phasefold/oracle/dense.h"

using namespace phasefold;

namespace {

Circuit swap_circuit(Angle first, Angle second) {
    Circuit c(2);
    c.rz(first, 0);
    c.cx(0, 1);
    c.cx(1, 0);
    c.cx(0, 1);
    c.rz(second, 1);
    return c;
}

// Smallest k with 2^k > m^2 / epsilon for epsilon = 2^-e, by counting.
unsigned width_by_counting(unsigned __int128 m, unsigned e) {
    unsigned __int128 m2 = m * m;
    for (unsigned k = 1;; k++) {
        if (k > e && (k - e >= 127 || (static_cast<unsigned __int128>(1) << (k - e)) > m2)) {
            return k;
        }
    }
}

}  // namespace

TEST(fold, swap_example_with_pinned_draws) {
    Angle theta1 = Angle::exact(1, 8);
    Angle theta2 = Angle::exact(1, 4);
    Circuit c = swap_circuit(theta1, theta2);
    std::vector<BitString> init{BitString::from_binary("101"), BitString::from_binary("011")};
    FoldOptions opts{3, 0, true};
    FoldResult r = fold(c, AbstractState::with_values(init, 3, 0), opts);

    Circuit expected(2);
    expected.cx(0, 1);
    expected.cx(1, 0);
    expected.cx(0, 1);
    expected.rz(theta1 + theta2, 1);
    EXPECT_EQ(r.circuit, expected);
    EXPECT_EQ(r.report.merges, 1u);
    EXPECT_EQ(r.report.merge_pairs, (std::vector<MergePair>{{0, 1}}));
    EXPECT_EQ(r.report.rotations_in, 2u);
    EXPECT_EQ(r.report.rotations_out, 1u);
    EXPECT_TRUE(oracle::equivalent(c, r.circuit, 1e-12));
}

TEST(fold, swap_example_any_seed) {
    Circuit c = swap_circuit(Angle::t(), Angle::t());
    for (uint64_t seed = 0; seed < 20; seed++) {
        FoldResult r = fold(c, FoldOptions{128, seed});
        ASSERT_EQ(r.circuit.size(), 4u);
        ASSERT_EQ(r.report.t_before, 2u);
        ASSERT_EQ(r.report.t_after, 0u);
    }
}

TEST(fold, hadamard_separates_rotations) {
    Circuit c(1);
    c.rz(Angle::t(), 0);
    c.h(0);
    c.rz(Angle::t(), 0);
    for (uint64_t seed = 0; seed < 20; seed++) {
        FoldResult r = fold(c, FoldOptions{128, seed});
        ASSERT_EQ(r.circuit, c);
        ASSERT_EQ(r.report.merges, 0u);
    }
}

TEST(fold, eight_t_gates_vanish) {
    Circuit c(1);
    for (int i = 0; i < 8; i++) {
        c.rz(Angle::t(), 0);
    }
    EXPECT_TRUE(oracle::equivalent(c, Circuit(1), 1e-12));
    FoldResult r = fold(c, FoldOptions{128, 5});
    EXPECT_TRUE(r.circuit.empty());
    EXPECT_EQ(r.report.merges, 7u);
    EXPECT_EQ(r.report.rotations_eliminated(), 8u);
}

TEST(fold, t_t_becomes_s) {
    Circuit c(1);
    c.rz(Angle::t(), 0);
    c.rz(Angle::t(), 0);
    Circuit expected(1);
    expected.rz(Angle::s(), 0);
    EXPECT_EQ(fold(c, FoldOptions{}).circuit, expected);
}

TEST(fold, x_parity_is_not_folded) {
    Circuit c(1);
    c.rz(Angle::t(), 0);
    c.x(0);
    c.rz(Angle::t(), 0);
    EXPECT_EQ(fold(c, FoldOptions{64, 3}).circuit, c);
}

TEST(fold, approx_angles_cancel_within_tolerance) {
    Circuit c(2);
    c.rz(Angle::radians(0.3), 0);
    c.cx(1, 0);
    c.cx(1, 0);
    c.rz(Angle::radians(-0.3), 0);
    FoldResult r = fold(c, FoldOptions{128, 1});
    EXPECT_EQ(r.circuit.stats().rz_count, 0u);

    Circuit mixed(1);
    mixed.rz(Angle::t(), 0);
    mixed.rz(Angle::radians(0.25), 0);
    FoldResult m = fold(mixed, FoldOptions{128, 1});
    ASSERT_EQ(m.circuit.size(), 1u);
    EXPECT_FALSE(m.circuit.begin()->angle().is_exact());
    EXPECT_TRUE(oracle::equivalent(mixed, m.circuit, 1e-12));
}

TEST(fold, zero_rotations_are_dropped) {
    Circuit c(1);
    c.rz(Angle(), 0);
    FoldResult lone = fold(c, FoldOptions{});
    EXPECT_TRUE(lone.circuit.empty());
    EXPECT_EQ(lone.report.merges, 0u);
    c.rz(Angle::t(), 0);
    Circuit expected(1);
    expected.rz(Angle::t(), 0);
    EXPECT_EQ(fold(c, FoldOptions{}).circuit, expected);

    // A zero arriving after a live entry still merges into it.
    Circuit later(1);
    later.rz(Angle::t(), 0);
    later.rz(Angle(), 0);
    FoldResult r = fold(later, FoldOptions{128, 0, true});
    EXPECT_EQ(r.circuit, expected);
    EXPECT_EQ(r.report.merge_pairs, (std::vector<MergePair>{{0, 1}}));
}

TEST(fold, stale_entry_can_merge_after_parity_returns) {
    // CX twice restores q1's parity, so the first rotation's entry matches again.
    Circuit c(2);
    c.rz(Angle::t(), 1);
    c.cx(0, 1);
    c.rz(Angle::s(), 1);
    c.cx(0, 1);
    c.rz(Angle::t(), 1);
    FoldResult r = fold(c, FoldOptions{128, 9, true});
    EXPECT_EQ(r.report.merge_pairs, (std::vector<MergePair>{{0, 2}}));
    EXPECT_TRUE(oracle::equivalent(c, r.circuit, 1e-12));
}

TEST(fold, counters_show_a_single_pass) {
    for (uint64_t seed = 0; seed < 50; seed++) {
        Circuit c = random_circuit(4, 100, seed);
        CircuitStats s = c.stats();
        FoldResult r = fold(c, FoldOptions{128, seed});
        ASSERT_EQ(r.report.transfers, s.total_gates - s.rz_count);
        ASSERT_LE(r.report.map_ops, 3 * s.rz_count);
        ASSERT_EQ(r.report.rotations_in, s.rz_count);
    }
}

TEST(fold, preserves_semantics_and_never_adds_t) {
    for (uint64_t seed = 0; seed < 500; seed++) {
        uint32_t n = 1 + static_cast<uint32_t>(seed % 6);
        Circuit c = random_circuit(n, 60, seed);
        FoldResult r = fold(c, FoldOptions{64, seed});
        ASSERT_TRUE(oracle::equivalent(c, r.circuit, 1e-9)) << "seed " << seed;
        ASSERT_LE(r.report.t_after, r.report.t_before);
        ASSERT_LE(r.report.rotations_out, r.report.rotations_in);
        ASSERT_EQ(r.report.t_after, r.circuit.stats().t_count);
    }
}

TEST(fold, width_out_of_range) {
    Circuit c(1);
    EXPECT_THROW(fold(c, FoldOptions{0, 1}), std::invalid_argument);
    EXPECT_THROW(fold(c, FoldOptions{129, 1}), std::invalid_argument);
}

TEST(fold, required_width_examples) {
    EXPECT_EQ(required_width(1'000'000, std::ldexp(1.0, -30)).width, 70u);
    EXPECT_EQ(required_width(1, 0.5).width, 2u);
    EXPECT_EQ(required_width(1'000'000'000, std::ldexp(1.0, -20)).width, 80u);
    EXPECT_FALSE(required_width(1'000'000'000, std::ldexp(1.0, -20)).capped);
}

TEST(fold, required_width_matches_counting) {
    for (uint64_t m : {1ull, 2ull, 3ull, 7ull, 1000ull, 1024ull, 65537ull, 1'000'000ull, 123'456'789ull}) {
        for (unsigned e : {1u, 2u, 10u, 30u, 52u}) {
            unsigned expected = width_by_counting(m, e);
            WidthChoice w = required_width(m, std::ldexp(1.0, -static_cast<int>(e)));
            if (expected > 128) {
                EXPECT_EQ(w.width, 128u);
                EXPECT_TRUE(w.capped);
            } else {
                EXPECT_EQ(w.width, expected) << "m=" << m << " e=" << e;
            }
        }
    }
}

TEST(fold, required_width_caps_and_rejects) {
    WidthChoice w = required_width(uint64_t{1} << 60, 1e-30);
    EXPECT_EQ(w.width, 128u);
    EXPECT_TRUE(w.capped);
    EXPECT_THROW(required_width(0, 0.5), std::invalid_argument);
    EXPECT_THROW(required_width(10, 0.0), std::invalid_argument);
    EXPECT_THROW(required_width(10, 1.0), std::invalid_argument);
}
