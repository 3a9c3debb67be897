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

#include "phasefold/circuit.h"

#include <random>

#include "gtest/gtest.h"

using namespace phasefold;

TEST(circuit, erase_skips_gate_in_iteration) {
    Circuit c(2);
    c.h(0);
    GateHandle second = c.cx(0, 1);
    c.x(1);
    c.erase(second);
    std::vector<Gate> expected{Gate::h(QubitId{0}), Gate::x(QubitId{1})};
    EXPECT_EQ(c.live_gates(), expected);
    EXPECT_EQ(c.size(), 2u);
    EXPECT_EQ(c.slot_count(), 3u);
    EXPECT_FALSE(c.is_live(second));
}

TEST(circuit, double_erase_throws) {
    Circuit c(1);
    GateHandle h = c.h(0);
    c.erase(h);
    EXPECT_THROW(c.erase(h), std::invalid_argument);
}

TEST(circuit, foreign_handle_throws) {
    Circuit a(1);
    Circuit b(1);
    GateHandle h = a.h(0);
    b.h(0);
    EXPECT_THROW(b.erase(h), std::invalid_argument);
    Circuit copy = a;
    EXPECT_THROW(copy.erase(h), std::invalid_argument);
    EXPECT_NO_THROW(a.erase(h));
}

TEST(circuit, erase_everything) {
    Circuit c(3);
    std::vector<GateHandle> hs{c.h(0), c.x(1), c.rz(Angle::t(), 2)};
    for (GateHandle h : hs) {
        c.erase(h);
    }
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(c.begin(), c.end());
    EXPECT_EQ(c.num_qubits(), 3u);
    EXPECT_EQ(c.compacted().slot_count(), 0u);
}

TEST(circuit, append_validates_qubits) {
    Circuit c(2);
    EXPECT_THROW(c.h(2), std::out_of_range);
    EXPECT_THROW(c.cx(1, 1), std::invalid_argument);
    EXPECT_THROW(c.cx(0, 5), std::out_of_range);
}

TEST(circuit, stats) {
    Circuit c(1);
    c.rz(Angle::t(), 0);
    c.h(0);
    CircuitStats s = c.stats();
    EXPECT_EQ(s.total_gates, 2u);
    EXPECT_EQ(s.t_count, 1u);
    EXPECT_EQ(s.h_count, 1u);
    EXPECT_EQ(s.rz_count, 1u);

    Circuit sc(1);
    sc.rz(Angle::s(), 0);
    s = sc.stats();
    EXPECT_EQ(s.total_gates, 1u);
    EXPECT_EQ(s.t_count, 0u);
    EXPECT_EQ(s.rz_count, 1u);

    Circuit empty(4);
    CircuitStats expected;
    expected.num_qubits = 4;
    EXPECT_EQ(empty.stats(), expected);
}

TEST(circuit, stats_exclude_tombstones) {
    Circuit c(2);
    GateHandle t = c.rz(Angle::t(), 0);
    c.cx(0, 1);
    c.erase(t);
    CircuitStats s = c.stats();
    EXPECT_EQ(s.total_gates, 1u);
    EXPECT_EQ(s.t_count, 0u);
    EXPECT_EQ(s.cx_count, 1u);
}

TEST(circuit, order_stable_under_interleaved_appends_and_erases) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; trial++) {
        Circuit c(4);
        std::vector<std::pair<GateHandle, Gate>> model;
        for (int step = 0; step < 200; step++) {
            if (!model.empty() && rng() % 3 == 0) {
                size_t k = rng() % model.size();
                c.erase(model[k].first);
                model.erase(model.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                Gate g = Gate::rz(Angle::exact(static_cast<int64_t>(rng() % 16), 8), QubitId{static_cast<uint32_t>(rng() % 4)});
                model.emplace_back(c.append(g), g);
            }
        }
        std::vector<Gate> expected;
        for (const auto &[h, g] : model) {
            expected.push_back(g);
        }
        ASSERT_EQ(c.live_gates(), expected);
        ASSERT_EQ(c.compacted(), c);
    }
}
