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

#include "phasefold/angle.h"

#include <numbers>
#include <vector>

#include "gtest/gtest.h"

using namespace phasefold;

TEST(angle, exact_normalizes_to_lowest_terms_in_zero_two) {
    Angle a = Angle::exact(2, 8);
    EXPECT_EQ(a.num(), 1);
    EXPECT_EQ(a.den(), 4);
    EXPECT_EQ(Angle::exact(-1, 4), Angle::exact(7, 4));
    EXPECT_EQ(Angle::exact(9, 4), Angle::exact(1, 4));
    EXPECT_EQ(Angle::exact(1, -4), Angle::exact(7, 4));
    EXPECT_EQ(Angle::exact(4, 2), Angle());
    EXPECT_EQ(Angle::exact(0, 7), Angle());
    EXPECT_EQ(Angle().den(), 1);
    EXPECT_THROW(Angle::exact(1, 0), std::invalid_argument);
}

TEST(angle, add_examples) {
    EXPECT_EQ(Angle::exact(1, 4) + Angle::exact(1, 4), Angle::exact(1, 2));
    EXPECT_EQ(Angle::exact(1, 4) + Angle::exact(7, 4), Angle::exact(0, 1));
    EXPECT_EQ(Angle::exact(3, 2) + Angle::exact(3, 4), Angle::exact(1, 4));
}

TEST(angle, add_matches_eighths_arithmetic) {
    // Every angle with den in {1,2,4,8} is k/8 * pi for an integer k in [0, 16).
    std::vector<std::pair<Angle, int>> all;
    for (int den : {1, 2, 4, 8}) {
        for (int num = 0; num < 2 * den; num++) {
            all.emplace_back(Angle::exact(num, den), num * (8 / den));
        }
    }
    for (const auto &[a, ka] : all) {
        for (const auto &[b, kb] : all) {
            EXPECT_EQ(a + b, Angle::exact((ka + kb) % 16, 8));
            EXPECT_EQ(a + b, b + a);
            for (const auto &[c, kc] : all) {
                (void)kc;
                EXPECT_EQ((a + b) + c, a + (b + c));
            }
        }
        EXPECT_TRUE((a + (-a)).is_zero());
    }
}

TEST(angle, exact_plus_approx_demotes) {
    Angle sum = Angle::exact(1, 4) + Angle::radians(0.5);
    EXPECT_FALSE(sum.is_exact());
    EXPECT_NEAR(sum.to_radians(), std::numbers::pi / 4 + 0.5, 1e-15);
}

TEST(angle, is_zero) {
    EXPECT_TRUE(Angle::exact(0, 1).is_zero());
    EXPECT_FALSE(Angle::exact(1, 4).is_zero());
    EXPECT_TRUE(Angle::radians(6.283185307179586).is_zero());
    EXPECT_TRUE(Angle::radians(5e-11).is_zero());
    EXPECT_TRUE(Angle::radians(-5e-11).is_zero());
    EXPECT_FALSE(Angle::radians(1e-9).is_zero());
    EXPECT_TRUE((Angle::radians(0.3) + Angle::radians(-0.3)).is_zero());
}

TEST(angle, t_class) {
    EXPECT_EQ(Angle::exact(1, 4).t_class(), TClass::TGate);
    EXPECT_EQ(Angle::exact(1, 2).t_class(), TClass::Clifford);
    EXPECT_EQ(Angle::exact(7, 4).t_class(), TClass::TGate);
    EXPECT_EQ(Angle::exact(3, 4).t_class(), TClass::TGate);
    EXPECT_EQ(Angle::exact(1, 1).t_class(), TClass::Clifford);
    EXPECT_EQ(Angle().t_class(), TClass::Clifford);
    EXPECT_EQ(Angle::exact(1, 8).t_class(), TClass::Other);
    EXPECT_EQ(Angle::radians(std::numbers::pi / 4).t_class(), TClass::Other);
}

TEST(angle, huge_denominators_fall_back_to_radians) {
    Angle a = Angle::exact(1, (int64_t{1} << 30) + 1);
    Angle b = Angle::exact(1, (int64_t{1} << 30) - 1);
    Angle sum = a + b;
    EXPECT_FALSE(sum.is_exact());
    EXPECT_NEAR(sum.to_radians(), a.to_radians() + b.to_radians(), 1e-15);
}

TEST(angle, str) {
    EXPECT_EQ(Angle::exact(3, 4).str(), "3*pi/4");
    EXPECT_EQ(Angle::exact(1, 8).str(), "pi/8");
    EXPECT_EQ(Angle::exact(1, 1).str(), "pi");
    EXPECT_EQ(Angle().str(), "0");
    EXPECT_EQ(Angle::radians(0.1).str(), "0.10000000000000001");
}

TEST(angle, recognize_pi_multiple) {
    EXPECT_EQ(recognize_pi_multiple(std::numbers::pi / 4), Angle::exact(1, 4));
    EXPECT_EQ(recognize_pi_multiple(-std::numbers::pi / 4), Angle::exact(7, 4));
    EXPECT_EQ(recognize_pi_multiple(3 * std::numbers::pi / 1024), Angle::exact(3, 1024));
    EXPECT_EQ(recognize_pi_multiple(0.0), Angle());
    EXPECT_EQ(recognize_pi_multiple(2 * std::numbers::pi), Angle());
    EXPECT_FALSE(recognize_pi_multiple(0.1).has_value());
    EXPECT_FALSE(recognize_pi_multiple(1.0).has_value());
    EXPECT_FALSE(recognize_pi_multiple(std::numbers::pi / 4 + 1e-9).has_value());
}
