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

#ifndef PHASEFOLD_ANGLE_H
#define PHASEFOLD_ANGLE_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace phasefold {

/// Radian tolerance used when testing an approximate angle for zero.
inline constexpr double kAngleTolerance = 1e-10;

/// Classification of a Z-rotation angle by its cost under fault tolerance.
enum class TClass : uint8_t { TGate, Clifford, Other };

/// A Z-rotation angle modulo 2*pi.
///
/// Exact angles are rational multiples of pi, num/den * pi, stored reduced with
/// 0 <= num/den < 2. Exact(0, 1) is the only representation of zero. Angles
/// that are not known to be rational multiples of pi are held as radians in
/// [0, 2*pi). Combining an exact angle with an approximate one yields an
/// approximate angle.
class Angle {
   public:
    /// The zero angle.
    constexpr Angle() = default;

    /// num/den * pi, normalized. Throws std::invalid_argument if den == 0.
    static Angle exact(int64_t num, int64_t den);
    static Angle radians(double value);

    /// pi/4, the T gate.
    static Angle t() { return exact(1, 4); }
    static Angle tdg() { return exact(7, 4); }
    static Angle s() { return exact(1, 2); }
    static Angle sdg() { return exact(3, 2); }
    static Angle z() { return exact(1, 1); }

    bool is_exact() const { return den_ != 0; }
    /// Numerator of the reduced fraction. Only meaningful when is_exact().
    int64_t num() const { return num_; }
    /// Denominator of the reduced fraction. Only meaningful when is_exact().
    int64_t den() const { return den_; }
    /// Value in radians, in [0, 2*pi).
    double to_radians() const;

    bool is_zero() const;
    TClass t_class() const;
    Angle operator-() const;
    Angle operator+(const Angle &other) const;
    Angle &operator+=(const Angle &other) { return *this = *this + other; }

    /// Representation equality (Exact(1,4) != Radians(pi/4)).
    bool operator==(const Angle &other) const;

    std::string str() const;

   private:
    // Exact: num_/den_ * pi. Approx: den_ == 0 and num_ holds the bits of a double.
    int64_t num_ = 0;
    int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Angle &a);

/// Finds num/den with den <= max_den such that |radians - num/den*pi| <= tol,
/// preferring the smallest denominator.
std::optional<Angle> recognize_pi_multiple(double radians, int64_t max_den = 4096, double tol = 1e-12);

}  // namespace phasefold

#endif
