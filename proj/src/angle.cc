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

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace phasefold {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Exact sums whose denominator would exceed this fall back to radians.
constexpr __int128 kMaxExactDen = __int128{1} << 40;

double wrap_radians(double value) {
    double r = std::fmod(value, kTwoPi);
    if (r < 0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0;
    }
    return r;
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Angle Angle::exact(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Angle::exact: zero denominator");
    }
    __int128 n = num;
    __int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 period = 2 * d;
    n %= period;
    if (n < 0) {
        n += period;
    }
    __int128 g = gcd128(n, d);
    if (g == 0) {
        g = d;
    }
    Angle a;
    a.num_ = static_cast<int64_t>(n / g);
    a.den_ = static_cast<int64_t>(d / g);
    return a;
}

Angle Angle::radians(double value) {
    Angle a;
    a.den_ = 0;
    a.num_ = std::bit_cast<int64_t>(wrap_radians(value));
    return a;
}

double Angle::to_radians() const {
    if (!is_exact()) {
        return std::bit_cast<double>(num_);
    }
    return static_cast<double>(num_) / static_cast<double>(den_) * std::numbers::pi;
}

bool Angle::is_zero() const {
    if (is_exact()) {
        return num_ == 0;
    }
    double r = to_radians();
    return r < kAngleTolerance || kTwoPi - r < kAngleTolerance;
}

TClass Angle::t_class() const {
    if (!is_exact()) {
        return TClass::Other;
    }
    if (den_ == 4) {
        return TClass::TGate;
    }
    if (den_ == 1 || den_ == 2) {
        return TClass::Clifford;
    }
    return TClass::Other;
}

Angle Angle::operator-() const {
    if (is_exact()) {
        return exact(-num_, den_);
    }
    return radians(-to_radians());
}

Angle Angle::operator+(const Angle &other) const {
    if (!is_exact() || !other.is_exact()) {
        return radians(to_radians() + other.to_radians());
    }
    if (den_ == other.den_) {
        return exact(num_ + other.num_, den_);
    }
    __int128 d = static_cast<__int128>(den_) / gcd128(den_, other.den_) * other.den_;
    if (d > kMaxExactDen) {
        return radians(to_radians() + other.to_radians());
    }
    __int128 n = static_cast<__int128>(num_) * (d / den_) + static_cast<__int128>(other.num_) * (d / other.den_);
    n %= 2 * d;
    return exact(static_cast<int64_t>(n), static_cast<int64_t>(d));
}

bool Angle::operator==(const Angle &other) const {
    return num_ == other.num_ && den_ == other.den_;
}

std::string Angle::str() const {
    if (!is_exact()) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), to_radians(), std::chars_format::general, 17);
        return std::string(buf, res.ptr);
    }
    if (num_ == 0) {
        return "0";
    }
    std::string s = num_ == 1 ? "pi" : std::to_string(num_) + "*pi";
    if (den_ != 1) {
        s += "/" + std::to_string(den_);
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const Angle &a) {
    return out << a.str();
}

std::optional<Angle> recognize_pi_multiple(double radians, int64_t max_den, double tol) {
    if (!std::isfinite(radians)) {
        return std::nullopt;
    }
    double wrapped = wrap_radians(radians);
    double x = wrapped / std::numbers::pi;
    // Continued-fraction convergents h/k of x. Any fraction this close is a convergent.
    int64_t h_prev = 1, h = static_cast<int64_t>(std::floor(x));
    int64_t k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    while (true) {
        double err = std::abs(wrapped - static_cast<double>(h) / static_cast<double>(k) * std::numbers::pi);
        if (err <= tol) {
            return Angle::exact(h, k);
        }
        if (frac < 1e-18) {
            return std::nullopt;
        }
        double inv = 1.0 / frac;
        auto a = static_cast<int64_t>(std::floor(inv));
        frac = inv - std::floor(inv);
        if (a > max_den) {
            return std::nullopt;
        }
        int64_t h_next = a * h + h_prev;
        int64_t k_next = a * k + k_prev;
        if (k_next > max_den) {
            return std::nullopt;
        }
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
}

}  // namespace phasefold
