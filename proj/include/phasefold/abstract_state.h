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

#ifndef PHASEFOLD_ABSTRACT_STATE_H
#define PHASEFOLD_ABSTRACT_STATE_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "phasefold/circuit.h"

namespace phasefold {

inline constexpr unsigned kMaxWidth = 128;

/// Up to 128 bits, stored as two 64-bit words. Bit 0 is the least significant
/// bit of `lo`.
struct BitString {
    uint64_t lo = 0;
    uint64_t hi = 0;

    BitString operator^(const BitString &o) const { return {lo ^ o.lo, hi ^ o.hi}; }
    BitString &operator^=(const BitString &o) {
        lo ^= o.lo;
        hi ^= o.hi;
        return *this;
    }
    BitString operator&(const BitString &o) const { return {lo & o.lo, hi & o.hi}; }
    bool operator==(const BitString &) const = default;

    /// All-ones in the low `width` bits.
    static BitString ones(unsigned width);
    /// Parses a '0'/'1' string, most significant bit first ("101" -> 5).
    static BitString from_binary(const std::string &bits);
    /// The low `width` bits, most significant first.
    std::string to_binary(unsigned width) const;
};

struct BitStringHash {
    size_t operator()(const BitString &b) const {
        // Keys are uniformly random already; this only folds the two words.
        return static_cast<size_t>(b.lo ^ (b.hi * 0x9E3779B97F4A7C15ull));
    }
};

/// The randomized abstract state: one k-bit string per qubit.
///
/// All randomness comes from an owned, explicitly seeded generator. init draws
/// one string per qubit in qubit order, then every Hadamard draws one more, so
/// the sequence of draws is fully determined by (n, width, seed, circuit).
class AbstractState {
   public:
    /// Throws std::invalid_argument unless 1 <= width <= 128.
    AbstractState(size_t num_qubits, unsigned width, uint64_t seed);

    /// A state with pinned initial strings; later Hadamard draws use `seed`.
    static AbstractState with_values(std::span<const BitString> values, unsigned width, uint64_t seed);

    unsigned width() const { return width_; }
    size_t num_qubits() const { return values_.size(); }
    const BitString &operator[](QubitId q) const { return values_[q.index]; }
    std::span<const BitString> values() const { return values_; }

    /// Updates the state for one gate. Rz leaves it unchanged.
    void apply(const Gate &g);
    void apply_cx(QubitId control, QubitId target) { values_[target.index] ^= values_[control.index]; }
    void apply_x(QubitId q) { values_[q.index] ^= ones_; }
    void apply_h(QubitId q) { values_[q.index] = draw(); }

    /// Next uniform string from the owned generator.
    BitString draw();

   private:
    unsigned width_;
    BitString ones_;
    std::mt19937_64 rng_;
    std::vector<BitString> values_;
};

}  // namespace phasefold

#endif
