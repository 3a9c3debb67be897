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

#include "phasefold/abstract_state.h"

#include <stdexcept>

namespace phasefold {

BitString BitString::ones(unsigned width) {
    BitString b;
    if (width >= 64) {
        b.lo = ~uint64_t{0};
        b.hi = width >= 128 ? ~uint64_t{0} : (uint64_t{1} << (width - 64)) - 1;
    } else {
        b.lo = (uint64_t{1} << width) - 1;
    }
    return b;
}

BitString BitString::from_binary(const std::string &bits) {
    if (bits.size() > kMaxWidth) {
        throw std::invalid_argument("bit string longer than 128 bits");
    }
    BitString b;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string must contain only '0' and '1'");
        }
        b.hi = (b.hi << 1) | (b.lo >> 63);
        b.lo = (b.lo << 1) | static_cast<uint64_t>(c == '1');
    }
    return b;
}

std::string BitString::to_binary(unsigned width) const {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; i++) {
        uint64_t word = i < 64 ? lo : hi;
        if ((word >> (i % 64)) & 1) {
            s[width - 1 - i] = '1';
        }
    }
    return s;
}

AbstractState::AbstractState(size_t num_qubits, unsigned width, uint64_t seed)
    : width_(width), rng_(seed) {
    if (width < 1 || width > kMaxWidth) {
        throw std::invalid_argument("bit width must be in [1, 128], got " + std::to_string(width));
    }
    ones_ = BitString::ones(width);
    values_.reserve(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        values_.push_back(draw());
    }
}

AbstractState AbstractState::with_values(std::span<const BitString> values, unsigned width, uint64_t seed) {
    AbstractState s(0, width, seed);
    for (const BitString &v : values) {
        s.values_.push_back(v & s.ones_);
    }
    return s;
}

BitString AbstractState::draw() {
    BitString b;
    b.lo = rng_();
    if (width_ > 64) {
        b.hi = rng_();
    }
    return b & ones_;
}

void AbstractState::apply(const Gate &g) {
    switch (g.kind()) {
        case GateKind::CX:
            apply_cx(g.control(), g.target());
            break;
        case GateKind::X:
            apply_x(g.qubit());
            break;
        case GateKind::H:
            apply_h(g.qubit());
            break;
        case GateKind::Rz:
            break;
    }
}

}  // namespace phasefold
