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

#include <atomic>
#include <ostream>
#include <stdexcept>
#include <string>

namespace phasefold {

namespace {

uint64_t next_circuit_id() {
    static std::atomic<uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Gate Gate::cx(QubitId control, QubitId target) {
    return Gate(GateKind::CX, control, target, Angle());
}

Gate Gate::h(QubitId q) {
    return Gate(GateKind::H, q, q, Angle());
}

Gate Gate::x(QubitId q) {
    return Gate(GateKind::X, q, q, Angle());
}

Gate Gate::rz(Angle angle, QubitId q) {
    return Gate(GateKind::Rz, q, q, angle);
}

bool Gate::operator==(const Gate &other) const {
    return kind_ == other.kind_ && control_ == other.control_ && target_ == other.target_ &&
           angle_ == other.angle_;
}

std::ostream &operator<<(std::ostream &out, const Gate &g) {
    switch (g.kind()) {
        case GateKind::CX:
            return out << "CX " << g.control().index << " " << g.target().index;
        case GateKind::H:
            return out << "H " << g.qubit().index;
        case GateKind::X:
            return out << "X " << g.qubit().index;
        case GateKind::Rz:
            return out << "Rz(" << g.angle() << ") " << g.qubit().index;
    }
    return out;
}

Circuit::Circuit(uint32_t num_qubits) : id_(next_circuit_id()), num_qubits_(num_qubits) {
}

Circuit::Circuit(const Circuit &other)
    : id_(next_circuit_id()),
      num_qubits_(other.num_qubits_),
      live_count_(other.live_count_),
      gates_(other.gates_),
      live_(other.live_) {
}

Circuit &Circuit::operator=(const Circuit &other) {
    if (this != &other) {
        id_ = next_circuit_id();
        num_qubits_ = other.num_qubits_;
        live_count_ = other.live_count_;
        gates_ = other.gates_;
        live_ = other.live_;
    }
    return *this;
}

void Circuit::reserve(size_t n) {
    gates_.reserve(n);
    live_.reserve(n);
}

GateHandle Circuit::append(const Gate &g) {
    if (g.target().index >= num_qubits_ || g.control().index >= num_qubits_) {
        throw std::out_of_range(
            "qubit index out of range for a " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    if (g.kind() == GateKind::CX && g.control() == g.target()) {
        throw std::invalid_argument("CX control and target must differ");
    }
    gates_.push_back(g);
    live_.push_back(1);
    ++live_count_;
    return GateHandle{id_, static_cast<uint32_t>(gates_.size() - 1)};
}

void Circuit::check_handle(GateHandle h) const {
    if (h.owner != id_ || h.slot >= gates_.size()) {
        throw std::invalid_argument("gate handle was not issued by this circuit");
    }
}

void Circuit::erase(GateHandle h) {
    check_handle(h);
    if (!live_[h.slot]) {
        throw std::invalid_argument("gate handle already erased");
    }
    live_[h.slot] = 0;
    --live_count_;
}

bool Circuit::is_live(GateHandle h) const {
    check_handle(h);
    return live_[h.slot] != 0;
}

const Gate &Circuit::at(GateHandle h) const {
    check_handle(h);
    return gates_[h.slot];
}

Circuit::const_iterator Circuit::begin() const {
    return const_iterator(this, 0);
}

Circuit::const_iterator Circuit::end() const {
    return const_iterator(this, gates_.size());
}

std::vector<Gate> Circuit::live_gates() const {
    std::vector<Gate> result;
    result.reserve(live_count_);
    for (const Gate &g : *this) {
        result.push_back(g);
    }
    return result;
}

Circuit Circuit::compacted() const {
    Circuit result(num_qubits_);
    result.reserve(live_count_);
    for (const Gate &g : *this) {
        result.gates_.push_back(g);
        result.live_.push_back(1);
    }
    result.live_count_ = live_count_;
    return result;
}

CircuitStats Circuit::stats() const {
    CircuitStats s;
    s.num_qubits = num_qubits_;
    for (const Gate &g : *this) {
        ++s.total_gates;
        switch (g.kind()) {
            case GateKind::CX:
                ++s.cx_count;
                break;
            case GateKind::H:
                ++s.h_count;
                break;
            case GateKind::X:
                ++s.x_count;
                break;
            case GateKind::Rz:
                ++s.rz_count;
                if (g.angle().t_class() == TClass::TGate) {
                    ++s.t_count;
                }
                break;
        }
    }
    return s;
}

bool Circuit::operator==(const Circuit &other) const {
    if (num_qubits_ != other.num_qubits_ || live_count_ != other.live_count_) {
        return false;
    }
    auto a = begin();
    auto b = other.begin();
    for (; a != end(); ++a, ++b) {
        if (!(*a == *b)) {
            return false;
        }
    }
    return true;
}

std::ostream &operator<<(std::ostream &out, const Circuit &c) {
    out << "Circuit(" << c.num_qubits() << " qubits) [";
    bool first = true;
    for (const Gate &g : c) {
        out << (first ? "" : ", ") << g;
        first = false;
    }
    return out << "]";
}

}  // namespace phasefold
