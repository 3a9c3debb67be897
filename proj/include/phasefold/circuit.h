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

#ifndef PHASEFOLD_CIRCUIT_H
#define PHASEFOLD_CIRCUIT_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <vector>

#include "phasefold/angle.h"

namespace phasefold {

struct QubitId {
    uint32_t index = 0;

    constexpr QubitId() = default;
    constexpr explicit QubitId(uint32_t i) : index(i) {}
    auto operator<=>(const QubitId &) const = default;
};

enum class GateKind : uint8_t { CX, H, X, Rz };

/// One gate of the {CX, H, X, Rz} gate set.
class Gate {
   public:
    static Gate cx(QubitId control, QubitId target);
    static Gate h(QubitId q);
    static Gate x(QubitId q);
    static Gate rz(Angle angle, QubitId q);

    GateKind kind() const { return kind_; }
    bool is_rotation() const { return kind_ == GateKind::Rz; }
    /// The single qubit of H, X and Rz; the target of CX.
    QubitId qubit() const { return target_; }
    QubitId target() const { return target_; }
    QubitId control() const { return control_; }
    const Angle &angle() const { return angle_; }

    bool operator==(const Gate &other) const;

   private:
    Gate(GateKind kind, QubitId control, QubitId target, Angle angle)
        : kind_(kind), control_(control), target_(target), angle_(angle) {}

    GateKind kind_;
    QubitId control_;
    QubitId target_;
    Angle angle_;
};

std::ostream &operator<<(std::ostream &out, const Gate &g);

/// Stable reference to one appended gate slot of a specific Circuit.
struct GateHandle {
    uint64_t owner = 0;
    uint32_t slot = 0;
    bool operator==(const GateHandle &) const = default;
};

struct CircuitStats {
    size_t total_gates = 0;
    size_t t_count = 0;
    size_t rz_count = 0;
    size_t cx_count = 0;
    size_t h_count = 0;
    size_t x_count = 0;
    uint32_t num_qubits = 0;
    bool operator==(const CircuitStats &) const = default;
};

/// An ordered gate list over a flat register of qubits.
///
/// Gates are never physically removed: erase() tombstones a slot in O(1) and
/// iteration skips tombstoned slots. Each circuit has a unique identity, so
/// handles from another circuit (including one this was copied from) are
/// rejected.
class Circuit {
   public:
    class const_iterator;

    explicit Circuit(uint32_t num_qubits = 0);
    Circuit(const Circuit &other);
    Circuit(Circuit &&other) noexcept = default;
    Circuit &operator=(const Circuit &other);
    Circuit &operator=(Circuit &&other) noexcept = default;

    uint32_t num_qubits() const { return num_qubits_; }
    /// Number of live gates.
    size_t size() const { return live_count_; }
    bool empty() const { return live_count_ == 0; }
    /// Number of slots ever issued, live or not.
    size_t slot_count() const { return gates_.size(); }
    void reserve(size_t n);

    /// Appends a gate. Throws std::out_of_range if a qubit is not in the
    /// register and std::invalid_argument if a CX has control == target.
    GateHandle append(const Gate &g);
    GateHandle cx(uint32_t control, uint32_t target) { return append(Gate::cx(QubitId{control}, QubitId{target})); }
    GateHandle h(uint32_t q) { return append(Gate::h(QubitId{q})); }
    GateHandle x(uint32_t q) { return append(Gate::x(QubitId{q})); }
    GateHandle rz(Angle a, uint32_t q) { return append(Gate::rz(a, QubitId{q})); }

    /// Tombstones the gate. Throws std::invalid_argument on a foreign or
    /// already-erased handle.
    void erase(GateHandle h);
    bool is_live(GateHandle h) const;
    const Gate &at(GateHandle h) const;

    const_iterator begin() const;
    const_iterator end() const;
    /// Live gates, in order, as a fresh vector.
    std::vector<Gate> live_gates() const;
    /// A copy without tombstones.
    Circuit compacted() const;

    CircuitStats stats() const;

    /// Same register size and same live gate sequence.
    bool operator==(const Circuit &other) const;

   private:
    void check_handle(GateHandle h) const;

    uint64_t id_;
    uint32_t num_qubits_;
    size_t live_count_ = 0;
    std::vector<Gate> gates_;
    std::vector<uint8_t> live_;
};

class Circuit::const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Gate;
    using difference_type = std::ptrdiff_t;
    using pointer = const Gate *;
    using reference = const Gate &;

    const_iterator() = default;

    reference operator*() const { return owner_->gates_[slot_]; }
    pointer operator->() const { return &owner_->gates_[slot_]; }
    GateHandle handle() const { return GateHandle{owner_->id_, static_cast<uint32_t>(slot_)}; }

    const_iterator &operator++() {
        ++slot_;
        skip();
        return *this;
    }
    const_iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
    }
    bool operator==(const const_iterator &other) const { return slot_ == other.slot_; }

   private:
    friend class Circuit;
    const_iterator(const Circuit *owner, size_t slot) : owner_(owner), slot_(slot) { skip(); }
    void skip() {
        while (slot_ < owner_->gates_.size() && !owner_->live_[slot_]) {
            ++slot_;
        }
    }

    const Circuit *owner_ = nullptr;
    size_t slot_ = 0;
};

std::ostream &operator<<(std::ostream &out, const Circuit &c);

}  // namespace phasefold

#endif
