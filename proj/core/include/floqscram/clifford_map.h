// Copyright 2026 The floqscram Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "floqscram/gf2.h"
#include "floqscram/pauli.h"

namespace floqscram {

enum class GateName { H, S, CNOT };

/// One factor of a gate product. Slots are 0-based (q1 is slot 0); CNOT lists
/// control then target.
struct GateOp {
    GateName name;
    std::vector<std::size_t> slots;

    bool operator==(const GateOp&) const = default;
};

/// A product of elementary gates written left to right as in `S q4; CNOT q4 q1; H q1`.
/// The rightmost factor acts on operators first.
struct GateSpec {
    std::vector<GateOp> ops;

    static GateSpec parse(std::string_view text);
    std::string format() const;
    /// Largest slot used plus one.
    std::size_t min_qubits() const;

    bool operator==(const GateSpec&) const = default;
};

namespace presets {
inline constexpr std::string_view kW = "S q4; CNOT q4 q1; CNOT q1 q2; CNOT q2 q3; CNOT q3 q4; H q1";
inline constexpr std::string_view kWNew =
    "CNOT q3 q2; S q3; CNOT q2 q4; CNOT q1 q3; H q3; CNOT q4 q1; CNOT q1 q2; CNOT q2 q3; CNOT q3 q4; H q1";
}  // namespace presets

/// Accepts the preset names `W` and `W_new`, otherwise parses `text` as a gate spec.
GateSpec resolve_gate(std::string_view text);

/// Conjugation action of a Clifford unitary on phaseless Pauli vectors, as a
/// 2n x 2n symplectic matrix acting on column vectors (X block, then Z block).
class CliffordMap {
   public:
    CliffordMap() = default;
    /// Throws if `m` is not 2n x 2n or not symplectic.
    explicit CliffordMap(BitMatrix m);

    static CliffordMap identity(std::size_t n);
    /// Qubit relabeling: the Pauli on qubit q moves to qubit dest[q].
    static CliffordMap permutation(std::span<const std::size_t> dest);

    std::size_t num_qubits() const { return n_; }
    const BitMatrix& matrix() const { return m_; }

    PauliVec apply(const PauliVec& p) const;
    BitVec apply(const BitVec& bits) const;
    CliffordMap inverse() const;

    bool operator==(const CliffordMap& other) const = default;

   private:
    struct Unchecked {};
    CliffordMap(BitMatrix m, Unchecked);

    friend CliffordMap elementary(GateName, std::span<const std::size_t>);
    friend CliffordMap compile(const GateSpec&, std::size_t);
    friend CliffordMap embed(const CliffordMap&, std::span<const std::size_t>, std::size_t);
    friend CliffordMap embed_disjoint(const CliffordMap&, std::span<const std::vector<std::size_t>>,
                                      std::size_t);
    friend CliffordMap compose(const CliffordMap&, const CliffordMap&);

    std::size_t n_ = 0;
    BitMatrix m_;
};

/// The standalone map of H/S on one qubit or CNOT on two. For CNOT, `slots`
/// must be two distinct values; the result always acts on slots {0,1} (control, target).
CliffordMap elementary(GateName name, std::span<const std::size_t> slots = {});

/// Compiles a gate product on k qubits. Throws on out-of-range slots.
CliffordMap compile(const GateSpec& spec, std::size_t k);

/// Places a k-qubit map on `positions` (slot i -> positions[i]) of an n-qubit register.
CliffordMap embed(const CliffordMap& g, std::span<const std::size_t> positions, std::size_t n);

/// Places one copy of `g` on each of the pairwise disjoint position lists.
CliffordMap embed_disjoint(const CliffordMap& g, std::span<const std::vector<std::size_t>> groups,
                           std::size_t n);

/// Operator map of "apply b, then a".
CliffordMap compose(const CliffordMap& a, const CliffordMap& b);

bool is_symplectic(const BitMatrix& m);
inline bool is_symplectic(const CliffordMap& g) { return is_symplectic(g.matrix()); }

}  // namespace floqscram
