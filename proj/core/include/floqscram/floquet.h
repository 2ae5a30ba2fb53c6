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

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "floqscram/clifford_map.h"
#include "floqscram/connectivity.h"
#include "floqscram/gf2.h"
#include "floqscram/lattice.h"
#include "floqscram/pauli.h"

namespace floqscram {

/// How a step is applied. Dense multiplies by the cached 2n x 2n step matrix;
/// Structured relabels rows and then applies the 8x8 gate block per subset.
/// Both give identical bits.
enum class EvolutionPath { Structured, Dense };

/// One Floquet step: the shuffle relabeling followed by the same 4-qubit gate
/// on every subset of the partition.
class FloquetCircuit {
   public:
    /// Throws if the partition is invalid or its layout differs from `layout`,
    /// or if the gate does not compile on 4 qubits.
    FloquetCircuit(LayerLayout layout, Partition partition, const GateSpec& gate);

    const LayerLayout& layout() const { return layout_; }
    const Partition& partition() const { return partition_; }
    const GateSpec& gate_spec() const { return spec_; }
    const CliffordMap& gate() const { return gate_; }
    const CliffordMap& step_map() const { return step_; }
    const std::vector<std::size_t>& destinations() const { return dest_; }
    std::size_t num_qubits() const { return layout_.num_qubits(); }

    BitVec step(const BitVec& bits, EvolutionPath path = EvolutionPath::Structured) const;
    PauliVec evolve_pauli(const PauliVec& p, std::size_t t, EvolutionPath path = EvolutionPath::Structured) const;
    /// States at times 0..t inclusive.
    std::vector<PauliVec> trajectory(const PauliVec& p, std::size_t t) const;

    /// Evolves every column of a 2n x m matrix of Pauli columns.
    BitMatrix evolve_matrix(const BitMatrix& cols, std::size_t t,
                            EvolutionPath path = EvolutionPath::Structured) const;
    void step_in_place(BitMatrix& cols) const;

   private:
    LayerLayout layout_;
    Partition partition_;
    GateSpec spec_;
    CliffordMap gate_;
    std::vector<std::size_t> dest_;
    CliffordMap step_;
    std::array<std::uint8_t, 8> gate_rows_{};  // bit b of gate_rows_[a] = gate(a, b)
};

/// Convenience constructor from (layout kind, rule, N, gate).
FloquetCircuit make_circuit(LayoutKind kind, Rule rule, std::size_t side, const GateSpec& gate);

/// Sizes of every column of a 2n x m Pauli matrix.
std::vector<std::size_t> column_sizes(const BitMatrix& cols);

}  // namespace floqscram
