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

#include "floqscram/floquet.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace floqscram {

FloquetCircuit::FloquetCircuit(LayerLayout layout, Partition partition, const GateSpec& gate)
    : layout_(layout), partition_(std::move(partition)), spec_(gate) {
    if (!(partition_.layout == layout_)) {
        throw std::invalid_argument("partition layout does not match circuit layout");
    }
    if (!validate(partition_)) {
        throw std::invalid_argument("partition is not a disjoint cover by 4-qubit subsets");
    }
    if (spec_.min_qubits() > 4) {
        throw std::invalid_argument("gate spec uses more than 4 slots");
    }
    gate_ = compile(spec_, 4);
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            if (gate_.matrix().get(a, b)) gate_rows_[a] |= static_cast<std::uint8_t>(1U << b);
        }
    }
    dest_ = shuffle_destinations(layout_);
    std::vector<std::vector<std::size_t>> groups;
    groups.reserve(partition_.subsets.size());
    for (const Subset& s : partition_.subsets) groups.emplace_back(s.begin(), s.end());
    CliffordMap interactions = embed_disjoint(gate_, groups, layout_.num_qubits());
    step_ = compose(interactions, CliffordMap::permutation(dest_));
}

BitVec FloquetCircuit::step(const BitVec& bits, EvolutionPath path) const {
    std::size_t n = num_qubits();
    if (bits.size() != 2 * n) {
        throw std::invalid_argument("Pauli vector size does not match circuit");
    }
    if (path == EvolutionPath::Dense) {
        return matvec(step_.matrix(), bits);
    }
    BitVec moved(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (bits.get(q)) moved.set(dest_[q]);
        if (bits.get(n + q)) moved.set(n + dest_[q]);
    }
    for (const Subset& s : partition_.subsets) {
        std::uint8_t local = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            if (moved.get(s[k])) local |= static_cast<std::uint8_t>(1U << k);
            if (moved.get(n + s[k])) local |= static_cast<std::uint8_t>(1U << (4 + k));
        }
        for (std::size_t k = 0; k < 4; ++k) {
            moved.set(s[k], std::popcount(static_cast<unsigned>(gate_rows_[k] & local)) & 1);
            moved.set(n + s[k], std::popcount(static_cast<unsigned>(gate_rows_[4 + k] & local)) & 1);
        }
    }
    return moved;
}

PauliVec FloquetCircuit::evolve_pauli(const PauliVec& p, std::size_t t, EvolutionPath path) const {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli size does not match circuit");
    }
    BitVec bits = p.bits();
    for (std::size_t k = 0; k < t; ++k) bits = step(bits, path);
    return PauliVec(std::move(bits));
}

std::vector<PauliVec> FloquetCircuit::trajectory(const PauliVec& p, std::size_t t) const {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli size does not match circuit");
    }
    std::vector<PauliVec> out{p};
    out.reserve(t + 1);
    for (std::size_t k = 0; k < t; ++k) out.emplace_back(step(out.back().bits()));
    return out;
}

void FloquetCircuit::step_in_place(BitMatrix& cols) const {
    std::size_t n = num_qubits();
    if (cols.rows() != 2 * n) {
        throw std::invalid_argument("Pauli matrix must have 2n rows");
    }
    std::size_t stride = cols.stride();
    BitMatrix moved(cols.rows(), cols.cols());
    for (std::size_t q = 0; q < n; ++q) {
        std::copy_n(cols.row(q).begin(), stride, moved.row(dest_[q]).begin());
        std::copy_n(cols.row(n + q).begin(), stride, moved.row(n + dest_[q]).begin());
    }
    std::vector<Word> scratch(8 * stride);
    std::array<std::size_t, 8> rows{};
    for (const Subset& s : partition_.subsets) {
        for (std::size_t k = 0; k < 4; ++k) {
            rows[k] = s[k];
            rows[4 + k] = n + s[k];
        }
        std::fill(scratch.begin(), scratch.end(), Word{0});
        for (std::size_t a = 0; a < 8; ++a) {
            Word* out = scratch.data() + a * stride;
            for (std::size_t b = 0; b < 8; ++b) {
                if (((gate_rows_[a] >> b) & 1U) == 0) continue;
                auto src = moved.row(rows[b]);
                for (std::size_t w = 0; w < stride; ++w) out[w] ^= src[w];
            }
        }
        for (std::size_t a = 0; a < 8; ++a) {
            std::copy_n(scratch.data() + a * stride, stride, moved.row(rows[a]).begin());
        }
    }
    cols = std::move(moved);
}

BitMatrix FloquetCircuit::evolve_matrix(const BitMatrix& cols, std::size_t t, EvolutionPath path) const {
    if (cols.rows() != 2 * num_qubits()) {
        throw std::invalid_argument("Pauli matrix must have 2n rows");
    }
    BitMatrix out = cols;
    for (std::size_t k = 0; k < t; ++k) {
        if (path == EvolutionPath::Dense) {
            out = matmul(step_.matrix(), out);
        } else {
            step_in_place(out);
        }
    }
    return out;
}

FloquetCircuit make_circuit(LayoutKind kind, Rule rule, std::size_t side, const GateSpec& gate) {
    Partition p = make_partition(kind, rule, side);
    LayerLayout layout = p.layout;
    return {layout, std::move(p), gate};
}

std::vector<std::size_t> column_sizes(const BitMatrix& cols) {
    if (cols.rows() % 2 != 0) {
        throw std::invalid_argument("Pauli matrix must have an even row count");
    }
    std::size_t n = cols.rows() / 2;
    std::vector<std::size_t> sizes(cols.cols(), 0);
    for (std::size_t q = 0; q < n; ++q) {
        auto xr = cols.row(q);
        auto zr = cols.row(n + q);
        for (std::size_t w = 0; w < xr.size(); ++w) {
            Word support = xr[w] | zr[w];
            while (support != 0) {
                ++sizes[w * kWordBits + static_cast<std::size_t>(std::countr_zero(support))];
                support &= support - 1;
            }
        }
    }
    return sizes;
}

}  // namespace floqscram
