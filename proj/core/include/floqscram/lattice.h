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
#include <string>
#include <string_view>
#include <vector>

#include "floqscram/clifford_map.h"

namespace floqscram {

enum class LayoutKind { Single, Double };

/// Q is the only layer of a single-layer array; B and T are the bottom and
/// top layers of a double-layer array.
enum class Layer { Q, B, T };

/// 1-based lattice coordinates.
struct QubitLabel {
    Layer layer = Layer::Q;
    std::size_t i = 1;
    std::size_t j = 1;

    auto operator<=>(const QubitLabel&) const = default;
};

std::string format_label(const QubitLabel& label);
QubitLabel parse_label(std::string_view text);

/// Maps lattice labels to linear qubit indices. Single: (i,j) -> (i-1)*N + (j-1).
/// Double: all B qubits row-major, then all T qubits row-major.
class LayerLayout {
   public:
    LayerLayout(LayoutKind kind, std::size_t side);

    static LayerLayout single(std::size_t side) { return {LayoutKind::Single, side}; }
    static LayerLayout twin(std::size_t side) { return {LayoutKind::Double, side}; }

    LayoutKind kind() const { return kind_; }
    std::size_t side() const { return side_; }
    std::size_t num_layers() const { return kind_ == LayoutKind::Single ? 1 : 2; }
    std::size_t num_qubits() const { return num_layers() * side_ * side_; }
    std::vector<Layer> layers() const;

    std::size_t index(const QubitLabel& label) const;
    std::size_t index(Layer layer, std::size_t i, std::size_t j) const { return index({layer, i, j}); }
    QubitLabel label(std::size_t index) const;

    bool operator==(const LayerLayout&) const = default;

   private:
    LayoutKind kind_;
    std::size_t side_;
};

std::string layout_name(LayoutKind kind);
LayoutKind parse_layout_kind(std::string_view text);

/// The riffle shuffle of {1..N}: odd i -> (i+1)/2, even i -> (i+N)/2. N must be even.
std::size_t sigma(std::size_t i, std::size_t side);

/// Qubit relabeling of one step: dest[q] is where the Pauli on q moves.
std::vector<std::size_t> shuffle_destinations(const LayerLayout& layout);

/// The relabeling (layer, i, j) -> (layer, sigma(i), sigma(j)) as a Clifford map.
CliffordMap build_perm_map(const LayerLayout& layout);

/// For N = 2^k, checks that sigma(x) equals 1 + (right-rotation of the k-bit
/// binary form of x-1) for every x. Throws if N is not a power of two.
bool bit_rotation_check(std::size_t side);

}  // namespace floqscram
