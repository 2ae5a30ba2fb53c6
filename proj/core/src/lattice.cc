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

#include "floqscram/lattice.h"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace floqscram {

namespace {

std::size_t parse_uint(std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected an unsigned integer, got '" + std::string(s) + "'");
    }
    return value;
}

}  // namespace

std::string format_label(const QubitLabel& label) {
    static constexpr char kNames[3] = {'Q', 'B', 'T'};
    return std::string(1, kNames[static_cast<int>(label.layer)]) + ":" + std::to_string(label.i) + "," +
           std::to_string(label.j);
}

QubitLabel parse_label(std::string_view text) {
    if (text.size() < 5 || text[1] != ':') {
        throw std::invalid_argument("expected a label like B:1,4, got '" + std::string(text) + "'");
    }
    QubitLabel label;
    switch (text[0]) {
        case 'Q':
            label.layer = Layer::Q;
            break;
        case 'B':
            label.layer = Layer::B;
            break;
        case 'T':
            label.layer = Layer::T;
            break;
        default:
            throw std::invalid_argument("unknown layer in label '" + std::string(text) + "'");
    }
    std::string_view rest = text.substr(2);
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("expected a label like B:1,4, got '" + std::string(text) + "'");
    }
    label.i = parse_uint(rest.substr(0, comma));
    label.j = parse_uint(rest.substr(comma + 1));
    return label;
}

LayerLayout::LayerLayout(LayoutKind kind, std::size_t side) : kind_(kind), side_(side) {
    if (side == 0) {
        throw std::invalid_argument("lattice side must be positive");
    }
}

std::vector<Layer> LayerLayout::layers() const {
    if (kind_ == LayoutKind::Single) return {Layer::Q};
    return {Layer::B, Layer::T};
}

std::size_t LayerLayout::index(const QubitLabel& label) const {
    if (label.i < 1 || label.i > side_ || label.j < 1 || label.j > side_) {
        throw std::out_of_range("lattice coordinate out of range: " + format_label(label));
    }
    std::size_t offset = 0;
    if (kind_ == LayoutKind::Single) {
        if (label.layer != Layer::Q) throw std::invalid_argument("single layout only has layer Q");
    } else {
        if (label.layer == Layer::Q) throw std::invalid_argument("double layout has layers B and T");
        offset = label.layer == Layer::T ? side_ * side_ : 0;
    }
    return offset + (label.i - 1) * side_ + (label.j - 1);
}

QubitLabel LayerLayout::label(std::size_t index) const {
    if (index >= num_qubits()) {
        throw std::out_of_range("qubit index out of range");
    }
    std::size_t per_layer = side_ * side_;
    Layer layer = Layer::Q;
    if (kind_ == LayoutKind::Double) {
        layer = index < per_layer ? Layer::B : Layer::T;
    }
    std::size_t local = index % per_layer;
    return {layer, local / side_ + 1, local % side_ + 1};
}

std::string layout_name(LayoutKind kind) { return kind == LayoutKind::Single ? "single" : "double"; }

LayoutKind parse_layout_kind(std::string_view text) {
    if (text == "single") return LayoutKind::Single;
    if (text == "double") return LayoutKind::Double;
    throw std::invalid_argument("layout must be 'single' or 'double'");
}

std::size_t sigma(std::size_t i, std::size_t side) {
    if (side % 2 != 0) {
        throw std::invalid_argument("shuffle permutation needs an even side length");
    }
    if (i < 1 || i > side) {
        throw std::out_of_range("shuffle index out of range");
    }
    return i % 2 == 1 ? (i + 1) / 2 : (i + side) / 2;
}

std::vector<std::size_t> shuffle_destinations(const LayerLayout& layout) {
    std::size_t side = layout.side();
    if (side % 2 != 0) {
        throw std::invalid_argument("shuffle permutation needs an even side length");
    }
    std::vector<std::size_t> dest(layout.num_qubits());
    for (std::size_t q = 0; q < dest.size(); ++q) {
        QubitLabel l = layout.label(q);
        dest[q] = layout.index(l.layer, sigma(l.i, side), sigma(l.j, side));
    }
    return dest;
}

CliffordMap build_perm_map(const LayerLayout& layout) {
    return CliffordMap::permutation(shuffle_destinations(layout));
}

bool bit_rotation_check(std::size_t side) {
    if (side == 0 || !std::has_single_bit(side)) {
        throw std::invalid_argument("bit rotation check needs N to be a power of two");
    }
    if (side == 1) return true;
    std::size_t k = static_cast<std::size_t>(std::countr_zero(side));
    for (std::size_t x = 1; x <= side; ++x) {
        std::size_t bits = x - 1;
        std::size_t rotated = (bits >> 1) | ((bits & 1U) << (k - 1));
        if (sigma(x, side) != rotated + 1) return false;
    }
    return true;
}

}  // namespace floqscram
