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

#include "floqscram/pauli.h"

#include <bit>
#include <stdexcept>

namespace floqscram {

PauliVec::PauliVec(BitVec bits) : n_(bits.size() / 2), bits_(std::move(bits)) {
    if (bits_.size() % 2 != 0) {
        throw std::invalid_argument("Pauli bit vector must have even length");
    }
}

PauliVec PauliVec::single(std::size_t n, std::size_t q, PauliKind kind) {
    if (q >= n) {
        throw std::out_of_range("qubit index out of range");
    }
    PauliVec p(n);
    if (kind != PauliKind::Z) p.bits_.set(q);
    if (kind != PauliKind::X) p.bits_.set(n + q);
    return p;
}

PauliVec PauliVec::parse(std::string_view s) {
    PauliVec p(s.size());
    for (std::size_t q = 0; q < s.size(); ++q) {
        switch (s[q]) {
            case 'I':
                break;
            case 'X':
                p.bits_.set(q);
                break;
            case 'Z':
                p.bits_.set(p.n_ + q);
                break;
            case 'Y':
                p.bits_.set(q);
                p.bits_.set(p.n_ + q);
                break;
            default:
                throw std::invalid_argument(std::string("invalid Pauli character '") + s[q] + "'");
        }
    }
    return p;
}

std::size_t PauliVec::size() const {
    // OR the X and Z halves bit by bit; the halves are not word aligned in general.
    std::size_t count = 0;
    for (std::size_t q = 0; q < n_; ++q) {
        count += acts_on(q) ? 1 : 0;
    }
    return count;
}

std::vector<std::size_t> PauliVec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_; ++q) {
        if (acts_on(q)) out.push_back(q);
    }
    return out;
}

PauliVec& PauliVec::operator*=(const PauliVec& other) {
    bits_ ^= other.bits_;
    return *this;
}

std::string PauliVec::format() const {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        s[q] = kChars[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
    }
    return s;
}

bool anticommutes(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw std::invalid_argument("anticommutes: incompatible Pauli vectors");
    }
    std::size_t n = a.size() / 2;
    bool parity = false;
    for (std::size_t q = 0; q < n; ++q) {
        parity ^= (a.get(q) && b.get(n + q)) != (a.get(n + q) && b.get(q));
    }
    return parity;
}

}  // namespace floqscram
