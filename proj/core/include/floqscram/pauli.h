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

#include "floqscram/gf2.h"

namespace floqscram {

enum class PauliKind { X, Y, Z };

/// Phaseless Pauli string on n qubits: bits [0, n) hold the X part and bits
/// [n, 2n) the Z part. Qubit q is I/X/Z/Y for (x_q, z_q) = 00/10/01/11.
class PauliVec {
   public:
    PauliVec() = default;
    explicit PauliVec(std::size_t n) : n_(n), bits_(2 * n) {}
    /// Takes ownership of a 2n-bit vector.
    explicit PauliVec(BitVec bits);

    static PauliVec single(std::size_t n, std::size_t q, PauliKind kind);
    static PauliVec parse(std::string_view s);

    std::size_t num_qubits() const { return n_; }
    const BitVec& bits() const { return bits_; }
    BitVec& bits() { return bits_; }

    bool x(std::size_t q) const { return bits_.get(q); }
    bool z(std::size_t q) const { return bits_.get(n_ + q); }
    bool acts_on(std::size_t q) const { return x(q) || z(q); }

    /// Number of qubits carrying a non-identity factor.
    std::size_t size() const;
    std::vector<std::size_t> support() const;

    /// Phaseless product.
    PauliVec& operator*=(const PauliVec& other);
    friend PauliVec operator*(PauliVec a, const PauliVec& b) { return a *= b; }
    bool operator==(const PauliVec& other) const = default;

    std::string format() const;

   private:
    std::size_t n_ = 0;
    BitVec bits_;
};

/// Symplectic inner product: true iff the two strings anticommute.
bool anticommutes(const BitVec& a, const BitVec& b);
inline bool anticommutes(const PauliVec& a, const PauliVec& b) { return anticommutes(a.bits(), b.bits()); }

}  // namespace floqscram
