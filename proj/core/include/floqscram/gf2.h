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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace floqscram {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Fixed-length bit vector over GF(2). Bits past `size()` are always zero.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_(words_for(len), 0) {}

    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return len_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool v = true) {
        Word mask = Word{1} << (i % kWordBits);
        if (v) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t popcount() const;
    bool none() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    bool operator==(const BitVec& other) const = default;

    /// Parity of the bitwise AND.
    bool dot(const BitVec& other) const;

    std::string to_string() const;

   private:
    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Dense row-major GF(2) matrix. Each row is padded to a whole number of words
/// and the padding bits are kept at zero.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    /// Rows given as strings of '0'/'1'; all rows must have the same length.
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        Word& w = data_[r * stride_ + c / kWordBits];
        Word mask = Word{1} << (c % kWordBits);
        w = v ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits);
    }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVec row_vec(std::size_t r) const;
    BitVec col_vec(std::size_t c) const;
    void set_row(std::size_t r, const BitVec& v);
    void set_col(std::size_t c, const BitVec& v);

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    /// New matrix holding the listed rows, in order.
    BitMatrix select_rows(std::span<const std::size_t> rows) const;
    bool is_zero() const;

    bool operator==(const BitMatrix& other) const = default;

    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct RowEchelon {
    BitMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. Pivot columns are strictly increasing and the
/// nonzero rows come first.
RowEchelon rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

BitMatrix augment(const BitMatrix& a, const BitMatrix& b);
/// True iff every column of `b` lies in the column span of `a`.
bool colspace_contains(const BitMatrix& a, const BitMatrix& b);

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitVec matvec(const BitMatrix& a, const BitVec& v);

/// Solves a * x = b[:, j] for every column j of `b`. Entry j is empty when
/// that column is outside the column span of `a`.
std::vector<std::optional<BitVec>> solve_columns(const BitMatrix& a, const BitMatrix& b);

}  // namespace floqscram
