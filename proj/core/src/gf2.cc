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

#include "floqscram/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace floqscram {

namespace {

void xor_words(std::span<Word> dst, std::span<const Word> src, std::size_t from = 0) {
    for (std::size_t k = from; k < dst.size(); ++k) {
        dst[k] ^= src[k];
    }
}

template <typename Fn>
void for_each_set_bit(std::span<const Word> words, Fn&& fn) {
    for (std::size_t k = 0; k < words.size(); ++k) {
        Word w = words[k];
        while (w != 0) {
            fn(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

}  // namespace

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (Word w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVec::none() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    xor_words(words_, other.words_);
    return *this;
}

bool BitVec::dot(const BitVec& other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVec length mismatch");
    }
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged rows in BitMatrix::from_rows");
        }
        m.set_row(r, BitVec::from_string(rows[r]));
    }
    return m;
}

BitVec BitMatrix::row_vec(std::size_t r) const {
    BitVec v(cols_);
    std::copy_n(row(r).begin(), stride_, v.words().begin());
    return v;
}

BitVec BitMatrix::col_vec(std::size_t c) const {
    BitVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("row length mismatch");
    }
    std::copy_n(v.words().begin(), stride_, row(r).begin());
}

void BitMatrix::set_col(std::size_t c, const BitVec& v) {
    if (v.size() != rows_) {
        throw std::invalid_argument("column length mismatch");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        set(r, c, v.get(r));
    }
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    xor_words(row(dst), row(src));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for_each_set_bit(row(r), [&](std::size_t c) { t.set(c, r); });
    }
    return t;
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
    BitMatrix out(rows.size(), cols_);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] >= rows_) {
            throw std::out_of_range("row index out of range");
        }
        std::copy_n(row(rows[k]).begin(), stride_, out.row(k).begin());
    }
    return out;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

std::string BitMatrix::to_string() const {
    std::string s;
    s.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row_vec(r).to_string();
        s += '\n';
    }
    return s;
}

RowEchelon rref(const BitMatrix& m) {
    RowEchelon out{m, {}};
    BitMatrix& a = out.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t word = c / kWordBits;
        Word mask = Word{1} << (c % kWordBits);
        std::size_t found = pivot_row;
        while (found < a.rows() && (a.row(found)[word] & mask) == 0) {
            ++found;
        }
        if (found == a.rows()) continue;
        a.swap_rows(found, pivot_row);
        auto pivot = a.row(pivot_row);
        // Columns left of c are already clear in the pivot row.
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r != pivot_row && (a.row(r)[word] & mask) != 0) {
                xor_words(a.row(r), pivot, word);
            }
        }
        out.pivots.push_back(c);
        ++pivot_row;
    }
    return out;
}

std::size_t rank(const BitMatrix& m) {
    // Forward elimination only; no need for the reduced form.
    BitMatrix a = m;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
        std::size_t word = c / kWordBits;
        Word mask = Word{1} << (c % kWordBits);
        std::size_t found = pivot_row;
        while (found < a.rows() && (a.row(found)[word] & mask) == 0) {
            ++found;
        }
        if (found == a.rows()) continue;
        a.swap_rows(found, pivot_row);
        auto pivot = a.row(pivot_row);
        for (std::size_t r = pivot_row + 1; r < a.rows(); ++r) {
            if ((a.row(r)[word] & mask) != 0) {
                xor_words(a.row(r), pivot, word);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

BitMatrix augment(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("augment: row count mismatch");
    }
    BitMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy_n(a.row(r).begin(), a.stride(), out.row(r).begin());
        for_each_set_bit(b.row(r), [&](std::size_t c) { out.set(r, a.cols() + c); });
    }
    return out;
}

bool colspace_contains(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("colspace_contains: row count mismatch");
    }
    return rank(augment(a, b)) == rank(a);
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimension mismatch");
    }
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row(i);
        for_each_set_bit(a.row(i), [&](std::size_t k) { xor_words(out, b.row(k)); });
    }
    return c;
}

BitVec matvec(const BitMatrix& a, const BitVec& v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    BitVec out(a.rows());
    auto vw = v.words();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto rw = a.row(i);
        Word acc = 0;
        for (std::size_t k = 0; k < rw.size(); ++k) {
            acc ^= rw[k] & vw[k];
        }
        if (std::popcount(acc) & 1) out.set(i);
    }
    return out;
}

std::vector<std::optional<BitVec>> solve_columns(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("solve_columns: row count mismatch");
    }
    RowEchelon ech = rref(augment(a, b));
    std::size_t left_rank = 0;
    while (left_rank < ech.pivots.size() && ech.pivots[left_rank] < a.cols()) {
        ++left_rank;
    }
    std::vector<std::optional<BitVec>> out;
    out.reserve(b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::size_t col = a.cols() + j;
        bool consistent = true;
        for (std::size_t r = left_rank; r < ech.matrix.rows(); ++r) {
            if (ech.matrix.get(r, col)) {
                consistent = false;
                break;
            }
        }
        if (!consistent) {
            out.emplace_back(std::nullopt);
            continue;
        }
        BitVec x(a.cols());
        for (std::size_t k = 0; k < left_rank; ++k) {
            if (ech.matrix.get(k, col)) x.set(ech.pivots[k]);
        }
        out.emplace_back(std::move(x));
    }
    return out;
}

}  // namespace floqscram
