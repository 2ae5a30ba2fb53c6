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

#include "floqscram/clifford_map.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace floqscram {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::size_t arity(GateName name) { return name == GateName::CNOT ? 2 : 1; }

const char* gate_name_str(GateName name) {
    switch (name) {
        case GateName::H:
            return "H";
        case GateName::S:
            return "S";
        case GateName::CNOT:
            return "CNOT";
    }
    return "?";
}

std::size_t parse_slot(const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'Q')) {
        throw std::invalid_argument("expected a slot like q1, got '" + tok + "'");
    }
    std::size_t value = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
            throw std::invalid_argument("expected a slot like q1, got '" + tok + "'");
        }
        value = value * 10 + static_cast<std::size_t>(tok[i] - '0');
    }
    if (value == 0) {
        throw std::invalid_argument("slots are numbered from q1");
    }
    return value - 1;
}

void check_square_2n(const BitMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) {
        throw std::invalid_argument("Clifford map matrix must be 2n x 2n");
    }
}

}  // namespace

GateSpec GateSpec::parse(std::string_view text) {
    GateSpec spec;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view stmt = trim(text.substr(start, end - start));
        start = end + 1;
        if (stmt.empty()) continue;

        std::istringstream in{std::string(stmt)};
        std::string name_tok;
        in >> name_tok;
        GateOp op{};
        if (name_tok == "H") {
            op.name = GateName::H;
        } else if (name_tok == "S") {
            op.name = GateName::S;
        } else if (name_tok == "CNOT" || name_tok == "CX") {
            op.name = GateName::CNOT;
        } else {
            throw std::invalid_argument("unknown gate '" + name_tok + "'");
        }
        std::string tok;
        while (in >> tok) {
            op.slots.push_back(parse_slot(tok));
        }
        if (op.slots.size() != arity(op.name)) {
            throw std::invalid_argument(std::string("gate ") + gate_name_str(op.name) + " expects " +
                                        std::to_string(arity(op.name)) + " slot(s)");
        }
        if (op.name == GateName::CNOT && op.slots[0] == op.slots[1]) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
        spec.ops.push_back(std::move(op));
    }
    return spec;
}

std::string GateSpec::format() const {
    std::string out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0) out += "; ";
        out += gate_name_str(ops[i].name);
        for (std::size_t s : ops[i].slots) {
            out += " q" + std::to_string(s + 1);
        }
    }
    return out;
}

std::size_t GateSpec::min_qubits() const {
    std::size_t k = 0;
    for (const auto& op : ops) {
        for (std::size_t s : op.slots) k = std::max(k, s + 1);
    }
    return k;
}

GateSpec resolve_gate(std::string_view text) {
    std::string_view t = trim(text);
    if (t == "W") return GateSpec::parse(presets::kW);
    if (t == "W_new") return GateSpec::parse(presets::kWNew);
    return GateSpec::parse(t);
}

CliffordMap::CliffordMap(BitMatrix m) : n_(m.rows() / 2), m_(std::move(m)) {
    check_square_2n(m_);
    if (!is_symplectic(m_)) {
        throw std::invalid_argument("matrix is not symplectic");
    }
}

CliffordMap::CliffordMap(BitMatrix m, Unchecked) : n_(m.rows() / 2), m_(std::move(m)) {}

CliffordMap CliffordMap::identity(std::size_t n) { return {BitMatrix::identity(2 * n), Unchecked{}}; }

CliffordMap CliffordMap::permutation(std::span<const std::size_t> dest) {
    std::size_t n = dest.size();
    std::vector<bool> seen(n, false);
    BitMatrix m(2 * n, 2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        if (dest[q] >= n || seen[dest[q]]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[dest[q]] = true;
        m.set(dest[q], q);
        m.set(n + dest[q], n + q);
    }
    return {std::move(m), Unchecked{}};
}

PauliVec CliffordMap::apply(const PauliVec& p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("Pauli size does not match map");
    }
    return PauliVec(matvec(m_, p.bits()));
}

BitVec CliffordMap::apply(const BitVec& bits) const { return matvec(m_, bits); }

CliffordMap CliffordMap::inverse() const {
    // For symplectic m: m^-1 = Omega m^T Omega.
    BitMatrix t = m_.transposed();
    BitMatrix inv(2 * n_, 2 * n_);
    for (std::size_t r = 0; r < 2 * n_; ++r) {
        std::size_t src_r = r < n_ ? r + n_ : r - n_;
        for (std::size_t c = 0; c < 2 * n_; ++c) {
            std::size_t src_c = c < n_ ? c + n_ : c - n_;
            if (t.get(src_r, src_c)) inv.set(r, c);
        }
    }
    return {std::move(inv), Unchecked{}};
}

CliffordMap elementary(GateName name, std::span<const std::size_t> slots) {
    switch (name) {
        case GateName::H: {
            BitMatrix m(2, 2);
            m.set(0, 1);
            m.set(1, 0);
            return {std::move(m), CliffordMap::Unchecked{}};
        }
        case GateName::S: {
            BitMatrix m(2, 2);
            m.set(0, 0);
            m.set(1, 0);
            m.set(1, 1);
            return {std::move(m), CliffordMap::Unchecked{}};
        }
        case GateName::CNOT: {
            if (slots.size() == 2 && slots[0] == slots[1]) {
                throw std::invalid_argument("CNOT control and target must differ");
            }
            // Layout (x_c, x_t, z_c, z_t): X_c -> X_c X_t and Z_t -> Z_c Z_t.
            return {BitMatrix::from_rows({"1000", "1100", "0011", "0001"}), CliffordMap::Unchecked{}};
        }
    }
    throw std::invalid_argument("unknown gate");
}

CliffordMap compile(const GateSpec& spec, std::size_t k) {
    BitMatrix m = BitMatrix::identity(2 * k);
    for (const auto& op : spec.ops) {
        for (std::size_t s : op.slots) {
            if (s >= k) {
                throw std::invalid_argument("gate slot q" + std::to_string(s + 1) + " exceeds " +
                                            std::to_string(k) + " qubits");
            }
        }
        CliffordMap e = embed(elementary(op.name, op.slots), op.slots, k);
        // Printed order is the matrix product order, so the rightmost factor hits operators first.
        m = matmul(m, e.m_);
    }
    return {std::move(m), CliffordMap::Unchecked{}};
}

CliffordMap embed(const CliffordMap& g, std::span<const std::size_t> positions, std::size_t n) {
    std::vector<std::vector<std::size_t>> groups{{positions.begin(), positions.end()}};
    return embed_disjoint(g, groups, n);
}

CliffordMap embed_disjoint(const CliffordMap& g, std::span<const std::vector<std::size_t>> groups,
                           std::size_t n) {
    std::size_t k = g.num_qubits();
    std::vector<bool> used(n, false);
    BitMatrix m = BitMatrix::identity(2 * n);
    std::vector<std::size_t> global(2 * k);
    for (const auto& pos : groups) {
        if (pos.size() != k) {
            throw std::invalid_argument("embed: position count does not match gate size");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (pos[i] >= n) throw std::out_of_range("embed: position out of range");
            if (used[pos[i]]) throw std::invalid_argument("embed: repeated position");
            used[pos[i]] = true;
            global[i] = pos[i];
            global[k + i] = n + pos[i];
        }
        for (std::size_t a = 0; a < 2 * k; ++a) {
            for (std::size_t b = 0; b < 2 * k; ++b) {
                m.set(global[a], global[b], g.m_.get(a, b));
            }
        }
    }
    return {std::move(m), CliffordMap::Unchecked{}};
}

CliffordMap compose(const CliffordMap& a, const CliffordMap& b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("compose: size mismatch");
    }
    return {matmul(a.m_, b.m_), CliffordMap::Unchecked{}};
}

bool is_symplectic(const BitMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
    std::size_t n = m.rows() / 2;
    // Omega * m swaps the X and Z row blocks.
    BitMatrix omega_m(2 * n, 2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r) {
        std::size_t src = r < n ? r + n : r - n;
        std::copy_n(m.row(src).begin(), m.stride(), omega_m.row(r).begin());
    }
    BitMatrix form = matmul(m.transposed(), omega_m);
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t c = 0; c < 2 * n; ++c) {
            bool expected = (c == (r < n ? r + n : r - n));
            if (form.get(r, c) != expected) return false;
        }
    }
    return true;
}

}  // namespace floqscram
