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

#include "floqscram/hp_recovery.h"

#include <algorithm>
#include <stdexcept>

#include "floqscram/diagnostics.h"
#include "floqscram/parallel.h"

namespace floqscram {

namespace {

std::vector<std::size_t> erased_rows(const ErasurePattern& erased, std::size_t n) {
    if (erased.erased.empty()) {
        throw std::invalid_argument("erased set must not be empty");
    }
    std::vector<std::size_t> rows;
    rows.reserve(2 * erased.erased.size());
    for (std::size_t q : erased.erased) {
        if (q >= n) throw std::out_of_range("erased qubit out of range");
        rows.push_back(q);
        rows.push_back(n + q);
    }
    return rows;
}

}  // namespace

CodeMatrices build_code(std::size_t n, std::span<const std::size_t> region) {
    std::vector<std::size_t> sorted(region.begin(), region.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("region has repeated qubits");
    }
    if (sorted.empty()) {
        throw std::invalid_argument("encoded region must not be empty");
    }
    if (sorted.size() >= n) {
        throw std::invalid_argument("encoded region must leave at least one qubit outside");
    }
    if (sorted.back() >= n) {
        throw std::out_of_range("region qubit out of range");
    }
    std::size_t q = sorted.size();
    CodeMatrices code{sorted, BitMatrix(2 * n, n - q), BitMatrix(2 * n, 2 * q)};
    std::vector<bool> inside(n, false);
    for (std::size_t k : sorted) inside[k] = true;
    std::size_t col = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!inside[k]) code.stabilizers.set(n + k, col++);
    }
    for (std::size_t i = 0; i < q; ++i) {
        code.logicals.set(sorted[i], 2 * i);
        code.logicals.set(n + sorted[i], 2 * i + 1);
    }
    return code;
}

CodeMatrices evolve_code(const FloquetCircuit& c, const CodeMatrices& code, std::size_t t) {
    return {code.region, c.evolve_matrix(code.stabilizers, t), c.evolve_matrix(code.logicals, t)};
}

bool recoverable(const CodeMatrices& evolved, const ErasurePattern& erased) {
    std::vector<std::size_t> rows = erased_rows(erased, evolved.num_qubits());
    BitMatrix s_r = evolved.stabilizers.select_rows(rows);
    BitMatrix l_r = evolved.logicals.select_rows(rows);
    return colspace_contains(s_r, l_r);
}

bool recovery_check(const FloquetCircuit& c, const CodeMatrices& code, const ErasurePattern& erased, std::size_t t) {
    return recoverable(evolve_code(c, code, t), erased);
}

DressedLogicals recover_logicals(const CodeMatrices& evolved, const ErasurePattern& erased) {
    std::vector<std::size_t> rows = erased_rows(erased, evolved.num_qubits());
    BitMatrix s_r = evolved.stabilizers.select_rows(rows);
    BitMatrix l_r = evolved.logicals.select_rows(rows);
    DressedLogicals out;
    out.combinations = solve_columns(s_r, l_r);
    out.dressed.resize(out.combinations.size());
    for (std::size_t j = 0; j < out.combinations.size(); ++j) {
        if (!out.combinations[j]) {
            out.unrecoverable.push_back(j);
            continue;
        }
        BitVec dressed = evolved.logicals.col_vec(j);
        dressed ^= matvec(evolved.stabilizers, *out.combinations[j]);
        out.dressed[j] = std::move(dressed);
    }
    return out;
}

DressedLogicals recovery_logical(const FloquetCircuit& c, const CodeMatrices& code, const ErasurePattern& erased,
                                 std::size_t t) {
    return recover_logicals(evolve_code(c, code, t), erased);
}

bool RecoveryTable::at(std::size_t ref_index, std::size_t r_index, std::size_t t) const {
    if (t < t_min || t > t_max) throw std::out_of_range("time outside scanned range");
    std::size_t span = t_max - t_min + 1;
    return entries.at((ref_index * sizes.size() + r_index) * span + (t - t_min)).recovered;
}

RecoveryTable recovery_scan(const FloquetCircuit& c, std::span<const std::size_t> references,
                            std::span<const std::size_t> sizes, std::size_t t_min, std::size_t t_max) {
    if (t_min > t_max) {
        throw std::invalid_argument("empty time range");
    }
    RecoveryTable table{{references.begin(), references.end()}, {sizes.begin(), sizes.end()}, t_min, t_max, {}};
    std::size_t span = t_max - t_min + 1;
    std::size_t cells = references.size() * sizes.size();
    table.entries.resize(cells * span);
    parallel_for(cells, [&](std::size_t cell) {
        std::size_t ref = references[cell / sizes.size()];
        std::size_t r = sizes[cell % sizes.size()];
        RegionA region = build_region(c, ref, r);
        ErasurePattern erased{region.qubits};
        CodeMatrices code = evolve_code(c, build_code(c.num_qubits(), region.qubits), t_min);
        for (std::size_t t = t_min; t <= t_max; ++t) {
            table.entries[cell * span + (t - t_min)] = {ref, r, t, recoverable(code, erased)};
            if (t < t_max) {
                c.step_in_place(code.stabilizers);
                c.step_in_place(code.logicals);
            }
        }
    });
    return table;
}

std::size_t recovery_boundary(std::size_t total_qubits) { return total_qubits / 3; }

bool has_nonmonotone_pattern(const std::vector<bool>& row) {
    bool seen_true = false;
    bool dropped = false;
    for (bool v : row) {
        if (v && dropped) return true;
        if (v) seen_true = true;
        if (!v && seen_true) dropped = true;
    }
    return false;
}

MonotonicityReport nonmonotonicity_scan(const RecoveryTable& table, std::size_t boundary) {
    MonotonicityReport report;
    std::size_t span = table.t_max - table.t_min + 1;
    // failure[t - t_min]: some entry with r <= boundary is false at time t.
    std::vector<bool> failure(span, false);
    for (std::size_t i = 0; i < table.references.size(); ++i) {
        for (std::size_t k = 0; k < table.sizes.size(); ++k) {
            std::vector<bool> row(span);
            for (std::size_t t = table.t_min; t <= table.t_max; ++t) {
                row[t - table.t_min] = table.at(i, k, t);
            }
            bool flag = has_nonmonotone_pattern(row);
            report.rows.push_back({table.references[i], table.sizes[k], flag});
            if (table.sizes[k] <= boundary) {
                for (std::size_t s = 0; s < span; ++s) {
                    if (!row[s]) failure[s] = true;
                }
            }
        }
    }
    std::size_t last_fail = span;
    for (std::size_t s = 0; s < span; ++s) {
        if (failure[s]) last_fail = s;
    }
    if (last_fail == span) {
        report.general_recovery_time = table.t_min;
    } else if (last_fail + 1 < span) {
        report.general_recovery_time = table.t_min + last_fail + 1;
    }
    return report;
}

}  // namespace floqscram
