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
#include <optional>
#include <span>
#include <vector>

#include "floqscram/floquet.h"
#include "floqscram/gf2.h"

namespace floqscram {

/// Stabilizers Z_k for k outside the encoded region, and logicals X_k, Z_k for
/// k inside it, as columns of 2n-row matrices.
struct CodeMatrices {
    std::vector<std::size_t> region;  // sorted
    BitMatrix stabilizers;            // 2n x (n - q)
    BitMatrix logicals;               // 2n x 2q, columns X_k then Z_k per region qubit

    std::size_t num_qubits() const { return stabilizers.rows() / 2; }
};

struct ErasurePattern {
    std::vector<std::size_t> erased;
};

CodeMatrices build_code(std::size_t n, std::span<const std::size_t> region);

/// Both matrices evolved by t steps.
CodeMatrices evolve_code(const FloquetCircuit& c, const CodeMatrices& code, std::size_t t);

/// Rank condition on already-evolved matrices: the erased rows of the
/// logicals lie in the column span of the erased rows of the stabilizers.
bool recoverable(const CodeMatrices& evolved, const ErasurePattern& erased);
bool recovery_check(const FloquetCircuit& c, const CodeMatrices& code, const ErasurePattern& erased, std::size_t t);

struct DressedLogicals {
    /// Per logical column: the stabilizer-column combination, when one exists.
    std::vector<std::optional<BitVec>> combinations;
    /// Per logical column: the evolved logical times the chosen stabilizers.
    std::vector<std::optional<BitVec>> dressed;
    std::vector<std::size_t> unrecoverable;

    bool complete() const { return unrecoverable.empty(); }
};

DressedLogicals recover_logicals(const CodeMatrices& evolved, const ErasurePattern& erased);
DressedLogicals recovery_logical(const FloquetCircuit& c, const CodeMatrices& code, const ErasurePattern& erased,
                                 std::size_t t);

struct RecoveryEntry {
    std::size_t reference;
    std::size_t r;
    std::size_t t;
    bool recovered;

    bool operator==(const RecoveryEntry&) const = default;
};

/// Entries ordered by (reference position in the input, r position, t).
struct RecoveryTable {
    std::vector<std::size_t> references;
    std::vector<std::size_t> sizes;
    std::size_t t_min = 0;
    std::size_t t_max = 0;
    std::vector<RecoveryEntry> entries;

    bool at(std::size_t ref_index, std::size_t r_index, std::size_t t) const;
};

/// For each (reference, r, t): A = build_region(reference, r), B = A, and the
/// rank condition at time t. Cells run in parallel; the table is ordered.
RecoveryTable recovery_scan(const FloquetCircuit& c, std::span<const std::size_t> references,
                            std::span<const std::size_t> sizes, std::size_t t_min, std::size_t t_max);

/// floor(n / 3): the largest q = r with 2r <= n - q.
std::size_t recovery_boundary(std::size_t total_qubits);

struct MonotonicityRow {
    std::size_t reference;
    std::size_t r;
    bool nonmonotone;
};

struct MonotonicityReport {
    std::vector<MonotonicityRow> rows;
    /// Earliest scanned t after which every entry with r <= boundary stays true.
    std::optional<std::size_t> general_recovery_time;
};

/// Flags true -> false -> true patterns along t in a single row.
bool has_nonmonotone_pattern(const std::vector<bool>& row);
MonotonicityReport nonmonotonicity_scan(const RecoveryTable& table, std::size_t boundary);

}  // namespace floqscram
