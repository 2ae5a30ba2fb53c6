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
#include "floqscram/pauli.h"

namespace floqscram {

// ---- operator size -------------------------------------------------------

struct SizeSeries {
    PauliVec initial;
    std::vector<std::size_t> sizes;  // sizes[t] for t = 0..t_max
};

SizeSeries opsize_series(const FloquetCircuit& c, const PauliVec& init, std::size_t t_max);

/// Size series of every single-qubit X and Z operator, evolved together.
/// Row k holds X on qubit k for k < n and Z on qubit k-n otherwise.
std::vector<std::vector<std::size_t>> single_qubit_size_series(const FloquetCircuit& c, std::size_t t_max);

/// Smallest t with sizes[t] >= threshold.
std::optional<std::size_t> scrambling_time(std::span<const std::size_t> sizes, std::size_t threshold);

struct ScramblingStats {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::size_t reached = 0;  // operators that crossed the threshold within t_max
    std::size_t total = 0;
};

/// Average scrambling time over all single-qubit X and Z initial operators.
/// Operators that never reach the threshold are left out of the mean.
ScramblingStats mean_scrambling_time(const FloquetCircuit& c, std::size_t threshold, std::size_t t_max);

struct FitPoint {
    std::size_t side;
    double mean_time;
};

struct LyapunovFit {
    double lambda = 0.0;
    double lambda_stderr = 0.0;
    double slope = 0.0;
    double slope_stderr = 0.0;
    double intercept = 0.0;
};

/// Least-squares line of mean scrambling time against ln(N^2 / 2); lambda is
/// the inverse slope. Needs at least 3 distinct N and a nonzero slope.
LyapunovFit lyapunov_fit(std::span<const FitPoint> points);

struct Window {
    std::size_t start;
    std::size_t length;
};

/// Steps [ceil(3 log4(total)) + 5, +50) used for late-time averages.
Window late_time_window(std::size_t total_qubits);

/// Mean operator size over `window`, averaged over the single-qubit X and Z
/// initial operators on `qubits` (all qubits when empty).
double late_time_mean_size(const FloquetCircuit& c, Window window, std::span<const std::size_t> qubits = {});

// ---- entanglement --------------------------------------------------------

struct RegionA {
    std::size_t reference = 0;
    std::size_t t_f = 0;      // closure step at which the target size was reached
    std::size_t horizon = 0;  // largest t with the full closure A(t) inside the region
    std::vector<std::size_t> qubits;  // sorted
};

/// Grows the cumulative infection closure of `reference` until it holds at
/// least `target` qubits. If the last step overshoots, the newly added qubits
/// are taken in ascending index order. If the closure saturates below the
/// target, the remaining qubits are appended in ascending index order.
RegionA build_region(const FloquetCircuit& c, std::size_t reference, std::size_t target);

/// 2n x n matrix whose columns are Z on each qubit.
BitMatrix z_stabilizers(std::size_t n);

/// rank of the A-rows of a 2n x m stabilizer matrix minus |A|.
std::size_t region_entropy(const BitMatrix& stabilizers, std::span<const std::size_t> region);

/// Entanglement entropy (bits) of `region` after t steps from |0...0>.
std::size_t entropy(const FloquetCircuit& c, std::span<const std::size_t> region, std::size_t t);
std::vector<std::size_t> entropy_series(const FloquetCircuit& c, std::span<const std::size_t> region,
                                        std::size_t t_max);

/// First time the series equals its final value, provided the last `min_run`
/// samples are constant.
std::optional<std::size_t> saturation_time(std::span<const std::size_t> series, std::size_t min_run = 5);

}  // namespace floqscram
