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

#include "floqscram/diagnostics.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace floqscram {

SizeSeries opsize_series(const FloquetCircuit& c, const PauliVec& init, std::size_t t_max) {
    SizeSeries out{init, {}};
    out.sizes.reserve(t_max + 1);
    for (const PauliVec& p : c.trajectory(init, t_max)) out.sizes.push_back(p.size());
    return out;
}

std::vector<std::vector<std::size_t>> single_qubit_size_series(const FloquetCircuit& c, std::size_t t_max) {
    std::size_t n = c.num_qubits();
    std::vector<std::vector<std::size_t>> series(2 * n);
    BitMatrix ops = BitMatrix::identity(2 * n);
    for (std::size_t t = 0; t <= t_max; ++t) {
        std::vector<std::size_t> sizes = column_sizes(ops);
        for (std::size_t k = 0; k < 2 * n; ++k) series[k].push_back(sizes[k]);
        if (t < t_max) c.step_in_place(ops);
    }
    return series;
}

std::optional<std::size_t> scrambling_time(std::span<const std::size_t> sizes, std::size_t threshold) {
    if (threshold < 1) {
        throw std::invalid_argument("scrambling threshold must be at least 1");
    }
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        if (sizes[t] >= threshold) return t;
    }
    return std::nullopt;
}

ScramblingStats mean_scrambling_time(const FloquetCircuit& c, std::size_t threshold, std::size_t t_max) {
    if (threshold < 1) {
        throw std::invalid_argument("scrambling threshold must be at least 1");
    }
    std::size_t n = c.num_qubits();
    BitMatrix ops = BitMatrix::identity(2 * n);
    std::vector<std::optional<std::size_t>> hit(2 * n);
    std::size_t remaining = 2 * n;
    for (std::size_t t = 0; t <= t_max && remaining > 0; ++t) {
        std::vector<std::size_t> sizes = column_sizes(ops);
        for (std::size_t k = 0; k < 2 * n; ++k) {
            if (!hit[k] && sizes[k] >= threshold) {
                hit[k] = t;
                --remaining;
            }
        }
        if (remaining > 0 && t < t_max) c.step_in_place(ops);
    }
    ScramblingStats stats;
    stats.total = 2 * n;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const auto& h : hit) {
        if (!h) continue;
        ++stats.reached;
        sum += static_cast<double>(*h);
        sum_sq += static_cast<double>(*h) * static_cast<double>(*h);
    }
    if (stats.reached > 0) {
        double m = static_cast<double>(stats.reached);
        stats.mean = sum / m;
        if (stats.reached > 1) {
            double var = (sum_sq - m * stats.mean * stats.mean) / (m - 1.0);
            stats.stderr_mean = std::sqrt(std::max(var, 0.0) / m);
        }
    }
    return stats;
}

LyapunovFit lyapunov_fit(std::span<const FitPoint> points) {
    std::set<std::size_t> sides;
    for (const auto& p : points) sides.insert(p.side);
    if (sides.size() < 3) {
        throw std::invalid_argument("Lyapunov fit needs at least 3 distinct N values");
    }
    const double m = static_cast<double>(points.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& p : points) {
        double side = static_cast<double>(p.side);
        mean_x += std::log(side * side / 2.0);
        mean_y += p.mean_time;
    }
    mean_x /= m;
    mean_y /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : points) {
        double side = static_cast<double>(p.side);
        double dx = std::log(side * side / 2.0) - mean_x;
        sxx += dx * dx;
        sxy += dx * (p.mean_time - mean_y);
    }
    LyapunovFit fit;
    fit.slope = sxy / sxx;
    if (fit.slope == 0.0) {
        throw std::invalid_argument("Lyapunov fit has zero slope");
    }
    fit.intercept = mean_y - fit.slope * mean_x;
    double ssr = 0.0;
    for (const auto& p : points) {
        double side = static_cast<double>(p.side);
        double r = p.mean_time - (fit.intercept + fit.slope * std::log(side * side / 2.0));
        ssr += r * r;
    }
    fit.slope_stderr = points.size() > 2 ? std::sqrt(ssr / (m - 2.0) / sxx) : 0.0;
    fit.lambda = 1.0 / fit.slope;
    fit.lambda_stderr = fit.slope_stderr / (fit.slope * fit.slope);
    return fit;
}

Window late_time_window(std::size_t total_qubits) {
    double bound = 3.0 * std::log(static_cast<double>(total_qubits)) / std::log(4.0);
    return {static_cast<std::size_t>(std::ceil(bound - 1e-9)) + 5, 50};
}

double late_time_mean_size(const FloquetCircuit& c, Window window, std::span<const std::size_t> qubits) {
    std::size_t n = c.num_qubits();
    std::vector<std::size_t> chosen(qubits.begin(), qubits.end());
    if (chosen.empty()) {
        chosen.resize(n);
        for (std::size_t q = 0; q < n; ++q) chosen[q] = q;
    }
    BitMatrix ops(2 * n, 2 * chosen.size());
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (chosen[k] >= n) throw std::out_of_range("qubit index out of range");
        ops.set(chosen[k], 2 * k);
        ops.set(n + chosen[k], 2 * k + 1);
    }
    ops = c.evolve_matrix(ops, window.start);
    double total = 0.0;
    for (std::size_t s = 0; s < window.length; ++s) {
        for (std::size_t size : column_sizes(ops)) total += static_cast<double>(size);
        c.step_in_place(ops);
    }
    return total / static_cast<double>(window.length * ops.cols());
}

RegionA build_region(const FloquetCircuit& c, std::size_t reference, std::size_t target) {
    std::size_t n = c.num_qubits();
    if (target < 1 || target > n) {
        throw std::invalid_argument("region size must be between 1 and the qubit count");
    }
    if (reference >= n) {
        throw std::out_of_range("reference qubit out of range");
    }
    const Partition& p = c.partition();
    std::vector<std::size_t> owner = subset_lookup(p);
    RegionA region{reference, 0, 0, {}};

    std::vector<bool> infected(n, false);
    std::vector<bool> closure(n, false);
    infected[reference] = true;
    closure[reference] = true;
    std::size_t closure_size = 1;

    auto collect = [&](const std::vector<bool>& mask) {
        std::vector<std::size_t> out;
        for (std::size_t q = 0; q < n; ++q) {
            if (mask[q]) out.push_back(q);
        }
        return out;
    };

    std::size_t limit = 4 * n + 4;
    for (std::size_t t = 1; closure_size < target && t <= limit; ++t) {
        std::vector<bool> next = infection_step(p, owner, c.destinations(), infected);
        std::vector<bool> grown = closure;
        std::size_t grown_size = closure_size;
        for (std::size_t q = 0; q < n; ++q) {
            if (next[q] && !grown[q]) {
                grown[q] = true;
                ++grown_size;
            }
        }
        bool fixpoint = next == infected;
        infected = std::move(next);
        if (grown_size >= target) {
            region.t_f = t;
            if (grown_size == target) {
                region.horizon = t;
                region.qubits = collect(grown);
                return region;
            }
            region.horizon = t - 1;
            std::size_t need = target - closure_size;
            for (std::size_t q = 0; q < n && need > 0; ++q) {
                if (grown[q] && !closure[q]) {
                    closure[q] = true;
                    --need;
                }
            }
            region.qubits = collect(closure);
            return region;
        }
        closure = std::move(grown);
        closure_size = grown_size;
        region.t_f = t;
        region.horizon = t;
        if (fixpoint) break;
    }
    // Either the target was met at t = 0 or the closure saturated below it.
    std::size_t need = target - std::min(target, closure_size);
    for (std::size_t q = 0; q < n && need > 0; ++q) {
        if (!closure[q]) {
            closure[q] = true;
            --need;
        }
    }
    region.qubits = collect(closure);
    return region;
}

BitMatrix z_stabilizers(std::size_t n) {
    BitMatrix s(2 * n, n);
    for (std::size_t q = 0; q < n; ++q) s.set(n + q, q);
    return s;
}

std::size_t region_entropy(const BitMatrix& stabilizers, std::span<const std::size_t> region) {
    std::size_t n = stabilizers.rows() / 2;
    std::vector<std::size_t> rows;
    rows.reserve(2 * region.size());
    for (std::size_t q : region) {
        if (q >= n) throw std::out_of_range("region qubit out of range");
        rows.push_back(q);
        rows.push_back(n + q);
    }
    std::size_t r = rank(stabilizers.select_rows(rows));
    if (r < region.size()) {
        throw std::logic_error("stabilizer rank below region size; columns are not a full stabilizer group");
    }
    return r - region.size();
}

std::size_t entropy(const FloquetCircuit& c, std::span<const std::size_t> region, std::size_t t) {
    return region_entropy(c.evolve_matrix(z_stabilizers(c.num_qubits()), t), region);
}

std::vector<std::size_t> entropy_series(const FloquetCircuit& c, std::span<const std::size_t> region,
                                        std::size_t t_max) {
    BitMatrix s = z_stabilizers(c.num_qubits());
    std::vector<std::size_t> out;
    out.reserve(t_max + 1);
    for (std::size_t t = 0; t <= t_max; ++t) {
        out.push_back(region_entropy(s, region));
        if (t < t_max) c.step_in_place(s);
    }
    return out;
}

std::optional<std::size_t> saturation_time(std::span<const std::size_t> series, std::size_t min_run) {
    if (series.empty() || series.size() < min_run) return std::nullopt;
    for (std::size_t t = series.size() - min_run; t < series.size(); ++t) {
        if (series[t] != series.back()) return std::nullopt;
    }
    return static_cast<std::size_t>(std::find(series.begin(), series.end(), series.back()) - series.begin());
}

}  // namespace floqscram
