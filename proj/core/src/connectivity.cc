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

#include "floqscram/connectivity.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floqscram {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::size_t partner_index(std::size_t i) { return i % 2 == 1 ? i + 1 : i - 1; }

/// The off-diagonal cycle starting at (i, j).
std::array<std::pair<std::size_t, std::size_t>, 4> off_diagonal_cycle(std::size_t i, std::size_t j) {
    std::size_t fi = partner_index(i);
    std::size_t fj = partner_index(j);
    return {{{i, j}, {j, fi}, {fi, fj}, {fj, i}}};
}

void sort_by_leader(std::vector<Subset>& subsets) {
    std::sort(subsets.begin(), subsets.end(), [](const Subset& a, const Subset& b) { return a[0] < b[0]; });
}

/// Adds off-diagonal cycles for every unvisited (i, j) accepted by `in_scope`,
/// scanning row-major so each cycle starts at its lexicographically smallest label.
template <typename Pred>
void add_off_diagonal(const LayerLayout& layout, std::vector<bool>& visited, std::vector<Subset>& out,
                      Pred in_scope) {
    std::size_t side = layout.side();
    for (std::size_t i = 1; i <= side; ++i) {
        for (std::size_t j = 1; j <= side; ++j) {
            if (!in_scope(i, j) || visited[layout.index(Layer::Q, i, j)]) continue;
            Subset s{};
            auto cycle = off_diagonal_cycle(i, j);
            for (std::size_t k = 0; k < 4; ++k) {
                std::size_t q = layout.index(Layer::Q, cycle[k].first, cycle[k].second);
                if (visited[q]) {
                    throw std::logic_error("off-diagonal cycles overlap");
                }
                visited[q] = true;
                s[k] = q;
            }
            out.push_back(s);
        }
    }
}

}  // namespace

Rule parse_rule(std::string_view text) {
    if (text == "1") return Rule::One;
    if (text == "2") return Rule::Two;
    throw std::invalid_argument("rule must be 1 or 2");
}

void check_side(Rule rule, std::size_t side) {
    if (rule == Rule::One && (side == 0 || side % 4 != 0)) {
        throw std::invalid_argument("rule 1 needs N divisible by 4, got N=" + std::to_string(side));
    }
    if (rule == Rule::Two && (side == 0 || side % 2 != 0)) {
        throw std::invalid_argument("rule 2 needs even N, got N=" + std::to_string(side));
    }
}

Partition rule1(std::size_t side) {
    check_side(Rule::One, side);
    LayerLayout layout = LayerLayout::single(side);
    std::vector<bool> visited(layout.num_qubits(), false);
    std::vector<Subset> subsets;
    for (std::size_t b = 1; b <= side / 4; ++b) {
        std::size_t p1 = 4 * b - 3, p2 = 4 * b - 2, p3 = 4 * b - 1, p4 = 4 * b;
        const std::array<std::array<std::pair<std::size_t, std::size_t>, 4>, 4> block{{
            {{{p1, p1}, {p1, p4}, {p4, p4}, {p4, p1}}},
            {{{p2, p2}, {p2, p3}, {p3, p3}, {p3, p2}}},
            {{{p1, p3}, {p3, p4}, {p4, p2}, {p2, p1}}},
            {{{p1, p2}, {p2, p4}, {p4, p3}, {p3, p1}}},
        }};
        for (const auto& cycle : block) {
            Subset s{};
            for (std::size_t k = 0; k < 4; ++k) {
                s[k] = layout.index(Layer::Q, cycle[k].first, cycle[k].second);
                visited[s[k]] = true;
            }
            subsets.push_back(s);
        }
    }
    add_off_diagonal(layout, visited, subsets,
                     [](std::size_t i, std::size_t j) { return (i - 1) / 4 != (j - 1) / 4; });
    sort_by_leader(subsets);
    return {layout, std::move(subsets)};
}

Partition rule2(std::size_t side) {
    check_side(Rule::Two, side);
    LayerLayout layout = LayerLayout::single(side);
    std::vector<bool> visited(layout.num_qubits(), false);
    std::vector<Subset> subsets;
    add_off_diagonal(layout, visited, subsets, [](std::size_t, std::size_t) { return true; });
    sort_by_leader(subsets);
    return {layout, std::move(subsets)};
}

Partition single_layer(Rule rule, std::size_t side) { return rule == Rule::One ? rule1(side) : rule2(side); }

Partition double_layer(Rule rule, std::size_t side) {
    Partition base = single_layer(rule, side);
    LayerLayout layout = LayerLayout::twin(side);
    auto lift = [&](std::size_t q, Layer layer) {
        QubitLabel l = base.layout.label(q);
        return layout.index(layer, l.i, l.j);
    };
    std::vector<Subset> subsets;
    subsets.reserve(2 * base.subsets.size());
    for (const Subset& s : base.subsets) {
        subsets.push_back({lift(s[0], Layer::B), lift(s[1], Layer::T), lift(s[2], Layer::B), lift(s[3], Layer::T)});
        subsets.push_back({lift(s[0], Layer::T), lift(s[1], Layer::B), lift(s[2], Layer::T), lift(s[3], Layer::B)});
    }
    sort_by_leader(subsets);
    return {layout, std::move(subsets)};
}

Partition make_partition(LayoutKind kind, Rule rule, std::size_t side) {
    return kind == LayoutKind::Single ? single_layer(rule, side) : double_layer(rule, side);
}

bool validate(const Partition& p) {
    std::vector<bool> seen(p.layout.num_qubits(), false);
    std::size_t covered = 0;
    for (const Subset& s : p.subsets) {
        for (std::size_t q : s) {
            if (q >= seen.size() || seen[q]) return false;
            seen[q] = true;
            ++covered;
        }
    }
    return covered == seen.size();
}

std::vector<std::size_t> subset_lookup(const Partition& p) {
    std::vector<std::size_t> owner(p.layout.num_qubits(), kNone);
    for (std::size_t a = 0; a < p.subsets.size(); ++a) {
        for (std::size_t q : p.subsets[a]) owner[q] = a;
    }
    return owner;
}

std::vector<bool> infection_step(const Partition& p, const std::vector<std::size_t>& owner,
                                 const std::vector<std::size_t>& dest, const std::vector<bool>& current) {
    std::vector<bool> next(current.size(), false);
    for (std::size_t q = 0; q < current.size(); ++q) {
        if (!current[q]) continue;
        std::size_t moved = dest[q];
        std::size_t a = owner[moved];
        if (a == kNone) {
            next[moved] = true;
            continue;
        }
        for (std::size_t member : p.subsets[a]) next[member] = true;
    }
    return next;
}

InfectionTrace infection_closure(const Partition& p, const std::vector<std::size_t>& dest,
                                 const std::vector<std::size_t>& seeds, std::size_t t_max) {
    std::size_t n = p.layout.num_qubits();
    if (dest.size() != n) {
        throw std::invalid_argument("relabeling size does not match partition");
    }
    if (seeds.empty()) {
        throw std::invalid_argument("infection needs at least one seed");
    }
    std::vector<std::size_t> owner = subset_lookup(p);
    InfectionTrace trace;
    std::vector<bool> current(n, false);
    for (std::size_t s : seeds) {
        if (s >= n) throw std::out_of_range("seed out of range");
        current[s] = true;
    }
    auto count = [](const std::vector<bool>& v) {
        return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
    };
    trace.sizes.push_back(count(current));
    trace.infected.push_back(current);
    for (std::size_t t = 1; t <= t_max; ++t) {
        std::vector<bool> next = infection_step(p, owner, dest, current);
        bool unchanged = next == current;
        current = std::move(next);
        trace.sizes.push_back(count(current));
        trace.infected.push_back(current);
        if (unchanged) {
            trace.reached_fixpoint = true;
            break;
        }
    }
    return trace;
}

std::vector<std::vector<std::size_t>> components(const Partition& p, const std::vector<std::size_t>& dest) {
    std::size_t n = p.layout.num_qubits();
    if (dest.size() != n) {
        throw std::invalid_argument("relabeling size does not match partition");
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (std::size_t q = 0; q < n; ++q) unite(q, dest[q]);
    for (const Subset& s : p.subsets) {
        for (std::size_t k = 1; k < 4; ++k) unite(s[0], s[k]);
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(n, kNone);
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t root = find(q);
        if (slot[root] == kNone) {
            slot[root] = out.size();
            out.emplace_back();
        }
        out[slot[root]].push_back(q);
    }
    return out;
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (const Subset& s : p.subsets) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (k > 0) out += ", ";
            out += format_label(p.layout.label(s[k]));
        }
        out += '\n';
    }
    return out;
}

Partition parse_partition(std::string_view text, const LayerLayout& layout) {
    Partition p{layout, {}};
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        Subset s{};
        std::size_t k = 0;
        std::size_t start = 0;
        while (start < line.size()) {
            std::size_t end = line.find(", ", start);
            if (end == std::string::npos) end = line.size();
            if (k == 4) throw std::invalid_argument("subset line has more than 4 labels");
            s[k++] = layout.index(parse_label(line.substr(start, end - start)));
            start = end + 2;
        }
        if (k != 4) throw std::invalid_argument("subset line needs exactly 4 labels");
        p.subsets.push_back(s);
    }
    return p;
}

}  // namespace floqscram
