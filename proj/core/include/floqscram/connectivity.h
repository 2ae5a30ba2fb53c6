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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "floqscram/lattice.h"

namespace floqscram {

enum class Rule { One = 1, Two = 2 };

Rule parse_rule(std::string_view text);

/// Ordered 4-qubit interaction set. The order binds gate slots q1..q4.
using Subset = std::array<std::size_t, 4>;

struct Partition {
    LayerLayout layout;
    std::vector<Subset> subsets;
};

/// Rule 1: the four cyclic sets inside each 4x4 diagonal block, plus the
/// off-diagonal cycles for every 2x2 block outside those blocks. Needs 4 | N.
Partition rule1(std::size_t side);
/// Rule 2: the off-diagonal cycle rule on every 2x2 block. Needs 2 | N.
Partition rule2(std::size_t side);
Partition single_layer(Rule rule, std::size_t side);
/// Each single-layer cycle (p1,p2,p3,p4) becomes (B p1, T p2, B p3, T p4) and
/// (T p1, B p2, T p3, B p4).
Partition double_layer(Rule rule, std::size_t side);
Partition make_partition(LayoutKind kind, Rule rule, std::size_t side);

/// Throws std::invalid_argument when `side` is not allowed for `rule`.
void check_side(Rule rule, std::size_t side);

/// True iff the subsets are pairwise disjoint 4-sets covering every qubit.
bool validate(const Partition& p);

/// For each qubit, the position of its subset in `p.subsets` (SIZE_MAX when uncovered).
std::vector<std::size_t> subset_lookup(const Partition& p);

/// One infection step: relabel `current` by `dest`, then fill every subset
/// that holds an infected qubit. `owner` comes from subset_lookup.
std::vector<bool> infection_step(const Partition& p, const std::vector<std::size_t>& owner,
                                 const std::vector<std::size_t>& dest, const std::vector<bool>& current);

struct InfectionTrace {
    std::vector<std::size_t> sizes;           // sizes[t] = |I(t)|
    std::vector<std::vector<bool>> infected;  // infected[t][q]
    bool reached_fixpoint = false;

    const std::vector<bool>& final_set() const { return infected.back(); }
};

/// Large-q infection process. Each step first relabels the infected set by
/// `dest`, then infects every qubit sharing a subset with an infected qubit.
/// Stops after `t_max` steps or when the set stops changing.
InfectionTrace infection_closure(const Partition& p, const std::vector<std::size_t>& dest,
                                 const std::vector<std::size_t>& seeds, std::size_t t_max);

/// Minimal qubit classes closed under relabeling and subset co-membership,
/// each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const Partition& p, const std::vector<std::size_t>& dest);

/// One line per subset: four `layer:i,j` labels separated by ", ".
std::string format_partition(const Partition& p);
Partition parse_partition(std::string_view text, const LayerLayout& layout);

}  // namespace floqscram
