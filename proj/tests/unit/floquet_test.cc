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

#include "floqscram/floquet.h"

#include "floqscram/connectivity.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace floqscram {
namespace {

struct Config {
    LayoutKind kind;
    Rule rule;
    std::size_t side;
};

std::vector<Config> small_configs() {
    std::vector<Config> out;
    for (LayoutKind kind : {LayoutKind::Single, LayoutKind::Double}) {
        for (Rule rule : {Rule::One, Rule::Two}) {
            for (std::size_t side : {4, 8}) out.push_back({kind, rule, side});
        }
    }
    out.push_back({LayoutKind::Single, Rule::Two, 6});
    out.push_back({LayoutKind::Double, Rule::Two, 6});
    return out;
}

TEST(FloquetCircuit, TrivialShuffleAtSideTwo) {
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::Two, 2, resolve_gate("W"));
    const Subset& s = c.partition().subsets.at(0);
    std::vector<std::size_t> pos(s.begin(), s.end());
    EXPECT_EQ(c.step_map(), embed(compile(resolve_gate("W"), 4), pos, 4));
}

TEST(FloquetCircuit, EmptyGateLeavesPermutation) {
    LayerLayout layout = LayerLayout::single(8);
    FloquetCircuit c(layout, rule1(8), GateSpec{});
    EXPECT_EQ(c.step_map(), build_perm_map(layout));
}

TEST(FloquetCircuit, StepIsSymplectic) {
    for (const Config& cfg : small_configs()) {
        for (const char* g : {"W", "W_new"}) {
            FloquetCircuit c = make_circuit(cfg.kind, cfg.rule, cfg.side, resolve_gate(g));
            EXPECT_TRUE(is_symplectic(c.step_map())) << cfg.side;
        }
    }
}

TEST(FloquetCircuit, StepOrderPermutationFirst) {
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::One, 8, resolve_gate("W"));
    std::vector<std::vector<std::size_t>> groups;
    for (const Subset& s : c.partition().subsets) groups.emplace_back(s.begin(), s.end());
    CliffordMap gates = embed_disjoint(c.gate(), groups, c.num_qubits());
    EXPECT_EQ(c.step_map(), compose(gates, build_perm_map(c.layout())));
}

TEST(FloquetCircuit, StructuredMatchesDense) {
    std::mt19937_64 rng(41);
    for (const Config& cfg : small_configs()) {
        FloquetCircuit c = make_circuit(cfg.kind, cfg.rule, cfg.side, resolve_gate("W_new"));
        std::size_t n = c.num_qubits();
        for (int trial = 0; trial < 5; ++trial) {
            PauliVec p = testing::random_pauli(rng, n);
            EXPECT_EQ(c.evolve_pauli(p, 7, EvolutionPath::Structured), c.evolve_pauli(p, 7, EvolutionPath::Dense));
        }
        BitMatrix cols = testing::random_matrix(rng, 2 * n, 9);
        EXPECT_EQ(c.evolve_matrix(cols, 5, EvolutionPath::Structured), c.evolve_matrix(cols, 5, EvolutionPath::Dense));
    }
}

TEST(FloquetCircuit, TrivialEvolutions) {
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::Two, 8, resolve_gate("W"));
    PauliVec id(64);
    EXPECT_EQ(c.evolve_pauli(id, 13), id);
    PauliVec p = PauliVec::single(64, 9, PauliKind::Y);
    EXPECT_EQ(c.evolve_pauli(p, 0), p);
    std::vector<PauliVec> traj = c.trajectory(p, 6);
    ASSERT_EQ(traj.size(), 7U);
    for (std::size_t t = 0; t <= 6; ++t) EXPECT_EQ(traj[t], c.evolve_pauli(p, t));
}

TEST(FloquetCircuit, FirstStepStaysInsideClosure) {
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::One, 4, resolve_gate("W"));
    std::size_t q11 = c.layout().index(Layer::Q, 1, 1);
    PauliVec p = c.evolve_pauli(PauliVec::single(16, q11, PauliKind::X), 1);
    EXPECT_GE(p.size(), 2U);
    InfectionTrace tr = infection_closure(c.partition(), c.destinations(), {q11}, 1);
    for (std::size_t q : p.support()) EXPECT_TRUE(tr.infected[1][q]);
}

TEST(FloquetCircuit, MatrixColumnsMatchPauliEvolution) {
    std::mt19937_64 rng(42);
    FloquetCircuit c = make_circuit(LayoutKind::Double, Rule::One, 4, resolve_gate("W"));
    std::size_t n = c.num_qubits();
    BitMatrix cols = testing::random_matrix(rng, 2 * n, 6);
    BitMatrix out = c.evolve_matrix(cols, 4);
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(out.col_vec(k), c.evolve_pauli(PauliVec(cols.col_vec(k)), 4).bits());
    }
}

TEST(FloquetCircuit, PreservesRankAndCommutation) {
    std::mt19937_64 rng(43);
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::One, 8, resolve_gate("W"));
    std::size_t n = c.num_qubits();
    BitMatrix z(2 * n, n);
    for (std::size_t q = 0; q < n; ++q) z.set(n + q, q);
    for (std::size_t t : {1, 5, 20}) EXPECT_EQ(rank(c.evolve_matrix(z, t)), n);

    for (int trial = 0; trial < 20; ++trial) {
        PauliVec a = testing::random_pauli(rng, n);
        PauliVec b = testing::random_pauli(rng, n);
        EXPECT_EQ(anticommutes(a, b), anticommutes(c.evolve_pauli(a, 9), c.evolve_pauli(b, 9)));
    }
}

TEST(FloquetCircuit, StepHasFiniteOrder) {
    std::mt19937_64 rng(44);
    for (std::size_t side : {2, 4}) {
        FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::Two, side, resolve_gate("W"));
        std::size_t n = c.num_qubits();
        CliffordMap power = c.step_map();
        std::size_t order = 1;
        while (!(power == CliffordMap::identity(n)) && order < 200000) {
            power = compose(c.step_map(), power);
            ++order;
        }
        ASSERT_LT(order, 200000U) << side;
        PauliVec p = testing::random_pauli(rng, n);
        EXPECT_EQ(c.evolve_pauli(p, order), p);
        EXPECT_EQ(compose(c.step_map().inverse(), c.step_map()), CliffordMap::identity(n));
    }
}

TEST(FloquetCircuit, Errors) {
    EXPECT_THROW(FloquetCircuit(LayerLayout::single(4), rule2(8), resolve_gate("W")), std::invalid_argument);
    EXPECT_THROW(FloquetCircuit(LayerLayout::single(4), rule2(4), GateSpec::parse("H q5")), std::invalid_argument);
    Partition broken = rule2(4);
    broken.subsets[0][0] = broken.subsets[1][0];
    EXPECT_THROW(FloquetCircuit(LayerLayout::single(4), broken, resolve_gate("W")), std::invalid_argument);
    FloquetCircuit c = make_circuit(LayoutKind::Single, Rule::Two, 4, resolve_gate("W"));
    EXPECT_THROW(c.evolve_pauli(PauliVec(3), 1), std::invalid_argument);
    EXPECT_THROW(c.evolve_matrix(BitMatrix(5, 2), 1), std::invalid_argument);
}

TEST(ColumnSizes, CountsQubitSupport) {
    BitMatrix cols(6, 2);
    cols.set(0, 0);
    cols.set(3, 0);
    cols.set(4, 1);
    cols.set(1, 1);
    EXPECT_EQ(column_sizes(cols), (std::vector<std::size_t>{1, 1}));
    cols.set(5, 0);
    EXPECT_EQ(column_sizes(cols), (std::vector<std::size_t>{2, 1}));
}

}  // namespace
}  // namespace floqscram
