#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "weightspace/certificates.hpp"
#include "weightspace/evs.hpp"
#include "weightspace/oracle.hpp"

using namespace wspace;
using namespace wspace::testing;

namespace {

// Edge sets arising as symmetric differences of two maximal matchings.
std::set<Matching> brute_force_sym_diffs(const Graph& g) {
    const auto all = maximal_matchings(g);
    std::set<Matching> out;
    for (const auto& a : all) {
        for (const auto& b : all) out.insert(symmetric_difference(a, b));
    }
    return out;
}

// Simple paths with k vertices, each listed once (first vertex below last).
std::vector<std::vector<Vertex>> simple_paths(const Graph& g, std::size_t k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> walk;
    std::vector<char> used(g.order(), 0);
    auto grow = [&](auto&& self) -> void {
        if (walk.size() == k) {
            if (walk.front() < walk.back()) out.push_back(walk);
            return;
        }
        for (Vertex u : g.neighbors(walk.back())) {
            if (used[u]) continue;
            used[u] = 1;
            walk.push_back(u);
            self(self);
            walk.pop_back();
            used[u] = 0;
        }
    };
    for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
        used[s] = 1;
        walk = {s};
        grow(grow);
        used[s] = 0;
    }
    return out;
}

}  // namespace

TEST(PathSymDiff, Examples) {
    const auto k3 = complete_graph(3);
    EXPECT_TRUE(path_sym_diff_check(k3, PathSpec(k3, {0, 1, 2})).has_value());

    const auto p4 = path_graph(4);
    const auto w = path_sym_diff_check(p4, PathSpec(p4, {0, 1, 2, 3}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->first, (Matching{0, 2}));
    EXPECT_EQ(w->second, (Matching{1}));

    const auto c4 = cycle_graph(4);
    EXPECT_FALSE(path_sym_diff_check(c4, PathSpec(c4, {0, 1, 2, 3})).has_value());
    // P3 0-1-2 in P5: vertex 3 is dominated only by the edge (3,4).
    const auto p5 = path_graph(5);
    EXPECT_TRUE(path_sym_diff_check(p5, PathSpec(p5, {0, 1, 2})).has_value());
    EXPECT_FALSE(path_sym_diff_check(p5, PathSpec(p5, {1, 2, 3})).has_value());
}

TEST(PathSymDiff, AgreesWithBruteForceForAllLengths) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = random_graph(3 + trial % 5, 0.5, rng);
        const auto diffs = brute_force_sym_diffs(g);
        for (std::size_t k = 3; k <= g.order(); ++k) {
            for (const auto& vs : simple_paths(g, k)) {
                const PathSpec path(g, vs);
                const auto witness = path_sym_diff_check(g, path);
                const auto edges = make_matching(path.edge_indices(g));
                EXPECT_EQ(witness.has_value(), diffs.count(edges) == 1) << to_text(g);
                if (witness) {
                    EXPECT_TRUE(witness_realises(g, *witness, edges));
                }
            }
        }
    }
}

TEST(CycleSymDiff, Examples) {
    for (const auto& g : {cycle_graph(4), complete_graph(4), cycle_graph(6)}) {
        std::vector<Vertex> vs(g.order() == 6 ? 6 : 4);
        std::iota(vs.begin(), vs.end(), 0);
        const CycleSpec cycle(g, vs);
        const auto w = cycle_sym_diff_witness(g, cycle);
        EXPECT_TRUE(witness_realises(g, w, cycle.edge_indices(g)));
    }
    const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}});
    EXPECT_TRUE(witness_realises(g, cycle_sym_diff_witness(g, CycleSpec(g, {0, 1, 2, 3})),
                                 CycleSpec(g, {0, 1, 2, 3}).edge_indices(g)));
}

TEST(P4Paths, Examples) {
    const auto p4 = p4_paths_between(path_graph(4), 0, 3);
    ASSERT_EQ(p4.size(), 1u);
    EXPECT_EQ(p4[0].path.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));

    // Every length-3 path between opposite C6 vertices qualifies.
    const auto c6 = p4_paths_between(cycle_graph(6), 0, 3);
    ASSERT_EQ(c6.size(), 2u);
    EXPECT_EQ(c6[0].path.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(c6[1].path.vertices(), (std::vector<Vertex>{0, 5, 4, 3}));

    EXPECT_TRUE(p4_paths_between(star_graph(3), 1, 2).empty());
    EXPECT_THROW(p4_paths_between(cycle_graph(4), 0, 1), InputError);
    EXPECT_THROW(p4_paths_between(cycle_graph(4), 0, 0), InputError);
    EXPECT_THROW(p4_paths_between(cycle_graph(4), 0, 9), InputError);
}

TEST(P4Paths, AgreeWithBruteForce) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(4 + trial % 5, 0.45, rng);
        const auto diffs = brute_force_sym_diffs(g);
        for (const auto& [u, v] : nonadjacent_pairs(g)) {
            std::vector<std::vector<Vertex>> expected;
            for (Vertex a : g.neighbors(u)) {
                for (Vertex b : g.neighbors(v)) {
                    if (a == b || a == v || b == u || !g.adjacent(a, b)) continue;
                    const PathSpec p(g, {u, a, b, v});
                    if (diffs.count(make_matching(p.edge_indices(g)))) expected.push_back(p.vertices());
                }
            }
            std::sort(expected.begin(), expected.end());
            std::vector<std::vector<Vertex>> got;
            for (const auto& cert : p4_paths_between(g, u, v)) {
                got.push_back(cert.path.vertices());
                EXPECT_TRUE(witness_realises(g, cert.witness, cert.path.edge_indices(g)));
            }
            EXPECT_EQ(got, expected) << to_text(g) << u << " " << v;
        }
    }
}

TEST(EvsSpace, Examples) {
    const auto p4 = evs_space(path_graph(4));
    EXPECT_EQ(p4.space.dimension(), 2u);
    EXPECT_TRUE(p4.space.contains(ints({1, 2, 1})));
    EXPECT_EQ(evs_space(complete_graph(3)).space, WeightSpace(3, {ints({1, 1, 1})}));
    EXPECT_EQ(evs_space(complete_graph(2)).space, WeightSpace::full(1));
    EXPECT_EQ(evs_space(complete_graph(4)).space.dimension(), 4u);
    EXPECT_EQ(evs_space(Graph(3, {})).space.dimension(), 0u);
}

TEST(EvsSpace, MatchesOracleAndCertificatesHold) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(2 + trial % 7, 0.5, rng);
        const auto result = evs_space(g);
        EXPECT_EQ(result.space, oracle_evs(g)) << to_text(g);
        for (const auto& r : result.restrictions) EXPECT_TRUE(certificate_holds(g, r)) << to_text(g);
    }
}

TEST(Equimatchable, Recognition) {
    EXPECT_TRUE(is_equimatchable(cycle_graph(4)));
    EXPECT_TRUE(is_equimatchable(cycle_graph(5)));
    EXPECT_TRUE(is_equimatchable(cycle_graph(7)));
    EXPECT_TRUE(is_equimatchable(complete_graph(5)));
    EXPECT_FALSE(is_equimatchable(cycle_graph(6)));
    EXPECT_FALSE(is_equimatchable(path_graph(4)));
    const auto witness = find_unequal_maximal_matchings(path_graph(4));
    ASSERT_TRUE(witness.has_value());
    EXPECT_NE(witness->witness.first.size(), witness->witness.second.size());

    EXPECT_TRUE(is_w_equimatchable(path_graph(4), ints({1, 2, 1})));
    EXPECT_FALSE(is_w_equimatchable(path_graph(4), ints({1, 1, 1})));
    EXPECT_THROW(is_w_equimatchable(path_graph(4), ints({1})), InputError);
}
