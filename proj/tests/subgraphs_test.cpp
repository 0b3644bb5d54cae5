#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "weightspace/subgraphs.hpp"
#include "weightspace/verify.hpp"

using namespace wspace;
using namespace wspace::testing;

namespace {

bool brute_force_has_claw(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex c = 0; c < n; ++c) {
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = a + 1; b < n; ++b) {
                for (Vertex d = b + 1; d < n; ++d) {
                    if (c == a || c == b || c == d) continue;
                    if (g.adjacent(c, a) && g.adjacent(c, b) && g.adjacent(c, d) && !g.adjacent(a, b) &&
                        !g.adjacent(a, d) && !g.adjacent(b, d)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

using CoreKey = std::pair<VertexSet, VertexSet>;

// Every induced complete bipartite subgraph on `size` vertices, oriented like
// enumerate_bipartite_cores (smaller side first, ties: side with the minimum).
std::set<CoreKey> brute_force_cores(const Graph& g, std::size_t size) {
    std::set<CoreKey> out;
    const auto n = g.order();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
        VertexSet vs;
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            if (mask >> v & 1u) vs.push_back(v);
        }
        // 2-colour assignments with the first vertex fixed to side X.
        for (std::uint32_t colour = 0; colour < (1u << (size - 1)); ++colour) {
            VertexSet x{vs[0]};
            VertexSet y;
            for (std::size_t i = 1; i < size; ++i) (colour >> (i - 1) & 1u ? y : x).push_back(vs[i]);
            if (y.empty()) continue;
            bool ok = is_independent(g, x) && is_independent(g, y);
            for (Vertex a : x) {
                for (Vertex b : y) ok = ok && g.adjacent(a, b);
            }
            if (!ok) continue;
            if (x.size() > y.size()) std::swap(x, y);
            out.insert({x, y});
        }
    }
    return out;
}

}  // namespace

TEST(FindClaw, Examples) {
    const auto claw = find_claw(star_graph(3));
    ASSERT_TRUE(claw.has_value());
    EXPECT_EQ(claw->center, 0);
    EXPECT_EQ(claw->leaves, (std::array<Vertex, 3>{1, 2, 3}));
    EXPECT_FALSE(find_claw(cycle_graph(5)).has_value());
    EXPECT_FALSE(find_claw(line_graph(star_graph(5)).graph).has_value());
}

TEST(FindClaw, LexicographicallyFirst) {
    // Two claws: centered at 1 (leaves 0,2,3) and at 4 (leaves 5,6,7).
    const Graph g(8, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {4, 5}, {4, 6}, {4, 7}});
    const auto claw = find_claw(g);
    ASSERT_TRUE(claw.has_value());
    EXPECT_EQ(claw->center, 1);
    EXPECT_EQ(claw->leaves, (std::array<Vertex, 3>{0, 2, 3}));
}

TEST(FindClaw, AgreesWithExhaustiveScan) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = random_graph(3 + trial % 6, 0.2 + 0.1 * (trial % 6), rng);
        EXPECT_EQ(find_claw(g).has_value(), brute_force_has_claw(g)) << to_text(g);
    }
}

TEST(LineGraph, Examples) {
    EXPECT_EQ(line_graph(path_graph(3)).graph, complete_graph(2));
    EXPECT_EQ(line_graph(complete_graph(3)).graph, complete_graph(3));
    EXPECT_EQ(line_graph(star_graph(3)).graph, complete_graph(3));
}

TEST(LineGraph, AdjacencyIffSharedEndpointAndClawFree) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(2 + trial % 7, 0.45, rng);
        const auto lg = line_graph(g);
        ASSERT_EQ(lg.graph.order(), g.size());
        for (EdgeIndex i = 0; i < g.size(); ++i) {
            EXPECT_EQ(lg.vertex_to_edge[i], g.edge(i));
            for (EdgeIndex j = 0; j < g.size(); ++j) {
                if (i == j) continue;
                EXPECT_EQ(lg.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)),
                          g.edge(i).shares_endpoint(g.edge(j)));
            }
        }
        EXPECT_FALSE(find_claw(lg.graph).has_value());
    }
}

TEST(BipartiteCores, PathOnThreeVertices) {
    const auto cores = enumerate_bipartite_cores(path_graph(3));
    const std::vector<BipartiteCore> expected{{{0}, {1}, CoreShape::K11},
                                              {{1}, {2}, CoreShape::K11},
                                              {{1}, {0, 2}, CoreShape::K12}};
    EXPECT_EQ(cores, expected);
}

TEST(BipartiteCores, FourCycle) {
    const auto cores = enumerate_bipartite_cores(cycle_graph(4));
    std::size_t k11 = 0, k12 = 0;
    std::vector<BipartiteCore> k22;
    for (const auto& c : cores) {
        k11 += c.shape == CoreShape::K11;
        k12 += c.shape == CoreShape::K12;
        if (c.shape == CoreShape::K22) k22.push_back(c);
    }
    EXPECT_EQ(k11, 4u);
    EXPECT_EQ(k12, 4u);
    ASSERT_EQ(k22.size(), 1u);
    EXPECT_EQ(k22[0].x, (VertexSet{0, 2}));
    EXPECT_EQ(k22[0].y, (VertexSet{1, 3}));
    EXPECT_TRUE(std::find(cores.begin(), cores.end(), BipartiteCore{{0}, {1, 3}, CoreShape::K12}) != cores.end());
}

TEST(BipartiteCores, SingleEdge) {
    EXPECT_EQ(enumerate_bipartite_cores(complete_graph(2)),
              (std::vector<BipartiteCore>{{{0}, {1}, CoreShape::K11}}));
}

// On claw-free graphs the enumeration is exactly the set of induced complete
// bipartite subgraphs, and none has five or more vertices.
TEST(BipartiteCores, MatchExhaustiveSubsetScanOnClawFreeGraphs) {
    std::mt19937_64 rng(13);
    int tested = 0;
    for (int trial = 0; trial < 3000 && tested < 300; ++trial) {
        const auto g = random_graph(3 + trial % 6, 0.5, rng);
        if (!is_claw_free(g)) continue;
        ++tested;
        std::set<CoreKey> expected;
        for (std::size_t size = 2; size <= 4; ++size) expected.merge(brute_force_cores(g, size));
        std::set<CoreKey> got;
        for (const auto& c : enumerate_bipartite_cores(g)) {
            EXPECT_TRUE(is_valid_core(g, c));
            EXPECT_TRUE(got.insert({c.x, c.y}).second) << "core reported twice";
        }
        EXPECT_EQ(got, expected) << to_text(g);
        for (std::size_t size = 5; size <= g.order(); ++size) EXPECT_TRUE(brute_force_cores(g, size).empty());
    }
    EXPECT_GE(tested, 300);
}

TEST(SubgraphCounts, Examples) {
    const auto k3 = complete_graph(3);
    EXPECT_EQ(enumerate_p3(k3).size(), 3u);
    EXPECT_TRUE(enumerate_c4(k3).empty());
    EXPECT_TRUE(nonadjacent_pairs(k3).empty());

    const auto c4 = cycle_graph(4);
    EXPECT_EQ(enumerate_p3(c4).size(), 4u);
    ASSERT_EQ(enumerate_c4(c4).size(), 1u);
    EXPECT_EQ(enumerate_c4(c4)[0].vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(nonadjacent_pairs(c4), (std::vector<std::pair<Vertex, Vertex>>{{0, 2}, {1, 3}}));

    const auto k4 = complete_graph(4);
    EXPECT_EQ(enumerate_p3(k4).size(), 12u);
    EXPECT_EQ(enumerate_c4(k4).size(), 3u);
    EXPECT_TRUE(nonadjacent_pairs(k4).empty());
}

TEST(SubgraphCounts, AgreeWithVertexTupleBruteForce) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = random_graph(2 + trial % 7, 0.5, rng);
        const auto n = static_cast<Vertex>(g.order());

        std::set<std::array<Vertex, 3>> p3;
        std::set<std::vector<Vertex>> c4;
        for (Vertex a = 0; a < n; ++a) {
            for (Vertex b = 0; b < n; ++b) {
                for (Vertex c = 0; c < n; ++c) {
                    if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c)) continue;
                    if (a < c) p3.insert({a, b, c});
                    for (Vertex d = 0; d < n; ++d) {
                        if (d == a || d == b || d == c || !g.adjacent(c, d) || !g.adjacent(d, a)) continue;
                        // Canonical rotation/reflection: smallest first, then smaller neighbour next.
                        std::vector<Vertex> cyc{a, b, c, d};
                        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
                        if (cyc[1] > cyc[3]) std::swap(cyc[1], cyc[3]);
                        c4.insert(cyc);
                    }
                }
            }
        }
        auto got_p3 = enumerate_p3(g);
        EXPECT_EQ((std::set<std::array<Vertex, 3>>(got_p3.begin(), got_p3.end())), p3);
        EXPECT_EQ(got_p3.size(), p3.size());
        std::set<std::vector<Vertex>> got_c4;
        for (const auto& c : enumerate_c4(g)) got_c4.insert(c.vertices());
        EXPECT_EQ(got_c4, c4);
        EXPECT_EQ(enumerate_c4(g).size(), c4.size());

        std::size_t pairs = 0;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) pairs += !g.adjacent(u, v);
        }
        EXPECT_EQ(nonadjacent_pairs(g).size(), pairs);
    }
}

TEST(PathSpec, Validation) {
    const auto p4 = path_graph(4);
    EXPECT_NO_THROW(PathSpec(p4, {0, 1, 2, 3}));
    EXPECT_THROW(PathSpec(p4, {0, 1}), InputError);
    EXPECT_THROW(PathSpec(p4, {0, 2, 3}), InputError);
    EXPECT_THROW(PathSpec(complete_graph(3), {0, 1, 0}), InputError);
    EXPECT_THROW(CycleSpec(complete_graph(3), {0, 1, 2}), InputError);
    EXPECT_THROW(CycleSpec(p4, {0, 1, 2, 3}), InputError);
    EXPECT_NO_THROW(CycleSpec(cycle_graph(4), {0, 1, 2, 3}));
}

TEST(Corpus, LabeledGraphCounts) {
    EXPECT_EQ(all_labeled_graphs(5).size(), 1024u);
    EXPECT_EQ(all_labeled_graphs(1).size(), 1u);
    const auto a = random_graphs(10, {6, 7}, 42);
    const auto b = random_graphs(10, {6, 7}, 42);
    EXPECT_EQ(a, b);
}
