#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "weightspace/matching.hpp"

using namespace wspace;
using namespace wspace::testing;

TEST(MaxWeightMatching, Examples) {
    const auto p4 = path_graph(4);
    const std::vector<Weight> heavy_middle{1, 5, 1};
    EXPECT_EQ(max_weight_matching(p4, heavy_middle), (Matching{1}));
    const std::vector<Weight> heavy_ends{3, 5, 3};
    EXPECT_EQ(max_weight_matching(p4, heavy_ends), (Matching{0, 2}));
    EXPECT_TRUE(max_weight_matching(Graph(3, {}), std::vector<Weight>{}).empty());
    EXPECT_THROW(max_weight_matching(p4, std::vector<Weight>{1, 2}), InputError);
}

TEST(MaxWeightMatching, OddCyclesNeedBlossoms) {
    for (std::size_t k = 3; k <= 11; k += 2) {
        const auto c = cycle_graph(k);
        const std::vector<Weight> w(c.size(), 1);
        const auto m = max_weight_matching(c, w);
        EXPECT_TRUE(is_matching(c, m));
        EXPECT_EQ(m.size(), (k - 1) / 2);
    }
    // Two triangles joined by a path: the optimum uses the bridge.
    const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    const std::vector<Weight> w{4, 4, 4, 9, 4, 4, 4};
    EXPECT_EQ(matching_weight(max_weight_matching(g, w), w), brute_force_matching(g, w));
}

TEST(MaxWeightMatching, AgreesWithBruteForce) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<Weight> weight(0, 20);
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = random_graph(1 + trial % 10, 0.2 + 0.1 * (trial % 7), rng);
        std::vector<Weight> w(g.size());
        for (auto& x : w) x = weight(rng);
        const auto m = max_weight_matching(g, w);
        ASSERT_TRUE(is_matching(g, m));
        EXPECT_EQ(matching_weight(m, w), brute_force_matching(g, w)) << to_text(g);
    }
}

TEST(ExtendToMaximal, Examples) {
    const auto p4 = path_graph(4);
    EXPECT_EQ(extend_to_maximal(p4, Matching{}), (Matching{0, 2}));
    EXPECT_EQ(extend_to_maximal(p4, Matching{1}), (Matching{1}));
    EXPECT_THROW(extend_to_maximal(p4, Matching{0, 1}), InputError);
}

TEST(ExtendToMaximal, KeepsInputAndIsMaximal) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(2 + trial % 9, 0.4, rng);
        Matching seed;
        for (EdgeIndex e = 0; e < g.size(); ++e) {
            auto candidate = seed;
            candidate.push_back(e);
            if (rng() % 3 == 0 && is_matching(g, candidate)) seed = candidate;
        }
        const auto m = extend_to_maximal(g, seed);
        EXPECT_TRUE(is_maximal_matching(g, m));
        for (EdgeIndex e : seed) EXPECT_TRUE(std::binary_search(m.begin(), m.end(), e));
    }
}
