#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "weightspace/mwis.hpp"

using namespace wspace;
using namespace wspace::testing;

TEST(MaxWeightIndependentSet, Examples) {
    const auto p3 = path_graph(3);
    const auto ends = max_weight_independent_set(p3, std::vector<Weight>{1, 1, 1});
    EXPECT_EQ(ends.vertices, (VertexSet{0, 2}));
    EXPECT_EQ(ends.weight, 2);
    const auto middle = max_weight_independent_set(p3, std::vector<Weight>{1, 3, 1});
    EXPECT_EQ(middle.vertices, (VertexSet{1}));
    EXPECT_EQ(middle.weight, 3);
    EXPECT_EQ(max_weight_independent_set(cycle_graph(5), std::vector<Weight>(5, 1)).weight, 2);
    EXPECT_EQ(max_weight_independent_set(Graph(0, {}), std::vector<Weight>{}).weight, 0);
    EXPECT_THROW(max_weight_independent_set(p3, std::vector<Weight>{1, 1}), InputError);
    EXPECT_THROW(max_weight_independent_set(p3, std::vector<Weight>{1, -1, 1}), InputError);
}

TEST(MaxWeightIndependentSet, AgreesWithBruteForce) {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<Weight> weight(0, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_graph(1 + trial % 12, 0.15 + 0.1 * (trial % 6), rng);
        std::vector<Weight> w(g.order());
        for (auto& x : w) x = weight(rng);
        const auto best = max_weight_independent_set(g, w);
        ASSERT_TRUE(is_independent(g, best.vertices));
        Weight total = 0;
        for (Vertex v : best.vertices) total += w[v];
        EXPECT_EQ(total, best.weight);
        EXPECT_EQ(best.weight, brute_force_mwis(g, w)) << to_text(g);
        for (Vertex v : best.vertices) EXPECT_GT(w[v], 0) << "zero-weight vertex taken";
    }
}
