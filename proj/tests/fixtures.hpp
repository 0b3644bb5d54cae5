#pragma once

// Small named graphs and brute-force helpers shared by the unit tests.

#include <random>
#include <vector>

#include "weightspace/graph.hpp"
#include "weightspace/linalg.hpp"

namespace wspace::testing {

inline Graph path_graph(std::size_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < static_cast<Vertex>(k); ++i) e.push_back({i, i + 1});
    return Graph(k, e);
}

inline Graph cycle_graph(std::size_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < static_cast<Vertex>(k); ++i) e.push_back({i, static_cast<Vertex>((i + 1) % k)});
    return Graph(k, e);
}

inline Graph complete_graph(std::size_t k) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < static_cast<Vertex>(k); ++i) {
        for (Vertex j = i + 1; j < static_cast<Vertex>(k); ++j) e.push_back({i, j});
    }
    return Graph(k, e);
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (Vertex i = 1; i <= static_cast<Vertex>(leaves); ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
        for (Vertex j = i + 1; j < static_cast<Vertex>(n); ++j) {
            if (coin(rng)) e.push_back({i, j});
        }
    }
    return Graph(n, e);
}

inline RationalVector ints(std::initializer_list<long> xs) {
    RationalVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace wspace::testing
