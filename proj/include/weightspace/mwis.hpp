#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "weightspace/errors.hpp"
#include "weightspace/graph.hpp"

namespace wspace {

struct WeightedSet {
    VertexSet vertices;
    Weight weight = 0;
};

namespace detail {

/// Exact branch and bound: branch on a maximum-degree live vertex (drop it, or
/// take it and delete its closed neighborhood), bounding by the weight still
/// available. Live vertices with no live neighbor are taken outright.
class MwisSearch {
public:
    MwisSearch(const Graph& g, std::span<const Weight> w) : g_(g), w_(w.begin(), w.end()) {}

    WeightedSet run() {
        std::vector<Vertex> live;
        for (Vertex v = 0; v < static_cast<Vertex>(g_.order()); ++v) {
            if (w_[v] > 0) live.push_back(v);
        }
        alive_.assign(g_.order(), 0);
        for (Vertex v : live) alive_[v] = 1;
        std::vector<Vertex> chosen;
        search(live, chosen, 0);
        return {make_vertex_set(best_), best_weight_};
    }

private:
    void search(std::vector<Vertex> live, std::vector<Vertex>& chosen, Weight current) {
        // Peel off isolated live vertices; they belong to every optimum extension.
        std::size_t peeled = 0;
        Weight remaining = 0;
        Vertex pivot = -1;
        std::size_t pivot_degree = 0;
        std::vector<Vertex> rest;
        for (Vertex v : live) {
            std::size_t d = 0;
            for (Vertex u : g_.neighbors(v)) d += alive_[u];
            if (d == 0) {
                chosen.push_back(v);
                current += w_[v];
                alive_[v] = 0;
                ++peeled;
                continue;
            }
            rest.push_back(v);
            remaining += w_[v];
            if (pivot == -1 || d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (rest.empty()) {
            if (current > best_weight_) {
                best_weight_ = current;
                best_ = chosen;
            }
        } else if (current + remaining > best_weight_) {
            // Take the pivot.
            std::vector<Vertex> removed{pivot};
            alive_[pivot] = 0;
            for (Vertex u : g_.neighbors(pivot)) {
                if (alive_[u]) {
                    alive_[u] = 0;
                    removed.push_back(u);
                }
            }
            std::vector<Vertex> next;
            for (Vertex v : rest) {
                if (alive_[v]) next.push_back(v);
            }
            chosen.push_back(pivot);
            search(std::move(next), chosen, current + w_[pivot]);
            chosen.pop_back();
            for (Vertex u : removed) alive_[u] = 1;

            // Drop the pivot.
            alive_[pivot] = 0;
            next.clear();
            for (Vertex v : rest) {
                if (alive_[v]) next.push_back(v);
            }
            search(std::move(next), chosen, current);
            alive_[pivot] = 1;
        }
        for (std::size_t i = 0; i < peeled; ++i) {
            alive_[chosen.back()] = 1;
            chosen.pop_back();
        }
    }

    const Graph& g_;
    std::vector<Weight> w_;
    std::vector<char> alive_;
    std::vector<Vertex> best_;
    Weight best_weight_ = 0;
};

}  // namespace detail

/// Exact maximum-weight independent set for non-negative integer vertex weights.
/// Zero-weight vertices are never included.
inline WeightedSet max_weight_independent_set(const Graph& g, std::span<const Weight> weights) {
    if (weights.size() != g.order()) throw InputError("one weight per vertex required");
    for (Weight w : weights) {
        if (w < 0) throw InputError("independent-set weights must be non-negative");
    }
    auto result = detail::MwisSearch(g, weights).run();
    check_invariant(is_independent(g, result.vertices), "MWIS returned a dependent set");
    return result;
}

}  // namespace wspace
