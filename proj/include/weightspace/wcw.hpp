#pragma once

#include <span>
#include <utility>
#include <vector>

#include "weightspace/errors.hpp"
#include "weightspace/graph.hpp"
#include "weightspace/linalg.hpp"
#include "weightspace/mwis.hpp"
#include "weightspace/subgraphs.hpp"

namespace wspace {

/// Vertex layers around a bipartite core.
///
/// `m1` holds the vertices that one side dominates and the other does not:
/// (N(X) ∩ N_2(Y)) ∪ (N_2(X) ∩ N(Y)). Every one of them must be dominated by
/// the shared part S of the two maximal independent sets S ∪ X and S ∪ Y.
/// `m2` holds the vertices allowed in S that can dominate something in `m1`:
/// vertices at distance at least 2 from both sides with a neighbor in `m1`.
struct CoreLayers {
    VertexSet m1;
    VertexSet m2;
};

struct GeneratingVerdict {
    bool is_generating = false;
    /// When generating: an independent S, disjoint from N[X ∪ Y], such that
    /// S ∪ X and S ∪ Y are both maximal independent sets.
    VertexSet witness;
    VertexSet m1;
    VertexSet m2;
};

/// Where a WCW restriction came from.
struct CoreCertificate {
    BipartiteCore core;
    VertexSet witness;
};

using WcwRestriction = Restriction<CoreCertificate>;

struct WcwResult {
    WeightSpace space;
    std::vector<WcwRestriction> restrictions;
};

inline CoreLayers compute_m1_m2(const Graph& g, const BipartiteCore& b) {
    const auto dx = distances_from(g, b.x);
    const auto dy = distances_from(g, b.y);
    CoreLayers layers;
    std::vector<char> in_m1(g.order(), 0);
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if ((dx[v] == 1 && dy[v] == 2) || (dx[v] == 2 && dy[v] == 1)) {
            layers.m1.push_back(v);
            in_m1[v] = 1;
        }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (dx[v] < 2 || dy[v] < 2) continue;
        for (Vertex u : g.neighbors(v)) {
            if (in_m1[u]) {
                layers.m2.push_back(v);
                break;
            }
        }
    }
    return layers;
}

namespace detail {

/// Generating test without the claw scan; the caller guarantees claw-freeness.
inline GeneratingVerdict test_core(const Graph& g, const BipartiteCore& b) {
    auto [m1, m2] = compute_m1_m2(g, b);
    GeneratingVerdict verdict{false, {}, m1, m2};
    if (b.shape == CoreShape::K22) {
        // An M1 vertex next to a K22 side would form a claw with that side's neighbors.
        check_invariant(m1.empty() && m2.empty(), "K22 core with non-empty layers in a claw-free graph");
    }

    VertexSet dominator;
    if (!m1.empty()) {
        auto sub = induced_subgraph(g, m2);
        std::vector<char> in_m1(g.order(), 0);
        for (Vertex v : m1) in_m1[v] = 1;
        std::vector<Weight> weights(m2.size(), 0);
        for (std::size_t i = 0; i < m2.size(); ++i) {
            for (Vertex u : g.neighbors(m2[i])) weights[i] += in_m1[u];
        }
        // No M1 vertex has two non-adjacent M2 neighbors (claw-free), so the
        // weight of an independent set counts the M1 vertices it dominates.
        auto best = max_weight_independent_set(sub.graph, weights);
        check_invariant(best.weight <= static_cast<Weight>(m1.size()), "MWIS weight exceeds |M1|");
        if (best.weight != static_cast<Weight>(m1.size())) return verdict;
        for (Vertex local : best.vertices) dominator.push_back(sub.to_host[local]);
    }

    VertexSet core_vertices = b.x;
    core_vertices.insert(core_vertices.end(), b.y.begin(), b.y.end());
    std::vector<char> blocked(g.order(), 0);
    for (Vertex v : core_vertices) {
        blocked[v] = 1;
        for (Vertex u : g.neighbors(v)) blocked[u] = 1;
    }
    VertexSet free;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (!blocked[v]) free.push_back(v);
    }
    verdict.is_generating = true;
    verdict.witness = extend_independent(g, make_vertex_set(std::move(dominator)), free);
    return verdict;
}

inline RationalVector core_coefficients(std::size_t n, const BipartiteCore& b) {
    RationalVector c(n, Rational(0));
    for (Vertex v : b.x) c[v] += 1;
    for (Vertex v : b.y) c[v] -= 1;
    return c;
}

}  // namespace detail

/// Decides whether the core extends a common independent set to two maximal
/// independent sets. Throws ClawFound when g has a claw and InputError when
/// the core is not an induced complete bipartite subgraph of g.
inline GeneratingVerdict is_generating(const Graph& g, const BipartiteCore& b) {
    if (!is_valid_core(g, b)) throw InputError("not an induced K11, K12 or K22 of the graph");
    require_claw_free(g);
    return detail::test_core(g, b);
}

/// The space of vertex weightings under which the claw-free graph g has all
/// maximal independent sets of equal weight, with one certified restriction
/// per generating core. Throws ClawFound otherwise.
inline WcwResult wcw_space(const Graph& g) {
    require_claw_free(g);
    WcwResult result;
    for (const auto& core : enumerate_bipartite_cores(g)) {
        auto verdict = detail::test_core(g, core);
        if (!verdict.is_generating) continue;
        result.restrictions.push_back(
            {detail::core_coefficients(g.order(), core), {core, std::move(verdict.witness)}});
    }
    result.space = nullspace(result.restrictions, g.order());
    return result;
}

inline bool is_w_well_covered(const Graph& g, std::span<const Rational> w) {
    if (w.size() != g.order()) throw InputError("one weight per vertex required");
    return wcw_space(g).space.contains(w);
}

inline bool is_well_covered(const Graph& g) {
    const auto w = ones(g.order());
    return is_w_well_covered(g, w);
}

}  // namespace wspace
