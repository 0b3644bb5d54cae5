#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "weightspace/errors.hpp"
#include "weightspace/graph.hpp"
#include "weightspace/linalg.hpp"
#include "weightspace/matching.hpp"
#include "weightspace/subgraphs.hpp"

namespace wspace {

/// Two maximal matchings of the host graph whose symmetric difference is a
/// given path or cycle. `first` holds the path's 1st, 3rd, ... edges.
struct SymDiffWitness {
    Matching first;
    Matching second;

    friend bool operator==(const SymDiffWitness&, const SymDiffWitness&) = default;
};

/// A length-3 path v1 v2 v3 v4 that is the symmetric difference of two maximal matchings.
struct P4Certificate {
    PathSpec path;
    SymDiffWitness witness;
};

/// Provenance of an EVS restriction: the path or cycle and the matching pair
/// that realises it.
struct PathCertificate {
    PathSpec path;
    SymDiffWitness witness;
};
struct CycleCertificate {
    CycleSpec cycle;
    SymDiffWitness witness;
};
using EvsCertificate = std::variant<PathCertificate, CycleCertificate>;
using EvsRestriction = Restriction<EvsCertificate>;

struct EvsResult {
    WeightSpace space;
    std::vector<EvsRestriction> restrictions;
};

namespace detail {

/// Lifts a matching of an induced subgraph to host edge indices.
inline Matching lift(const Graph& host, const InducedSubgraph& sub, std::span<const EdgeIndex> local) {
    Matching out;
    for (EdgeIndex e : local) out.push_back(sub.host_edge(host, e));
    return make_matching(std::move(out));
}

/// Adds alternate edges of a vertex walk (starting at `offset`) to `base`.
inline Matching with_alternate_edges(const Graph& g, Matching base, const std::vector<Vertex>& walk,
                                     std::size_t offset, bool closed) {
    const std::size_t k = walk.size();
    const std::size_t steps = closed ? k : k - 1;
    for (std::size_t i = offset; i < steps; i += 2) base.push_back(g.require_edge(walk[i], walk[(i + 1) % k]));
    return make_matching(std::move(base));
}

}  // namespace detail

/// Decides whether the path is the symmetric difference of two maximal
/// matchings of g, returning the pair when it is.
inline std::optional<SymDiffWitness> path_sym_diff_check(const Graph& g, const PathSpec& p) {
    const auto& vs = p.vertices();
    const std::size_t k = vs.size();
    // Even k: one matching leaves both ends uncovered, so they must not be adjacent.
    if (k % 2 == 0 && g.adjacent(p.front(), p.back())) return std::nullopt;

    const auto rest = induced_subgraph(g, complement(g, vs));
    std::vector<char> in_d(g.order(), 0);
    for (Vertex end : {p.front(), p.back()}) {
        for (Vertex u : g.neighbors(end)) in_d[u] = 1;
    }
    for (Vertex v : vs) in_d[v] = 0;
    Weight d_size = 0;
    for (char c : in_d) d_size += c;

    std::vector<Weight> weights(rest.graph.size());
    for (EdgeIndex e = 0; e < rest.graph.size(); ++e) {
        const auto& edge = rest.graph.edge(e);
        weights[e] = in_d[rest.to_host[edge.u]] + in_d[rest.to_host[edge.v]];
    }
    const auto best = max_weight_matching(rest.graph, weights);
    if (matching_weight(best, weights) != d_size) return std::nullopt;

    const auto common = detail::lift(g, rest, extend_to_maximal(rest.graph, best));
    return SymDiffWitness{detail::with_alternate_edges(g, common, vs, 0, false),
                          detail::with_alternate_edges(g, common, vs, 1, false)};
}

/// Every even cycle is a symmetric difference of two maximal matchings; builds the pair.
inline SymDiffWitness cycle_sym_diff_witness(const Graph& g, const CycleSpec& c) {
    const auto& vs = c.vertices();
    const auto rest = induced_subgraph(g, complement(g, vs));
    const auto common = detail::lift(g, rest, extend_to_maximal(rest.graph, Matching{}));
    return {detail::with_alternate_edges(g, common, vs, 0, true),
            detail::with_alternate_edges(g, common, vs, 1, true)};
}

/// Every path (v1, v2, v3, v4) between the non-adjacent vertices v1 and v4 that
/// is the symmetric difference of two maximal matchings, sorted by vertex
/// sequence, each with a witness pair.
///
/// Works on G' = g - {v1, v4}. An edge xy of G' weighs 2 + 1/n when it can be
/// the middle edge of such a path (x ∈ N(v1), y ∈ N(v4) or the reverse) and
/// |{x, y} ∩ N({v1, v4})| otherwise; all weights are scaled by n = |V(g)| to
/// stay integral. A maximum matching above n·|N({v1, v4})| dominates the whole
/// neighborhood and its heavy edges are exactly middle edges of valid paths;
/// those are reported, demoted to weight 2n, and the matching is re-solved.
inline std::vector<P4Certificate> p4_paths_between(const Graph& g, Vertex v1, Vertex v4) {
    if (!g.contains_vertex(v1) || !g.contains_vertex(v4)) throw InputError("vertex out of range");
    if (v1 == v4 || g.adjacent(v1, v4)) throw InputError("endpoints must be distinct and non-adjacent");

    const Weight scale = static_cast<Weight>(g.order());
    const Weight light = scale;          // one dominated vertex
    const Weight demoted = 2 * scale;    // two dominated vertices
    const Weight heavy = 2 * scale + 1;  // candidate middle edge

    const Vertex ends[2] = {v1, v4};
    const auto rest = induced_subgraph(g, complement(g, ends));
    std::vector<char> near1(g.order(), 0);
    std::vector<char> near4(g.order(), 0);
    for (Vertex u : g.neighbors(v1)) near1[u] = 1;
    for (Vertex u : g.neighbors(v4)) near4[u] = 1;
    Weight d_size = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) d_size += (near1[v] || near4[v]);

    std::vector<Weight> weights(rest.graph.size());
    std::size_t eligible = 0;
    for (EdgeIndex e = 0; e < rest.graph.size(); ++e) {
        const Vertex x = rest.to_host[rest.graph.edge(e).u];
        const Vertex y = rest.to_host[rest.graph.edge(e).v];
        if ((near1[x] && near4[y]) || (near1[y] && near4[x])) {
            weights[e] = heavy;
            ++eligible;
        } else {
            weights[e] = light * ((near1[x] || near4[x]) + (near1[y] || near4[y]));
        }
    }

    std::vector<P4Certificate> found;
    const Weight threshold = scale * d_size;
    std::size_t rounds = 0;
    while (true) {
        const auto m = max_weight_matching(rest.graph, weights);
        const Weight total = matching_weight(m, weights);
        // total = n·A + B with B the number of heavy edges; B < n keeps the
        // fractional part from carrying into the count A.
        const auto heavy_count = static_cast<Weight>(
            std::count_if(m.begin(), m.end(), [&](EdgeIndex e) { return weights[e] == heavy; }));
        check_invariant(heavy_count < scale && (total - heavy_count) % scale == 0 &&
                            (total - heavy_count) / scale <= d_size,
                        "scaled matching weight out of range");
        if (total <= threshold) break;
        check_invariant(rounds++ < eligible, "middle-edge demotion loop exceeded its bound");

        const auto both = detail::lift(g, rest, extend_to_maximal(rest.graph, m));
        for (EdgeIndex e : m) {
            if (weights[e] != heavy) continue;
            const Vertex x = rest.to_host[rest.graph.edge(e).u];
            const Vertex y = rest.to_host[rest.graph.edge(e).v];
            const EdgeIndex middle = g.require_edge(x, y);
            for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
                if (!near1[a] || !near4[b]) continue;
                PathSpec path(g, {v1, a, b, v4});
                Matching outer = both;
                outer.erase(std::find(outer.begin(), outer.end(), middle));
                outer.push_back(g.require_edge(v1, a));
                outer.push_back(g.require_edge(b, v4));
                found.push_back({std::move(path), {make_matching(std::move(outer)), both}});
            }
            weights[e] = demoted;
        }
    }
    std::sort(found.begin(), found.end(),
              [](const P4Certificate& a, const P4Certificate& b) { return a.path < b.path; });
    return found;
}

/// The space of edge weightings under which every maximal matching of g has
/// the same weight, with a certified restriction for each P3, P4 and C4 that
/// is a symmetric difference of two maximal matchings.
inline EvsResult evs_space(const Graph& g) {
    EvsResult result;
    const std::size_t m = g.size();
    auto coeffs = [&](std::initializer_list<std::pair<EdgeIndex, int>> terms) {
        RationalVector c(m, Rational(0));
        for (auto [e, s] : terms) c[e] += s;
        return c;
    };

    for (const auto& [a, b, c] : enumerate_p3(g)) {
        PathSpec path(g, {a, b, c});
        if (auto witness = path_sym_diff_check(g, path)) {
            result.restrictions.push_back({coeffs({{g.require_edge(a, b), 1}, {g.require_edge(b, c), -1}}),
                                           PathCertificate{std::move(path), std::move(*witness)}});
        }
    }
    for (const auto& [u, v] : nonadjacent_pairs(g)) {
        for (auto& cert : p4_paths_between(g, u, v)) {
            const auto& p = cert.path.vertices();
            result.restrictions.push_back({coeffs({{g.require_edge(p[0], p[1]), 1},
                                                   {g.require_edge(p[2], p[3]), 1},
                                                   {g.require_edge(p[1], p[2]), -1}}),
                                           PathCertificate{std::move(cert.path), std::move(cert.witness)}});
        }
    }
    for (auto& cycle : enumerate_c4(g)) {
        const auto& p = cycle.vertices();
        auto witness = cycle_sym_diff_witness(g, cycle);
        result.restrictions.push_back({coeffs({{g.require_edge(p[0], p[1]), 1},
                                               {g.require_edge(p[2], p[3]), 1},
                                               {g.require_edge(p[1], p[2]), -1},
                                               {g.require_edge(p[3], p[0]), -1}}),
                                       CycleCertificate{std::move(cycle), std::move(witness)}});
    }
    result.space = nullspace(result.restrictions, m);
    return result;
}

/// First P4 (in non-adjacent-pair order) that is a symmetric difference of two
/// maximal matchings; such a path exists iff g is not equimatchable.
inline std::optional<P4Certificate> find_unequal_maximal_matchings(const Graph& g) {
    for (const auto& [u, v] : nonadjacent_pairs(g)) {
        auto paths = p4_paths_between(g, u, v);
        if (!paths.empty()) return std::move(paths.front());
    }
    return std::nullopt;
}

inline bool is_equimatchable(const Graph& g) { return !find_unequal_maximal_matchings(g).has_value(); }

inline bool is_w_equimatchable(const Graph& g, std::span<const Rational> w) {
    if (w.size() != g.size()) throw InputError("one weight per edge required");
    return evs_space(g).space.contains(w);
}

}  // namespace wspace
