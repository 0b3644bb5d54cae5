#pragma once

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "weightspace/graph.hpp"

namespace wspace {

// ---------------------------------------------------------------------------
// Claws

/// An induced K_{1,3}: `center` adjacent to three pairwise non-adjacent leaves.
struct Claw {
    Vertex center = 0;
    std::array<Vertex, 3> leaves{};

    friend bool operator==(const Claw&, const Claw&) = default;
};

/// Lexicographically first claw (by center, then sorted leaf triple), if any.
inline std::optional<Claw> find_claw(const Graph& g) {
    for (Vertex c = 0; c < static_cast<Vertex>(g.order()); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        return Claw{c, {nb[i], nb[j], nb[k]}};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

/// Thrown by claw-free-only routines; carries the offending claw.
class ClawFound : public InputError {
public:
    explicit ClawFound(const Claw& claw)
        : InputError("graph contains a claw: center " + std::to_string(claw.center) + ", leaves {" +
                     std::to_string(claw.leaves[0]) + "," + std::to_string(claw.leaves[1]) + "," +
                     std::to_string(claw.leaves[2]) + "}"),
          claw_(claw) {}

    const Claw& claw() const noexcept { return claw_; }

private:
    Claw claw_;
};

inline void require_claw_free(const Graph& g) {
    if (auto claw = find_claw(g)) throw ClawFound(*claw);
}

// ---------------------------------------------------------------------------
// Complete bipartite cores

enum class CoreShape { K11, K12, K22 };

inline const char* to_string(CoreShape s) {
    switch (s) {
        case CoreShape::K11: return "K11";
        case CoreShape::K12: return "K12";
        case CoreShape::K22: return "K22";
    }
    return "?";
}

/// Induced complete bipartite subgraph with sides `x` and `y`.
///
/// Claw-free graphs admit only the shapes K11, K12 and K22. For K12 the single
/// vertex is `x`; for K22 the sides are the diagonals of the induced 4-cycle and
/// `x` is the side holding the smallest vertex.
struct BipartiteCore {
    VertexSet x;
    VertexSet y;
    CoreShape shape = CoreShape::K11;

    friend bool operator==(const BipartiteCore&, const BipartiteCore&) = default;
};

/// True iff (x, y) induces a complete bipartite subgraph of g with the given shape.
inline bool is_valid_core(const Graph& g, const BipartiteCore& b) {
    auto sized = [](const VertexSet& s, std::size_t k) { return s.size() == k; };
    bool shape_ok = false;
    switch (b.shape) {
        case CoreShape::K11: shape_ok = sized(b.x, 1) && sized(b.y, 1); break;
        case CoreShape::K12: shape_ok = sized(b.x, 1) && sized(b.y, 2); break;
        case CoreShape::K22: shape_ok = sized(b.x, 2) && sized(b.y, 2); break;
    }
    if (!shape_ok) return false;
    for (Vertex v : b.x) {
        if (!g.contains_vertex(v)) return false;
        for (Vertex u : b.y) {
            if (!g.contains_vertex(u) || u == v || !g.adjacent(u, v)) return false;
        }
    }
    return is_independent(g, b.x) && is_independent(g, b.y) &&
           std::is_sorted(b.x.begin(), b.x.end()) && std::is_sorted(b.y.begin(), b.y.end());
}

/// Every induced K11, K12 and K22 of g, each once. Order: all K11 in edge order,
/// then K12 by (center, leaf pair), then K22 by (x, y).
///
/// On a claw-free graph these are all of its induced complete bipartite
/// subgraphs; on other graphs larger ones (K13, K23, ...) are not reported.
inline std::vector<BipartiteCore> enumerate_bipartite_cores(const Graph& g) {
    std::vector<BipartiteCore> cores;
    for (const auto& e : g.edges()) cores.push_back({{e.u}, {e.v}, CoreShape::K11});
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex c = 0; c < n; ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.adjacent(nb[i], nb[j])) cores.push_back({{c}, {nb[i], nb[j]}, CoreShape::K12});
            }
        }
    }
    // Induced 4-cycle a-b-c-d with a the smallest vertex: diagonals {a,c}, {b,d}.
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex c = a + 1; c < n; ++c) {
            if (g.adjacent(a, c)) continue;
            std::vector<Vertex> common;
            for (Vertex v : g.neighbors(a)) {
                if (v > a && g.adjacent(v, c)) common.push_back(v);
            }
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    if (!g.adjacent(common[i], common[j])) {
                        cores.push_back({{a, c}, {common[i], common[j]}, CoreShape::K22});
                    }
                }
            }
        }
    }
    return cores;
}

// ---------------------------------------------------------------------------
// Paths and cycles (not necessarily induced)

/// A simple path v_1 .. v_k (k >= 3) in a host graph.
class PathSpec {
public:
    PathSpec() = default;

    /// Throws InputError unless the vertices are distinct and consecutive ones adjacent in g.
    PathSpec(const Graph& g, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.size() < 3) throw InputError("a path needs at least 3 vertices");
        validate_distinct(g);
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            if (!g.adjacent(vertices_[i], vertices_[i + 1])) {
                throw InputError("path vertices " + std::to_string(vertices_[i]) + " and " +
                                 std::to_string(vertices_[i + 1]) + " are not adjacent");
            }
        }
    }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size(); }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }

    /// Edge indices (v_i, v_{i+1}), in path order.
    std::vector<EdgeIndex> edge_indices(const Graph& g) const {
        std::vector<EdgeIndex> out;
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            out.push_back(g.require_edge(vertices_[i], vertices_[i + 1]));
        }
        return out;
    }

    friend auto operator<=>(const PathSpec&, const PathSpec&) = default;

private:
    void validate_distinct(const Graph& g) const {
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("path repeats a vertex");
        }
        for (Vertex v : vertices_) {
            if (!g.contains_vertex(v)) throw InputError("path vertex out of range");
        }
    }

    std::vector<Vertex> vertices_;
};

/// An even cycle v_1 .. v_k, v_1 (k >= 4) in a host graph.
class CycleSpec {
public:
    CycleSpec() = default;

    CycleSpec(const Graph& g, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        const auto k = vertices_.size();
        if (k < 4 || k % 2 != 0) throw InputError("cycle must be even with at least 4 vertices");
        auto sorted = vertices_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw InputError("cycle repeats a vertex");
        }
        for (Vertex v : vertices_) {
            if (!g.contains_vertex(v)) throw InputError("cycle vertex out of range");
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (!g.adjacent(vertices_[i], vertices_[(i + 1) % k])) {
                throw InputError("cycle vertices " + std::to_string(vertices_[i]) + " and " +
                                 std::to_string(vertices_[(i + 1) % k]) + " are not adjacent");
            }
        }
    }

    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    std::size_t length() const noexcept { return vertices_.size(); }

    /// Edge indices (v_i, v_{i+1}) including the closing edge (v_k, v_1).
    std::vector<EdgeIndex> edge_indices(const Graph& g) const {
        std::vector<EdgeIndex> out;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            out.push_back(g.require_edge(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
        }
        return out;
    }

    friend auto operator<=>(const CycleSpec&, const CycleSpec&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Every P3 subgraph (v1, v2, v3) with center v2 and v1 < v3, by (center, v1, v3).
inline std::vector<std::array<Vertex, 3>> enumerate_p3(const Graph& g) {
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex c = 0; c < static_cast<Vertex>(g.order()); ++c) {
        auto nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) out.push_back({nb[i], c, nb[j]});
        }
    }
    return out;
}

/// Every 4-cycle subgraph once, as (a, b, c, d) with a minimal and b < d.
inline std::vector<CycleSpec> enumerate_c4(const Graph& g) {
    std::vector<CycleSpec> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex a = 0; a < n; ++a) {
        auto nb = g.neighbors(a);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const Vertex b = nb[i];
            if (b < a) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                const Vertex d = nb[j];
                for (Vertex c : g.neighbors(b)) {
                    if (c > a && c != d && g.adjacent(c, d)) out.emplace_back(g, std::vector<Vertex>{a, b, c, d});
                }
            }
        }
    }
    return out;
}

/// All u < v with (u, v) not an edge.
inline std::vector<std::pair<Vertex, Vertex>> nonadjacent_pairs(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Line graph

/// L(g): vertex i is edge i of the host; two vertices are adjacent iff the
/// host edges share an endpoint.
struct LineGraphMap {
    Graph graph;
    std::vector<Edge> vertex_to_edge;
};

inline LineGraphMap line_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (es[i].shares_endpoint(es[j])) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
        }
    }
    return {Graph(es.size(), std::move(edges)), es};
}

}  // namespace wspace
