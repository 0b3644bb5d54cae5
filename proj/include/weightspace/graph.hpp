#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "weightspace/errors.hpp"

namespace wspace {

using Vertex = int;
using EdgeIndex = std::size_t;
/// Integer weight used by the combinatorial solvers.
using Weight = std::int64_t;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool touches(Vertex x) const noexcept { return u == x || v == x; }
    bool shares_endpoint(const Edge& o) const noexcept {
        return touches(o.u) || touches(o.v);
    }
};

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Sorted, duplicate-free list of edge indices. Whether the edges are pairwise
/// disjoint is checked by `is_matching`, not by the type.
using Matching = std::vector<EdgeIndex>;

inline VertexSet make_vertex_set(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

inline Matching make_matching(std::vector<EdgeIndex> es) {
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept in lexicographic order and edge i is the i-th pair of that
/// order; this index is the coordinate system for edge-weight vectors.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicate edges, or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n * n, 0), neighbors_(n) {
        for (auto& e : edges) {
            if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
                static_cast<std::size_t>(e.v) >= n) {
                throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") has an endpoint outside 0.." + std::to_string(n) + "-1");
            }
            if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
            throw InputError("duplicate edge (" + std::to_string(dup->u) + "," +
                             std::to_string(dup->v) + ")");
        }
        edges_ = std::move(edges);
        for (const auto& e : edges_) {
            adjacency_[index(e.u, e.v)] = 1;
            adjacency_[index(e.v, e.u)] = 1;
            neighbors_[e.u].push_back(e.v);
            neighbors_[e.v].push_back(e.u);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeIndex i) const { return edges_.at(i); }

    std::span<const Vertex> neighbors(Vertex v) const { return neighbors_.at(v); }
    std::size_t degree(Vertex v) const { return neighbors_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        return adjacency_[index(u, v)] != 0;
    }

    std::optional<EdgeIndex> edge_index(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        const Edge key{u, v};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
        if (it == edges_.end() || *it != key) return std::nullopt;
        return static_cast<EdgeIndex>(it - edges_.begin());
    }

    /// Like edge_index but throws InputError when (u, v) is not an edge.
    EdgeIndex require_edge(Vertex u, Vertex v) const {
        if (auto i = edge_index(u, v)) return *i;
        throw InputError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }

    bool contains_vertex(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < n_;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> adjacency_;
    std::vector<std::vector<Vertex>> neighbors_;
};

/// Induced subgraph with the vertex map back to the host. Vertices keep their
/// relative order, so the subgraph's edge order agrees with the host's.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_host;

    EdgeIndex host_edge(const Graph& host, EdgeIndex local) const {
        const auto& e = graph.edge(local);
        return host.require_edge(to_host[e.u], to_host[e.v]);
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    VertexSet vs = make_vertex_set({keep.begin(), keep.end()});
    std::vector<int> local(g.order(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!g.contains_vertex(vs[i])) throw InputError("vertex out of range");
        local[vs[i]] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v]});
    }
    return {Graph(vs.size(), std::move(edges)), std::move(vs)};
}

/// Vertices of g not in `removed`, in increasing order.
inline VertexSet complement(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(g.order(), 0);
    for (Vertex v : removed) gone.at(v) = 1;
    VertexSet out;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (!gone[v]) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

/// Parses the text graph format: a header line "n m", then m lines "u v".
/// Lines starting with '#' and blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::size_t m = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    auto parse_ints = [&](std::string_view line) {
        std::istringstream in{std::string(line)};
        std::vector<long long> values;
        std::string token;
        while (in >> token) {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected an integer, got '" + token + "'");
            }
            if (used != token.size()) {
                throw ParseError(line_no, "expected an integer, got '" + token + "'");
            }
            values.push_back(value);
        }
        if (values.size() != 2) {
            throw ParseError(line_no, "expected two integers, found " + std::to_string(values.size()));
        }
        return values;
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') {
            if (end == text.size()) break;
            continue;
        }
        auto values = parse_ints(line);
        if (!n) {
            if (values[0] < 0 || values[1] < 0) throw ParseError(line_no, "negative count in header");
            n = static_cast<std::size_t>(values[0]);
            m = static_cast<std::size_t>(values[1]);
            header_line = line_no;
        } else {
            if (edges.size() == m) {
                throw ParseError(line_no, "more edge lines than the " + std::to_string(m) +
                                              " declared in the header");
            }
            const long long u = values[0];
            const long long v = values[1];
            if (u < 0 || v < 0 || u >= static_cast<long long>(*n) || v >= static_cast<long long>(*n)) {
                throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(*n) + "-1");
            }
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            edges.push_back({static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))});
            edge_lines.push_back(line_no);
        }
        if (end == text.size()) break;
    }
    if (!n) throw ParseError(0, "missing header line 'n m'");
    if (edges.size() != m) {
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges but " +
                                          std::to_string(edges.size()) + " were given");
    }
    // Report duplicates against the line that repeats an earlier edge.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            const auto& e = edges[order[i]];
            throw ParseError(edge_lines[order[i]], "duplicate edge (" + std::to_string(e.u) + "," +
                                                       std::to_string(e.v) + ")");
        }
    }
    return Graph(*n, std::move(edges));
}

inline std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Distances

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// d(x, S) for every vertex x, kUnreachable when x is not connected to S.
inline std::vector<int> distances_from(const Graph& g, std::span<const Vertex> sources) {
    if (sources.empty()) throw InputError("distance to an empty vertex set is undefined");
    std::vector<int> dist(g.order(), kUnreachable);
    std::queue<Vertex> frontier;
    for (Vertex s : sources) {
        if (!g.contains_vertex(s)) throw InputError("source vertex out of range");
        if (dist[s] != 0) {
            dist[s] = 0;
            frontier.push(s);
        }
    }
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

/// {x : d(x, S) = i}, for i >= 1.
inline VertexSet distance_layer(const Graph& g, std::span<const Vertex> s, int i) {
    if (i < 1) throw InputError("distance layer index must be at least 1");
    auto dist = distances_from(g, s);
    VertexSet layer;
    for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
        if (dist[x] == i) layer.push_back(x);
    }
    return layer;
}

// ---------------------------------------------------------------------------
// Independent sets and matchings

inline bool is_independent(const Graph& g, std::span<const Vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!g.contains_vertex(s[i])) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
        }
    }
    return true;
}

/// True iff s is independent and every vertex outside s has a neighbor in s.
inline bool is_maximal_independent(const Graph& g, std::span<const Vertex> s) {
    if (!is_independent(g, s)) return false;
    std::vector<char> dominated(g.order(), 0);
    for (Vertex v : s) {
        dominated[v] = 1;
        for (Vertex u : g.neighbors(v)) dominated[u] = 1;
    }
    return std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
}

inline bool is_matching(const Graph& g, std::span<const EdgeIndex> m) {
    std::vector<char> covered(g.order(), 0);
    std::vector<char> used(g.size(), 0);
    for (EdgeIndex i : m) {
        if (i >= g.size() || used[i]) return false;
        used[i] = 1;
        const auto& e = g.edge(i);
        if (covered[e.u] || covered[e.v]) return false;
        covered[e.u] = covered[e.v] = 1;
    }
    return true;
}

/// True iff m is a matching and every edge of g has an endpoint covered by m.
inline bool is_maximal_matching(const Graph& g, std::span<const EdgeIndex> m) {
    if (!is_matching(g, m)) return false;
    std::vector<char> covered(g.order(), 0);
    for (EdgeIndex i : m) covered[g.edge(i).u] = covered[g.edge(i).v] = 1;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return covered[e.u] || covered[e.v]; });
}

/// Edge set (a \ b) ∪ (b \ a); inputs and output are sorted edge-index lists.
inline Matching symmetric_difference(std::span<const EdgeIndex> a, std::span<const EdgeIndex> b) {
    Matching out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Greedily adds vertices of `candidates` (in order) that keep s independent.
inline VertexSet extend_independent(const Graph& g, VertexSet s, std::span<const Vertex> candidates) {
    std::vector<char> blocked(g.order(), 0);
    for (Vertex v : s) {
        blocked[v] = 1;
        for (Vertex u : g.neighbors(v)) blocked[u] = 1;
    }
    for (Vertex v : candidates) {
        if (blocked[v]) continue;
        s.push_back(v);
        blocked[v] = 1;
        for (Vertex u : g.neighbors(v)) blocked[u] = 1;
    }
    return make_vertex_set(std::move(s));
}

}  // namespace wspace
