#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "weightspace/certificates.hpp"
#include "weightspace/evs.hpp"
#include "weightspace/oracle.hpp"
#include "weightspace/subgraphs.hpp"
#include "weightspace/wcw.hpp"

namespace wspace {

/// Graph on n vertices whose edges are the set bits of `mask` over the pairs
/// (0,1), (0,2), ..., (n-2,n-1) in lexicographic order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
        for (Vertex v = u + 1; v < static_cast<Vertex>(n); ++v, ++bit) {
            if ((mask >> bit) & 1u) edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

/// All 2^(n(n-1)/2) labeled graphs on n vertices, n <= 8.
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
    if (n > 8) throw InputError("exhaustive enumeration supports at most 8 vertices");
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << pairs);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) out.push_back(graph_from_mask(n, mask));
    return out;
}

/// G(n, 1/2) samples with n drawn uniformly from `orders`; reproducible for a seed.
inline std::vector<Graph> random_graphs(std::size_t count, std::vector<std::size_t> orders, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
        const std::size_t pairs = n * (n - 1) / 2;
        const std::uint64_t mask = pairs == 0 ? 0 : rng() & ((std::uint64_t{1} << pairs) - 1);
        out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

/// Outcome of comparing the pipelines against the oracles on one graph.
struct GraphCheck {
    bool evs_matches = false;
    bool recognition_consistent = false;
    bool claw_free = false;
    bool wcw_matches = false;          // meaningful when claw_free
    bool well_covered_consistent = false;
    bool line_checked = false;
    bool line_matches = false;         // meaningful when line_checked
    bool certificates_hold = false;
    std::string error;                 // non-empty when a check threw
};

inline constexpr std::size_t kLineIdentityMaxEdges = 8;

inline bool all_same_size(const auto& family) {
    return std::all_of(family.begin(), family.end(),
                       [&](const auto& s) { return s.size() == family.front().size(); });
}

inline GraphCheck check_graph(const Graph& g) {
    GraphCheck c;
    try {
        const auto evs = evs_space(g);
        c.evs_matches = subspace_equal(evs.space, oracle_evs(g));
        const bool equimatchable = is_equimatchable(g);
        c.recognition_consistent = equimatchable == evs.space.contains(ones(g.size())) &&
                                   equimatchable == all_same_size(maximal_matchings(g));
        c.certificates_hold = std::all_of(evs.restrictions.begin(), evs.restrictions.end(),
                                          [&](const auto& r) { return certificate_holds(g, r); });

        c.claw_free = is_claw_free(g);
        if (c.claw_free) {
            const auto wcw = wcw_space(g);
            c.wcw_matches = subspace_equal(wcw.space, oracle_wcw(g));
            c.well_covered_consistent =
                wcw.space.contains(ones(g.order())) == all_same_size(maximal_independent_sets(g));
            c.certificates_hold =
                c.certificates_hold && std::all_of(wcw.restrictions.begin(), wcw.restrictions.end(),
                                                   [&](const auto& r) { return certificate_holds(g, r); });
        }
        if (g.size() <= kLineIdentityMaxEdges) {
            c.line_checked = true;
            c.line_matches = subspace_equal(evs.space, wcw_space(line_graph(g).graph).space);
        }
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    return c;
}

inline bool passed(const GraphCheck& c) {
    return c.error.empty() && c.evs_matches && c.recognition_consistent && c.certificates_hold &&
           (!c.claw_free || (c.wcw_matches && c.well_covered_consistent)) && (!c.line_checked || c.line_matches);
}

/// Runs `work(i)` for i in [0, count) on `jobs` threads; results land by index,
/// so the output does not depend on the thread count.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, std::size_t jobs, const std::function<Result(std::size_t)>& work) {
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = work(i);
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    return results;
}

struct SweepSummary {
    std::size_t graphs = 0;
    std::size_t evs_ok = 0;
    std::size_t recognition_ok = 0;
    std::size_t claw_free = 0;
    std::size_t wcw_ok = 0;
    std::size_t well_covered_ok = 0;
    std::size_t line_checked = 0;
    std::size_t line_ok = 0;
    std::size_t certificates_ok = 0;
    std::vector<std::string> failures;  // graph text + reason, first few only

    bool all_passed() const {
        return evs_ok == graphs && recognition_ok == graphs && wcw_ok == claw_free &&
               well_covered_ok == claw_free && line_ok == line_checked && certificates_ok == graphs;
    }
};

inline SweepSummary sweep(const std::vector<Graph>& corpus, std::size_t jobs) {
    const auto checks = parallel_map<GraphCheck>(corpus.size(), jobs,
                                                 [&](std::size_t i) { return check_graph(corpus[i]); });
    SweepSummary s;
    s.graphs = corpus.size();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        s.evs_ok += c.evs_matches;
        s.recognition_ok += c.recognition_consistent;
        s.claw_free += c.claw_free;
        s.wcw_ok += c.claw_free && c.wcw_matches;
        s.well_covered_ok += c.claw_free && c.well_covered_consistent;
        s.line_checked += c.line_checked;
        s.line_ok += c.line_checked && c.line_matches;
        s.certificates_ok += c.certificates_hold;
        if (!passed(c) && s.failures.size() < 10) {
            s.failures.push_back(to_text(corpus[i]) + (c.error.empty() ? "mismatch" : c.error));
        }
    }
    return s;
}

}  // namespace wspace
