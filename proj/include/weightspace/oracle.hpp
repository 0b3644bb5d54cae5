#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "weightspace/errors.hpp"
#include "weightspace/graph.hpp"
#include "weightspace/linalg.hpp"

namespace wspace {

/// Subsets of a ground set of at most 32 elements, as bit masks.
using Subset = std::uint32_t;

inline constexpr std::size_t kOracleCap = 24;

inline std::vector<int> members(Subset s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1) {
        if (s & 1u) out.push_back(i);
    }
    return out;
}

/// Ground set {0..size-1} with the feasible family given as the downward
/// closure of explicit generators, so the family is hereditary by construction.
class HereditarySystem {
public:
    HereditarySystem(std::size_t ground_size, std::span<const Subset> generators)
        : size_(ground_size) {
        if (ground_size > kOracleCap) {
            throw InputError("hereditary system ground set above the enumeration cap of " +
                             std::to_string(kOracleCap));
        }
        const Subset universe = full_mask();
        feasible_.assign(std::size_t{1} << size_, 0);
        feasible_[0] = 1;
        for (Subset gset : generators) {
            if ((gset & ~universe) != 0) throw InputError("generator outside the ground set");
            feasible_[gset] = 1;
        }
        // Downward closure: a set is feasible if adding one element gives a feasible set.
        for (Subset s = universe;; --s) {
            if (!feasible_[s]) {
                for (std::size_t i = 0; i < size_; ++i) {
                    const Subset bit = Subset{1} << i;
                    if (!(s & bit) && feasible_[s | bit]) {
                        feasible_[s] = 1;
                        break;
                    }
                }
            }
            if (s == 0) break;
        }
    }

    /// Independent sets of g (generated by all independent subsets).
    static HereditarySystem independence(const Graph& g) {
        check_size(g.order(), "vertices");
        std::vector<Subset> gens;
        const auto adj = adjacency_masks(g);
        for (Subset s = 0; s < (Subset{1} << g.order()); ++s) {
            if (independent_mask(adj, s)) gens.push_back(s);
        }
        return HereditarySystem(g.order(), gens);
    }

    /// Matchings of g over the edge-index ground set.
    static HereditarySystem matchings(const Graph& g) {
        check_size(g.size(), "edges");
        std::vector<Subset> gens;
        const auto conflict = conflict_masks(g);
        for (Subset s = 0; s < (Subset{1} << g.size()); ++s) {
            if (independent_mask(conflict, s)) gens.push_back(s);
        }
        return HereditarySystem(g.size(), gens);
    }

    std::size_t ground_size() const noexcept { return size_; }
    bool feasible(Subset s) const { return (s & ~full_mask()) == 0 && feasible_[s] != 0; }

    static std::vector<Subset> adjacency_masks(const Graph& g) {
        std::vector<Subset> adj(g.order(), 0);
        for (const auto& e : g.edges()) {
            adj[e.u] |= Subset{1} << e.v;
            adj[e.v] |= Subset{1} << e.u;
        }
        return adj;
    }

    static bool independent_mask(std::span<const Subset> adj, Subset s) {
        for (Subset rest = s; rest != 0; rest &= rest - 1) {
            if (adj[std::countr_zero(rest)] & s) return false;
        }
        return true;
    }

    /// For each edge, the mask of other edges sharing an endpoint with it.
    static std::vector<Subset> conflict_masks(const Graph& g) {
        std::vector<Subset> conflict(g.size(), 0);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                if (g.edge(i).shares_endpoint(g.edge(j))) {
                    conflict[i] |= Subset{1} << j;
                    conflict[j] |= Subset{1} << i;
                }
            }
        }
        return conflict;
    }

private:
    static void check_size(std::size_t k, const char* what) {
        if (k > kOracleCap) {
            throw InputError(std::string("oracle enumeration needs at most ") + std::to_string(kOracleCap) +
                             " " + what + ", got " + std::to_string(k));
        }
    }

    Subset full_mask() const {
        return size_ == 32 ? ~Subset{0} : (Subset{1} << size_) - 1;
    }

    std::size_t size_;
    std::vector<char> feasible_;
};

/// All maximal feasible sets in increasing mask order.
inline std::vector<Subset> maximal_feasible_sets(const HereditarySystem& h) {
    std::vector<Subset> out;
    const std::size_t n = h.ground_size();
    for (Subset s = 0; s < (Subset{1} << n); ++s) {
        if (!h.feasible(s)) continue;
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i) {
            const Subset bit = Subset{1} << i;
            if (!(s & bit) && h.feasible(s | bit)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

inline Rational subset_weight(Subset s, std::span<const Rational> w) {
    Rational total = 0;
    for (int i : members(s)) total += w[i];
    return total;
}

/// Two maximal feasible sets F1, F2 of different weight such that every swap
/// set (F1 ∩ F2) ∪ {f1, f2}, f1 ∈ F1 \ F2, f2 ∈ F2 \ F1, is infeasible. Among
/// such pairs the one with the largest |F1 ∩ F2| is returned (first in mask
/// order on ties). Returns nullopt iff all maximal feasible sets weigh the same.
inline std::optional<std::pair<Subset, Subset>> whs_witness(const HereditarySystem& h,
                                                              std::span<const Rational> w) {
    if (w.size() != h.ground_size()) throw InputError("one weight per ground element required");
    const auto maximal = maximal_feasible_sets(h);
    std::vector<Rational> weight;
    weight.reserve(maximal.size());
    for (Subset s : maximal) weight.push_back(subset_weight(s, w));
    if (std::all_of(weight.begin(), weight.end(), [&](const Rational& x) { return x == weight.front(); })) {
        return std::nullopt;
    }
    auto swaps_infeasible = [&](Subset a, Subset b) {
        const Subset common = a & b;
        for (Subset ra = a & ~b; ra != 0; ra &= ra - 1) {
            for (Subset rb = b & ~a; rb != 0; rb &= rb - 1) {
                if (h.feasible(common | (ra & -ra) | (rb & -rb))) return false;
            }
        }
        return true;
    };
    std::optional<std::pair<Subset, Subset>> best;
    int best_common = -1;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            if (weight[i] == weight[j]) continue;
            const int common = std::popcount(maximal[i] & maximal[j]);
            if (common <= best_common) continue;
            if (swaps_infeasible(maximal[i], maximal[j])) {
                best = std::pair{maximal[i], maximal[j]};
                best_common = common;
            }
        }
    }
    check_invariant(best.has_value(), "non-greedy hereditary system without a swap-infeasible pair");
    return best;
}

// ---------------------------------------------------------------------------
// Direct enumeration over graphs

/// Maximal independent sets of g, in increasing mask order.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    if (g.order() > kOracleCap) throw InputError("oracle enumeration cap exceeded");
    const auto adj = HereditarySystem::adjacency_masks(g);
    const Subset all = (Subset{1} << g.order()) - 1;
    std::vector<VertexSet> out;
    for (Subset s = 0; s <= all; ++s) {
        if (!HereditarySystem::independent_mask(adj, s)) continue;
        Subset dominated = s;
        for (int v : members(s)) dominated |= adj[v];
        if (dominated == all) out.push_back(members(s));
        if (s == all) break;
    }
    return out;
}

/// Maximal matchings of g as sorted edge-index lists, in increasing mask order.
inline std::vector<Matching> maximal_matchings(const Graph& g) {
    if (g.size() > kOracleCap) throw InputError("oracle enumeration cap exceeded");
    std::vector<Matching> out;
    const Subset all = g.size() == 0 ? 0 : (Subset{1} << g.size()) - 1;
    const auto conflict = HereditarySystem::conflict_masks(g);
    for (Subset s = 0; s <= all; ++s) {
        if (!HereditarySystem::independent_mask(conflict, s)) continue;
        // Maximal: every edge is in s or conflicts with an edge of s.
        Subset blocked = s;
        for (Subset rest = s; rest != 0; rest &= rest - 1) blocked |= conflict[std::countr_zero(rest)];
        if (blocked == all) {
            auto ms = members(s);
            out.emplace_back(ms.begin(), ms.end());
        }
        if (s == all) break;
    }
    return out;
}

/// Equal-weight space of a family of sets over `dim` elements: w(S_1) = w(S_i) for all i.
template <class Family>
WeightSpace equal_weight_space(const Family& sets, std::size_t dim) {
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        RationalVector r(dim, Rational(0));
        for (auto x : sets.front()) r[x] += 1;
        for (auto x : sets[i]) r[x] -= 1;
        rows.push_back(std::move(r));
    }
    return nullspace(std::move(rows), dim);
}

inline WeightSpace oracle_wcw(const Graph& g) { return equal_weight_space(maximal_independent_sets(g), g.order()); }

inline WeightSpace oracle_evs(const Graph& g) { return equal_weight_space(maximal_matchings(g), g.size()); }

/// Same spaces, computed through the generic hereditary-system route.
inline WeightSpace oracle_space(const HereditarySystem& h) {
    std::vector<std::vector<int>> sets;
    for (Subset s : maximal_feasible_sets(h)) sets.push_back(members(s));
    return equal_weight_space(sets, h.ground_size());
}

}  // namespace wspace
