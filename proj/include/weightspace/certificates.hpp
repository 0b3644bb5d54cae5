#pragma once

#include <variant>

#include "weightspace/evs.hpp"
#include "weightspace/graph.hpp"
#include "weightspace/wcw.hpp"

namespace wspace {

/// Both matchings maximal and their symmetric difference exactly `edges`.
inline bool witness_realises(const Graph& g, const SymDiffWitness& w, std::vector<EdgeIndex> edges) {
    edges = make_matching(std::move(edges));
    return is_maximal_matching(g, w.first) && is_maximal_matching(g, w.second) &&
           symmetric_difference(w.first, w.second) == edges;
}

/// S ∪ X and S ∪ Y are maximal independent sets, and the coefficients encode w(X) = w(Y).
inline bool certificate_holds(const Graph& g, const WcwRestriction& r) {
    const auto& [core, witness] = r.provenance;
    if (!is_valid_core(g, core)) return false;
    auto with = [&](const VertexSet& side) {
        VertexSet s = witness;
        s.insert(s.end(), side.begin(), side.end());
        return make_vertex_set(std::move(s));
    };
    return is_maximal_independent(g, with(core.x)) && is_maximal_independent(g, with(core.y)) &&
           r.coeffs == detail::core_coefficients(g.order(), core);
}

/// The witness pair realises the path or cycle, and the coefficients are
/// (odd-position edges) - (even-position edges).
inline bool certificate_holds(const Graph& g, const EvsRestriction& r) {
    return std::visit(
        [&](const auto& cert) {
            const auto edges = [&] {
                if constexpr (std::is_same_v<std::decay_t<decltype(cert)>, PathCertificate>) {
                    return cert.path.edge_indices(g);
                } else {
                    return cert.cycle.edge_indices(g);
                }
            }();
            RationalVector expected(g.size(), Rational(0));
            for (std::size_t i = 0; i < edges.size(); ++i) expected[edges[i]] += (i % 2 == 0) ? 1 : -1;
            return r.coeffs == expected && witness_realises(g, cert.witness, edges);
        },
        r.provenance);
}

}  // namespace wspace
