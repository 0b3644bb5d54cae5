#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "weightspace/errors.hpp"
#include "weightspace/graph.hpp"

namespace wspace {

namespace detail {

/// Maximum-weight matching on a general graph by the primal-dual blossom
/// method (Edmonds; Galil's O(n^3) organisation). Vertex duals are stored
/// doubled so that integer edge weights keep every quantity integral.
///
/// Endpoints are numbered 2k and 2k+1 for edge k = (u, v): endpoint 2k is u,
/// 2k+1 is v. `mate_[v]` is the endpoint at the far side of v's matched edge.
/// Blossoms take ids n..2n-1. One instance solves one problem.
class BlossomSolver {
public:
    BlossomSolver(const Graph& g, std::span<const Weight> weights)
        : nv_(static_cast<int>(g.order())), ne_(static_cast<int>(g.size())) {
        if (weights.size() != g.size()) throw InputError("one weight per edge required");
        Weight max_weight = 0;
        for (Weight w : weights) {
            if (w < 0) throw InputError("matching weights must be non-negative");
            max_weight = std::max(max_weight, w);
        }
        edges_.reserve(ne_);
        for (int k = 0; k < ne_; ++k) {
            const auto& e = g.edge(k);
            edges_.push_back({e.u, e.v, weights[k]});
        }
        endpoint_.resize(2 * ne_);
        neighbend_.assign(nv_, {});
        for (int k = 0; k < ne_; ++k) {
            endpoint_[2 * k] = edges_[k].u;
            endpoint_[2 * k + 1] = edges_[k].v;
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        const int nb = 2 * nv_;
        mate_.assign(nv_, -1);
        label_.assign(nb, 0);
        labelend_.assign(nb, -1);
        inblossom_.resize(nv_);
        std::iota(inblossom_.begin(), inblossom_.end(), 0);
        blossomparent_.assign(nb, -1);
        blossomchilds_.assign(nb, {});
        blossombase_.assign(nb, -1);
        for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
        blossomendps_.assign(nb, {});
        bestedge_.assign(nb, -1);
        blossombestedges_.assign(nb, {});
        has_bestedges_.assign(nb, 0);
        for (int b = nv_; b < nb; ++b) unused_.push_back(b);
        dualvar_.assign(nb, 0);
        for (int v = 0; v < nv_; ++v) dualvar_[v] = max_weight;
        allowedge_.assign(ne_, 0);
    }

    /// Returns mate endpoints per vertex after solving.
    std::vector<int> solve() {
        for (int stage = 0; stage < nv_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < nv_; ++v) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    const int v = queue_.back();
                    queue_.pop_back();
                    check_invariant(label_[inblossom_[v]] == 1, "queued vertex is not an S-vertex");
                    for (int p : neighbend_[v]) {
                        const int k = p / 2;
                        const int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        Weight kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                check_invariant(label_[inblossom_[w]] == 2, "expected T-blossom");
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            const int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // Dual adjustment.
                int deltatype = 1;
                Weight delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
                int deltaedge = -1;
                int deltablossom = -1;
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        const Weight d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        const Weight kslack = slack(bestedge_[b]);
                        check_invariant(kslack % 2 == 0, "odd slack between S-blossoms");
                        const Weight d = kslack / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }
                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].u;
                    int j = edges_[deltaedge].v;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    check_invariant(label_[inblossom_[i]] == 1, "delta2 edge without S endpoint");
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    const int i = edges_[deltaedge].u;
                    check_invariant(label_[inblossom_[i]] == 1, "delta3 edge without S endpoint");
                    queue_.push_back(i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nv_; b < 2 * nv_; ++b) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        return mate_;
    }

private:
    struct WEdge {
        int u;
        int v;
        Weight w;
    };

    Weight slack(int k) const {
        return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].w;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        blossom_leaves(b, out);
        return out;
    }

    static int wrap(int j, int len) { return ((j % len) + len) % len; }

    void assign_label(int w, int t, int p) {
        const int b = inblossom_[w];
        check_invariant(label_[w] == 0 && label_[b] == 0, "relabeling a labeled vertex");
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            blossom_leaves(b, queue_);
        } else if (t == 2) {
            const int base = blossombase_[b];
            check_invariant(mate_[base] >= 0, "T-blossom base is unmatched");
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    /// Traces back from v and w; returns the base of a new blossom, or -1 when
    /// an augmenting path was found.
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            check_invariant(label_[b] == 1, "scan hit a non-S blossom");
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                check_invariant(label_[b] == 2, "scan expected a T-blossom");
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].u;
        int w = edges_[k].v;
        const int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        check_invariant(!unused_.empty(), "out of blossom ids");
        const int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto& path = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        check_invariant(label_[bb] == 1, "blossom base is not an S-blossom");
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }
        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int sub : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[sub]) {
                for (int leaf : leaves(sub)) {
                    for (int p : neighbend_[leaf]) candidates.push_back(p / 2);
                }
            } else {
                candidates = blossombestedges_[sub];
            }
            for (int kk : candidates) {
                int i = edges_[kk].u;
                int j = edges_[kk].v;
                if (inblossom_[j] == b) std::swap(i, j);
                const int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = kk;
                }
            }
            blossombestedges_[sub].clear();
            has_bestedges_[sub] = 0;
            bestedge_[sub] = -1;
        }
        auto& mine = blossombestedges_[b];
        mine.clear();
        for (int kk : bestedgeto) {
            if (kk != -1) mine.push_back(kk);
        }
        has_bestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int kk : mine) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
        }
    }

    void expand_blossom(int b, bool endstage) {
        const std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            check_invariant(labelend_[b] >= 0, "T-blossom without label edge");
            const auto& ch = blossomchilds_[b];
            const auto& endps = blossomendps_[b];
            const int len = static_cast<int>(ch.size());
            const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep = 0;
            int endptrick = 0;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endps[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endps[wrap(j - endptrick, len)] / 2] = 1;
                j += jstep;
                p = endps[wrap(j - endptrick, len)] ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = ch[wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, len)] != entrychild) {
                bv = ch[wrap(j, len)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found != -1) {
                    check_invariant(label_[found] == 2, "expected T label inside sub-blossom");
                    check_invariant(inblossom_[found] == bv, "leaf outside its sub-blossom");
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = 0;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        auto& ch = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        const int len = static_cast<int>(ch.size());
        const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep = 0;
        int endptrick = 0;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, len)];
            const int p = endps[wrap(j - endptrick, len)] ^ endptrick;
            if (t >= nv_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = ch[wrap(j, len)];
            if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[ch[0]];
        check_invariant(blossombase_[b] == v, "augmented blossom has the wrong base");
    }

    void augment_matching(int k) {
        const int v = edges_[k].u;
        const int w = edges_[k].v;
        const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
        for (const auto& start : starts) {
            int s = start[0];
            int p = start[1];
            while (true) {
                const int bs = inblossom_[s];
                check_invariant(label_[bs] == 1, "augmenting through a non-S blossom");
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                const int t = endpoint_[labelend_[bs]];
                const int bt = inblossom_[t];
                check_invariant(label_[bt] == 2, "augmenting path expected a T-blossom");
                s = endpoint_[labelend_[bt]];
                const int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= nv_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_;
    int ne_;
    std::vector<WEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<char> has_bestedges_;
    std::vector<int> unused_;
    std::vector<Weight> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
};

}  // namespace detail

inline Weight matching_weight(std::span<const EdgeIndex> m, std::span<const Weight> weights) {
    Weight total = 0;
    for (EdgeIndex e : m) total += weights[e];
    return total;
}

/// A matching of maximum total weight. Weights are per edge index and must be
/// non-negative. Zero-weight edges may be left out; the result need not be
/// maximal as an edge set. Ties between optima are broken arbitrarily.
inline Matching max_weight_matching(const Graph& g, std::span<const Weight> weights) {
    if (g.size() == 0) {
        if (!weights.empty()) throw InputError("one weight per edge required");
        return {};
    }
    detail::BlossomSolver solver(g, weights);
    const auto mate = solver.solve();
    Matching m;
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (mate[v] >= 0) {
            const auto k = static_cast<EdgeIndex>(mate[v] / 2);
            if (g.edge(k).u == v) m.push_back(k);
        }
    }
    m = make_matching(std::move(m));
    check_invariant(is_matching(g, m), "blossom solver returned a non-matching");
    return m;
}

/// Extends m greedily over the remaining edges in index order to a maximal matching.
inline Matching extend_to_maximal(const Graph& g, std::span<const EdgeIndex> m) {
    if (!is_matching(g, m)) throw InputError("input is not a matching");
    std::vector<char> covered(g.order(), 0);
    Matching out(m.begin(), m.end());
    for (EdgeIndex i : m) covered[g.edge(i).u] = covered[g.edge(i).v] = 1;
    for (EdgeIndex i = 0; i < g.size(); ++i) {
        const auto& e = g.edge(i);
        if (!covered[e.u] && !covered[e.v]) {
            out.push_back(i);
            covered[e.u] = covered[e.v] = 1;
        }
    }
    return make_matching(std::move(out));
}

}  // namespace wspace
