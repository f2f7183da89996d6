// Maximum-weight matching on general graphs by Edmonds' primal-dual blossom
// method in the O(n^3) formulation of Galil (1986), following the structure of
// Joris van Rantwijk's public-domain reference implementation.
//
// Vertex duals are stored doubled, so edge slack is u_i + u_j - 2 w_ij.

#include "dynmatch/harness/reference.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dynmatch::harness {

namespace {

class BlossomSolver {
public:
    explicit BlossomSolver(const DynamicGraph& g) : n_(static_cast<int>(g.vertex_count())) {
        edges_ = g.edges();
        const int m = static_cast<int>(edges_.size());
        endpoint_.resize(2 * static_cast<std::size_t>(m));
        neighbend_.resize(n_);
        Weight max_weight = 0;
        for (int k = 0; k < m; ++k) {
            const auto& e = edges_[k];
            endpoint_[2 * k] = static_cast<int>(e.u);
            endpoint_[2 * k + 1] = static_cast<int>(e.v);
            neighbend_[e.u].push_back(2 * k + 1);
            neighbend_[e.v].push_back(2 * k);
            max_weight = std::max(max_weight, e.w);
        }
        const std::size_t nn = 2 * static_cast<std::size_t>(n_);
        mate_.assign(n_, -1);
        label_.assign(nn, 0);
        labelend_.assign(nn, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            inblossom_[v] = v;
        }
        blossomparent_.assign(nn, -1);
        blossomchilds_.assign(nn, {});
        blossombase_.assign(nn, -1);
        for (int v = 0; v < n_; ++v) {
            blossombase_[v] = v;
        }
        blossomendps_.assign(nn, {});
        bestedge_.assign(nn, -1);
        blossombestedges_.assign(nn, {});
        has_bestedges_.assign(nn, false);
        for (int b = 2 * n_ - 1; b >= n_; --b) {
            unused_.push_back(b);
        }
        dualvar_.assign(nn, 0);
        for (int v = 0; v < n_; ++v) {
            dualvar_[v] = max_weight;
        }
        allowedge_.assign(m, false);
    }

    oracle::ExactMatching solve() {
        for (int stage = 0; stage < n_; ++stage) {
            if (!run_stage()) {
                break;
            }
        }
        oracle::ExactMatching out;
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0) {
                const int w = endpoint_[mate_[v]];
                if (v < w) {
                    const Edge& e = edges_[mate_[v] / 2];
                    out.edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(w), e.w});
                    out.weight += e.w;
                }
            }
        }
        std::ranges::sort(out.edges, [](const Edge& a, const Edge& b) {
            return a.u != b.u ? a.u < b.u : a.v < b.v;
        });
        return out;
    }

private:
    Weight slack(int k) const {
        const auto& e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.w;
    }

    void leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (const int t : blossomchilds_[b]) {
            leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    static int wrap(int j, std::size_t size) {
        const int s = static_cast<int>(size);
        return ((j % s) + s) % s;
    }

    void assign_label(int w, int t, int p) {
        const int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else {
            const int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    // Walks up from v and w; returns the base of a new blossom or -1 if the
    // two trees differ (augmenting path).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (const int b : path) {
            label_[b] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = static_cast<int>(edges_[k].u);
        int w = static_cast<int>(edges_[k].v);
        const int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
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
        std::ranges::reverse(path);
        std::ranges::reverse(endps);
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (const int x : leaves(b)) {
            if (label_[inblossom_[x]] == 2) {
                queue_.push_back(x);
            }
            inblossom_[x] = b;
        }

        std::vector<int> bestedgeto(2 * static_cast<std::size_t>(n_), -1);
        for (const int child : path) {
            std::vector<int> candidates;
            if (!has_bestedges_[child]) {
                for (const int x : leaves(child)) {
                    for (const int p : neighbend_[x]) {
                        candidates.push_back(p / 2);
                    }
                }
            } else {
                candidates = blossombestedges_[child];
            }
            for (const int e : candidates) {
                int i = static_cast<int>(edges_[e].u);
                int j = static_cast<int>(edges_[e].v);
                if (inblossom_[j] == b) {
                    std::swap(i, j);
                }
                const int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj]))) {
                    bestedgeto[bj] = e;
                }
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = false;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (const int e : bestedgeto) {
            if (e != -1) {
                blossombestedges_[b].push_back(e);
            }
        }
        has_bestedges_[b] = true;
        bestedge_[b] = -1;
        for (const int e : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) {
                bestedge_[b] = e;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (const int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (const int x : leaves(s)) {
                    inblossom_[x] = s;
                }
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& childs = blossomchilds_[b];
            const auto& endps = blossomendps_[b];
            const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::ranges::find(childs, entrychild) - childs.begin());
            int jstep = 0;
            int endptrick = 0;
            if (j & 1) {
                j -= static_cast<int>(childs.size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endps[wrap(j - endptrick, endps.size())] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endps[wrap(j - endptrick, endps.size())] / 2] = true;
                j += jstep;
                p = endps[wrap(j - endptrick, endps.size())] ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = childs[wrap(j, childs.size())];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (childs[wrap(j, childs.size())] != entrychild) {
                bv = childs[wrap(j, childs.size())];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int labelled = -1;
                for (const int x : leaves(bv)) {
                    if (label_[x] != 0) {
                        labelled = x;
                        break;
                    }
                }
                if (labelled != -1) {
                    label_[labelled] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(labelled, 2, labelend_[labelled]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) {
            t = blossomparent_[t];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto& childs = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        const int i = static_cast<int>(std::ranges::find(childs, t) - childs.begin());
        int j = i;
        int jstep = 0;
        int endptrick = 0;
        if (i & 1) {
            j -= static_cast<int>(childs.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = childs[wrap(j, childs.size())];
            const int p = endps[wrap(j - endptrick, endps.size())] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[p]);
            }
            j += jstep;
            t = childs[wrap(j, childs.size())];
            if (t >= n_) {
                augment_blossom(t, endpoint_[p ^ 1]);
            }
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::ranges::rotate(childs, childs.begin() + i);
        std::ranges::rotate(endps, endps.begin() + i);
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(int k) {
        const int v = static_cast<int>(edges_[k].u);
        const int w = static_cast<int>(edges_[k].v);
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                const int bs = inblossom_[s];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[s] = p;
                if (labelend_[bs] == -1) {
                    break;
                }
                const int t = endpoint_[labelend_[bs]];
                const int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                const int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    // One stage: grow alternating trees and adjust duals until an augmentation
    // or until no further improvement is possible. Returns whether it augmented.
    bool run_stage() {
        const std::size_t nn = 2 * static_cast<std::size_t>(n_);
        std::ranges::fill(label_, 0);
        std::ranges::fill(bestedge_, -1);
        for (std::size_t b = static_cast<std::size_t>(n_); b < nn; ++b) {
            blossombestedges_[b].clear();
            has_bestedges_[b] = false;
        }
        std::fill(allowedge_.begin(), allowedge_.end(), false);
        queue_.clear();
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                const int v = queue_.back();
                queue_.pop_back();
                for (const int p : neighbend_[v]) {
                    const int k = p / 2;
                    const int w = endpoint_[p];
                    if (inblossom_[v] == inblossom_[w]) {
                        continue;
                    }
                    Weight kslack = 0;
                    if (!allowedge_[k]) {
                        kslack = slack(k);
                        if (kslack <= 0) {
                            allowedge_[k] = true;
                        }
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
                            label_[w] = 2;
                            labelend_[w] = p ^ 1;
                        }
                    } else if (label_[inblossom_[w]] == 1) {
                        const int b = inblossom_[v];
                        if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                            bestedge_[b] = k;
                        }
                    } else if (label_[w] == 0) {
                        if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                            bestedge_[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }

            int deltatype = 1;
            Weight delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
            int deltaedge = -1;
            int deltablossom = -1;
            for (int v = 0; v < n_; ++v) {
                if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                    const Weight d = slack(bestedge_[v]);
                    if (d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[v];
                    }
                }
            }
            for (int b = 0; b < 2 * n_; ++b) {
                if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                    const Weight d = slack(bestedge_[b]) / 2;
                    if (d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
            }
            for (int b = n_; b < 2 * n_; ++b) {
                if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 && dualvar_[b] < delta) {
                    delta = dualvar_[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }

            for (int v = 0; v < n_; ++v) {
                if (label_[inblossom_[v]] == 1) {
                    dualvar_[v] -= delta;
                } else if (label_[inblossom_[v]] == 2) {
                    dualvar_[v] += delta;
                }
            }
            for (int b = n_; b < 2 * n_; ++b) {
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
            }
            if (deltatype == 2) {
                allowedge_[deltaedge] = true;
                int i = static_cast<int>(edges_[deltaedge].u);
                if (label_[inblossom_[i]] == 0) {
                    i = static_cast<int>(edges_[deltaedge].v);
                }
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allowedge_[deltaedge] = true;
                queue_.push_back(static_cast<int>(edges_[deltaedge].u));
            } else {
                expand_blossom(deltablossom, false);
            }
        }

        if (!augmented) {
            return false;
        }
        for (int b = n_; b < 2 * n_; ++b) {
            if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                expand_blossom(b, true);
            }
        }
        return true;
    }

    int n_;
    std::vector<Edge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;  // remote endpoint index, -1 if free
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unused_;
    std::vector<Weight> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

} // namespace

oracle::ExactMatching blossom_mwm(const DynamicGraph& g) {
    if (g.edge_count() == 0) {
        return {};
    }
    return BlossomSolver(g).solve();
}

} // namespace dynmatch::harness
