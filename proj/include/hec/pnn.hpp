// The lifted cone P_{N,n} over variables (S, w) and its projection machinery.
//
// Coordinates: the 2^n-1 S-entries in subset order, then the N(N-1)/2 edge
// weights in pair order.  Rows are S_I <= ||C(W)|| for every cut W with
// non-empty trace, plus w(e) >= 0.

#pragma once

#include "hec/cone.hpp"
#include "hec/dd.hpp"
#include "hec/graph.hpp"
#include "hec/inequality.hpp"
#include "hec/lp.hpp"
#include "hec/subset.hpp"
#include "hec/svector.hpp"

namespace hec {

inline int pnn_dim(int n, int N) { return int(subsets(n).size()) + N * (N - 1) / 2; }

struct LiftedVector {
    int n = 0, N = 0;
    IVec v;  // S-part then w-part

    IVec s_part() const {
        return IVec(v.begin(), v.begin() + subsets(n).size());
    }
    QVec w_part() const {
        QVec w(v.size() - subsets(n).size());
        for (size_t i = 0; i < w.size(); ++i) w[i] = Rat(v[subsets(n).size() + i]);
        return w;
    }
    WeightedGraph graph() const {
        WeightedGraph g(N, n);
        size_t off = subsets(n).size();
        for (size_t i = 0; i < g.w.size(); ++i) g.w[i] = Rat(v[off + i]);
        return g;
    }
    int single_nonzero() const {  // index of the only nonzero entry, or -1
        int idx = -1;
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (idx >= 0) return -1;
            idx = int(i);
        }
        return idx;
    }
    // -1 on one S coordinate
    bool is_trivial_neg_s() const {
        int idx = single_nonzero();
        return idx >= 0 && size_t(idx) < subsets(n).size() && v[idx] == -1;
    }
    // +1 on one w coordinate
    bool is_trivial_unit_w() const {
        int idx = single_nonzero();
        return idx >= 0 && size_t(idx) >= subsets(n).size() && v[idx] == 1;
    }
    bool is_trivial() const { return is_trivial_neg_s() || is_trivial_unit_w(); }
};

// All cuts W subseteq [N-1] with non-empty trace, as (trace position, cut mask),
// ordered by trace position then cut mask.
inline std::vector<std::pair<int, Mask>> pnn_cuts(int n, int N) {
    const auto& tab = subsets(n);
    std::vector<std::pair<int, Mask>> cuts;
    for (size_t p = 0; p < tab.size(); ++p) {
        Mask bulk = (full_mask(N - 1) ^ full_mask(n));
        Mask sub = 0;
        do {  // iterate subsets of the bulk mask
            cuts.emplace_back(int(p), tab.masks[p] | sub);
            sub = (sub - bulk) & bulk;
        } while (sub);
    }
    return cuts;
}

// H-representation of P_{N,n}: one row -S_I + sum_{e in C(W)} w_e >= 0 per cut,
// plus nonnegativity of each weight.  Optionally also S_I >= 0 rows.
inline ConeRep generate_pnn(int n, int N, bool nonneg_s = false) {
    if (!(3 <= n + 1 && n + 1 <= N)) throw std::invalid_argument("generate_pnn: need 3 <= n+1 <= N");
    int dim = pnn_dim(n, N);
    size_t soff = subsets(n).size();
    ConeRep rep(RepKind::H, dim);
    rep.name = "P" + std::to_string(N) + "-" + std::to_string(n);
    for (auto [p, W] : pnn_cuts(n, N)) {
        IVec row(dim, 0);
        row[p] = -1;
        for (int i = 1; i < N; ++i) {
            bool si = W >> (i - 1) & 1;
            for (int j = i + 1; j <= N; ++j) {
                bool sj = j == N ? false : (W >> (j - 1) & 1);
                if (si != sj) row[soff + WeightedGraph::pair_index(i, j, N)] += 1;
            }
        }
        rep.rows.push_back(std::move(row));
    }
    for (int e = 0; e < N * (N - 1) / 2; ++e) {
        IVec row(dim, 0);
        row[soff + e] = 1;
        rep.rows.push_back(std::move(row));
    }
    if (nonneg_s) {
        for (size_t p = 0; p < soff; ++p) {
            IVec row(dim, 0);
            row[p] = 1;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

// Drops trivial rays, truncates to the S-part, deduplicates and removes
// redundant rays: a V-representation of H_{N,n} from the rays of P_{N,n}.
inline ConeRep project_to_S(const ConeRep& rays, int n, int N) {
    if (rays.kind != RepKind::V) throw std::invalid_argument("project_to_S: V-rep expected");
    if (rays.dim != pnn_dim(n, N)) throw std::invalid_argument("project_to_S: wrong dimension");
    size_t soff = subsets(n).size();
    ConeRep out(RepKind::V, int(soff));
    for (const auto& r : rays.rows) {
        LiftedVector lv{n, N, r};
        if (lv.is_trivial()) continue;
        IVec s(r.begin(), r.begin() + soff);
        if (is_zero(s)) continue;
        normalize_content(s);
        out.rows.push_back(std::move(s));
    }
    out.dedup_rows();
    return remove_redundancy(out);
}

// Realizability via the polyhedron Q = P_{N,n} cap {S = Sbar}: enumerate its
// vertices (in w-space) and recheck each candidate weight vector by an exact
// min-cut computation.  A vertex failing the recheck is not a counterexample;
// Sbar is realizable in K_N iff some vertex passes.
struct QVertexResult {
    bool realizable = false;
    WeightedGraph witness;
    size_t vertices_checked = 0;
};

inline QVertexResult q_vertex_realizability(const SVector& sbar, int N, const DDOptions& opt = {}) {
    int n = sbar.n;
    for (const Rat& x : sbar.e)
        if (x < 0) throw std::invalid_argument("q_vertex_realizability: negative entry");
    int ne = N * (N - 1) / 2;
    // homogenize: coordinates (x0, w); rows ||C(W)||.w - S_I x0 >= 0, w >= 0, x0 >= 0
    ConeRep rep(RepKind::H, ne + 1);
    size_t soff = subsets(n).size();
    ConeRep pnn = generate_pnn(n, N);
    // scale Sbar to integers once
    Int denom = 1;
    for (const Rat& x : sbar.e) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den().get_mpz_t());
    for (const auto& row : pnn.rows) {
        bool is_cut = false;
        IVec out(ne + 1, 0);
        for (size_t p = 0; p < soff; ++p)
            if (row[p] != 0) {
                is_cut = true;
                Rat c = Rat(row[p]) * sbar.e[p] * denom;
                out[0] += c.get_num();  // -S_I * x0 contribution (row[p] = -1)
            }
        for (int e = 0; e < ne; ++e) out[1 + e] = row[soff + e];
        if (!is_cut && is_zero(out)) continue;
        rep.add_row(std::move(out));
    }
    {
        IVec x0(ne + 1, 0);
        x0[0] = 1;
        rep.add_row(std::move(x0));
    }
    ConeRep vrep = dd_convert(rep, opt);
    QVertexResult res;
    for (const auto& r : vrep.rows) {
        if (r[0] == 0) continue;  // recession direction, not a vertex
        ++res.vertices_checked;
        WeightedGraph g(N, n);
        for (int e = 0; e < ne; ++e) g.w[e] = Rat(r[1 + e], r[0]);
        for (auto& x : g.w) x.canonicalize();
        if (s_vector(g).S == sbar) {
            res.realizable = true;
            res.witness = g;
            return res;
        }
    }
    return res;
}

}  // namespace hec
