// Weighted complete graphs and exact min-cut S-vector computation.
//
// Vertices are 1..N: terminals [n], bulk n+1..N-1, sink N.  A cut is a vertex
// set W subseteq [N-1] (never the sink); its trace is W cap [n].  S_I is the
// minimum weight over cuts with trace exactly I, and W_I denotes the unique
// inclusion-minimal minimizer.  Cut masks use bit v-1 for vertex v.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "hec/linalg.hpp"
#include "hec/rational.hpp"
#include "hec/subset.hpp"
#include "hec/svector.hpp"

namespace hec {

struct WeightedGraph {
    int N = 0, n = 0;
    QVec w;  // dense upper-triangular weights, pair_index order

    WeightedGraph() = default;
    WeightedGraph(int N_, int n_) : N(N_), n(n_), w(size_t(N_) * (N_ - 1) / 2, Rat(0)) {
        if (n < 1 || N <= n) throw std::invalid_argument("WeightedGraph: need N > n >= 1");
    }

    static size_t pair_index(int i, int j, int N) {
        if (i > j) std::swap(i, j);
        if (i < 1 || j > N || i == j) throw std::invalid_argument("pair_index: bad edge");
        // edges (1,2),(1,3),...,(1,N),(2,3),...
        return size_t(i - 1) * N - size_t(i) * (i + 1) / 2 + (j - 1);
    }

    const Rat& weight(int i, int j) const { return w[pair_index(i, j, N)]; }
    void set_weight(int i, int j, const Rat& v) {
        if (v < 0) throw std::invalid_argument("set_weight: negative weight");
        w[pair_index(i, j, N)] = v;
    }
    void add_weight(int i, int j, const Rat& v) { w[pair_index(i, j, N)] += v; }

    size_t edge_count() const { return w.size(); }
    int bulk_count() const { return N - n - 1; }
    Mask terminal_mask() const { return full_mask(n); }
};

struct Cut {
    Mask W = 0;  // subset of [N-1]
    Mask trace(int n) const { return W & full_mask(n); }
};

// Total weight of edges with exactly one endpoint in W.
inline Rat cut_weight(const WeightedGraph& g, Mask W) {
    if (W >> (g.N - 1)) throw std::invalid_argument("cut_weight: cut contains the sink");
    Rat total = 0;
    for (int i = 1; i < g.N; ++i) {
        bool si = W >> (i - 1) & 1;
        for (int j = i + 1; j <= g.N; ++j) {
            bool sj = j == g.N ? false : (W >> (j - 1) & 1);
            if (si != sj) {
                const Rat& x = g.weight(i, j);
                if (x != 0) total += x;
            }
        }
    }
    return total;
}

struct ValidPair {
    SVector S;
    WeightedGraph g;
    std::vector<Mask> witnesses;  // minimal min-cut W_I per subset position
};

namespace detail {

// Exact max-flow between vertex sets (sources = I, sinks = rest of the
// extended terminals) with bulk free; returns the flow value and the minimal
// source-side min-cut (vertices reachable in the residual network).
inline std::pair<Rat, Mask> maxflow_mincut(const WeightedGraph& g, Mask I) {
    int N = g.N;
    int S = 0, T = N + 1;  // super source / super sink, vertices as 0..N+1
    // residual capacities, dense (N+2)^2; undirected edges get both arcs
    std::vector<QVec> cap(N + 2, QVec(N + 2, Rat(0)));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            const Rat& x = g.weight(i, j);
            if (x != 0) {
                cap[i][j] += x;
                cap[j][i] += x;
            }
        }
    Rat inf = 1;
    for (const Rat& x : g.w) inf += x < 0 ? -x : x;
    for (int i = 1; i <= g.n; ++i) {
        if (I >> (i - 1) & 1)
            cap[S][i] = inf;
        else
            cap[i][T] = inf;
    }
    cap[N][T] = inf;
    Rat flow = 0;
    std::vector<int> parent(N + 2);
    for (;;) {  // Edmonds-Karp
        std::fill(parent.begin(), parent.end(), -1);
        parent[S] = S;
        std::deque<int> q{S};
        while (!q.empty() && parent[T] < 0) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < N + 2; ++v)
                if (parent[v] < 0 && cap[u][v] > 0) {
                    parent[v] = u;
                    q.push_back(v);
                }
        }
        if (parent[T] < 0) break;
        Rat aug = inf;
        for (int v = T; v != S; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
        for (int v = T; v != S; v = parent[v]) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
    // minimal min-cut = residual-reachable vertices from S
    std::vector<bool> seen(N + 2, false);
    seen[S] = true;
    std::deque<int> q{S};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v = 0; v < N + 2; ++v)
            if (!seen[v] && cap[u][v] > 0) {
                seen[v] = true;
                q.push_back(v);
            }
    }
    Mask W = 0;
    for (int v = 1; v < N; ++v)
        if (seen[v]) W |= Mask(1) << (v - 1);
    return {flow, W};
}

}  // namespace detail

// Default switchover: exhaustive cut enumeration while the number of bulk
// vertices stays small, exact max-flow per subset beyond that.
inline constexpr int kEnumerationBulkLimit = 12;

// The min-cut S-vector of g together with the minimal min-cut witnesses.
inline ValidPair s_vector(const WeightedGraph& g, int enum_bulk_limit = kEnumerationBulkLimit) {
    const auto& tab = subsets(g.n);
    ValidPair vp;
    vp.S = SVector(g.n);
    vp.g = g;
    vp.witnesses.assign(tab.size(), 0);
    if (g.bulk_count() <= enum_bulk_limit) {
        std::vector<char> seen(tab.size(), 0);
        Mask tmask = g.terminal_mask();
        for (Mask W = 1; W < (Mask(1) << (g.N - 1)); ++W) {
            Mask I = W & tmask;
            if (I == 0) continue;
            int p = tab.position[I];
            Rat cw = cut_weight(g, W);
            if (!seen[p] || cw < vp.S.e[p]) {
                seen[p] = 1;
                vp.S.e[p] = cw;
                vp.witnesses[p] = W;
            } else if (cw == vp.S.e[p]) {
                // the intersection of min-cuts with equal trace is again a
                // min-cut, so folding in every minimizer lands on the unique
                // minimal one; strict improvements reset the fold above
                vp.witnesses[p] &= W;
            }
        }
    } else {
        for (size_t p = 0; p < tab.size(); ++p) {
            auto [flow, W] = detail::maxflow_mincut(g, tab.masks[p]);
            vp.S.e[p] = flow;
            vp.witnesses[p] = W;
        }
    }
    return vp;
}

inline Mask minimal_mincut(const WeightedGraph& g, Mask I) {
    if (I == 0 || I > full_mask(g.n)) throw std::invalid_argument("minimal_mincut: bad subset");
    if (g.bulk_count() > kEnumerationBulkLimit) return detail::maxflow_mincut(g, I).second;
    Mask tmask = g.terminal_mask();
    bool first = true;
    Rat best = 0;
    Mask W0 = 0;
    for (Mask W = 1; W < (Mask(1) << (g.N - 1)); ++W) {
        if ((W & tmask) != I) continue;
        Rat cw = cut_weight(g, W);
        if (first || cw < best) {
            best = cw;
            W0 = W;
            first = false;
        } else if (cw == best) {
            W0 &= W;
        }
    }
    return W0;
}

struct StructureReport {
    bool pass = true;
    Mask bad_I = 0, bad_J = 0;  // first failing pair, if any
    // Witness that minimal min-cut disjointness does not extend to triples:
    // pairwise-disjoint-free traces whose cuts share a vertex.
    bool triple_intersection_found = false;
    Mask triple[3] = {0, 0, 0};
};

// Checks nesting (I subseteq J iff W_I subseteq W_J) and disjointness
// (I cap J empty iff W_I cap W_J empty) on all pairs of traces.
inline StructureReport check_theorem_basic(const WeightedGraph& g) {
    ValidPair vp = s_vector(g);
    const auto& tab = subsets(g.n);
    StructureReport rep;
    for (size_t a = 0; a < tab.size() && rep.pass; ++a)
        for (size_t b = 0; b < tab.size(); ++b) {
            if (a == b) continue;
            Mask I = tab.masks[a], J = tab.masks[b];
            Mask WI = vp.witnesses[a], WJ = vp.witnesses[b];
            bool nest_sets = (I & ~J) == 0, nest_cuts = (WI & ~WJ) == 0;
            bool dis_sets = (I & J) == 0, dis_cuts = (WI & WJ) == 0;
            if (nest_sets != nest_cuts || dis_sets != dis_cuts) {
                rep.pass = false;
                rep.bad_I = I;
                rep.bad_J = J;
                break;
            }
        }
    for (size_t a = 0; a < tab.size() && !rep.triple_intersection_found; ++a)
        for (size_t b = a + 1; b < tab.size() && !rep.triple_intersection_found; ++b)
            for (size_t c = b + 1; c < tab.size(); ++c) {
                if (tab.masks[a] & tab.masks[b] & tab.masks[c]) continue;
                if (vp.witnesses[a] & vp.witnesses[b] & vp.witnesses[c]) {
                    rep.triple_intersection_found = true;
                    rep.triple[0] = tab.masks[a];
                    rep.triple[1] = tab.masks[b];
                    rep.triple[2] = tab.masks[c];
                    break;
                }
            }
    return rep;
}

// Star graph on K_{n+2}: center n+1, spokes of weight 1 to the terminals in J,
// sink spoke of weight 1 when |J| = 1 and |J|-1 otherwise.
inline WeightedGraph star_graph(int n, Mask J) {
    if (J == 0 || J > full_mask(n)) throw std::invalid_argument("star_graph: bad J");
    WeightedGraph g(n + 2, n);
    int center = n + 1, sink = n + 2;
    for (int i = 1; i <= n; ++i)
        if (J >> (i - 1) & 1) g.set_weight(i, center, 1);
    int k = popcount(J);
    g.set_weight(center, sink, k == 1 ? 1 : k - 1);
    return g;
}

// Rank of the matrix of all 2^n-1 star S-vectors; equals 2^n-1.
inline int star_basis_rank(int n) {
    const auto& tab = subsets(n);
    QMat m;
    m.reserve(tab.size());
    for (Mask J : tab.masks) m.push_back(s_vector(star_graph(n, J)).S.e);
    return rank_q(std::move(m));
}

// Glues graphs at their shared terminals and sink, bulk vertices renamed
// apart, each input scaled by its coefficient.
inline WeightedGraph merge_at_terminals(const std::vector<std::pair<Rat, WeightedGraph>>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge_at_terminals: empty input");
    int n = parts[0].second.n;
    int bulk_total = 0;
    for (const auto& [c, g] : parts) {
        if (g.n != n) throw std::invalid_argument("merge_at_terminals: mismatched n");
        if (c <= 0) throw std::invalid_argument("merge_at_terminals: coefficient must be positive");
        bulk_total += g.bulk_count();
    }
    WeightedGraph out(n + bulk_total + 1, n);
    int next_bulk = n + 1;
    for (const auto& [c, g] : parts) {
        auto map_vertex = [&](int v) {
            if (v <= n) return v;
            if (v == g.N) return out.N;
            return next_bulk + (v - n - 1);
        };
        for (int i = 1; i <= g.N; ++i)
            for (int j = i + 1; j <= g.N; ++j) {
                const Rat& x = g.weight(i, j);
                if (x != 0) out.add_weight(map_vertex(i), map_vertex(j), c * x);
            }
        next_bulk += g.bulk_count();
    }
    return out;
}

// Merges every vertex outside the union of the minimal min-cuts into the sink.
// The S-vector is preserved (re-verified).
inline WeightedGraph reduce_vertices(const WeightedGraph& g) {
    ValidPair vp = s_vector(g);
    Mask used = 0;
    for (Mask W : vp.witnesses) used |= W;
    std::vector<int> newlab(g.N + 1, 0);
    int next = 1;
    for (int v = 1; v < g.N; ++v)
        if (used >> (v - 1) & 1) newlab[v] = next++;
    int m = next - 1;  // surviving vertices; sink becomes m+1
    WeightedGraph out(m + 1, g.n);
    for (int i = 1; i <= g.N; ++i)
        for (int j = i + 1; j <= g.N; ++j) {
            const Rat& x = g.weight(i, j);
            if (x == 0) continue;
            int a = i < g.N && newlab[i] ? newlab[i] : m + 1;
            int b = j < g.N && newlab[j] ? newlab[j] : m + 1;
            if (a == b) continue;
            out.add_weight(a, b, x);
        }
    if (!(s_vector(out).S == vp.S)) throw std::logic_error("reduce_vertices: S-vector changed");
    return out;
}

// Bell pair: unit weight between two extended terminals, everything else zero.
inline WeightedGraph bell_pair(int n, int i, int j, int N = 0) {
    if (N == 0) N = n + 1;
    WeightedGraph g(N, n);
    g.set_weight(i, j, 1);
    return g;
}

}  // namespace hec
