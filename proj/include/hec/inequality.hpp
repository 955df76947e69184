// Entropy inequalities q.S >= 0 over H_n and their canonical form.
//
// The canonical form splits q into L positive terms alpha_l S_{I_l} and R
// negative terms beta_r S_{J_r}, with all coefficients positive and the index
// sets distinct and non-empty.  K is the support: the set of terminals that
// occur in some nonzero term.  When |K| < n the inequality is really one over
// H_{|K|}; relabeling K -> [|K|] order-preservingly gives that smaller form.

#pragma once

#include <stdexcept>

#include "hec/rational.hpp"
#include "hec/subset.hpp"

namespace hec {

struct Inequality {
    int n = 0;
    IVec q;  // coprime integers, subset-position order; q.S >= 0

    Inequality() = default;
    Inequality(int n_, IVec coeffs) : n(n_), q(std::move(coeffs)) {
        if (q.size() != subsets(n).size()) throw std::invalid_argument("Inequality: wrong length");
        normalize_content(q);
    }
    Inequality(int n_, const QVec& coeffs) : n(n_), q(to_coprime_integers(coeffs)) {
        if (q.size() != subsets(n).size()) throw std::invalid_argument("Inequality: wrong length");
    }

    const Int& at(Mask I) const { return q[subset_position(n, I)]; }
    Int& at(Mask I) { return q[subset_position(n, I)]; }

    bool operator==(const Inequality& o) const { return n == o.n && q == o.q; }
    bool operator<(const Inequality& o) const { return lex_cmp(q, o.q) < 0; }
};

// Builds an inequality from term lists: sum alpha_l S_{I_l} >= sum beta_r S_{J_r}.
inline Inequality make_inequality(int n, const std::vector<std::pair<Mask, long>>& lhs,
                                  const std::vector<std::pair<Mask, long>>& rhs) {
    IVec q(subsets(n).size(), 0);
    for (auto [I, a] : lhs) q[subset_position(n, I)] += a;
    for (auto [J, b] : rhs) q[subset_position(n, J)] -= b;
    return Inequality(n, std::move(q));
}

struct CanonicalForm {
    int n = 0;                 // terminal count of the input inequality
    std::vector<Mask> Isets;   // positive-coefficient index sets, position order
    std::vector<Int> alpha;    // matching positive coefficients
    std::vector<Mask> Jsets;   // negative-coefficient index sets, position order
    std::vector<Int> beta;     // matching (positive) magnitudes
    Mask support = 0;          // K: terminals with a nonzero occurrence
    Inequality relabeled;      // the same inequality over H_{|K|} (equals input when |K| = n)

    int L() const { return int(Isets.size()); }
    int R() const { return int(Jsets.size()); }
    bool full_support() const { return popcount(support) == n; }
};

inline CanonicalForm canonical_form(const Inequality& ineq) {
    if (is_zero(ineq.q)) throw std::invalid_argument("canonical_form: zero inequality");
    CanonicalForm cf;
    cf.n = ineq.n;
    const auto& tab = subsets(ineq.n);
    for (size_t p = 0; p < tab.size(); ++p) {
        if (ineq.q[p] == 0) continue;
        cf.support |= tab.masks[p];
        if (ineq.q[p] > 0) {
            cf.Isets.push_back(tab.masks[p]);
            cf.alpha.push_back(ineq.q[p]);
        } else {
            cf.Jsets.push_back(tab.masks[p]);
            cf.beta.push_back(-ineq.q[p]);
        }
    }
    int k = popcount(cf.support);
    if (k == ineq.n) {
        cf.relabeled = ineq;
    } else {
        // order-preserving relabeling of the support terminals onto [k]
        std::vector<int> newbit(ineq.n, -1);
        int next = 0;
        for (int i = 0; i < ineq.n; ++i)
            if (cf.support >> i & 1) newbit[i] = next++;
        IVec q(subsets(k).size(), 0);
        for (size_t p = 0; p < tab.size(); ++p) {
            if (ineq.q[p] == 0) continue;
            Mask I = tab.masks[p], J = 0;
            for (int i = 0; i < ineq.n; ++i)
                if (I >> i & 1) J |= Mask(1) << newbit[i];
            q[subset_position(k, J)] = ineq.q[p];
        }
        cf.relabeled = Inequality(k, std::move(q));
    }
    return cf;
}

// Monogamy of mutual information over H_n restricted to terminals {a,b,c}:
// S_ab + S_ac + S_bc >= S_a + S_b + S_c + S_abc.
inline Inequality mmi_inequality(int n, int a = 1, int b = 2, int c = 3) {
    Mask A = Mask(1) << (a - 1), B = Mask(1) << (b - 1), C = Mask(1) << (c - 1);
    return make_inequality(n, {{A | B, 1}, {A | C, 1}, {B | C, 1}},
                           {{A, 1}, {B, 1}, {C, 1}, {A | B | C, 1}});
}

// Subadditivity S_a + S_b >= S_ab over H_n.
inline Inequality sa_inequality(int n, int a = 1, int b = 2) {
    Mask A = Mask(1) << (a - 1), B = Mask(1) << (b - 1);
    return make_inequality(n, {{A, 1}, {B, 1}}, {{A | B, 1}});
}

}  // namespace hec
