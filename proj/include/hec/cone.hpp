// Rational polyhedral cone representations.
//
// An H-representation lists inequality normals a (meaning a.x >= 0) plus
// optional equality normals in `lines`.  A V-representation lists extreme-ray
// directions plus optional lineality generators in `lines`.  Rows are stored
// as coprime integer vectors and deduplicated.

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hec/linalg.hpp"
#include "hec/rational.hpp"

namespace hec {

enum class RepKind { H, V };

struct ConeRep {
    RepKind kind = RepKind::H;
    int dim = 0;
    std::vector<IVec> rows;
    std::vector<IVec> lines;  // lineality (V) or equality normals (H)
    std::string name;

    ConeRep() = default;
    ConeRep(RepKind k, int d) : kind(k), dim(d) {}

    void add_row(IVec v) {
        if (int(v.size()) != dim) throw std::invalid_argument("ConeRep: row length mismatch");
        normalize_content(v);
        if (is_zero(v)) return;
        rows.push_back(std::move(v));
    }
    void add_row(const QVec& v) { add_row(to_coprime_integers(v)); }

    void dedup_rows() {
        std::sort(rows.begin(), rows.end(), [](const IVec& a, const IVec& b) { return lex_cmp(a, b) < 0; });
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }

    bool same_rows(const ConeRep& o) const {
        auto a = rows, b = o.rows;
        auto less = [](const IVec& x, const IVec& y) { return lex_cmp(x, y) < 0; };
        std::sort(a.begin(), a.end(), less);
        std::sort(b.begin(), b.end(), less);
        return a == b;
    }
};

inline Int dot_ii(const IVec& a, const IVec& b) {
    Int s = 0, t;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0 || b[i] == 0) continue;
        mpz_mul(t.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
        s += t;
    }
    return s;
}

}  // namespace hec
