// S-vectors: length 2^n-1 vectors of cut weights indexed by SubsetTable order.

#pragma once

#include <stdexcept>

#include "hec/rational.hpp"
#include "hec/subset.hpp"

namespace hec {

struct SVector {
    int n = 0;
    QVec e;  // 2^n - 1 entries in subset-position order

    SVector() = default;
    explicit SVector(int n_) : n(n_), e(subsets(n_).size(), Rat(0)) {}
    SVector(int n_, QVec entries) : n(n_), e(std::move(entries)) {
        if (e.size() != subsets(n).size()) throw std::invalid_argument("SVector: wrong length");
    }

    const Rat& at(Mask I) const { return e[subset_position(n, I)]; }
    Rat& at(Mask I) { return e[subset_position(n, I)]; }

    bool operator==(const SVector& o) const { return n == o.n && e == o.e; }
};

// S_I + S_J - S_{I union J} for disjoint non-empty I, J.
inline Rat mutual_information(const SVector& s, Mask I, Mask J) {
    if (I == 0 || J == 0) throw std::invalid_argument("mutual_information: empty subset");
    if (I & J) throw std::invalid_argument("mutual_information: overlapping subsets");
    if ((I | J) > full_mask(s.n)) throw std::invalid_argument("mutual_information: out of range");
    return s.at(I) + s.at(J) - s.at(I | J);
}

}  // namespace hec
