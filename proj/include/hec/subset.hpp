// Subset indexing for S-vectors.
//
// An S-vector on n terminals has one entry per non-empty I subseteq [n].
// Entries are ordered by cardinality and then lexicographically on the sorted
// element lists: S_1, S_2, ..., S_n, S_12, S_13, ..., S_12...n.
// Subsets are bitmasks with bit i-1 standing for terminal i; the sink never
// appears in a mask (sink-containing index sets are handled by complementation
// in the symmetry layer).

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hec {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return (Mask(1) << n) - 1; }

// Compares subsets of equal cardinality by their sorted element lists.
inline bool subset_lex_less(Mask a, Mask b) {
    while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

// Index tables for one value of n.  Cheap to build (n <= 16), cached by users.
struct SubsetTable {
    int n = 0;
    std::vector<Mask> masks;    // position -> mask
    std::vector<int> position;  // mask -> position (size 2^n)

    explicit SubsetTable(int n_) : n(n_) {
        if (n < 1 || n > 16) throw std::invalid_argument("SubsetTable: n out of range");
        masks.reserve((size_t(1) << n) - 1);
        for (Mask m = 1; m < (Mask(1) << n); ++m) masks.push_back(m);
        std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
            int pa = popcount(a), pb = popcount(b);
            if (pa != pb) return pa < pb;
            return subset_lex_less(a, b);
        });
        position.assign(size_t(1) << n, -1);
        for (size_t p = 0; p < masks.size(); ++p) position[masks[p]] = int(p);
    }

    size_t size() const { return masks.size(); }
};

inline const SubsetTable& subsets(int n) {
    static std::array<const SubsetTable*, 17> cache{};
    if (n < 1 || n > 16) throw std::invalid_argument("subsets: n out of range");
    if (!cache[n]) cache[n] = new SubsetTable(n);
    return *cache[n];
}

// 0-based position of non-empty I in the S-vector ordering.
inline int subset_position(int n, Mask I) {
    if (n < 1) throw std::invalid_argument("subset_position: n < 1");
    if (I == 0 || I > full_mask(n)) throw std::invalid_argument("subset_position: bad subset");
    return subsets(n).position[I];
}

inline Mask position_subset(int n, int pos) {
    const auto& t = subsets(n);
    if (pos < 0 || size_t(pos) >= t.size()) throw std::invalid_argument("position_subset: bad position");
    return t.masks[pos];
}

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> e;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) e.push_back(i + 1);
    return e;
}

inline std::string mask_str(Mask m) {
    std::string s;
    for (int v : mask_elements(m)) s += std::to_string(v);
    return s;
}

}  // namespace hec
