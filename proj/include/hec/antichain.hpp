// Pairwise intersecting antichains in the Boolean lattice of [n].
//
// Members are non-empty subsets of [n], pairwise incomparable and pairwise
// intersecting; the empty family and singleton families count.  M(n) bounds
// the complete-graph size needed to realize every S-vector on n terminals.

#pragma once

#include <cstdint>
#include <vector>

#include "hec/rational.hpp"
#include "hec/subset.hpp"

namespace hec {

namespace detail {

inline void antichain_dfs(const std::vector<Mask>& all, size_t start,
                          std::vector<Mask>& chosen, std::uint64_t& count,
                          std::uint64_t limit) {
    ++count;
    if (count > limit) throw ResourceLimitError("antichain enumeration limit exceeded");
    for (size_t i = start; i < all.size(); ++i) {
        Mask c = all[i];
        bool ok = true;
        for (Mask m : chosen) {
            if ((m & c) == 0 || (m & ~c) == 0 || (c & ~m) == 0) {  // disjoint or comparable
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(c);
        antichain_dfs(all, i + 1, chosen, count, limit);
        chosen.pop_back();
    }
}

}  // namespace detail

// M(n); feasible by direct enumeration for n <= 6.
inline std::uint64_t count_intersecting_antichains(int n) {
    if (n < 1) throw std::invalid_argument("count_intersecting_antichains: n < 1");
    if (n > 6) throw ResourceLimitError("count_intersecting_antichains: n > 6 not enumerable here");
    const auto& tab = subsets(n);
    std::vector<Mask> chosen;
    std::uint64_t count = 0;
    detail::antichain_dfs(tab.masks, 0, chosen, count, ~std::uint64_t(0));
    return count;
}

// All pairwise intersecting antichains (as member-mask lists), n small.
inline std::vector<std::vector<Mask>> intersecting_antichains(int n) {
    if (n < 1 || n > 5) throw ResourceLimitError("intersecting_antichains: n out of range");
    const auto& tab = subsets(n);
    std::vector<std::vector<Mask>> out;
    std::vector<std::pair<std::vector<Mask>, size_t>> stack{{{}, 0}};
    while (!stack.empty()) {
        auto [chosen, start] = stack.back();
        stack.pop_back();
        out.push_back(chosen);
        for (size_t i = start; i < tab.masks.size(); ++i) {
            Mask c = tab.masks[i];
            bool ok = true;
            for (Mask m : chosen)
                if ((m & c) == 0 || (m & ~c) == 0 || (c & ~m) == 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            auto next = chosen;
            next.push_back(c);
            stack.emplace_back(std::move(next), i + 1);
        }
    }
    return out;
}

// Upper set in Bool_n generated by an antichain of minimal elements.
inline std::vector<Mask> upper_set_of(const std::vector<Mask>& antichain, int n) {
    std::vector<Mask> up;
    for (Mask J : subsets(n).masks)
        for (Mask m : antichain)
            if ((m & ~J) == 0) {
                up.push_back(J);
                break;
            }
    return up;
}

}  // namespace hec
