// Thickness of a bigraded homology table: the minimal (k1,k2) such that all
// nonzero groups lie in the diagonal band
//     N - 2|s-| - 4 k2  <=  j - 2i  <=  2|s+| - N + 4 k1,
// computed separately for the whole group, its free part and its torsion.

#ifndef KHT_THICKNESS_HPP
#define KHT_THICKNESS_HPP

#include <optional>

#include "kht/homology.hpp"

namespace kht {

inline long ceil_div(long a, long b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

struct ThicknessPart {
    std::optional<std::pair<long, long>> k;  // minimal (k1, k2); empty support -> nullopt
    std::vector<long> diagonals;             // sorted j-2i support

    // minimal k of Definition 5.2(ii), taken with equality
    std::optional<long> k_value(int n, int s_plus, int s_minus) const {
        if (!k) return std::nullopt;
        return k->first + k->second + (s_plus + s_minus - n) / 2;
    }
};

struct ThicknessReport {
    ThicknessPart h, fh, th;
    int n = 0, s_plus = 0, s_minus = 0;
};

namespace detail {

inline ThicknessPart thickness_part(const HomologyTable& t,
                                    bool use_free, bool use_torsion) {
    ThicknessPart part;
    std::set<long> diag;
    std::optional<long> k1, k2;
    for (const auto& [ij, g] : t.groups) {
        bool counts = (use_free && g.free_rank > 0) ||
                      (use_torsion && !g.torsion.empty());
        if (!counts) continue;
        long dgl = ij.second - 2L * ij.first;
        diag.insert(dgl);
        long need1 = ceil_div(dgl - (2L * t.s_plus - t.n), 4);
        long need2 = ceil_div((t.n - 2L * t.s_minus) - dgl, 4);
        k1 = k1 ? std::max(*k1, need1) : need1;
        k2 = k2 ? std::max(*k2, need2) : need2;
    }
    if (k1) part.k = {{*k1, *k2}};
    part.diagonals.assign(diag.begin(), diag.end());
    return part;
}

}  // namespace detail

inline ThicknessReport thickness(const HomologyTable& t) {
    ThicknessReport rep;
    rep.n = t.n;
    rep.s_plus = t.s_plus;
    rep.s_minus = t.s_minus;
    rep.h = detail::thickness_part(t, true, true);
    rep.fh = detail::thickness_part(t, true, false);
    rep.th = detail::thickness_part(t, false, true);
    return rep;
}

// Is the table H-(k1,k2)-thick for the given pair?
inline bool is_thick_within(const ThicknessPart& part, long k1, long k2) {
    if (!part.k) return true;  // no support: any band works
    return part.k->first <= k1 && part.k->second <= k2;
}

}  // namespace kht

#endif  // KHT_THICKNESS_HPP