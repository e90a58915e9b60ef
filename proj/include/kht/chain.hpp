// Enhanced Kauffman states and the bigraded chain complex.  An enhanced
// state is a marker state plus a +/- sign per circle of the smoothing; it
// sits in bigrading i = sigma(s), j = sigma(s) + 2 tau(S).  The differential
// flips one positive marker to negative, keeps the signs of circles away
// from that crossing, and carries the sign (-1)^t where t counts negative
// markers at later crossings.

#ifndef KHT_CHAIN_HPP
#define KHT_CHAIN_HPP

#include <cstdint>
#include <map>
#include <unordered_map>

#include "kht/diagram.hpp"
#include "kht/int_matrix.hpp"

namespace kht {

struct Enhanced {
    State s;
    std::uint32_t neg_circles = 0;  // bit per circle id of D_s

    bool operator==(const Enhanced&) const = default;
};

namespace detail {

inline std::uint32_t bit_reverse(std::uint32_t x, int n) {
    std::uint32_t r = 0;
    for (int k = 0; k < n; ++k) r = (r << 1) | ((x >> k) & 1u);
    return r;
}

}  // namespace detail

// Deterministic basis of C_{i,j}: lexicographic in markers (crossing 0
// first, + before -), then in circle signs (circle 0 first, + before -).
struct BigradedBasis {
    int i = 0, j = 0;
    std::vector<Enhanced> states;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> index;

    int dim() const { return static_cast<int>(states.size()); }
    int find(const Enhanced& e) const {
        auto it = index.find({e.s.neg, e.neg_circles});
        return it == index.end() ? -1 : it->second;
    }
};

class ChainContext {
  public:
    explicit ChainContext(const Diagram& d) : d_(d), n_(d.crossing_count()) {}

    const Diagram& diagram() const { return d_; }
    int crossings() const { return n_; }

    const CircleSet& circles(const State& s) const {
        auto it = circle_cache_.find(s.neg);
        if (it == circle_cache_.end())
            it = circle_cache_.emplace(s.neg, d_.smooth(s)).first;
        return it->second;
    }

    int sigma(const State& s) const { return n_ - 2 * popcount32(s.neg); }
    int tau(const Enhanced& e) const {
        return circles(e.s).count - 2 * popcount32(e.neg_circles);
    }
    int grade_i(const Enhanced& e) const { return sigma(e.s); }
    int grade_j(const Enhanced& e) const { return sigma(e.s) + 2 * tau(e); }

    const BigradedBasis& basis(int i, int j) const {
        auto key = std::make_pair(i, j);
        auto it = basis_cache_.find(key);
        if (it != basis_cache_.end()) return it->second;
        BigradedBasis b;
        b.i = i;
        b.j = j;
        if ((n_ - i) % 2 == 0 && i >= -n_ && i <= n_ && (j - i) % 2 == 0) {
            int negm = (n_ - i) / 2;
            for (std::uint32_t m = 0; m < (1u << n_); ++m) {
                if (popcount32(m) != negm) continue;
                const CircleSet& cs = circles(State{m});
                if (cs.count > 30)
                    throw std::invalid_argument("too many circles");
                int t2 = j - i;  // 2 tau
                if ((cs.count - t2 / 2) % 2 != 0) continue;
                int k = (cs.count - t2 / 2) / 2;  // negative circles
                if (k < 0 || k > cs.count) continue;
                for (std::uint32_t sg = 0; sg < (1u << cs.count); ++sg)
                    if (popcount32(sg) == k)
                        b.states.push_back(Enhanced{State{m}, sg});
            }
        }
        std::sort(b.states.begin(), b.states.end(),
                  [&](const Enhanced& a, const Enhanced& c) {
                      auto ka = detail::bit_reverse(a.s.neg, n_);
                      auto kc = detail::bit_reverse(c.s.neg, n_);
                      if (ka != kc) return ka < kc;
                      int ca = circles(a.s).count;
                      return detail::bit_reverse(a.neg_circles, ca) <
                             detail::bit_reverse(c.neg_circles, ca);
                  });
        for (int k = 0; k < static_cast<int>(b.states.size()); ++k)
            b.index[{b.states[k].s.neg, b.states[k].neg_circles}] = k;
        return basis_cache_.emplace(key, std::move(b)).first->second;
    }

    // Targets of the differential applied to S at crossing c (which must
    // carry a positive marker), together with the common sign (-1)^t.
    struct Arrow {
        Enhanced target;
        int sign;
    };

    std::vector<Arrow> arrows_at(const Enhanced& e, int c) const {
        std::vector<Arrow> out;
        const CircleSet& cs1 = circles(e.s);
        State s2 = e.s.flipped(c);
        const CircleSet& cs2 = circles(s2);
        if (cs2.count == cs1.count) return out;  // non-planar code; no arrow
        int t = popcount32(e.s.neg >> (c + 1));
        int sign = (t % 2 == 0) ? 1 : -1;

        auto [a, b] = cs1.touch[c];
        int base1 = cs1.count - d_.free_loops();
        int base2 = cs2.count - d_.free_loops();

        // transfer signs of circles not touching c
        std::uint32_t keep = 0;
        std::vector<int> circle_min_edge(base2, -1);
        for (int eidx = d_.edge_count() - 1; eidx >= 0; --eidx)
            circle_min_edge[cs2.circle_of_edge[eidx]] = eidx;
        for (int z2 = 0; z2 < cs2.count; ++z2) {
            int z1;
            if (z2 >= base2) {
                z1 = base1 + (z2 - base2);  // free loops correspond in order
            } else {
                z1 = cs1.circle_of_edge[circle_min_edge[z2]];
            }
            if (z1 == a || z1 == b) continue;  // touched: set by the rule
            if ((e.neg_circles >> z1) & 1u) keep |= (1u << z2);
        }

        auto sign_of = [&](int z1) { return ((e.neg_circles >> z1) & 1u) ? -1 : +1; };

        if (a != b) {
            // merge: circles a and b of D_S fuse into one circle of D_S'
            auto [p, q] = cs2.touch[c];
            (void)q;
            int z = p;  // both arcs lie on the fused circle
            int sa = sign_of(a), sb = sign_of(b);
            if (sa == +1 && sb == +1) return out;  // tau cannot rise
            std::uint32_t sg = keep;
            if (sa == -1 && sb == -1) sg |= (1u << z);
            out.push_back({Enhanced{s2, sg}, sign});
        } else {
            // split: circle a of D_S becomes two circles of D_S'
            auto [y, z] = cs2.touch[c];
            if (sign_of(a) == +1) {
                out.push_back({Enhanced{s2, keep}, sign});
            } else {
                out.push_back({Enhanced{s2, keep | (1u << y)}, sign});
                out.push_back({Enhanced{s2, keep | (1u << z)}, sign});
            }
        }
        return out;
    }

    // Incidence number [S:S'] in {0,1}; throws unless the gradings are
    // (i,j) and (i-2,j).
    int incidence(const Enhanced& from, const Enhanced& to) const {
        if (grade_i(to) != grade_i(from) - 2 || grade_j(to) != grade_j(from))
            throw std::invalid_argument(
                "incidence requires gradings (i,j) and (i-2,j)");
        std::uint32_t diff = from.s.neg ^ to.s.neg;
        if (popcount32(diff) != 1) return 0;
        int c = __builtin_ctz(diff);
        if (from.s.negative_at(c)) return 0;
        for (const auto& ar : arrows_at(from, c))
            if (ar.target == to) return 1;
        return 0;
    }

    // Matrix of d_{i,j}: C_{i,j} -> C_{i-2,j} in the deterministic bases.
    const IntMat& differential(int i, int j) const {
        auto key = std::make_pair(i, j);
        auto it = diff_cache_.find(key);
        if (it != diff_cache_.end()) return it->second;
        const BigradedBasis& src = basis(i, j);
        const BigradedBasis& dst = basis(i - 2, j);
        IntMat m(dst.dim(), src.dim());
        for (int col = 0; col < src.dim(); ++col) {
            const Enhanced& e = src.states[col];
            for (int c = 0; c < n_; ++c) {
                if (e.s.negative_at(c)) continue;
                for (const auto& ar : arrows_at(e, c)) {
                    int row = dst.find(ar.target);
                    if (row < 0)
                        throw std::logic_error("differential target missing");
                    m.set(row, col, m.get(row, col) + ar.sign);
                }
            }
        }
        return diff_cache_.emplace(key, std::move(m)).first->second;
    }

    // Bigradings with nonzero chain groups.
    std::vector<std::pair<int, int>> support() const {
        std::set<std::pair<int, int>> seen;
        for (std::uint32_t m = 0; m < (1u << n_); ++m) {
            State s{m};
            const CircleSet& cs = circles(s);
            int i = sigma(s);
            for (int t = -cs.count; t <= cs.count; t += 2)
                seen.insert({i, i + 2 * t});
        }
        return {seen.begin(), seen.end()};
    }

  private:
    const Diagram& d_;
    int n_;
    mutable std::map<std::uint32_t, CircleSet> circle_cache_;
    mutable std::map<std::pair<int, int>, BigradedBasis> basis_cache_;
    mutable std::map<std::pair<int, int>, IntMat> diff_cache_;
};

}  // namespace kht

#endif  // KHT_CHAIN_HPP