// Kauffman bracket state sums, the Jones polynomial and the
// Traczyk signature formulas for alternating diagrams.

#ifndef KHT_BRACKET_HPP
#define KHT_BRACKET_HPP

#include <cstdint>
#include <map>

#include "kht/diagram.hpp"

namespace kht {

// Laurent polynomial in one variable with 64-bit coefficients (state sums
// over <= 30 crossings stay far below the overflow range).
struct Laurent {
    std::map<int, long long> coeff;  // exponent -> coefficient

    static Laurent mono(int exp, long long c = 1) {
        Laurent p;
        if (c != 0) p.coeff[exp] = c;
        return p;
    }

    void add_term(int exp, long long c) {
        if (c == 0) return;
        auto it = coeff.find(exp);
        if (it == coeff.end()) {
            coeff[exp] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeff.erase(it);
        }
    }

    bool is_zero() const { return coeff.empty(); }
    int max_exp() const { return coeff.rbegin()->first; }
    int min_exp() const { return coeff.begin()->first; }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto [e, c] : o.coeff) r.add_term(e, c);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto [e, c] : o.coeff) r.add_term(e, -c);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto [e1, c1] : coeff)
            for (auto [e2, c2] : o.coeff) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    bool operator==(const Laurent&) const = default;

    // exact division; throws when the divisor does not divide
    Laurent divided_by(const Laurent& div) const {
        if (div.is_zero()) throw std::invalid_argument("division by zero");
        Laurent rem = *this, quot;
        int de = div.max_exp();
        long long dc = div.coeff.at(de);
        while (!rem.is_zero()) {
            int re = rem.max_exp();
            long long rc = rem.coeff.at(re);
            if (rc % dc != 0 || re - de < rem.min_exp() - div.min_exp())
                throw std::invalid_argument("inexact Laurent division");
            long long q = rc / dc;
            quot.add_term(re - de, q);
            for (auto [e, c] : div.coeff) rem.add_term(e + re - de, -q * c);
        }
        return quot;
    }

    std::string str(const std::string& var = "A") const {
        if (coeff.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) {
            auto [e, c] = *it;
            if (!first) out << (c > 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            long long a = c > 0 ? c : -c;
            if (a != 1 || e == 0) out << a;
            if (e != 0) {
                if (a != 1) out << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
        return out.str();
    }
};

inline Laurent circle_factor() {  // -A^2 - A^{-2}
    Laurent d;
    d.add_term(2, -1);
    d.add_term(-2, -1);
    return d;
}

// State sum [D] = sum_s A^{sigma(s)} (-A^2-A^{-2})^{|s|}, the bracket
// normalized to 1 on the empty link.
inline Laurent bracket_unnormalized(const Diagram& d) {
    const int n = d.crossing_count();
    std::vector<Laurent> delta_pow(d.edge_count() + d.free_loops() + 2);
    delta_pow[0] = Laurent::mono(0);
    for (size_t k = 1; k < delta_pow.size(); ++k)
        delta_pow[k] = delta_pow[k - 1] * circle_factor();
    Laurent total;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        State s{m};
        int sigma = n - 2 * popcount32(m);
        int circles = d.smooth(s).count;
        total = total + Laurent::mono(sigma) * delta_pow[circles];
    }
    return total;
}

// <D> = [D] / (-A^2 - A^{-2}); requires a nonempty diagram.
inline Laurent kauffman_bracket(const Diagram& d) {
    if (d.empty())
        throw std::invalid_argument("bracket of the empty diagram");
    return bracket_unnormalized(d).divided_by(circle_factor());
}

// Jones polynomial V(t) = (-A^3)^{-w} <D> at t = A^{-4}.  Returned in the
// variable q = t^{1/2} (exponent = q-power), since links may have
// half-integer t-degrees.
inline Laurent jones_polynomial(const Diagram& d,
                                const std::vector<int>& flips = {}) {
    OrientedDiagram od = orient(d, flips);
    Laurent f = Laurent::mono(-3 * od.writhe(),
                              od.writhe() % 2 == 0 ? 1 : -1) *
                kauffman_bracket(d);
    // substitute q = A^{-2}
    Laurent v;
    for (auto [e, c] : f.coeff) {
        if (e % 2 != 0) throw std::logic_error("odd A-power in Jones");
        v.add_term(-e / 2, c);
    }
    return v;
}

// Pretty-print a q-polynomial in powers of t (q^2 = t).
inline std::string jones_str(const Laurent& v) {
    std::ostringstream out;
    if (v.coeff.empty()) return "0";
    bool first = true;
    for (auto it = v.coeff.rbegin(); it != v.coeff.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        long long a = c > 0 ? c : -c;
        if (a != 1 || e == 0) out << a;
        if (e != 0) {
            if (a != 1) out << "*";
            out << "t^";
            if (e % 2 == 0) out << (e / 2);
            else out << "(" << e << "/2)";
        }
        first = false;
    }
    return out.str();
}

// Traczyk's signature formulas for a non-split alternating diagram without
// nugatory crossings: n^- - |s_-| + 1 = -n^+ + |s_+| - 1.  Both sides are
// evaluated; disagreement means the hypotheses failed.
inline int alternating_signature(const Diagram& d,
                                 const std::vector<int>& flips = {}) {
    if (!d.connected())
        throw std::invalid_argument("signature formula needs a non-split diagram");
    if (!wu_equality(d))
        throw std::invalid_argument("diagram is not alternating (Wu equality fails)");
    OrientedDiagram od = orient(d, flips);
    int via_minus = od.n_minus - d.s_minus_circles() + 1;
    int via_plus = -od.n_plus + d.s_plus_circles() - 1;
    if (via_minus != via_plus)
        throw std::runtime_error("signature formulas disagree");
    return via_minus;
}

}  // namespace kht

#endif  // KHT_BRACKET_HPP