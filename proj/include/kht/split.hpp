// Short exact sequences of chain complexes obtained by splitting the
// enhanced-state basis: by the marker at one crossing (skein sequence) or by
// the sign of the basepoint circle (reduced homology).  The subcomplex part
// is checked, not assumed.

#ifndef KHT_SPLIT_HPP
#define KHT_SPLIT_HPP

#include <functional>

#include "kht/chain.hpp"
#include "kht/field.hpp"
#include "kht/homology.hpp"

namespace kht {

using SubPredicate = std::function<bool(const ChainContext&, const Enhanced&)>;

// States with a negative marker at crossing c span a subcomplex isomorphic
// to a shifted complex of the negative smoothing D_infinity; the quotient is
// a shifted complex of D_0.
inline SubPredicate skein_sub_predicate(int c) {
    return [c](const ChainContext&, const Enhanced& e) {
        return e.s.negative_at(c);
    };
}

// States whose basepoint circle is positive span the subcomplex C_+ whose
// homology is reduced Khovanov homology.
inline SubPredicate reduced_sub_predicate(Edge basepoint) {
    return [basepoint](const ChainContext& ctx, const Enhanced& e) {
        int circle = ctx.circles(e.s)
                         .circle_of_edge[ctx.diagram().edge_index(basepoint)];
        return ((e.neg_circles >> circle) & 1u) == 0;
    };
}

struct SplitLevel {
    std::vector<int> sub_pos;  // positions of subcomplex states in the basis
    std::vector<int> quo_pos;
    IntMat d_sub;         // sub(i,j)  -> sub(i-2,j)
    IntMat d_quo;         // quo(i,j)  -> quo(i-2,j)  (induced differential)
    IntMat d_quo_to_sub;  // quo(i,j)  -> sub(i-2,j)  (the connecting block)
};

// Carves the differential at (i,j) into blocks along the predicate, checking
// that the sub part really is closed under d.
inline SplitLevel split_level(const ChainContext& ctx, int i, int j,
                              const SubPredicate& in_sub) {
    const BigradedBasis& src = ctx.basis(i, j);
    const BigradedBasis& dst = ctx.basis(i - 2, j);
    const IntMat& full = ctx.differential(i, j);
    SplitLevel out;
    std::vector<int> src_slot(src.dim(), -1), dst_slot(dst.dim(), -1);
    std::vector<bool> src_sub(src.dim()), dst_sub(dst.dim());
    for (int k = 0; k < src.dim(); ++k) {
        src_sub[k] = in_sub(ctx, src.states[k]);
        if (src_sub[k]) {
            src_slot[k] = static_cast<int>(out.sub_pos.size());
            out.sub_pos.push_back(k);
        } else {
            src_slot[k] = static_cast<int>(out.quo_pos.size());
            out.quo_pos.push_back(k);
        }
    }
    std::vector<int> dst_sub_pos, dst_quo_pos;
    for (int k = 0; k < dst.dim(); ++k) {
        dst_sub[k] = in_sub(ctx, dst.states[k]);
        if (dst_sub[k]) {
            dst_slot[k] = static_cast<int>(dst_sub_pos.size());
            dst_sub_pos.push_back(k);
        } else {
            dst_slot[k] = static_cast<int>(dst_quo_pos.size());
            dst_quo_pos.push_back(k);
        }
    }
    out.d_sub = IntMat(static_cast<int>(dst_sub_pos.size()),
                       static_cast<int>(out.sub_pos.size()));
    out.d_quo = IntMat(static_cast<int>(dst_quo_pos.size()),
                       static_cast<int>(out.quo_pos.size()));
    out.d_quo_to_sub = IntMat(static_cast<int>(dst_sub_pos.size()),
                              static_cast<int>(out.quo_pos.size()));
    for (int c = 0; c < full.cols(); ++c) {
        for (const auto& [r, v] : full.column(c)) {
            if (src_sub[c] && dst_sub[r])
                out.d_sub.set(dst_slot[r], src_slot[c], v);
            else if (src_sub[c] && !dst_sub[r])
                throw std::logic_error(
                    "subcomplex property violated at (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
            else if (!src_sub[c] && !dst_sub[r])
                out.d_quo.set(dst_slot[r], src_slot[c], v);
            else
                out.d_quo_to_sub.set(dst_slot[r], src_slot[c], v);
        }
    }
    return out;
}

// Integer homology table of the subcomplex (or of the quotient complex)
// defined by the predicate.
inline HomologyTable split_homology(const Diagram& d,
                                    const SubPredicate& in_sub, bool sub_part,
                                    const std::string& id = "") {
    ChainContext ctx(d);
    HomologyTable t;
    t.diagram_id = id;
    t.n = d.crossing_count();
    t.s_plus = d.s_plus_circles();
    t.s_minus = d.s_minus_circles();
    for (auto [i, j] : ctx.support()) {
        SplitLevel here = split_level(ctx, i, j, in_sub);
        SplitLevel above = split_level(ctx, i + 2, j, in_sub);
        AbelianGroup g =
            sub_part ? homology_group(above.d_sub, here.d_sub)
                     : homology_group(above.d_quo, here.d_quo);
        if (!g.trivial()) t.groups[{i, j}] = g;
    }
    return t;
}

inline HomologyTable reduced_khovanov_table(const Diagram& d,
                                            const std::string& id = "") {
    if (!d.basepoint())
        throw std::invalid_argument("reduced homology needs a basepoint");
    if (d.crossing_count() == 0 && d.free_loops() > 0)
        throw std::invalid_argument("basepoint on a free loop is not supported");
    return split_homology(d, reduced_sub_predicate(*d.basepoint()), true, id);
}

// ---------------------------------------------------------------------------
// Long exact sequence of the split, verified over a field.
//
//   ... -> H(X)_{i,j} -> H(Y)_{i,j} -> H(Z)_{i,j} -> H(X)_{i-2,j} -> ...
//
// where X is the subcomplex, Y the full complex, Z the quotient; the
// connecting map is the snake-lemma boundary.
// ---------------------------------------------------------------------------

struct LesReport {
    bool exact = true;
    bool boundary_zero = true;  // all connecting maps vanish
    std::string first_failure;
};

template <class Fld>
inline LesReport verify_split_les(const Diagram& d, const SubPredicate& in_sub,
                                  const Fld& f) {
    ChainContext ctx(d);
    LesReport rep;
    // group bigradings by j
    std::map<int, std::vector<int>> levels;  // j -> sorted i values
    for (auto [i, j] : ctx.support()) levels[j].push_back(i);
    for (auto& [j, is] : levels) {
        std::sort(is.begin(), is.end());
        int lo = is.front() - 2, hi = is.back() + 2;
        // per level data
        std::map<int, SplitLevel> split;
        std::map<int, FMat<Fld>> dx, dy, dz, conn;
        for (int i = lo; i <= hi + 2; i += 2) {
            SplitLevel sl = split_level(ctx, i, j, in_sub);
            dx.emplace(i, FMat<Fld>::from_int(f, sl.d_sub));
            dy.emplace(i, FMat<Fld>::from_int(f, ctx.differential(i, j)));
            dz.emplace(i, FMat<Fld>::from_int(f, sl.d_quo));
            split.emplace(i, std::move(sl));
        }
        std::map<int, HomologyLevelF<Fld>> hx, hy, hz;
        for (int i = lo; i <= hi; i += 2) {
            hx.emplace(i, HomologyLevelF<Fld>(f, dx.at(i), dx.at(i + 2)));
            hy.emplace(i, HomologyLevelF<Fld>(f, dy.at(i), dy.at(i + 2)));
            hz.emplace(i, HomologyLevelF<Fld>(f, dz.at(i), dz.at(i + 2)));
        }
        // induced maps as column lists
        auto expand = [&](const std::vector<typename Fld::E>& small,
                          const std::vector<int>& pos, int full_dim) {
            std::vector<typename Fld::E> v(full_dim, f.zero());
            for (size_t k = 0; k < pos.size(); ++k) v[pos[k]] = small[k];
            return v;
        };
        auto restrict_to = [&](const std::vector<typename Fld::E>& full,
                               const std::vector<int>& pos) {
            std::vector<typename Fld::E> v(pos.size(), f.zero());
            for (size_t k = 0; k < pos.size(); ++k) v[k] = full[pos[k]];
            return v;
        };
        std::map<int, std::vector<std::vector<typename Fld::E>>> incl, proj,
            bnd;
        for (int i = lo; i <= hi; i += 2) {
            const auto& sl = split.at(i);
            int full_dim = ctx.basis(i, j).dim();
            std::vector<std::vector<typename Fld::E>> cols;
            for (int k = 0; k < hx.at(i).dim(); ++k)
                cols.push_back(
                    hy.at(i).express(expand(hx.at(i).rep(k), sl.sub_pos,
                                            full_dim)));
            incl[i] = std::move(cols);
            cols.clear();
            for (int k = 0; k < hy.at(i).dim(); ++k)
                cols.push_back(
                    hz.at(i).express(restrict_to(hy.at(i).rep(k), sl.quo_pos)));
            proj[i] = std::move(cols);
            cols.clear();
            // snake: lift a quotient cycle, push through d, land in the sub
            for (int k = 0; k < hz.at(i).dim(); ++k) {
                auto lifted = expand(hz.at(i).rep(k), sl.quo_pos, full_dim);
                auto w = dy.at(i).apply(f, lifted);
                // w must lie in the subcomplex part of level i-2
                const auto& sl_low = split.at(i - 2);
                for (int q : sl_low.quo_pos)
                    if (!f.is_zero(w[q]))
                        throw std::logic_error("snake image not in subcomplex");
                if (i - 2 >= lo)
                    cols.push_back(
                        hx.at(i - 2).express(restrict_to(w, sl_low.sub_pos)));
                else
                    cols.push_back({});
            }
            bnd[i] = std::move(cols);
        }
        // exactness node by node
        auto rank_cols =
            [&](const std::vector<std::vector<typename Fld::E>>& cols) {
                Echelon<Fld> e(f);
                int r = 0;
                for (const auto& c : cols)
                    if (!c.empty() && e.insert(c)) ++r;
                return r;
            };
        // apply a column-list map to a coordinate vector
        auto act = [&](const std::vector<std::vector<typename Fld::E>>& cols,
                       const std::vector<typename Fld::E>& v, int out_dim) {
            std::vector<typename Fld::E> w(out_dim, f.zero());
            for (size_t k = 0; k < v.size(); ++k) {
                if (f.is_zero(v[k]) || cols[k].empty()) continue;
                for (int r = 0; r < out_dim; ++r)
                    w[r] = f.add(w[r], f.mul(v[k], cols[k][r]));
            }
            return w;
        };
        auto all_zero = [&](const std::vector<typename Fld::E>& v) {
            for (const auto& x : v)
                if (!f.is_zero(x)) return false;
            return true;
        };
        for (int i = lo; i <= hi; i += 2) {
            int rank_incl = rank_cols(incl[i]);
            int rank_proj = rank_cols(proj[i]);
            int rank_bnd = rank_cols(bnd[i]);
            if (rank_bnd > 0) rep.boundary_zero = false;
            bool ok = true;
            // at H(Y)_i : im(incl) = ker(proj)
            for (const auto& c : incl[i])
                ok = ok && all_zero(act(proj[i], c, hz.at(i).dim()));
            ok = ok && (rank_incl + rank_proj == hy.at(i).dim());
            if (!ok) {
                rep.exact = false;
                rep.first_failure = "H(Y) at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")";
                return rep;
            }
            // at H(Z)_i : im(proj) = ker(bnd)
            int low_dim = (i - 2 >= lo) ? hx.at(i - 2).dim() : 0;
            for (const auto& c : proj[i])
                ok = ok && all_zero(act(bnd[i], c, low_dim));
            ok = ok && (rank_proj + rank_bnd == hz.at(i).dim());
            if (!ok) {
                rep.exact = false;
                rep.first_failure = "H(Z) at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")";
                return rep;
            }
            // at H(X)_i : im(bnd from level i+2) = ker(incl)
            int rank_bnd_above = (i + 2 <= hi) ? rank_cols(bnd[i + 2]) : 0;
            if (i + 2 <= hi)
                for (const auto& c : bnd[i + 2])
                    if (!c.empty())
                        ok = ok && all_zero(act(incl[i], c, hy.at(i).dim()));
            ok = ok && (rank_bnd_above + rank_incl == hx.at(i).dim());
            if (!ok) {
                rep.exact = false;
                rep.first_failure = "H(X) at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace kht

#endif  // KHT_SPLIT_HPP