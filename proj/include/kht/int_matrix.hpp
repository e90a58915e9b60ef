// Sparse matrices over Z with arbitrary-precision entries, Smith normal
// form, kernel lattice bases and exact solving.  Everything here works with
// unimodular transformations only, so ranks, invariant factors and kernels
// are exact.

#ifndef KHT_INT_MATRIX_HPP
#define KHT_INT_MATRIX_HPP

#include <gmpxx.h>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kht {

class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<int, mpz_class>& column(int c) const { return col_[c]; }

    void set(int r, int c, const mpz_class& v) {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("IntMat::set");
        if (v == 0)
            col_[c].erase(r);
        else
            col_[c][r] = v;
    }

    mpz_class get(int r, int c) const {
        auto it = col_[c].find(r);
        return it == col_[c].end() ? mpz_class(0) : it->second;
    }

    bool is_zero() const {
        for (const auto& col : col_)
            if (!col.empty()) return false;
        return true;
    }

    int nonzeros() const {
        int n = 0;
        for (const auto& col : col_) n += static_cast<int>(col.size());
        return n;
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("dim mismatch");
        IntMat out(a.rows_, b.cols_);
        for (int c = 0; c < b.cols_; ++c) {
            std::map<int, mpz_class> acc;
            for (const auto& [k, bv] : b.col_[c])
                for (const auto& [r, av] : a.col_[k]) acc[r] += av * bv;
            for (auto& [r, v] : acc)
                if (v != 0) out.col_[c][r] = std::move(v);
        }
        return out;
    }

    // Plain triplet dump: `row col value` per line.
    std::string triplets() const {
        std::ostringstream out;
        for (int c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c])
                out << r << ' ' << c << ' ' << v << '\n';
        return out.str();
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, mpz_class>> col_;
};

namespace detail {

// Row-major sparse worker shared by the eliminations below.
struct SparseRows {
    std::vector<std::map<int, mpz_class>> row;
    std::vector<std::set<int>> col_support;

    explicit SparseRows(const IntMat& m)
        : row(m.rows()), col_support(m.cols()) {
        for (int c = 0; c < m.cols(); ++c)
            for (const auto& [r, v] : m.column(c)) {
                row[r][c] = v;
                col_support[c].insert(r);
            }
    }

    void set(int r, int c, const mpz_class& v) {
        if (v == 0) {
            row[r].erase(c);
            col_support[c].erase(r);
        } else {
            row[r][c] = v;
            col_support[c].insert(r);
        }
    }

    mpz_class get(int r, int c) const {
        auto it = row[r].find(c);
        return it == row[r].end() ? mpz_class(0) : it->second;
    }

    // row[dst] += t * row[src]
    void add_row(int dst, int src, const mpz_class& t) {
        if (t == 0) return;
        for (const auto& [c, v] : row[src]) {
            mpz_class nv = get(dst, c) + t * v;
            set(dst, c, nv);
        }
    }

    // col[dst] += t * col[src]
    void add_col(int dst, int src, const mpz_class& t) {
        if (t == 0) return;
        auto rows_of_src = col_support[src];  // copy: set() mutates support
        for (int r : rows_of_src) {
            mpz_class nv = get(r, dst) + t * get(r, src);
            set(r, dst, nv);
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        std::swap(row[a], row[b]);
        for (auto& s : col_support) {
            bool ha = s.count(a), hb = s.count(b);
            if (ha == hb) continue;
            if (ha) {
                s.erase(a);
                s.insert(b);
            } else {
                s.erase(b);
                s.insert(a);
            }
        }
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        auto rows_touched = col_support[a];
        for (int r : col_support[b]) rows_touched.insert(r);
        for (int r : rows_touched) {
            mpz_class va = get(r, a), vb = get(r, b);
            set(r, a, vb);
            set(r, b, va);
        }
    }
};

// Normalizes a list of diagonal entries into invariant factors d1 | d2 | ...
inline std::vector<mpz_class> canonical_factors(std::vector<mpz_class> d) {
    for (auto& x : d) x = abs(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < d.size(); ++i)
            for (size_t j = i + 1; j < d.size(); ++j) {
                mpz_class g = gcd(d[i], d[j]);
                if (g == d[i] || (d[i] == d[j])) continue;
                mpz_class l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace detail

// Nonzero diagonal of the Smith normal form, as invariant factors
// d1 | d2 | ... (all positive).  The rank of the matrix is the length of the
// returned list.
inline std::vector<mpz_class> smith_invariant_factors(const IntMat& m) {
    detail::SparseRows w(m);
    std::vector<bool> row_done(m.rows(), false), col_done(m.cols(), false);
    std::vector<mpz_class> diag;

    while (true) {
        // pivot choice: unit entries first, then smallest magnitude; among
        // candidates prefer low fill (Markowitz cost)
        int pr = -1, pc = -1;
        mpz_class pval;
        long best_cost = -1;
        bool best_unit = false;
        for (int r = 0; r < m.rows(); ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, v] : w.row[r]) {
                if (col_done[c]) continue;
                bool unit = (v == 1 || v == -1);
                long cost = static_cast<long>(w.row[r].size() - 1) *
                            static_cast<long>(w.col_support[c].size() - 1);
                bool better;
                if (pr < 0)
                    better = true;
                else if (unit != best_unit)
                    better = unit;
                else if (unit)
                    better = cost < best_cost;
                else
                    better = abs(v) < abs(pval) ||
                             (abs(v) == abs(pval) && cost < best_cost);
                if (better) {
                    pr = r;
                    pc = c;
                    pval = v;
                    best_cost = cost;
                    best_unit = unit;
                }
            }
        }
        if (pr < 0) break;

        // eliminate around (pr, pc); gcd steps shrink the pivot until every
        // neighbor is divisible
        while (true) {
            bool clean = true;
            // column first
            auto rows_here = w.col_support[pc];
            for (int r : rows_here) {
                if (r == pr || row_done[r]) continue;
                mpz_class a = w.get(r, pc), p = w.get(pr, pc);
                mpz_class q = a / p;  // truncated
                w.add_row(r, pr, -q);
                if (w.get(r, pc) != 0) {
                    // remainder smaller than pivot: promote it and restart
                    w.swap_rows(r, pr);
                    clean = false;
                    break;
                }
            }
            if (!clean) continue;
            auto cols_here = w.row[pr];
            for (const auto& [c, v] : cols_here) {
                if (c == pc || col_done[c]) continue;
                mpz_class p = w.get(pr, pc);
                mpz_class q = v / p;
                w.add_col(c, pc, -q);
                if (w.get(pr, c) != 0) {
                    w.swap_cols(c, pc);
                    clean = false;
                    break;
                }
            }
            if (clean) break;
        }
        diag.push_back(abs(w.get(pr, pc)));
        row_done[pr] = true;
        col_done[pc] = true;
    }

    auto factors = detail::canonical_factors(std::move(diag));
    return factors;
}

inline int rank_z(const IntMat& m) {
    return static_cast<int>(smith_invariant_factors(m).size());
}

// |det| of a square matrix via its invariant factors (0 when singular).
inline mpz_class abs_det(const IntMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("not square");
    auto f = smith_invariant_factors(m);
    if (static_cast<int>(f.size()) < m.rows()) return 0;
    mpz_class d = 1;
    for (const auto& x : f) d *= x;
    return d;
}

// Basis of the kernel lattice ker(M) as matrix columns.  Because kernels of
// maps between free groups are saturated, the result generates all integer
// solutions of Mx = 0.
inline IntMat kernel_lattice_basis(const IntMat& m) {
    const int rows = m.rows(), cols = m.cols();
    // column-major copies of M and an identity tail
    std::vector<std::map<int, mpz_class>> top(cols), bottom(cols);
    for (int c = 0; c < cols; ++c) {
        top[c] = m.column(c);
        bottom[c][c] = 1;
    }
    std::vector<bool> active(cols, true);
    auto col_op = [&](int dst, int src, const mpz_class& t) {
        for (const auto& [r, v] : top[src]) {
            mpz_class nv = (top[dst].count(r) ? top[dst][r] : mpz_class(0)) +
                           t * v;
            if (nv == 0)
                top[dst].erase(r);
            else
                top[dst][r] = nv;
        }
        for (const auto& [r, v] : bottom[src]) {
            mpz_class nv =
                (bottom[dst].count(r) ? bottom[dst][r] : mpz_class(0)) + t * v;
            if (nv == 0)
                bottom[dst].erase(r);
            else
                bottom[dst][r] = nv;
        }
    };
    for (int r = 0; r < rows; ++r) {
        while (true) {
            std::vector<int> hits;
            for (int c = 0; c < cols; ++c)
                if (active[c] && top[c].count(r)) hits.push_back(c);
            if (hits.empty()) break;
            if (hits.size() == 1) {
                active[hits[0]] = false;  // pivot column used up
                break;
            }
            int c1 = hits[0];
            for (int c : hits)
                if (abs(top[c][r]) < abs(top[c1][r])) c1 = c;
            for (int c : hits) {
                if (c == c1) continue;
                mpz_class q = top[c][r] / top[c1][r];
                col_op(c, c1, -q);
            }
        }
    }
    std::vector<int> kernel_cols;
    for (int c = 0; c < cols; ++c)
        if (active[c]) kernel_cols.push_back(c);
    IntMat out(cols, static_cast<int>(kernel_cols.size()));
    for (size_t k = 0; k < kernel_cols.size(); ++k)
        for (const auto& [r, v] : bottom[kernel_cols[k]])
            out.set(r, static_cast<int>(k), v);
    return out;
}

// Solves K * Y = B exactly, where the columns of K are a basis of a
// saturated lattice containing every column of B.
inline IntMat solve_in_lattice(const IntMat& k, const IntMat& b) {
    if (k.rows() != b.rows()) throw std::invalid_argument("dim mismatch");
    detail::SparseRows wk(k);
    detail::SparseRows wb(b);
    const int n = k.rows(), kc = k.cols();
    // forward elimination to column echelon (row ops applied to both)
    std::vector<int> pivot_row(kc, -1);
    std::vector<bool> row_used(n, false);
    for (int c = 0; c < kc; ++c) {
        while (true) {
            int best = -1;
            for (int r : wk.col_support[c]) {
                if (row_used[r]) continue;
                if (best < 0 || abs(wk.get(r, c)) < abs(wk.get(best, c)))
                    best = r;
            }
            if (best < 0) throw std::runtime_error("K not full column rank");
            bool reduced = true;
            auto rows_here = wk.col_support[c];
            for (int r : rows_here) {
                if (r == best || row_used[r]) continue;
                mpz_class q = wk.get(r, c) / wk.get(best, c);
                wk.add_row(r, best, -q);
                wb.add_row(r, best, -q);
                if (wk.get(r, c) != 0) reduced = false;
            }
            if (reduced) {
                pivot_row[c] = best;
                row_used[best] = true;
                break;
            }
        }
    }
    // back substitution per column of B
    IntMat y(kc, b.cols());
    for (int bc = 0; bc < b.cols(); ++bc) {
        std::map<int, mpz_class> rhs;
        for (int r = 0; r < n; ++r) {
            mpz_class v = wb.get(r, bc);
            if (v != 0) rhs[r] = v;
        }
        for (int c = kc - 1; c >= 0; --c) {
            int r = pivot_row[c];
            mpz_class num = rhs.count(r) ? rhs[r] : mpz_class(0);
            mpz_class piv = wk.get(r, c);
            if (num % piv != 0)
                throw std::runtime_error("solution not integral");
            mpz_class coef = num / piv;
            if (coef != 0) {
                // rhs -= coef * K_col_c
                for (int rr : wk.col_support[c]) {
                    mpz_class nv =
                        (rhs.count(rr) ? rhs[rr] : mpz_class(0)) -
                        coef * wk.get(rr, c);
                    if (nv == 0)
                        rhs.erase(rr);
                    else
                        rhs[rr] = nv;
                }
                y.set(c, bc, coef);
            }
        }
        if (!rhs.empty()) throw std::runtime_error("B not in lattice of K");
    }
    return y;
}

}  // namespace kht

#endif  // KHT_INT_MATRIX_HPP