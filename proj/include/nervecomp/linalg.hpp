#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "rings.hpp"

namespace nervecomp {

// Row-major sparse matrix over a ring R.  Stored entries are always nonzero.
template <class R>
class sparse_matrix {
  public:
    using elem = typename R::elem;

    sparse_matrix() = default;
    sparse_matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const std::map<int, elem>& row(int i) const { return data_[static_cast<std::size_t>(i)]; }

    elem get(int i, int j) const {
        const auto& r = data_[static_cast<std::size_t>(i)];
        auto it = r.find(j);
        return it == r.end() ? elem{} : it->second;
    }

    void set(const R& ring, int i, int j, const elem& v) {
        auto& r = data_[static_cast<std::size_t>(i)];
        if (ring.is_zero(v))
            r.erase(j);
        else
            r[j] = v;
    }

    void add_to(const R& ring, int i, int j, const elem& v) {
        if (ring.is_zero(v)) return;
        auto& r = data_[static_cast<std::size_t>(i)];
        auto it = r.find(j);
        if (it == r.end()) {
            r[j] = v;
        } else {
            it->second = ring.add(it->second, v);
            if (ring.is_zero(it->second)) r.erase(it);
        }
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    bool is_zero_matrix() const { return nnz() == 0; }

    static sparse_matrix identity(const R& ring, int n) {
        sparse_matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(ring, i, i, ring.one());
        return m;
    }

    friend bool equal(const R& ring, const sparse_matrix& a, const sparse_matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (int i = 0; i < a.rows_; ++i) {
            const auto& ra = a.row(i);
            const auto& rb = b.row(i);
            if (ra.size() != rb.size()) return false;
            auto it = rb.begin();
            for (const auto& [j, v] : ra) {
                if (it->first != j || !ring.eq(it->second, v)) return false;
                ++it;
            }
        }
        return true;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::map<int, elem>> data_;
};

template <class R>
sparse_matrix<R> multiply(const R& ring, const sparse_matrix<R>& a, const sparse_matrix<R>& b) {
    if (a.cols() != b.rows())
        throw precondition_error("matrix multiply: dimension mismatch");
    sparse_matrix<R> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [k, va] : a.row(i))
            for (const auto& [j, vb] : b.row(k))
                c.add_to(ring, i, j, ring.mul(va, vb));
    return c;
}

template <class R>
sparse_matrix<R> add(const R& ring, const sparse_matrix<R>& a, const sparse_matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("matrix add: dimension mismatch");
    sparse_matrix<R> c = a;
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) c.add_to(ring, i, j, v);
    return c;
}

template <class R>
sparse_matrix<R> subtract(const R& ring, const sparse_matrix<R>& a, const sparse_matrix<R>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("matrix subtract: dimension mismatch");
    sparse_matrix<R> c = a;
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) c.add_to(ring, i, j, ring.neg(v));
    return c;
}

template <class R>
std::vector<typename R::elem> apply(const R& ring, const sparse_matrix<R>& m,
                                    const std::vector<typename R::elem>& x) {
    if (static_cast<int>(x.size()) != m.cols())
        throw precondition_error("matrix apply: dimension mismatch");
    std::vector<typename R::elem> y(static_cast<std::size_t>(m.rows()), ring.zero());
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i))
            y[static_cast<std::size_t>(i)] =
                ring.add(y[static_cast<std::size_t>(i)], ring.mul(v, x[static_cast<std::size_t>(j)]));
    return y;
}

namespace detail {

template <class R>
std::vector<std::vector<typename R::elem>> to_dense(const R& ring, const sparse_matrix<R>& m) {
    std::vector<std::vector<typename R::elem>> d(
        static_cast<std::size_t>(m.rows()),
        std::vector<typename R::elem>(static_cast<std::size_t>(m.cols()), ring.zero()));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    return d;
}

template <class R>
sparse_matrix<R> from_dense(const R& ring, const std::vector<std::vector<typename R::elem>>& d, int cols) {
    sparse_matrix<R> m(static_cast<int>(d.size()), cols);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d[i].size(); ++j) m.set(ring, static_cast<int>(i), static_cast<int>(j), d[i][j]);
    return m;
}

// Row echelon elimination over a field, using the first nonzero entry in
// column order as pivot.  Returns pivot columns; `a` is reduced in place.
template <class R>
std::vector<int> field_echelon(const R& ring, std::vector<std::vector<typename R::elem>>& a) {
    static_assert(R::is_field);
    std::vector<int> pivot_cols;
    if (a.empty()) return pivot_cols;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!ring.is_zero(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
        auto inv = ring.inv(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        for (int j = c; j < cols; ++j)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                ring.mul(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            auto f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (ring.is_zero(f)) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    ring.sub(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                             ring.mul(f, a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]));
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace detail

template <class R>
int field_rank(const R& ring, const sparse_matrix<R>& m) {
    static_assert(R::is_field);
    auto d = detail::to_dense(ring, m);
    return static_cast<int>(detail::field_echelon(ring, d).size());
}

// Solves m x = b over a field; returns std::nullopt when inconsistent.
template <class R>
std::optional<std::vector<typename R::elem>> field_solve(const R& ring, const sparse_matrix<R>& m,
                                                         const std::vector<typename R::elem>& b) {
    static_assert(R::is_field);
    if (static_cast<int>(b.size()) != m.rows())
        throw precondition_error("field_solve: dimension mismatch");
    auto a = detail::to_dense(ring, m);
    for (int i = 0; i < m.rows(); ++i) a[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
    auto pivots = detail::field_echelon(ring, a);
    int n = m.cols();
    // inconsistent iff some pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    std::vector<typename R::elem> x(static_cast<std::size_t>(n), ring.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = a[r][static_cast<std::size_t>(n)];
    return x;
}

// Basis of { x : m x = 0 } over a field, one vector per free column.
template <class R>
std::vector<std::vector<typename R::elem>> field_kernel_basis(const R& ring, const sparse_matrix<R>& m) {
    static_assert(R::is_field);
    auto a = detail::to_dense(ring, m);
    auto pivots = detail::field_echelon(ring, a);
    int n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<typename R::elem>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<typename R::elem> v(static_cast<std::size_t>(n), ring.zero());
        v[static_cast<std::size_t>(c)] = ring.one();
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = ring.neg(a[r][static_cast<std::size_t>(c)]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Smith normal form U m V = D with unimodular U, V and their inverses.
// D is diagonal with nonnegative entries satisfying d_1 | d_2 | ... .
struct smith_result {
    sparse_matrix<integer_ring> D, U, Uinv, V, Vinv;
    std::vector<bigint> diagonal;  // the nonzero d_i, in chain order
    int rank() const { return static_cast<int>(diagonal.size()); }
};

namespace detail {

using dense_z = std::vector<std::vector<bigint>>;

inline void row_add(dense_z& a, int dst, int src, const bigint& c) {
    auto& rd = a[static_cast<std::size_t>(dst)];
    const auto& rs = a[static_cast<std::size_t>(src)];
    for (std::size_t j = 0; j < rd.size(); ++j) rd[j] += c * rs[j];
}

inline void col_add(dense_z& a, int dst, int src, const bigint& c) {
    for (auto& r : a) r[static_cast<std::size_t>(dst)] += c * r[static_cast<std::size_t>(src)];
}

inline void row_swap(dense_z& a, int i, int j) {
    std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
}

inline void col_swap(dense_z& a, int i, int j) {
    for (auto& r : a) std::swap(r[static_cast<std::size_t>(i)], r[static_cast<std::size_t>(j)]);
}

inline void row_negate(dense_z& a, int i) {
    for (auto& v : a[static_cast<std::size_t>(i)]) v = -v;
}

inline void col_negate(dense_z& a, int j) {
    for (auto& r : a) r[static_cast<std::size_t>(j)] = -r[static_cast<std::size_t>(j)];
}

inline dense_z dense_identity(int n) {
    dense_z a(static_cast<std::size_t>(n), std::vector<bigint>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return a;
}

// Transform-tracking Smith reduction.  Row op L applied to A updates U <- L U
// and Uinv <- Uinv L^{-1}; column ops mirror on V, Vinv.
struct smith_state {
    dense_z a, u, uinv, v, vinv;
    int rows, cols;

    explicit smith_state(const dense_z& m, int r, int c)
        : a(m), u(dense_identity(r)), uinv(dense_identity(r)), v(dense_identity(c)), vinv(dense_identity(c)),
          rows(r), cols(c) {}

    void do_row_add(int dst, int src, const bigint& c) {
        row_add(a, dst, src, c);
        row_add(u, dst, src, c);
        col_add(uinv, src, dst, -c);
    }
    void do_row_swap(int i, int j) {
        row_swap(a, i, j);
        row_swap(u, i, j);
        col_swap(uinv, i, j);
    }
    void do_row_negate(int i) {
        row_negate(a, i);
        row_negate(u, i);
        col_negate(uinv, i);
    }
    void do_col_add(int dst, int src, const bigint& c) {
        col_add(a, dst, src, c);
        col_add(v, dst, src, c);
        row_add(vinv, src, dst, -c);
    }
    void do_col_swap(int i, int j) {
        col_swap(a, i, j);
        col_swap(v, i, j);
        row_swap(vinv, i, j);
    }
    void do_col_negate(int j) {
        col_negate(a, j);
        col_negate(v, j);
        row_negate(vinv, j);
    }

    const bigint& at(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    // smallest-magnitude nonzero entry of the trailing submatrix, ties by (row, col)
    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        bigint best = 0;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j) {
                const bigint& x = at(i, j);
                if (x == 0) continue;
                bigint mag = boost::multiprecision::abs(x);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void reduce() {
        int n = std::min(rows, cols);
        for (int k = 0; k < n; ++k) {
            int pi = 0, pj = 0;
            if (!find_pivot(k, pi, pj)) break;
            do_row_swap(k, pi);
            do_col_swap(k, pj);
            for (;;) {
                // clear column k below the pivot by division with remainder;
                // a nonzero remainder becomes the new, smaller pivot
                bool dirty = false;
                for (int i = k + 1; i < rows; ++i) {
                    if (at(i, k) == 0) continue;
                    bigint q = at(i, k) / at(k, k);  // truncated
                    if (q != 0) do_row_add(i, k, -q);
                    if (at(i, k) != 0) {
                        do_row_swap(k, i);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                for (int j = k + 1; j < cols; ++j) {
                    if (at(k, j) == 0) continue;
                    bigint q = at(k, j) / at(k, k);
                    if (q != 0) do_col_add(j, k, -q);
                    if (at(k, j) != 0) {
                        do_col_swap(k, j);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // pivot must divide the whole trailing submatrix for the
                // divisibility chain; fold a bad row in and re-clear
                bool fixed = true;
                for (int i = k + 1; i < rows && fixed; ++i)
                    for (int j = k + 1; j < cols; ++j)
                        if (at(i, j) % at(k, k) != 0) {
                            do_row_add(k, i, 1);
                            fixed = false;
                            break;
                        }
                if (fixed) break;
            }
            if (at(k, k) < 0) {
                do_row_negate(k);
            }
        }
    }
};

}  // namespace detail

inline smith_result smith_normal_form(const sparse_matrix<integer_ring>& m) {
    integer_ring zz;
    detail::smith_state st(detail::to_dense(zz, m), m.rows(), m.cols());
    st.reduce();
    smith_result res;
    res.D = detail::from_dense(zz, st.a, m.cols());
    res.U = detail::from_dense(zz, st.u, m.rows());
    res.Uinv = detail::from_dense(zz, st.uinv, m.rows());
    res.V = detail::from_dense(zz, st.v, m.cols());
    res.Vinv = detail::from_dense(zz, st.vinv, m.cols());
    for (int k = 0; k < std::min(m.rows(), m.cols()); ++k) {
        bigint d = res.D.get(k, k);
        if (d == 0) break;
        res.diagonal.push_back(d);
    }
    return res;
}

// Basis of the integer kernel lattice of m (columns of V beyond the rank).
inline std::vector<std::vector<bigint>> integer_kernel_basis(const sparse_matrix<integer_ring>& m) {
    smith_result s = smith_normal_form(m);
    std::vector<std::vector<bigint>> basis;
    for (int j = s.rank(); j < m.cols(); ++j) {
        std::vector<bigint> v(static_cast<std::size_t>(m.cols()), 0);
        for (int i = 0; i < m.cols(); ++i) v[static_cast<std::size_t>(i)] = s.V.get(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves m x = b over the integers; returns std::nullopt when no integral
// solution exists.
inline std::optional<std::vector<bigint>> integer_solve(const sparse_matrix<integer_ring>& m,
                                                        const std::vector<bigint>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw precondition_error("integer_solve: dimension mismatch");
    integer_ring zz;
    smith_result s = smith_normal_form(m);
    std::vector<bigint> ub = apply(zz, s.U, b);
    std::vector<bigint> y(static_cast<std::size_t>(m.cols()), 0);
    int r = s.rank();
    for (int i = 0; i < m.rows(); ++i) {
        if (i < r) {
            const bigint& d = s.diagonal[static_cast<std::size_t>(i)];
            if (ub[static_cast<std::size_t>(i)] % d != 0) return std::nullopt;
            if (i < m.cols()) y[static_cast<std::size_t>(i)] = ub[static_cast<std::size_t>(i)] / d;
        } else if (ub[static_cast<std::size_t>(i)] != 0) {
            return std::nullopt;
        }
    }
    return apply(zz, s.V, y);
}

// Decides whether b lies in the column span of m over R (integral span over
// Z); returns a witness x with m x = b when it does.
template <class R>
std::optional<std::vector<typename R::elem>> span_membership(const R& ring, const sparse_matrix<R>& m,
                                                             const std::vector<typename R::elem>& b) {
    if constexpr (R::is_field) {
        return field_solve(ring, m, b);
    } else {
        (void)ring;
        return integer_solve(m, b);
    }
}

// Presentation of a cohomology group at one degree: free rank, invariant
// factors > 1, and representative cocycle vectors (free generators first,
// then torsion generators aligned with invariant_factors).
template <class R>
struct cohomology_presentation {
    int free_rank = 0;
    std::vector<bigint> invariant_factors;
    std::vector<std::vector<typename R::elem>> representatives;

    int generator_count() const { return static_cast<int>(representatives.size()); }
};

namespace detail {

template <class R>
void normalize_representative(const R& ring, std::vector<typename R::elem>& v) {
    if constexpr (R::is_field) {
        for (const auto& x : v)
            if (!ring.is_zero(x)) {
                auto inv = ring.inv(x);
                for (auto& y : v) y = ring.mul(y, inv);
                return;
            }
    } else {
        for (const auto& x : v) {
            if (ring.is_zero(x)) continue;
            if (x < 0)
                for (auto& y : v) y = ring.neg(y);
            return;
        }
    }
}

template <class R>
cohomology_presentation<R> field_cohomology_at(const R& ring, const sparse_matrix<R>& d_out,
                                               const sparse_matrix<R>& d_in) {
    auto kernel = field_kernel_basis(ring, d_out);
    // echelon built from the image columns, then extended by kernel vectors;
    // the ones that enlarge it represent a basis of the quotient
    std::vector<std::vector<typename R::elem>> ech;
    std::vector<int> lead;
    auto reduce_against = [&](std::vector<typename R::elem> v) {
        for (std::size_t r = 0; r < ech.size(); ++r) {
            const auto& f = v[static_cast<std::size_t>(lead[r])];
            if (ring.is_zero(f)) continue;
            auto c = f;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = ring.sub(v[j], ring.mul(c, ech[r][j]));
        }
        return v;
    };
    auto insert = [&](std::vector<typename R::elem> v) -> bool {
        v = reduce_against(std::move(v));
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!ring.is_zero(v[j])) {
                auto inv = ring.inv(v[j]);
                for (auto& y : v) y = ring.mul(y, inv);
                // keep the echelon fully reduced so one reduction pass decides
                // membership
                for (std::size_t r = 0; r < ech.size(); ++r) {
                    auto c = ech[r][j];
                    if (ring.is_zero(c)) continue;
                    for (std::size_t t = 0; t < v.size(); ++t)
                        ech[r][t] = ring.sub(ech[r][t], ring.mul(c, v[t]));
                }
                lead.push_back(static_cast<int>(j));
                ech.push_back(std::move(v));
                return true;
            }
        return false;
    };
    for (int j = 0; j < d_in.cols(); ++j) {
        std::vector<typename R::elem> col(static_cast<std::size_t>(d_in.rows()), ring.zero());
        for (int i = 0; i < d_in.rows(); ++i) col[static_cast<std::size_t>(i)] = d_in.get(i, j);
        insert(std::move(col));
    }
    cohomology_presentation<R> pres;
    for (auto& kv : kernel) {
        auto reduced = reduce_against(kv);
        bool nonzero = false;
        for (const auto& x : reduced)
            if (!ring.is_zero(x)) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        insert(reduced);
        normalize_representative(ring, reduced);
        pres.representatives.push_back(std::move(reduced));
    }
    pres.free_rank = static_cast<int>(pres.representatives.size());
    return pres;
}

inline cohomology_presentation<integer_ring> integer_cohomology_at(const sparse_matrix<integer_ring>& d_out,
                                                                   const sparse_matrix<integer_ring>& d_in) {
    integer_ring zz;
    int n = d_out.cols();
    auto kernel = integer_kernel_basis(d_out);
    int k = static_cast<int>(kernel.size());
    sparse_matrix<integer_ring> zb(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) zb.set(zz, i, j, kernel[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);

    // coordinates of the incoming image in the kernel lattice basis: solve
    // zb X = d_in (the kernel lattice is saturated, so the solution is
    // integral and unique); one factorization serves every column
    smith_result sz = smith_normal_form(zb);
    sparse_matrix<integer_ring> X(k, d_in.cols());
    for (int j = 0; j < d_in.cols(); ++j) {
        std::vector<bigint> col(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = d_in.get(i, j);
        std::vector<bigint> ub = apply(zz, sz.U, col);
        std::vector<bigint> y(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            if (i < sz.rank()) {
                const bigint& d = sz.diagonal[static_cast<std::size_t>(i)];
                if (ub[static_cast<std::size_t>(i)] % d != 0)
                    throw precondition_error("cohomology_at: image column not in kernel lattice");
                y[static_cast<std::size_t>(i)] = ub[static_cast<std::size_t>(i)] / d;
            } else if (ub[static_cast<std::size_t>(i)] != 0) {
                throw precondition_error("cohomology_at: image column not in kernel lattice");
            }
        }
        std::vector<bigint> x = apply(zz, sz.V, y);
        for (int i = 0; i < k; ++i) X.set(zz, i, j, x[static_cast<std::size_t>(i)]);
    }

    smith_result s = smith_normal_form(X);
    int rank = s.rank();
    cohomology_presentation<integer_ring> pres;
    pres.free_rank = k - rank;
    auto generator = [&](int j) {
        std::vector<bigint> w(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = s.Uinv.get(i, j);
        std::vector<bigint> rep(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            bigint acc = 0;
            for (int t = 0; t < k; ++t) acc += zb.get(i, t) * w[static_cast<std::size_t>(t)];
            rep[static_cast<std::size_t>(i)] = acc;
        }
        normalize_representative(zz, rep);
        return rep;
    };
    for (int j = rank; j < k; ++j) pres.representatives.push_back(generator(j));
    for (int j = 0; j < rank; ++j) {
        if (s.diagonal[static_cast<std::size_t>(j)] > 1) {
            pres.invariant_factors.push_back(s.diagonal[static_cast<std::size_t>(j)]);
            pres.representatives.push_back(generator(j));
        }
    }
    return pres;
}

}  // namespace detail

// Cohomology of ... -> C --d_out--> ... at the middle space, where d_in maps
// into C.  Requires d_out . d_in = 0.
template <class R>
cohomology_presentation<R> cohomology_at(const R& ring, const sparse_matrix<R>& d_out,
                                         const sparse_matrix<R>& d_in) {
    if (d_out.cols() != d_in.rows())
        throw precondition_error("cohomology_at: dimension mismatch");
    if (!multiply(ring, d_out, d_in).is_zero_matrix())
        throw precondition_error("cohomology_at: composition d_out . d_in is nonzero");
    if constexpr (R::is_field) {
        return detail::field_cohomology_at(ring, d_out, d_in);
    } else {
        (void)ring;
        return detail::integer_cohomology_at(d_out, d_in);
    }
}

}  // namespace nervecomp
