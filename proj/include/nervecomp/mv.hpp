#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "covers.hpp"

namespace nervecomp {

// Element of the cover double complex in bidegree (p, q), stored as a
// two-level sparse map: outer keys are cover index tuples in I_p, inner keys
// are level-r algebraic q-simplices small in the keyed intersection.  Row
// p = -1 holds cover-small cochains (single empty outer key); column q = -1
// holds Cech cochains (single empty inner key per tuple).
template <class R>
struct double_cochain {
    int p = 0, q = 0;
    std::map<vertex_tuple, std::map<vertex_tuple, typename R::elem>> values;

    bool is_zero() const { return values.empty(); }

    void add_to(const R& ring, const vertex_tuple& outer, const vertex_tuple& inner,
                const typename R::elem& v) {
        if (ring.is_zero(v)) return;
        auto& row = values[outer];
        auto it = row.find(inner);
        if (it == row.end()) {
            row[inner] = v;
        } else {
            it->second = ring.add(it->second, v);
            if (ring.is_zero(it->second)) row.erase(it);
        }
        if (row.empty()) values.erase(outer);
    }
};

template <class R>
bool double_cochain_equal(const R& ring, const double_cochain<R>& a, const double_cochain<R>& b) {
    if (a.p != b.p || a.q != b.q || a.values.size() != b.values.size()) return false;
    auto ita = a.values.begin();
    auto itb = b.values.begin();
    for (; ita != a.values.end(); ++ita, ++itb) {
        if (ita->first != itb->first || ita->second.size() != itb->second.size()) return false;
        auto ja = ita->second.begin();
        auto jb = itb->second.begin();
        for (; ja != ita->second.end(); ++ja, ++jb)
            if (ja->first != jb->first || !ring.eq(ja->second, jb->second)) return false;
    }
    return true;
}

template <class R>
double_cochain<R> double_cochain_add(const R& ring, const double_cochain<R>& a,
                                     const double_cochain<R>& b) {
    if (a.p != b.p || a.q != b.q) throw precondition_error("double cochain add: bidegree mismatch");
    double_cochain<R> c = a;
    for (const auto& [outer, row] : b.values)
        for (const auto& [inner, v] : row) c.add_to(ring, outer, inner, v);
    return c;
}

template <class R>
double_cochain<R> double_cochain_scale(const R& ring, const typename R::elem& s,
                                       const double_cochain<R>& a) {
    double_cochain<R> c;
    c.p = a.p;
    c.q = a.q;
    for (const auto& [outer, row] : a.values)
        for (const auto& [inner, v] : row) c.add_to(ring, outer, inner, ring.mul(s, v));
    return c;
}

// Assignment of a cover index i(s) to every small simplex s, subject to s
// being small in U_{i(s)}.  `pick` receives the underlying vertex set, so the
// rule is constant on all orderings of a simplex.
struct choice_rule {
    std::string name;
    std::function<int(const vertex_set&)> pick;
};

inline choice_rule min_index_rule(const star_cover& c, const subdivision_level& l) {
    auto masks = vertex_masks(c, l);
    int n = c.size();
    return {"min-index", [masks, n](const vertex_set& s) {
                std::uint64_t m = small_mask(masks, s);
                for (int i = 0; i < n; ++i)
                    if (m & (std::uint64_t{1} << i)) return i;
                throw precondition_error("choice rule: simplex is not small in any member");
            }};
}

inline choice_rule max_index_rule(const star_cover& c, const subdivision_level& l) {
    auto masks = vertex_masks(c, l);
    int n = c.size();
    return {"max-index", [masks, n](const vertex_set& s) {
                std::uint64_t m = small_mask(masks, s);
                for (int i = n - 1; i >= 0; --i)
                    if (m & (std::uint64_t{1} << i)) return i;
                throw precondition_error("choice rule: simplex is not small in any member");
            }};
}

// Choice rule for the vertex-star cover at level 1: the minimum over the
// simplex's vertices of their images under the max-vertex approximation.
inline choice_rule star_paper_rule(const subdivision_tower& tower) {
    std::vector<int> g = tower.approximation(0).vertex_map;
    return {"star-min-of-max", [g](const vertex_set& s) {
                int best = -1;
                for (int v : s) {
                    int gv = g[static_cast<std::size_t>(v)];
                    if (best < 0 || gv < best) best = gv;
                }
                if (best < 0) throw precondition_error("choice rule: empty simplex");
                return best;
            }};
}

inline choice_rule default_choice_rule(const star_cover& c, const subdivision_tower& tower, int r) {
    if (r == 1 && is_star_cover(c, tower.base())) return star_paper_rule(tower);
    return min_index_rule(c, tower.level(r));
}

enum class contraction_form {
    prepend_choice,  // the contraction: value at the tuple with i(s) prepended
    append_choice    // wrong index order; negative control for the identity
};

struct row_exactness_report {
    bool pass = true;
    bool has_failure = false;
    int fail_p = 0, fail_q = 0;
    std::vector<std::tuple<vertex_tuple, vertex_tuple, std::string>> witness;
    std::vector<std::pair<std::string, bool>> contractibility;  // per distinct small index set
};

// The cover double complex at one tower level: C^{p,q} has basis the pairs
// (tuple in I_p, level algebraic q-simplex small in the tuple's
// intersection), with the Cech row at q = -1 and the cover-small cochain row
// at p = -1 as augmentations.
template <class R>
class mv_complex {
  public:
    using elem = typename R::elem;
    using basis_key = std::pair<vertex_tuple, vertex_tuple>;

    mv_complex(R ring, const star_cover& cover, const subdivision_tower& tower, int level,
               choice_rule rule)
        : ring_(ring),
          cover_(cover),
          tower_(tower),
          level_(level),
          rule_(std::move(rule)),
          nerve_(nerve(cover, tower.base())),
          masks_(vertex_masks(cover, tower.level(level))) {}

    const simplicial_complex& nerve_complex() const { return nerve_; }
    const simplicial_complex& level_complex() const { return tower_.level(level_).complex; }
    int level() const { return level_; }
    const choice_rule& rule() const { return rule_; }

    std::uint64_t simplex_mask(const vertex_set& s) const { return small_mask(masks_, s); }

    // Horizontal differential: alternating sum of restrictions over tuple
    // face maps.  At p = -1 it is the augmentation restricting a cover-small
    // cochain to every member.
    double_cochain<R> delta_h(const double_cochain<R>& c) const {
        if (c.q < 0) throw precondition_error("delta_h: Cech row has no horizontal differential here");
        double_cochain<R> out;
        out.p = c.p + 1;
        out.q = c.q;
        for (const auto& [t, row] : c.values)
            for (const auto& [s, v] : row) {
                std::uint64_t m = simplex_mask(tuple_support(s));
                if (c.p == -1) {
                    for (int i = 0; i < cover_.size(); ++i)
                        if (m & (std::uint64_t{1} << i)) out.add_to(ring_, {i}, s, v);
                    continue;
                }
                for (int i = 0; i < cover_.size(); ++i) {
                    if (!(m & (std::uint64_t{1} << i))) continue;
                    for (std::size_t k = 0; k <= t.size(); ++k)
                        out.add_to(ring_, tuple_insert(t, k, i), s,
                                   k % 2 == 0 ? v : ring_.neg(v));
                }
            }
        return out;
    }

    // Vertical differential: componentwise ordered coboundary into the
    // simplices that stay small in the keyed intersection.  At q = -1 it is
    // the augmentation spreading a Cech value over the small 0-simplices.
    double_cochain<R> delta_v(const double_cochain<R>& c) const {
        if (c.p < 0) throw precondition_error("delta_v: cover-small row has no vertical differential here");
        double_cochain<R> out;
        out.p = c.p;
        out.q = c.q + 1;
        const simplicial_complex& lc = level_complex();
        for (const auto& [t, row] : c.values) {
            std::uint64_t need = tuple_mask(t);
            for (const auto& [s, v] : row) {
                if (c.q == -1) {
                    for (int w = 0; w < lc.vertex_count(); ++w)
                        if ((masks_[static_cast<std::size_t>(w)] & need) == need)
                            out.add_to(ring_, t, {w}, v);
                    continue;
                }
                vertex_set supp = tuple_support(s);
                std::vector<int> candidates = supp;
                for (int w : lc.extension_vertices(supp))
                    if ((masks_[static_cast<std::size_t>(w)] & need) == need) candidates.push_back(w);
                for (int w : candidates)
                    for (std::size_t k = 0; k <= s.size(); ++k)
                        out.add_to(ring_, t, tuple_insert(s, k, w),
                                   k % 2 == 0 ? v : ring_.neg(v));
            }
        }
        return out;
    }

    // Chain contraction of the rows: reads the component at the tuple with
    // the chosen index prepended.  The append form deliberately miswires the
    // index order and is kept as a negative control.
    double_cochain<R> contraction(const double_cochain<R>& c,
                                  contraction_form form = contraction_form::prepend_choice) const {
        if (c.p < 0 || c.q < 0)
            throw precondition_error("contraction: defined on bidegrees with p >= 0, q >= 0");
        double_cochain<R> out;
        out.p = c.p - 1;
        out.q = c.q;
        for (const auto& [t, row] : c.values)
            for (const auto& [s, v] : row) {
                vertex_set supp = tuple_support(s);
                int i = rule_.pick(supp);
                if (!(simplex_mask(supp) & (std::uint64_t{1} << i)))
                    throw precondition_error("contraction: choice rule violates smallness");
                if (form == contraction_form::prepend_choice) {
                    if (t.front() != i) continue;
                    out.add_to(ring_, vertex_tuple(t.begin() + 1, t.end()), s, v);
                } else {
                    if (t.back() != i) continue;
                    out.add_to(ring_, vertex_tuple(t.begin(), t.end() - 1), s, v);
                }
            }
        return out;
    }

    // Total differential on a graded element, with components beyond the
    // horizontal cap dropped (the truncation used for all computations).
    std::map<std::pair<int, int>, double_cochain<R>> total_differential(
        const std::map<std::pair<int, int>, double_cochain<R>>& x, int p_cap) const {
        std::map<std::pair<int, int>, double_cochain<R>> out;
        auto accumulate = [&](const double_cochain<R>& c) {
            if (c.p > p_cap || c.is_zero()) return;
            auto key = std::make_pair(c.p, c.q);
            auto it = out.find(key);
            if (it == out.end())
                out[key] = c;
            else
                it->second = double_cochain_add(ring_, it->second, c);
        };
        for (const auto& [pq, c] : x) {
            if (pq.first < 0 || pq.second < 0)
                throw precondition_error("total_differential: augmentation rows are not part of the total complex");
            if (c.p != pq.first || c.q != pq.second)
                throw precondition_error("total_differential: bidegree key mismatch");
            accumulate(delta_h(c));
            elem sign = pq.first % 2 == 0 ? ring_.one() : ring_.neg(ring_.one());
            accumulate(double_cochain_scale(ring_, sign, delta_v(c)));
        }
        return out;
    }

    // Zigzag lift: alternating vertical steps and contractions from the Cech
    // row down to the cover-small row, with the global sign (-1)^{p(p+1)/2}.
    cochain<R> zeta_tilde(const cochain<R>& cech_phi) const {
        int p = cech_phi.degree;
        double_cochain<R> dc;
        dc.p = p;
        dc.q = -1;
        for (const auto& [t, v] : cech_phi.values) {
            if (static_cast<int>(t.size()) != p + 1 || !nerve_.has(tuple_support(t)))
                throw precondition_error("zeta_tilde: input is not a Cech cochain on the nerve");
            dc.add_to(ring_, t, {}, v);
        }
        for (int h = 0; h <= p; ++h) {
            dc = delta_v(dc);
            dc = contraction(dc);
        }
        cochain<R> out;
        out.degree = p;
        bool flip = ((p * (p + 1)) / 2) % 2 == 1;
        auto it = dc.values.find(vertex_tuple{});
        if (it != dc.values.end())
            for (const auto& [s, v] : it->second) out.values[s] = flip ? ring_.neg(v) : v;
        return out;
    }

    // Ordered basis of C^{p,q}; accepts the augmentation rows p = -1, q = -1.
    const std::vector<basis_key>& basis(int p, int q) const {
        if (p < -1 || q < -1 || (p == -1 && q == -1))
            throw precondition_error("basis: invalid bidegree");
        auto key = std::make_pair(p, q);
        auto cached = basis_cache_.find(key);
        if (cached != basis_cache_.end()) return cached->second;
        std::vector<basis_key> out;
        if (p == -1) {
            for (const auto& s : algebraic_at(q))
                if (simplex_mask(tuple_support(s)) != 0) out.emplace_back(vertex_tuple{}, s);
        } else if (q == -1) {
            for (const auto& t : nerve_algebraic_at(p)) out.emplace_back(t, vertex_tuple{});
        } else {
            for (const auto& s : algebraic_at(q)) {
                std::uint64_t have = simplex_mask(tuple_support(s));
                for (const auto& t : nerve_algebraic_at(p))
                    if ((have & tuple_mask(t)) == tuple_mask(t)) out.emplace_back(t, s);
            }
            std::sort(out.begin(), out.end());
        }
        return basis_cache_.emplace(key, std::move(out)).first->second;
    }

    sparse_matrix<R> matrix_delta_h(int p, int q) const {
        return operator_matrix(p, q, p + 1, q, [this](const double_cochain<R>& c) { return delta_h(c); });
    }

    sparse_matrix<R> matrix_delta_v(int p, int q) const {
        return operator_matrix(p, q, p, q + 1, [this](const double_cochain<R>& c) { return delta_v(c); });
    }

    sparse_matrix<R> matrix_contraction(int p, int q,
                                        contraction_form form = contraction_form::prepend_choice) const {
        return operator_matrix(p, q, p - 1, q,
                               [this, form](const double_cochain<R>& c) { return contraction(c, form); });
    }

    // Checks the contraction identity delta_h K + K delta_h = id on C^{p,q}
    // for 0 <= p <= max_p as exact matrix identities, and spot-checks that
    // each arising index set carries the cohomology of a point.
    row_exactness_report verify_row_exactness(int q, int max_p,
                                              contraction_form form = contraction_form::prepend_choice) const {
        row_exactness_report rep;
        sparse_matrix<R> lower = matrix_delta_h(-1, q);
        sparse_matrix<R> kp = matrix_contraction(0, q, form);
        for (int p = 0; p <= max_p && rep.pass; ++p) {
            sparse_matrix<R> kp1 = matrix_contraction(p + 1, q, form);
            sparse_matrix<R> dh = matrix_delta_h(p, q);
            sparse_matrix<R> s =
                add(ring_, multiply(ring_, lower, kp), multiply(ring_, kp1, dh));
            lower = dh;
            kp = kp1;
            const auto& b = basis(p, q);
            sparse_matrix<R> id = sparse_matrix<R>::identity(ring_, static_cast<int>(b.size()));
            if (equal(ring_, s, id)) continue;
            rep.pass = false;
            rep.has_failure = true;
            rep.fail_p = p;
            rep.fail_q = q;
            sparse_matrix<R> diff = subtract(ring_, s, id);
            for (int j = 0; j < diff.cols() && rep.witness.empty(); ++j)
                for (int i = 0; i < diff.rows(); ++i) {
                    auto v = diff.get(i, j);
                    if (!ring_.is_zero(v))
                        rep.witness.emplace_back(b[static_cast<std::size_t>(i)].first,
                                                 b[static_cast<std::size_t>(i)].second, ring_.str(v));
                }
        }
        // every index set I(s) of a small simplex spans a full simplex whose
        // ordered cochain complex is the cohomology of a point
        std::set<std::uint64_t> masks_seen;
        for (int d = 0; d <= level_complex().dim(); ++d)
            for (const auto& s : level_complex().simplices(d)) {
                std::uint64_t m = simplex_mask(s);
                if (m != 0) masks_seen.insert(m);
            }
        for (std::uint64_t m : masks_seen) {
            std::vector<int> members;
            for (int i = 0; i < cover_.size(); ++i)
                if (m & (std::uint64_t{1} << i)) members.push_back(i);
            std::vector<int> order(members.size());
            for (std::size_t k = 0; k < members.size(); ++k) order[k] = static_cast<int>(k);
            simplicial_complex full = close_downward({order}, order);
            bool ok = true;
            for (int d = 0; d <= max_p && ok; ++d) {
                auto h = cohomology(ring_, full, d);
                int expect = d == 0 ? 1 : 0;
                if (h.presentation.free_rank != expect || !h.presentation.invariant_factors.empty())
                    ok = false;
            }
            std::string label;
            for (int i : members) label += (label.empty() ? "" : ",") + cover_.ids[static_cast<std::size_t>(i)];
            rep.contractibility.emplace_back(label, ok);
            if (!ok) rep.pass = false;
        }
        return rep;
    }

  private:
    R ring_;
    const star_cover& cover_;
    const subdivision_tower& tower_;
    int level_;
    choice_rule rule_;
    simplicial_complex nerve_;
    std::vector<std::uint64_t> masks_;
    mutable std::map<int, std::vector<vertex_tuple>> alg_cache_;
    mutable std::map<int, std::vector<vertex_tuple>> nerve_alg_cache_;
    mutable std::map<std::pair<int, int>, std::vector<basis_key>> basis_cache_;

    const std::vector<vertex_tuple>& algebraic_at(int q) const {
        auto it = alg_cache_.find(q);
        if (it == alg_cache_.end())
            it = alg_cache_.emplace(q, algebraic_simplices(level_complex(), q)).first;
        return it->second;
    }

    const std::vector<vertex_tuple>& nerve_algebraic_at(int p) const {
        auto it = nerve_alg_cache_.find(p);
        if (it == nerve_alg_cache_.end())
            it = nerve_alg_cache_.emplace(p, algebraic_simplices(nerve_, p)).first;
        return it->second;
    }

    template <class Op>
    sparse_matrix<R> operator_matrix(int p, int q, int p_out, int q_out, Op&& op) const {
        const auto& src = basis(p, q);
        const auto& dst = basis(p_out, q_out);
        std::map<basis_key, int> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);
        sparse_matrix<R> m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (std::size_t j = 0; j < src.size(); ++j) {
            double_cochain<R> indicator;
            indicator.p = p;
            indicator.q = q;
            indicator.add_to(ring_, src[j].first, src[j].second, ring_.one());
            double_cochain<R> image = op(indicator);
            for (const auto& [outer, row] : image.values)
                for (const auto& [inner, v] : row)
                    m.add_to(ring_, dst_index.at({outer, inner}), static_cast<int>(j), v);
        }
        return m;
    }
};

}  // namespace nervecomp
