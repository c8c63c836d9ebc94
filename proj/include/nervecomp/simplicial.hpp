#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace nervecomp {

// Finite abstract simplicial complex.  Vertices carry external integer ids in
// a fixed total order; internally every simplex and tuple is written in
// vertex ranks (positions in that order), so min/max/lex comparisons are
// plain integer comparisons.
class simplicial_complex {
  public:
    simplicial_complex() = default;

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int vertex_id(int rank) const { return vertex_ids_[static_cast<std::size_t>(rank)]; }
    const std::vector<int>& vertex_ids() const { return vertex_ids_; }

    int rank_of(int vertex_id) const {
        auto it = rank_.find(vertex_id);
        if (it == rank_.end())
            throw precondition_error("complex: unknown vertex id " + std::to_string(vertex_id));
        return it->second;
    }

    // largest d with a d-simplex; -1 for the empty complex
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<vertex_set>& simplices(int d) const {
        static const std::vector<vertex_set> none;
        if (d < 0 || d > dim()) return none;
        return by_dim_[static_cast<std::size_t>(d)];
    }

    bool has(const vertex_set& s) const {
        int d = static_cast<int>(s.size()) - 1;
        if (d < 0 || d > dim()) return false;
        return index_[static_cast<std::size_t>(d)].count(s) > 0;
    }

    int simplex_index(const vertex_set& s) const {
        int d = static_cast<int>(s.size()) - 1;
        if (d < 0 || d > dim()) throw precondition_error("complex: not a simplex");
        auto it = index_[static_cast<std::size_t>(d)].find(s);
        if (it == index_[static_cast<std::size_t>(d)].end())
            throw precondition_error("complex: not a simplex");
        return it->second;
    }

    // vertices w not in s with s + {w} a simplex
    const std::vector<int>& extension_vertices(const vertex_set& s) const {
        static const std::vector<int> none;
        auto it = extensions_.find(s);
        return it == extensions_.end() ? none : it->second;
    }

    bool maximal(const vertex_set& s) const { return extension_vertices(s).empty(); }

    std::vector<vertex_set> facets() const {
        std::vector<vertex_set> out;
        for (int d = 0; d <= dim(); ++d)
            for (const auto& s : simplices(d))
                if (maximal(s)) out.push_back(s);
        return out;
    }

    friend bool operator==(const simplicial_complex& a, const simplicial_complex& b) {
        return a.vertex_ids_ == b.vertex_ids_ && a.by_dim_ == b.by_dim_;
    }

    // equality of the rank-level simplex structure, ignoring vertex ids
    friend bool same_structure(const simplicial_complex& a, const simplicial_complex& b) {
        return a.vertex_count() == b.vertex_count() && a.by_dim_ == b.by_dim_;
    }

    // Builds the downward closure of `facet_ids`.  `vertex_order` fixes the
    // vertex ranks; every vertex is a simplex whether or not a facet uses it.
    friend simplicial_complex close_downward(const std::vector<vertex_set>& facet_ids,
                                             const std::vector<int>& vertex_order);

  private:
    std::vector<int> vertex_ids_;
    std::map<int, int> rank_;
    std::vector<std::vector<vertex_set>> by_dim_;
    std::vector<std::map<vertex_set, int>> index_;
    std::map<vertex_set, std::vector<int>> extensions_;

    void finish(std::vector<std::set<vertex_set>>&& collected) {
        by_dim_.clear();
        index_.clear();
        extensions_.clear();
        for (auto& level : collected) {
            by_dim_.emplace_back(level.begin(), level.end());
            index_.emplace_back();
            auto& idx = index_.back();
            int i = 0;
            for (const auto& s : by_dim_.back()) idx[s] = i++;
        }
        for (int d = 1; d <= dim(); ++d)
            for (const auto& s : simplices(d))
                for (std::size_t k = 0; k < s.size(); ++k) {
                    vertex_set face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                    extensions_[face].push_back(s[k]);
                }
        for (auto& [s, ws] : extensions_) std::sort(ws.begin(), ws.end());
    }
};

inline simplicial_complex close_downward(const std::vector<vertex_set>& facet_ids,
                                         const std::vector<int>& vertex_order) {
    simplicial_complex c;
    c.vertex_ids_ = vertex_order;
    for (std::size_t r = 0; r < vertex_order.size(); ++r) {
        if (!c.rank_.emplace(vertex_order[r], static_cast<int>(r)).second)
            throw precondition_error("close_downward: duplicate vertex id " + std::to_string(vertex_order[r]));
    }
    std::vector<std::set<vertex_set>> collected(1);
    for (int v = 0; v < c.vertex_count(); ++v) collected[0].insert({v});
    for (const auto& f : facet_ids) {
        if (f.empty()) throw precondition_error("close_downward: empty facet");
        vertex_set ranks;
        for (int id : f) ranks.push_back(c.rank_of(id));
        std::sort(ranks.begin(), ranks.end());
        if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
            throw precondition_error("close_downward: facet with repeated vertex");
        // all nonempty subsets
        std::size_t n = ranks.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            vertex_set sub;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) sub.push_back(ranks[k]);
            if (collected.size() < sub.size()) collected.resize(sub.size());
            collected[sub.size() - 1].insert(sub);
        }
    }
    c.finish(std::move(collected));
    return c;
}

// All algebraic p-simplices: tuples of length p+1 over vertex ranks whose
// underlying set is a simplex, in lexicographic order.
inline std::vector<vertex_tuple> algebraic_simplices(const simplicial_complex& c, int p) {
    std::vector<vertex_tuple> out;
    if (p < 0) return out;
    vertex_tuple cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == p + 1) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < c.vertex_count(); ++v) {
            cur.push_back(v);
            if (c.has(tuple_support(cur))) self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

// Sparse ordered simplicial cochain.  Keys are algebraic simplices in ranks;
// stored values are nonzero; a missing key means the value is zero.
template <class R>
struct cochain {
    int degree = 0;
    std::map<vertex_tuple, typename R::elem> values;

    bool is_zero() const { return values.empty(); }

    typename R::elem at(const vertex_tuple& t) const {
        auto it = values.find(t);
        return it == values.end() ? typename R::elem{} : it->second;
    }

    void add_to(const R& ring, const vertex_tuple& t, const typename R::elem& v) {
        if (ring.is_zero(v)) return;
        auto it = values.find(t);
        if (it == values.end()) {
            values[t] = v;
        } else {
            it->second = ring.add(it->second, v);
            if (ring.is_zero(it->second)) values.erase(it);
        }
    }
};

template <class R>
cochain<R> cochain_add(const R& ring, const cochain<R>& a, const cochain<R>& b) {
    if (a.degree != b.degree) throw precondition_error("cochain_add: degree mismatch");
    cochain<R> c = a;
    for (const auto& [t, v] : b.values) c.add_to(ring, t, v);
    return c;
}

template <class R>
cochain<R> cochain_sub(const R& ring, const cochain<R>& a, const cochain<R>& b) {
    if (a.degree != b.degree) throw precondition_error("cochain_sub: degree mismatch");
    cochain<R> c = a;
    for (const auto& [t, v] : b.values) c.add_to(ring, t, ring.neg(v));
    return c;
}

template <class R>
cochain<R> cochain_scale(const R& ring, const typename R::elem& s, const cochain<R>& a) {
    cochain<R> c;
    c.degree = a.degree;
    for (const auto& [t, v] : a.values) c.add_to(ring, t, ring.mul(s, v));
    return c;
}

template <class R>
bool cochain_equal(const R& ring, const cochain<R>& a, const cochain<R>& b) {
    if (a.degree != b.degree || a.values.size() != b.values.size()) return false;
    auto it = b.values.begin();
    for (const auto& [t, v] : a.values) {
        if (it->first != t || !ring.eq(it->second, v)) return false;
        ++it;
    }
    return true;
}

// Ordered simplicial coboundary: (dc)(t) = sum_k (-1)^k c(t drop k) over all
// algebraic (p+1)-simplices t of the complex.
template <class R>
cochain<R> coboundary(const R& ring, const simplicial_complex& c, const cochain<R>& x) {
    cochain<R> out;
    out.degree = x.degree + 1;
    for (const auto& [t, v] : x.values) {
        vertex_set supp = tuple_support(t);
        // inserting any vertex of t keeps the support; extension vertices grow it
        std::vector<int> candidates = supp;
        const auto& ext = c.extension_vertices(supp);
        candidates.insert(candidates.end(), ext.begin(), ext.end());
        for (int w : candidates)
            for (std::size_t k = 0; k <= t.size(); ++k) {
                int sign = (k % 2 == 0) ? 1 : -1;
                out.add_to(ring, tuple_insert(t, k, w),
                           sign > 0 ? v : ring.neg(v));
            }
    }
    return out;
}

template <class R>
bool is_cocycle(const R& ring, const simplicial_complex& c, const cochain<R>& x) {
    return coboundary(ring, c, x).is_zero();
}

// Signed-sort alternation: the value on a repeat-free tuple is the sign of
// its sorting permutation times the input's value on the sorted tuple, and
// tuples with repeats go to zero.  Reading sorted tuples only (rather than
// summing over all orderings) is what makes this a chain map over every
// ring, with no factorial factors.  The result is stored fully expanded
// (every permutation of each support simplex carries its signed value), so
// lookups on arbitrary tuples see the alternating function.
template <class R>
cochain<R> alternation(const R& ring, const cochain<R>& x) {
    cochain<R> out;
    out.degree = x.degree;
    for (const auto& [t, v] : x.values) {
        if (ring.is_zero(v)) continue;
        if (!std::is_sorted(t.begin(), t.end()) || has_repeats(t)) continue;
        vertex_tuple perm = t;
        do {
            int sign = sort_sign(perm);
            out.values[perm] = sign > 0 ? v : ring.neg(v);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

// Vertex map between complexes, given by ranks.  Carried as plain data; the
// complexes are passed to the operations that need them.
struct simplicial_map {
    std::vector<int> vertex_map;  // source rank -> target rank

    int operator()(int v) const { return vertex_map[static_cast<std::size_t>(v)]; }
};

inline bool is_simplicial(const simplicial_complex& source, const simplicial_complex& target,
                          const simplicial_map& f) {
    if (static_cast<int>(f.vertex_map.size()) != source.vertex_count()) return false;
    for (int v : f.vertex_map)
        if (v < 0 || v >= target.vertex_count()) return false;
    for (int d = 0; d <= source.dim(); ++d)
        for (const auto& s : source.simplices(d)) {
            vertex_tuple image;
            for (int v : s) image.push_back(f(v));
            if (!target.has(tuple_support(image))) return false;
        }
    return true;
}

// Pullback (f^* c)(t) = c(f . t) of an ordered cochain along a simplicial map.
template <class R>
cochain<R> pullback(const R& ring, const simplicial_complex& source, const simplicial_map& f,
                    const cochain<R>& c) {
    cochain<R> out;
    out.degree = c.degree;
    for (const auto& t : algebraic_simplices(source, c.degree)) {
        vertex_tuple image;
        image.reserve(t.size());
        for (int v : t) image.push_back(f(v));
        auto it = c.values.find(image);
        if (it != c.values.end() && !ring.is_zero(it->second)) out.values[t] = it->second;
    }
    return out;
}

// Matrix of the coboundary on the alternating subcomplex, with the sorted
// repeat-free simplices of each dimension as basis.  Rows index
// (p+1)-simplices, columns p-simplices.
template <class R>
sparse_matrix<R> alt_coboundary_matrix(const R& ring, const simplicial_complex& c, int p) {
    int rows = static_cast<int>(c.simplices(p + 1).size());
    int cols = static_cast<int>(c.simplices(p).size());
    sparse_matrix<R> m(rows, cols);
    if (p < 0) return m;
    for (int i = 0; i < rows; ++i) {
        const vertex_set& s = c.simplices(p + 1)[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < s.size(); ++k) {
            vertex_set face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
            int j = c.simplex_index(face);
            m.add_to(ring, i, j, k % 2 == 0 ? ring.one() : ring.neg(ring.one()));
        }
    }
    return m;
}

// Reads an alternating cochain as a coordinate vector over the sorted-simplex
// basis (alternates first, so any representative of the class of x works).
template <class R>
std::vector<typename R::elem> alt_vector(const R& ring, const simplicial_complex& c, int p,
                                         const cochain<R>& x) {
    cochain<R> a = alternation(ring, x);
    std::vector<typename R::elem> v;
    v.reserve(c.simplices(p).size());
    for (const auto& s : c.simplices(p)) v.push_back(a.at(s));
    return v;
}

// Expands a coordinate vector over the sorted-simplex basis into the fully
// expanded alternating ordered cochain.
template <class R>
cochain<R> alt_cochain(const R& ring, const simplicial_complex& c, int p,
                       const std::vector<typename R::elem>& v) {
    cochain<R> raw;
    raw.degree = p;
    const auto& basis = c.simplices(p);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!ring.is_zero(v[i])) raw.values[basis[i]] = v[i];
    return alternation(ring, raw);
}

// Cohomology of the complex in degree p over R, computed on the alternating
// subcomplex; representatives come back as fully expanded ordered cochains.
template <class R>
struct cohomology_classes {
    cohomology_presentation<R> presentation;
    std::vector<cochain<R>> representatives;
};

template <class R>
cohomology_classes<R> cohomology(const R& ring, const simplicial_complex& c, int p) {
    if (p < 0) throw precondition_error("cohomology: negative degree");
    sparse_matrix<R> d_out = alt_coboundary_matrix(ring, c, p);
    sparse_matrix<R> d_in =
        p == 0 ? sparse_matrix<R>(static_cast<int>(c.simplices(0).size()), 0)
               : alt_coboundary_matrix(ring, c, p - 1);
    cohomology_classes<R> out;
    out.presentation = cohomology_at(ring, d_out, d_in);
    for (const auto& rep : out.presentation.representatives)
        out.representatives.push_back(alt_cochain(ring, c, p, rep));
    return out;
}

// Decides whether two cocycles of degree p are cohomologous.  Works on the
// alternating subcomplex, which is legitimate because signed-sort alternation
// induces the identity on cohomology.
template <class R>
bool class_equal(const R& ring, const simplicial_complex& c, int p, const cochain<R>& z1,
                 const cochain<R>& z2) {
    if (z1.degree != p || z2.degree != p)
        throw precondition_error("class_equal: degree mismatch");
    if (!is_cocycle(ring, c, z1) || !is_cocycle(ring, c, z2))
        throw precondition_error("class_equal: input is not a cocycle");
    std::vector<typename R::elem> d = alt_vector(ring, c, p, cochain_sub(ring, z1, z2));
    if (p == 0) {
        for (const auto& x : d)
            if (!ring.is_zero(x)) return false;
        return true;
    }
    sparse_matrix<R> delta = alt_coboundary_matrix(ring, c, p - 1);
    return span_membership(ring, delta, d).has_value();
}

}  // namespace nervecomp
