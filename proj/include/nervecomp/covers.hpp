#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subdivision.hpp"

namespace nervecomp {

// Star-union open cover of a base complex: each member U_i is the union of
// the open vertex stars over a nonempty vertex set A_i, i.e. the locus where
// the base coordinates over A_i have positive sum.  Indices live in a fixed
// order; masks over them fit in 64 bits.
struct star_cover {
    std::vector<std::string> ids;    // display ids, in index order
    std::vector<vertex_set> sets;    // A_i as sorted base vertex ranks
    std::vector<std::string> warnings;

    int size() const { return static_cast<int>(sets.size()); }
};

inline star_cover make_star_cover(const simplicial_complex& base) {
    star_cover c;
    for (int v = 0; v < base.vertex_count(); ++v) {
        c.ids.push_back(std::to_string(base.vertex_id(v)));
        c.sets.push_back({v});
    }
    return c;
}

// Builds a cover from named vertex-id sets.  Without an explicit order the
// ids are taken lexicographically.  Empty sets are dropped with a warning;
// the remaining sets must cover every base vertex.
inline star_cover make_cover(const simplicial_complex& base,
                             const std::vector<std::pair<std::string, std::vector<int>>>& named_sets,
                             const std::optional<std::vector<std::string>>& order = std::nullopt) {
    std::map<std::string, vertex_set> by_id;
    for (const auto& [id, vertex_ids] : named_sets) {
        if (by_id.count(id)) throw precondition_error("cover: duplicate set id '" + id + "'");
        vertex_set ranks;
        for (int v : vertex_ids) ranks.push_back(base.rank_of(v));
        std::sort(ranks.begin(), ranks.end());
        ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
        by_id[id] = std::move(ranks);
    }
    std::vector<std::string> id_order;
    if (order) {
        std::set<std::string> seen;
        for (const auto& id : *order) {
            if (!by_id.count(id)) throw precondition_error("cover: order names unknown set '" + id + "'");
            if (!seen.insert(id).second)
                throw precondition_error("cover: order repeats set '" + id + "'");
            id_order.push_back(id);
        }
        if (id_order.size() != by_id.size())
            throw precondition_error("cover: order must list every set");
    } else {
        for (const auto& [id, s] : by_id) id_order.push_back(id);
    }
    star_cover c;
    for (const auto& id : id_order) {
        if (by_id[id].empty()) {
            c.warnings.push_back("dropped empty cover set '" + id + "'");
            continue;
        }
        c.ids.push_back(id);
        c.sets.push_back(by_id[id]);
    }
    if (c.size() == 0) throw precondition_error("cover: no nonempty sets");
    if (c.size() > 64) throw precondition_error("cover: more than 64 sets");
    std::vector<bool> covered(static_cast<std::size_t>(base.vertex_count()), false);
    for (const auto& s : c.sets)
        for (int v : s) covered[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < base.vertex_count(); ++v)
        if (!covered[static_cast<std::size_t>(v)])
            throw precondition_error("cover: vertex " + std::to_string(base.vertex_id(v)) +
                                     " lies in no set");
    return c;
}

inline bool is_star_cover(const star_cover& c, const simplicial_complex& base) {
    if (c.size() != base.vertex_count()) return false;
    for (int i = 0; i < c.size(); ++i)
        if (c.sets[static_cast<std::size_t>(i)] != vertex_set{i}) return false;
    return true;
}

// Per-vertex membership masks at a tower level: bit i of mask[v] is set when
// the base coordinates of v sum positively over A_i, i.e. v lies in U_i.
inline std::vector<std::uint64_t> vertex_masks(const star_cover& c, const subdivision_level& l) {
    std::vector<std::uint64_t> masks;
    masks.reserve(l.coords.size());
    for (const auto& x : l.coords) {
        std::uint64_t m = 0;
        for (int i = 0; i < c.size(); ++i) {
            rational s(0);
            for (int a : c.sets[static_cast<std::size_t>(i)]) s += x[static_cast<std::size_t>(a)];
            if (s > 0) m |= (std::uint64_t{1} << i);
        }
        masks.push_back(m);
    }
    return masks;
}

// Mask of indices i with the closed simplex contained in U_i.  A sum of
// nonnegative affine functions is positive on a closed simplex exactly when
// it is positive at every vertex, so the simplex mask is the AND of its
// vertex masks.
inline std::uint64_t small_mask(const std::vector<std::uint64_t>& masks, const vertex_set& s) {
    std::uint64_t m = ~std::uint64_t{0};
    for (int v : s) m &= masks[static_cast<std::size_t>(v)];
    return m;
}

inline std::uint64_t tuple_mask(const vertex_tuple& t) {
    std::uint64_t m = 0;
    for (int i : t) m |= (std::uint64_t{1} << i);
    return m;
}

// Closed-simplex containment |s| <= intersection of the U_i named by `indices`.
inline bool simplex_small_in(const star_cover& c, const subdivision_level& l, const vertex_set& s,
                             const vertex_tuple& indices) {
    auto masks = vertex_masks(c, l);
    return (small_mask(masks, s) & tuple_mask(indices)) == tuple_mask(indices);
}

// Masks of cover indices met by each maximal base simplex; the intersection
// over a tuple is nonempty exactly when some simplex interior lies in all its
// members, i.e. some maximal simplex meets every named A_i.
inline std::vector<std::uint64_t> facet_meet_masks(const star_cover& c, const simplicial_complex& base) {
    std::vector<std::uint64_t> out;
    for (const auto& f : base.facets()) {
        std::uint64_t m = 0;
        for (int i = 0; i < c.size(); ++i) {
            const auto& a = c.sets[static_cast<std::size_t>(i)];
            bool meets = false;
            for (int v : f)
                if (std::binary_search(a.begin(), a.end(), v)) {
                    meets = true;
                    break;
                }
            if (meets) m |= (std::uint64_t{1} << i);
        }
        out.push_back(m);
    }
    return out;
}

inline bool intersection_nonempty(const star_cover& c, const simplicial_complex& base,
                                  const vertex_tuple& indices) {
    std::uint64_t need = tuple_mask(indices);
    for (std::uint64_t m : facet_meet_masks(c, base))
        if ((m & need) == need) return true;
    return false;
}

// Nerve of the cover, as a complex on the index positions 0..|I|-1.  The
// subsets with nonempty intersection are exactly the subsets of the facet
// meet masks, so those masks are the nerve's facet candidates.
inline simplicial_complex nerve(const star_cover& c, const simplicial_complex& base) {
    std::vector<vertex_set> facets;
    std::set<std::uint64_t> seen;
    for (std::uint64_t m : facet_meet_masks(c, base)) {
        if (!seen.insert(m).second) continue;
        vertex_set s;
        for (int i = 0; i < c.size(); ++i)
            if (m & (std::uint64_t{1} << i)) s.push_back(i);
        facets.push_back(std::move(s));
    }
    std::vector<int> order;
    for (int i = 0; i < c.size(); ++i) order.push_back(i);
    return close_downward(facets, order);
}

// Cech coboundary on cover cochains; tautologically the ordered simplicial
// coboundary of the nerve.
template <class R>
cochain<R> cech_coboundary(const R& ring, const star_cover& c, const simplicial_complex& base,
                           const cochain<R>& x) {
    return coboundary(ring, nerve(c, base), x);
}

// Least level at which every simplex fits inside a single cover member.
// Extends the tower as needed; gives up at the tower's level cap.
inline int smallness_level(const star_cover& c, subdivision_tower& tower) {
    for (int r = 0; r <= subdivision_tower::level_cap; ++r) {
        tower.extend_to(r);
        const subdivision_level& l = tower.level(r);
        auto masks = vertex_masks(c, l);
        bool ok = true;
        for (const auto& f : l.complex.facets())
            if (small_mask(masks, f) == 0) {
                ok = false;
                break;
            }
        if (ok) return r;
    }
    throw precondition_error("smallness_level: level cap exceeded without smallness");
}

// Canonical partition-of-unity weights at a point given by a level vertex:
// w_i = s_i / sum_j s_j where s_i is the coordinate sum over A_i.
inline std::vector<rational> pou_weights(const star_cover& c, const subdivision_level& l, int v) {
    const auto& x = l.coords[static_cast<std::size_t>(v)];
    std::vector<rational> s(static_cast<std::size_t>(c.size()), rational(0));
    rational total(0);
    for (int i = 0; i < c.size(); ++i) {
        for (int a : c.sets[static_cast<std::size_t>(i)]) s[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(a)];
        total += s[static_cast<std::size_t>(i)];
    }
    if (total == 0) throw precondition_error("pou_weights: point not covered");
    for (auto& si : s) si /= total;
    return s;
}

enum class tie_break { least_index, greatest_index };

struct fstar_approximation {
    int level = 0;        // r'
    simplicial_map j;     // level-r' complex -> nerve
};

// Simplicial approximation of the classifying map of the canonical partition
// of unity.  A vertex v can map to index i exactly when every simplex
// containing v has a vertex with positive coordinate sum over A_i (then the
// open star of v lands in U_i); r' is the least level at or above the
// smallness level where every vertex has such an index.
inline fstar_approximation f_star_approximation(const star_cover& c, subdivision_tower& tower,
                                                tie_break tb = tie_break::least_index) {
    int r0 = smallness_level(c, tower);
    simplicial_complex nrv = nerve(c, tower.base());
    for (int r = r0; r <= subdivision_tower::level_cap; ++r) {
        tower.extend_to(r);
        const subdivision_level& l = tower.level(r);
        auto masks = vertex_masks(c, l);
        std::vector<std::uint64_t> admissible(l.coords.size(), ~std::uint64_t{0});
        for (int d = 0; d <= l.complex.dim(); ++d)
            for (const auto& s : l.complex.simplices(d)) {
                std::uint64_t any = 0;
                for (int w : s) any |= masks[static_cast<std::size_t>(w)];
                for (int v : s) admissible[static_cast<std::size_t>(v)] &= any;
            }
        bool ok = true;
        fstar_approximation res;
        res.level = r;
        for (std::size_t v = 0; v < admissible.size(); ++v) {
            std::uint64_t a = admissible[v] & ((c.size() == 64) ? ~std::uint64_t{0}
                                                                : ((std::uint64_t{1} << c.size()) - 1));
            if (a == 0) {
                ok = false;
                break;
            }
            int pick = -1;
            for (int i = 0; i < c.size(); ++i)
                if (a & (std::uint64_t{1} << i)) {
                    pick = i;
                    if (tb == tie_break::least_index) break;
                }
            res.j.vertex_map.push_back(pick);
        }
        if (!ok) continue;
        if (!is_simplicial(l.complex, nrv, res.j))
            throw precondition_error("f_star_approximation: candidate map is not simplicial");
        return res;
    }
    throw precondition_error("f_star_approximation: level cap exceeded");
}

// Pullback of a nerve cochain along the partition-of-unity approximation,
// transported to `target_level` of the tower.
template <class R>
cochain<R> f_star(const R& ring, const star_cover& c, subdivision_tower& tower, const cochain<R>& phi,
                  int target_level, tie_break tb = tie_break::least_index) {
    fstar_approximation ap = f_star_approximation(c, tower, tb);
    if (target_level < ap.level)
        throw precondition_error("f_star: target level below approximation level");
    tower.extend_to(target_level);
    cochain<R> pulled = pullback(ring, tower.level(ap.level).complex, ap.j, phi);
    return comparison_pullback(ring, tower, ap.level, target_level, pulled);
}

}  // namespace nervecomp
