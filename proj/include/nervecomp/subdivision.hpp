#pragma once

#include <vector>

#include "simplicial.hpp"

namespace nervecomp {

// One level of the barycentric subdivision tower.  Level-r vertices have
// dense ids 0..N-1 equal to their ranks; `coords` locates each vertex in the
// base complex via exact barycentric coordinates over the base vertex ranks,
// and `parent` names the level-(r-1) simplex the vertex subdivides.
struct subdivision_level {
    int level = 0;
    simplicial_complex complex;
    std::vector<std::vector<rational>> coords;
    std::vector<vertex_set> parent;  // empty sets at level 0
};

inline subdivision_level base_level(const simplicial_complex& base) {
    subdivision_level l;
    l.level = 0;
    l.complex = base;
    for (int v = 0; v < base.vertex_count(); ++v) {
        std::vector<rational> e(static_cast<std::size_t>(base.vertex_count()), rational(0));
        e[static_cast<std::size_t>(v)] = 1;
        l.coords.push_back(std::move(e));
        l.parent.emplace_back();
    }
    return l;
}

// Barycentric subdivision.  New vertices are the simplices of the given
// level, ordered by (dimension, lexicographic vertex list); new simplices are
// the inclusion chains, generated from the full flags of maximal simplices.
inline subdivision_level subdivide(const subdivision_level& prev) {
    const simplicial_complex& c = prev.complex;
    subdivision_level next;
    next.level = prev.level + 1;

    std::map<vertex_set, int> vertex_of;  // prev simplex -> new vertex id
    std::vector<int> order;
    for (int d = 0; d <= c.dim(); ++d)
        for (const auto& s : c.simplices(d)) {
            int id = static_cast<int>(order.size());
            vertex_of[s] = id;
            order.push_back(id);
            std::size_t base_n = prev.coords.empty() ? 0 : prev.coords[0].size();
            std::vector<rational> x(base_n, rational(0));
            for (int v : s)
                for (std::size_t j = 0; j < base_n; ++j)
                    x[j] += prev.coords[static_cast<std::size_t>(v)][j];
            rational w(1, static_cast<int>(s.size()));
            for (auto& xi : x) xi *= w;
            next.coords.push_back(std::move(x));
            next.parent.push_back(s);
        }

    std::vector<vertex_set> facets;
    std::vector<int> chain;
    auto flags = [&](auto&& self, const vertex_set& s) -> void {
        chain.push_back(vertex_of.at(s));
        if (s.size() == 1) {
            vertex_set f(chain.rbegin(), chain.rend());
            facets.push_back(std::move(f));
        } else {
            for (std::size_t k = 0; k < s.size(); ++k) {
                vertex_set face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                self(self, face);
            }
        }
        chain.pop_back();
    };
    for (int d = 0; d <= c.dim(); ++d)
        for (const auto& s : c.simplices(d))
            if (c.maximal(s)) flags(flags, s);

    next.complex = close_downward(facets, order);
    return next;
}

// Simplicial approximation of the identity that sends the barycenter of a
// simplex to its largest vertex (largest in the coarse level's vertex order).
inline simplicial_map max_vertex_map(const subdivision_level& fine) {
    simplicial_map g;
    for (const auto& s : fine.parent) {
        if (s.empty()) throw precondition_error("max_vertex_map: level 0 has no parents");
        g.vertex_map.push_back(s.back());
    }
    return g;
}

// Exact base coordinates of an algebraic simplex's vertices at a level.
inline std::vector<std::vector<rational>> realize(const subdivision_level& l, const vertex_tuple& t) {
    std::vector<std::vector<rational>> out;
    for (int v : t) out.push_back(l.coords[static_cast<std::size_t>(v)]);
    return out;
}

// Tower of iterated barycentric subdivisions of one base complex, with the
// max-vertex approximations between consecutive levels.
class subdivision_tower {
  public:
    static constexpr int level_cap = 12;

    explicit subdivision_tower(simplicial_complex base) { levels_.push_back(base_level(base)); }

    const simplicial_complex& base() const { return levels_.front().complex; }
    int top_level() const { return static_cast<int>(levels_.size()) - 1; }

    const subdivision_level& level(int r) const {
        if (r < 0 || r > top_level()) throw precondition_error("tower: level not built");
        return levels_[static_cast<std::size_t>(r)];
    }

    // approximation r+1 -> r
    const simplicial_map& approximation(int r) const {
        if (r < 0 || r >= top_level()) throw precondition_error("tower: approximation not built");
        return approx_[static_cast<std::size_t>(r)];
    }

    void extend_to(int r) {
        if (r > level_cap)
            throw precondition_error("tower: subdivision level cap (" + std::to_string(level_cap) +
                                     ") exceeded");
        while (top_level() < r) {
            levels_.push_back(subdivide(levels_.back()));
            approx_.push_back(max_vertex_map(levels_.back()));
        }
    }

  private:
    std::vector<subdivision_level> levels_;
    std::vector<simplicial_map> approx_;
};

// Levelwise barycentric extension of a base simplicial map: the level-r map
// sends the barycenter of a simplex s to the barycenter of the image of s
// one level down.  Realizations of all levels agree with the base map up to
// straight-line homotopy inside the carrying simplex.
inline simplicial_map subdivided_map(const subdivision_tower& src, const subdivision_tower& dst,
                                     const simplicial_map& h, int level) {
    if (static_cast<int>(h.vertex_map.size()) != src.base().vertex_count())
        throw precondition_error("subdivided_map: base map size mismatch");
    simplicial_map cur = h;
    for (int s = 1; s <= level; ++s) {
        const subdivision_level& fine_src = src.level(s);
        const subdivision_level& fine_dst = dst.level(s);
        std::map<vertex_set, int> dst_vertex_of;
        for (std::size_t v = 0; v < fine_dst.parent.size(); ++v)
            dst_vertex_of[fine_dst.parent[v]] = static_cast<int>(v);
        simplicial_map next;
        for (const auto& par : fine_src.parent) {
            vertex_set img;
            for (int w : par) img.push_back(cur.vertex_map[static_cast<std::size_t>(w)]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            auto it = dst_vertex_of.find(img);
            if (it == dst_vertex_of.end())
                throw precondition_error("subdivided_map: image is not a simplex one level down");
            next.vertex_map.push_back(it->second);
        }
        cur = std::move(next);
    }
    return cur;
}

// Transports a level-r cochain to level r_to >= r by pulling back along the
// max-vertex approximations; on cohomology this is the comparison
// isomorphism between the levels.
template <class R>
cochain<R> comparison_pullback(const R& ring, const subdivision_tower& tower, int r, int r_to,
                               const cochain<R>& c) {
    if (r_to < r) throw precondition_error("comparison_pullback: target level below source");
    cochain<R> out = c;
    for (int s = r; s < r_to; ++s)
        out = pullback(ring, tower.level(s + 1).complex, tower.approximation(s), out);
    return out;
}

}  // namespace nervecomp
