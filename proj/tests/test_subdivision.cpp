#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <nervecomp/nervecomp.hpp>

#include "fixtures.hpp"

using namespace nervecomp;

namespace {

integer_ring zz;
rationals_ring qq;

int count(const simplicial_complex& c, int d) {
    return static_cast<int>(c.simplices(d).size());
}

}  // namespace

TEST_CASE("barycentric subdivision of a circle is a longer circle") {
    auto tri = fixtures::complex("triangle");
    subdivision_tower tower(tri);
    tower.extend_to(1);
    const auto& fine = tower.level(1).complex;
    REQUIRE(fine.dim() == 1);
    REQUIRE(count(fine, 0) == 6);
    REQUIRE(count(fine, 1) == 6);
    // every vertex lies on exactly two edges: a disjoint union of circles
    std::vector<int> degree(6, 0);
    for (const auto& e : fine.simplices(1))
        for (int v : e) ++degree[static_cast<std::size_t>(v)];
    for (int d : degree) REQUIRE(d == 2);
    // and it is connected, hence one circle
    auto h0 = cohomology(zz, fine, 0);
    REQUIRE(h0.presentation.free_rank == 1);
    auto h1 = cohomology(zz, fine, 1);
    REQUIRE(h1.presentation.free_rank == 1);
}

TEST_CASE("subdividing a solid triangle gives 7 vertices, 12 edges, 6 triangles") {
    auto disk = fixtures::complex("disk");
    subdivision_tower tower(disk);
    tower.extend_to(2);
    const auto& l1 = tower.level(1).complex;
    REQUIRE(count(l1, 0) == 7);
    REQUIRE(count(l1, 1) == 12);
    REQUIRE(count(l1, 2) == 6);
    // each further level multiplies top cells by 6
    const auto& l2 = tower.level(2).complex;
    REQUIRE(count(l2, 2) == 36);
    // still contractible
    for (int p = 0; p <= 2; ++p) {
        auto h = cohomology(zz, l2, p);
        REQUIRE(h.presentation.free_rank == (p == 0 ? 1 : 0));
        REQUIRE(h.presentation.invariant_factors.empty());
    }
}

TEST_CASE("barycenter coordinates are exact rationals") {
    auto tri = fixtures::complex("triangle");
    subdivision_tower tower(tri);
    tower.extend_to(1);
    const auto& l1 = tower.level(1);
    // new vertices are ordered vertices first, then edges lexicographically,
    // so rank 3 is the barycenter of edge {0,1}
    REQUIRE(l1.parent[3] == vertex_set{0, 1});
    REQUIRE(l1.coords[3] == std::vector<rational>{rational(1, 2), rational(1, 2), rational(0)});

    auto disk = fixtures::complex("disk");
    subdivision_tower dt(disk);
    dt.extend_to(1);
    REQUIRE(dt.level(1).parent[6] == vertex_set{0, 1, 2});
    REQUIRE(dt.level(1).coords[6] ==
            std::vector<rational>{rational(1, 3), rational(1, 3), rational(1, 3)});

    // coordinates always sum to one and stay supported on a base simplex
    dt.extend_to(2);
    for (const auto& x : dt.level(2).coords) {
        rational total = std::accumulate(x.begin(), x.end(), rational(0));
        REQUIRE(total == rational(1));
    }

    auto pts = realize(dt.level(1), {6, 3});
    REQUIRE(pts.size() == 2);
    REQUIRE(pts[0][0] == rational(1, 3));
    REQUIRE(pts[1][0] == rational(1, 2));
}

TEST_CASE("the max-vertex approximation is simplicial at every level") {
    auto rp2 = fixtures::complex("rp2");
    subdivision_tower tower(rp2);
    tower.extend_to(2);
    for (int r = 0; r < 2; ++r) {
        const auto& g = tower.approximation(r);
        REQUIRE(is_simplicial(tower.level(r + 1).complex, tower.level(r).complex, g));
    }
    // barycenters go to their largest parent vertex
    const auto& l1 = tower.level(1);
    const auto& g0 = tower.approximation(0);
    for (std::size_t v = 0; v < l1.parent.size(); ++v)
        REQUIRE(g0.vertex_map[v] == l1.parent[v].back());
}

TEST_CASE("level comparison preserves cohomology classes") {
    auto hex = fixtures::complex("hexagon");
    subdivision_tower tower(hex);
    tower.extend_to(2);

    auto h1 = cohomology(zz, hex, 1);
    REQUIRE(h1.representatives.size() == 1);
    const auto& gen = h1.representatives[0];

    auto moved = comparison_pullback(zz, tower, 0, 2, gen);
    const auto& fine = tower.level(2).complex;
    REQUIRE(is_cocycle(zz, fine, moved));

    cochain<integer_ring> zero;
    zero.degree = 1;
    REQUIRE(!class_equal(zz, fine, 1, moved, zero));

    // it lands on a generator of the fine circle
    auto fine_h1 = cohomology(zz, fine, 1);
    REQUIRE(fine_h1.representatives.size() == 1);
    const auto& fine_gen = fine_h1.representatives[0];
    bool plus = class_equal(zz, fine, 1, moved, fine_gen);
    bool minus =
        class_equal(zz, fine, 1, moved, cochain_scale(zz, zz.from_int(-1), fine_gen));
    REQUIRE((plus || minus));

    // coboundaries stay coboundaries
    cochain<integer_ring> bump;
    bump.degree = 0;
    bump.values[{1}] = 4;
    auto db = comparison_pullback(zz, tower, 0, 2, coboundary(zz, hex, bump));
    REQUIRE(class_equal(zz, fine, 1, db, zero));

    REQUIRE_THROWS_AS(comparison_pullback(zz, tower, 2, 0, gen), precondition_error);
}

TEST_CASE("subdivided maps extend base maps levelwise") {
    auto hex = fixtures::complex("hexagon");
    subdivision_tower tower(hex);
    tower.extend_to(2);

    // the identity subdivides to the identity
    simplicial_map ident{{0, 1, 2, 3, 4, 5}};
    auto id2 = subdivided_map(tower, tower, ident, 2);
    for (std::size_t v = 0; v < id2.vertex_map.size(); ++v)
        REQUIRE(id2.vertex_map[v] == static_cast<int>(v));

    // an inclusion subdivides to a simplicial embedding
    auto tri = fixtures::complex("triangle");
    auto disk = fixtures::complex("disk");
    subdivision_tower tt(tri), dt(disk);
    tt.extend_to(2);
    dt.extend_to(2);
    simplicial_map inc{{0, 1, 2}};
    REQUIRE(is_simplicial(tri, disk, inc));
    auto inc2 = subdivided_map(tt, dt, inc, 2);
    REQUIRE(is_simplicial(tt.level(2).complex, dt.level(2).complex, inc2));
    // injective on vertices, as the boundary embeds
    std::set<int> image(inc2.vertex_map.begin(), inc2.vertex_map.end());
    REQUIRE(image.size() == inc2.vertex_map.size());

    // pullback along the subdivided inclusion commutes with coboundaries
    cochain<rationals_ring> x;
    x.degree = 0;
    x.values[{4}] = rational(2, 3);
    auto lhs = pullback(qq, tt.level(2).complex, inc2,
                        coboundary(qq, dt.level(2).complex, x));
    auto rhs = coboundary(qq, tt.level(2).complex,
                          pullback(qq, tt.level(2).complex, inc2, x));
    REQUIRE(cochain_equal(qq, lhs, rhs));

    simplicial_map wrong{{0, 1}};
    REQUIRE_THROWS_AS(subdivided_map(tt, dt, wrong, 1), precondition_error);
}

TEST_CASE("the tower refuses to grow past its cap") {
    auto tri = fixtures::complex("triangle");
    subdivision_tower tower(tri);
    REQUIRE_THROWS_AS(tower.extend_to(subdivision_tower::level_cap + 1), precondition_error);
    REQUIRE_THROWS_AS(tower.level(5), precondition_error);
    REQUIRE_THROWS_AS(tower.approximation(0), precondition_error);
}
