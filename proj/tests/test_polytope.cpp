#include <doctest.h>

#include <random>
#include <set>

#include "ptg/errors.hpp"
#include "ptg/polytope.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ptg;

namespace {

std::vector<Vec> cube_vertices(std::size_t d, long lo, long hi) {
    std::vector<Vec> pts;
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask) {
        Vec v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? hi : lo;
        pts.push_back(std::move(v));
    }
    return pts;
}

std::vector<Vec> cross_polytope_vertices(std::size_t d) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < d; ++i) {
        pts.push_back(unit_vec(d, i));
        pts.push_back(vec_scale(unit_vec(d, i), -1));
    }
    return pts;
}

}  // namespace

TEST_CASE("square hull drops the interior point") {
    std::vector<Vec> pts = cube_vertices(2, 0, 1);
    pts.push_back({Rat(1, 2), Rat(1, 2)});
    const Polytope p = convex_hull(pts, 2);
    CHECK(p.vertices.size() == 4);
    CHECK(p.facets.size() == 4);
    testing::check_polytope_valid(p);
}

TEST_CASE("octahedron has 8 triangular facets and 12 edges") {
    const Polytope p = convex_hull(cross_polytope_vertices(3), 3);
    CHECK(p.vertices.size() == 6);
    CHECK(p.facets.size() == 8);
    CHECK(p.faces[1].size() == 12);
    for (const Facet& f : p.facets) CHECK(f.vertices.size() == 3);
    testing::check_polytope_valid(p);
}

TEST_CASE("cube hull merges coplanar simplicial patches") {
    const Polytope p = convex_hull(cube_vertices(3, -1, 1), 3);
    CHECK(p.vertices.size() == 8);
    CHECK(p.facets.size() == 6);
    CHECK(p.faces[1].size() == 12);
    for (const Facet& f : p.facets) CHECK(f.vertices.size() == 4);
    testing::check_polytope_valid(p);
}

TEST_CASE("4d cross polytope and 4d cube") {
    const Polytope cross = convex_hull(cross_polytope_vertices(4), 4);
    CHECK(cross.vertices.size() == 8);
    CHECK(cross.facets.size() == 16);
    testing::check_polytope_valid(cross);

    const Polytope cube = convex_hull(cube_vertices(4, -1, 1), 4);
    CHECK(cube.vertices.size() == 16);
    CHECK(cube.facets.size() == 8);
    CHECK(cube.faces[2].size() == 24);
    CHECK(cube.faces[1].size() == 32);
    testing::check_polytope_valid(cube);
}

TEST_CASE("1d hull keeps the extremes") {
    const Polytope p = convex_hull({{Rat(3)}, {Rat(-1)}, {Rat(2)}}, 1);
    CHECK(p.vertices.size() == 2);
    CHECK(p.facets.size() == 2);
    CHECK(p.contains({Rat(0)}));
    CHECK(!p.contains({Rat(4)}));
}

TEST_CASE("degenerate input is a hard error") {
    CHECK_THROWS_WITH_AS(convex_hull({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, 2),
                         doctest::Contains("NotFullDimensional"), Error);
    CHECK_THROWS_AS(convex_hull({{Rat(0), Rat(0)}}, 2), Error);
}

TEST_CASE("hull facets match brute-force enumeration on random input") {
    std::mt19937_64 rng(101);
    for (std::size_t d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < (d == 4 ? 6 : 20); ++trial) {
            std::vector<Vec> pts;
            const std::size_t n = d + 2 + trial % 5;
            for (std::size_t i = 0; i < n; ++i) pts.push_back(testing::random_vec(rng, d, 3, 3));
            if (affine_rank(pts) != d) continue;
            const Polytope p = convex_hull(pts, d);
            testing::check_polytope_valid(p);

            std::set<std::string> got;
            for (const Facet& f : p.facets) got.insert(testing::unoriented_key(f.plane));
            CHECK(got == testing::brute_force_facet_planes(pts, d));
            // Input points must all satisfy the facet inequalities.
            for (const Vec& q : pts) CHECK(p.contains(q));
        }
    }
}

TEST_CASE("two-polygon hulls match brute force") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> pts;
        for (int i = 0; i < 5; ++i) pts.push_back(testing::random_vec(rng, 2, 2, 3));
        for (int i = 0; i < 5; ++i) {
            Vec q = testing::random_vec(rng, 2, 2, 3);
            q[0] += 10;
            pts.push_back(std::move(q));
        }
        const Polytope p = convex_hull(pts, 2);
        testing::check_polytope_valid(p);
        std::set<std::string> got;
        for (const Facet& f : p.facets) got.insert(testing::unoriented_key(f.plane));
        CHECK(got == testing::brute_force_facet_planes(pts, 2));
    }
}

TEST_CASE("interior point is strictly inside") {
    const Polytope square = convex_hull(cube_vertices(2, 0, 1), 2);
    CHECK(interior_point(square) == Vec{Rat(1, 2), Rat(1, 2)});

    const Polytope simplex =
        convex_hull({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2);
    CHECK(interior_point(simplex) == Vec{Rat(1, 3), Rat(1, 3)});

    // Long thin needle: the centroid still passes the strictness post-check.
    const Polytope needle = convex_hull(
        {{Rat(0), Rat(0)}, {Rat(1000), Rat(1, 1000)}, {Rat(1000), Rat(-1, 1000)}, {Rat(1), Rat(0)}},
        2);
    CHECK(needle.strictly_contains(interior_point(needle)));

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        const Polytope p = testing::random_polytope(rng, 2 + trial % 3);
        CHECK(p.strictly_contains(interior_point(p)));
    }
}

TEST_CASE("polar dual of the cube is the octahedron") {
    const Polytope cube = convex_hull(cube_vertices(3, -1, 1), 3);
    const Polytope dual = polar_dual(cube);
    CHECK(dual.vertices.size() == 6);
    CHECK(dual.facets.size() == 8);
    std::set<std::string> want, got;
    for (const Vec& v : cross_polytope_vertices(3)) {
        std::string s;
        for (const Rat& c : v) s += rat_to_string(c) + ",";
        want.insert(s);
    }
    for (const Vec& v : dual.vertices) {
        std::string s;
        for (const Rat& c : v) s += rat_to_string(c) + ",";
        got.insert(s);
    }
    CHECK(want == got);
    testing::check_polytope_valid(dual);
}

TEST_CASE("polar dual requires the origin strictly inside") {
    const Polytope shifted = convex_hull(cube_vertices(2, 1, 2), 2);
    CHECK_THROWS_WITH_AS(polar_dual(shifted), doctest::Contains("OriginNotInterior"), Error);
}

TEST_CASE("polarity is an involution and reverses the lattice") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t d = 2 + trial % 3;
        Polytope p = testing::random_polytope(rng, d);
        // Recenter so 0 is strictly interior.
        const Vec c = interior_point(p);
        std::vector<Vec> moved;
        for (const Vec& v : p.vertices) moved.push_back(vec_sub(v, c));
        p = convex_hull(moved, d);

        const Polytope dual = polar_dual(p);
        testing::check_polytope_valid(dual);

        // f-vector reverses.
        const auto fp = p.f_vector();
        const auto fd = dual.f_vector();
        for (std::size_t k = 0; k < d; ++k) CHECK(fp[k] == fd[d - 1 - k]);

        // Involution: P oo equals P up to vertex order.
        const Polytope back = polar_dual(dual);
        std::set<std::string> orig, again;
        auto key = [](const Vec& v) {
            std::string s;
            for (const Rat& x : v) s += rat_to_string(x) + ",";
            return s;
        };
        for (const Vec& v : p.vertices) orig.insert(key(v));
        for (const Vec& v : back.vertices) again.insert(key(v));
        CHECK(orig == again);

        // The dual's own hull agrees with the direct construction.
        const Polytope rehull = convex_hull(dual.vertices, d);
        std::set<std::string> direct, hulled;
        for (const Facet& f : dual.facets) direct.insert(testing::unoriented_key(f.plane));
        for (const Facet& f : rehull.facets) hulled.insert(testing::unoriented_key(f.plane));
        CHECK(direct == hulled);
    }
}

TEST_CASE("vertex figures of the platonic examples") {
    const Polytope cube = convex_hull(cube_vertices(3, -1, 1), 3);
    const Polytope vf_cube = vertex_figure(cube, 0);
    CHECK(vf_cube.dim == 2);
    CHECK(vf_cube.vertices.size() == 3);  // cube is simple

    const Polytope octa = convex_hull(cross_polytope_vertices(3), 3);
    const Polytope vf_octa = vertex_figure(octa, 0);
    CHECK(vf_octa.vertices.size() == 4);  // square

    CHECK_THROWS_WITH_AS(vertex_figure(cube, 99), doctest::Contains("NotAVertex"), Error);
}

TEST_CASE("vertex figure face counts equal faces of P containing v, shifted") {
    std::mt19937_64 rng(113);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t d = 3 + trial % 2;
        const Polytope p = testing::random_polytope(rng, d, 5);
        std::uniform_int_distribution<std::size_t> pick(0, p.vertices.size() - 1);
        const std::size_t v = pick(rng);

        for (const Rat& t : {Rat(1, 2), Rat(1, 4)}) {
            const Polytope figure = vertex_figure(p, v, t);
            testing::check_polytope_valid(figure);
            // Faces of P strictly containing v, per dimension.
            std::vector<std::size_t> want(d, 0);
            for (std::size_t k = 1; k < d; ++k)
                for (const Face& f : p.faces[k])
                    if (std::binary_search(f.vertices.begin(), f.vertices.end(), v)) ++want[k];
            const auto fv = figure.f_vector();
            for (std::size_t k = 1; k < d; ++k) CHECK(fv[k - 1] == want[k]);
        }
    }
}

TEST_CASE("linearize then affinize with the height witness is the identity") {
    CHECK(linearize({{Rat(2), Rat(3)}}).vectors[0] == Vec{Rat(2), Rat(3), Rat(1)});
    CHECK(linearize({}).vectors.empty());

    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 1 + trial % 4;
        std::vector<Vec> pts;
        for (int i = 0; i < 6; ++i) pts.push_back(testing::random_vec(rng, d));
        const VectorConfiguration config = linearize(pts);
        const Vec h = unit_vec(d + 1, d);
        const Affinization aff = affinize(config, h);
        CHECK(aff.points == pts);

        // Lifted point sets are acyclic with witness e_{d+1}.
        const auto witness = acyclicity_witness(config);
        REQUIRE(witness.has_value());
        for (const Vec& v : config.vectors) CHECK(dot(*witness, v) > 0);
    }
}

TEST_CASE("affinize maps a single ray to the chart origin") {
    VectorConfiguration config;
    config.dim = 3;
    config.vectors = {{Rat(0), Rat(0), Rat(2)}};
    config.labels = {0};
    const Affinization aff = affinize(config, unit_vec(3, 2));
    CHECK(aff.points[0] == Vec{Rat(0), Rat(0)});
}

TEST_CASE("affinize rejects invalid witnesses") {
    VectorConfiguration config;
    config.dim = 2;
    config.vectors = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}};
    config.labels = {0, 1};
    CHECK_THROWS_WITH_AS(affinize(config, {Rat(1), Rat(0)}), doctest::Contains("WitnessInvalid"),
                         Error);
    CHECK(!acyclicity_witness(config).has_value());
}

TEST_CASE("chart hyperplane pullback preserves incidences") {
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 3;
        std::vector<Vec> pts;
        for (int i = 0; i < 8; ++i) pts.push_back(testing::random_vec(rng, d));
        const VectorConfiguration config = linearize(pts);
        Vec h = unit_vec(d + 1, d);
        h[0] = Rat(1, 3);  // exercise a non-axis witness with a nonzero drop mix
        const Affinization aff = affinize(config, h);

        // A chart hyperplane through d of the charted points.
        std::vector<Vec> span(aff.points.begin(), aff.points.begin() + d);
        if (affine_rank(span) != d - 1) continue;
        const OrientedHyperplane chart_plane = hyperplane_through(span);
        const Vec n = aff.chart.plane_to_linear(chart_plane.normal, chart_plane.offset);

        for (std::size_t i = 0; i < pts.size(); ++i) {
            const bool on_chart = sgn(chart_plane.value(aff.points[i])) == 0;
            const bool on_linear = sgn(dot(n, config.vectors[i])) == 0;
            CHECK(on_chart == on_linear);
        }
    }
}
