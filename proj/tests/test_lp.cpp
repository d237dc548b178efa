#include <doctest.h>

#include <random>

#include "ptg/lp.hpp"
#include "support/generators.hpp"

using namespace ptg;

namespace {

bool satisfies(const InequalitySystem& sys, const Vec& x) {
    for (const IneqRow& row : sys.rows) {
        const Rat lhs = dot(row.a, x);
        switch (row.rel) {
            case Rel::LT: if (!(lhs < row.b)) return false; break;
            case Rel::LE: if (!(lhs <= row.b)) return false; break;
            case Rel::EQ: if (!(lhs == row.b)) return false; break;
            case Rel::GE: if (!(lhs >= row.b)) return false; break;
            case Rel::GT: if (!(lhs > row.b)) return false; break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("strict interval has the symmetric optimum") {
    InequalitySystem sys;
    sys.dimension = 1;
    sys.add({Rat(1)}, 0, Rel::GT);   // x > 0
    sys.add({Rat(1)}, 1, Rel::LT);   // x < 1
    const FeasibilityResult r = feasible(sys);
    REQUIRE(r.feasible);
    CHECK(r.witness == Vec{Rat(1, 2)});
    CHECK(r.slack == Rat(1, 2));
}

TEST_CASE("contradictory strict system is infeasible") {
    InequalitySystem sys;
    sys.dimension = 1;
    sys.add({Rat(1)}, 0, Rel::GT);
    sys.add({Rat(1)}, 0, Rel::LT);
    CHECK(!feasible(sys).feasible);
}

TEST_CASE("slack caps at 1 when nothing constrains it") {
    InequalitySystem sys;
    sys.dimension = 1;
    sys.add({Rat(1)}, 5, Rel::LE);
    const FeasibilityResult r = feasible(sys);
    REQUIRE(r.feasible);
    CHECK(r.slack == 1);
}

TEST_CASE("visibility-style system: see exactly the marked edge") {
    // Unit square facets: x<=1, -x<=0, y<=1, -y<=0; marked edge is y<=1.
    InequalitySystem sys;
    sys.dimension = 2;
    sys.add({Rat(1), Rat(0)}, 1, Rel::LT);
    sys.add({Rat(-1), Rat(0)}, 0, Rel::LT);
    sys.add({Rat(0), Rat(1)}, 1, Rel::GT);
    sys.add({Rat(0), Rat(-1)}, 0, Rel::LT);
    const FeasibilityResult r = feasible(sys);
    REQUIRE(r.feasible);
    CHECK(satisfies(sys, r.witness));
    CHECK(r.witness[1] > 1);                // beyond the top edge
    CHECK(r.witness[0] > 0);
    CHECK(r.witness[0] < 1);
}

TEST_CASE("witnesses always satisfy the system verbatim") {
    std::mt19937_64 rng(23);
    int feasible_count = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::uniform_int_distribution<std::size_t> nrows(1, 7);
        std::uniform_int_distribution<int> relpick(0, 4);
        InequalitySystem sys;
        sys.dimension = dim(rng);
        const std::size_t rows = nrows(rng);
        for (std::size_t i = 0; i < rows; ++i) {
            Vec a = testing::random_vec(rng, sys.dimension, 3, 4);
            sys.add(std::move(a), testing::random_rat(rng, 3, 4),
                    static_cast<Rel>(relpick(rng)));
        }
        const FeasibilityResult r = feasible(sys);
        if (r.feasible) {
            ++feasible_count;
            CHECK(satisfies(sys, r.witness));
        }
    }
    CHECK(feasible_count > 10);  // the generator must exercise the feasible path
}

TEST_CASE("adding a row never turns infeasible into feasible") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        std::uniform_int_distribution<std::size_t> nrows(1, 5);
        std::uniform_int_distribution<int> relpick(0, 4);
        InequalitySystem sys;
        sys.dimension = dim(rng);
        const std::size_t rows = nrows(rng);
        for (std::size_t i = 0; i < rows; ++i)
            sys.add(testing::random_vec(rng, sys.dimension, 2, 3),
                    testing::random_rat(rng, 2, 3), static_cast<Rel>(relpick(rng)));
        const bool before = feasible(sys).feasible;
        sys.add(testing::random_vec(rng, sys.dimension, 2, 3), testing::random_rat(rng, 2, 3),
                static_cast<Rel>(relpick(rng)));
        const bool after = feasible(sys).feasible;
        if (!before) CHECK(!after);
    }
}

TEST_CASE("separating hyperplane simple cases") {
    const auto h = separating_hyperplane({{Rat(0), Rat(0)}}, {{Rat(1), Rat(0)}}, true);
    REQUIRE(h.has_value());
    CHECK(dot(h->normal, {Rat(0), Rat(0)}) < h->offset);
    CHECK(dot(h->normal, {Rat(1), Rat(0)}) > h->offset);

    CHECK(!separating_hyperplane({{Rat(0), Rat(0)}}, {{Rat(0), Rat(0)}}, true).has_value());
}

TEST_CASE("two squares are strictly separated with a verified witness") {
    std::vector<Vec> a, b;
    for (int x : {0, 1})
        for (int y : {0, 1}) a.push_back({Rat(x), Rat(y)});
    for (int x : {3, 4})
        for (int y : {0, 1}) b.push_back({Rat(x), Rat(y)});
    const auto h = separating_hyperplane(a, b, true);
    REQUIRE(h.has_value());
    for (const Vec& p : a) CHECK(dot(h->normal, p) < h->offset);
    for (const Vec& p : b) CHECK(dot(h->normal, p) > h->offset);
}

TEST_CASE("separation is antisymmetric up to orientation flip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back(testing::random_vec(rng, 2, 2, 3));
            Vec q = testing::random_vec(rng, 2, 2, 3);
            q[0] += 20;
            b.push_back(std::move(q));
        }
        const auto ab = separating_hyperplane(a, b, true);
        const auto ba = separating_hyperplane(b, a, true);
        REQUIRE(ab.has_value());
        REQUIRE(ba.has_value());
        // Both orientations certify the same separation after a flip.
        const OrientedHyperplane flipped = ba->flipped();
        for (const Vec& p : a) {
            CHECK(dot(ab->normal, p) < ab->offset);
            CHECK(dot(flipped.normal, p) < flipped.offset);
        }
    }
}

TEST_CASE("2d separability agrees with an exact hull-disjointness oracle") {
    // Oracle: conv(A) and conv(B) are disjoint iff no segment pair crosses
    // and neither hull contains a point of the other.
    std::mt19937_64 rng(37);

    auto hull_contains = [](const std::vector<Vec>& hull_pts, const Vec& q) {
        const Polytope h = convex_hull(hull_pts, 2);
        return h.contains(q);
    };
    auto segments_cross = [](const Vec& a, const Vec& b, const Vec& c, const Vec& d) {
        auto orient = [](const Vec& p, const Vec& q, const Vec& r) {
            return sgn((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
        };
        const int o1 = orient(a, b, c), o2 = orient(a, b, d);
        const int o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
            // Proper or touching crossing; conservative "not disjoint".
            return !(o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0);
        }
        return false;
    };

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> a, b;
        for (int i = 0; i < 4; ++i) a.push_back(testing::random_vec(rng, 2, 3, 2));
        for (int i = 0; i < 4; ++i) b.push_back(testing::random_vec(rng, 2, 3, 2));
        if (affine_rank(a) != 2 || affine_rank(b) != 2) continue;

        bool disjoint = true;
        for (const Vec& q : a)
            if (hull_contains(b, q)) disjoint = false;
        for (const Vec& q : b)
            if (hull_contains(a, q)) disjoint = false;
        if (disjoint) {
            const Polytope ha = convex_hull(a, 2);
            const Polytope hb = convex_hull(b, 2);
            auto edges = [](const Polytope& p) {
                std::vector<std::pair<Vec, Vec>> es;
                for (const Face& e : p.faces[1])
                    es.emplace_back(p.vertices[e.vertices[0]], p.vertices[e.vertices[1]]);
                return es;
            };
            for (const auto& [p1, p2] : edges(ha))
                for (const auto& [q1, q2] : edges(hb))
                    if (segments_cross(p1, p2, q1, q2)) disjoint = false;
        }

        const bool separated = separating_hyperplane(a, b, true).has_value();
        CHECK(separated == disjoint);
    }
}
