#include <doctest.h>

#include <random>

#include "ptg/linalg.hpp"
#include "ptg/rational.hpp"
#include "support/generators.hpp"

using namespace ptg;

TEST_CASE("rational parsing and serialization") {
    CHECK(rat_to_string(parse_rat("3/6")) == "1/2");
    CHECK(rat_to_string(parse_rat("-4/2")) == "-2");
    CHECK(rat_to_string(parse_rat("7")) == "7");
    CHECK(parse_rat("0/5") == 0);
    CHECK(!try_parse_rat("1/0"));
    CHECK(!try_parse_rat("1.5"));
    CHECK(!try_parse_rat("2/-3"));
    CHECK(!try_parse_rat(""));
    CHECK(!try_parse_rat("a/3"));
}

TEST_CASE("rational arithmetic is exact and canonical") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rat a = testing::random_rat(rng, 50, 40);
        const Rat b = testing::random_rat(rng, 50, 40);
        CHECK((a + b) - b == a);
        const Rat c = a + b;
        CHECK(sgn(c.get_den()) > 0);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
        CHECK((g == 1 || c == 0));
        // Round trip through the string grammar.
        CHECK(parse_rat(rat_to_string(c)) == c);
    }
}

TEST_CASE("solve_linear identity case") {
    Matrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;
    const LinearSolution s = solve_linear(a, {Rat(3), Rat(5, 2)});
    REQUIRE(s.kind == SolveKind::Unique);
    CHECK(s.particular == Vec{Rat(3), Rat(5, 2)});
}

TEST_CASE("solve_linear rank-deficient cases") {
    Matrix a = Matrix::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
    const LinearSolution consistent = solve_linear(a, {Rat(1), Rat(2)});
    REQUIRE(consistent.kind == SolveKind::Space);
    CHECK(consistent.basis.size() == 1);

    const LinearSolution bad = solve_linear(a, {Rat(1), Rat(3)});
    CHECK(bad.kind == SolveKind::Inconsistent);
}

TEST_CASE("solve_linear solutions reproduce the rhs exactly") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> sz(1, 5);
        const std::size_t rows = sz(rng), cols = sz(rng);
        Matrix a(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = testing::random_rat(rng);
        Vec b(rows);
        for (Rat& x : b) x = testing::random_rat(rng);

        const LinearSolution s = solve_linear(a, b);
        if (s.kind == SolveKind::Inconsistent) continue;
        auto check_solution = [&](const Vec& x) {
            for (std::size_t i = 0; i < rows; ++i) {
                Rat acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a.at(i, j) * x[j];
                CHECK(acc == b[i]);
            }
        };
        check_solution(s.particular);
        for (const Vec& h : s.basis) check_solution(vec_add(s.particular, h));
    }
}

TEST_CASE("orientation basics") {
    CHECK(orientation({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 1);
    CHECK(orientation({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 0);
    CHECK(orientation({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == -1);
}

TEST_CASE("orientation is antisymmetric and translation invariant") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        const std::size_t d = dim(rng);
        std::vector<Vec> pts;
        for (std::size_t i = 0; i <= d; ++i) pts.push_back(testing::random_vec(rng, d));
        const int base = orientation(pts);

        std::uniform_int_distribution<std::size_t> pick(0, d);
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) j = (j + 1) % (d + 1);
        std::swap(pts[i], pts[j]);
        CHECK(orientation(pts) == -base);
        std::swap(pts[i], pts[j]);

        const Vec shift = testing::random_vec(rng, d);
        std::vector<Vec> moved;
        for (const Vec& p : pts) moved.push_back(vec_add(p, shift));
        CHECK(orientation(moved) == base);
    }
}

TEST_CASE("kernel and rank") {
    Matrix m = Matrix::from_rows({{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}});
    CHECK(rank(m) == 1);
    const auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const Vec& v : basis) {
        CHECK(dot(v, {Rat(1), Rat(2), Rat(3)}) == 0);
    }
}
