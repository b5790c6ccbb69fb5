#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hjpoly/errors.hpp"
#include "hjpoly/linalg.hpp"
#include "hjpoly/rat.hpp"
#include "hjpoly/seeded.hpp"
#include "hjpoly/surd.hpp"
#include "support.hpp"

#include <stdexcept>
#include <vector>

using namespace hjpoly;

TEST_CASE("rational canonical form") {
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat(0, 5).str() == "0");
    CHECK(Rat(-7).str() == "-7");
    CHECK(Rat(10, 5).str() == "2");
    CHECK(Rat(3, 7).num() == 3);
    CHECK(Rat(3, 7).den() == 7);
    CHECK(Rat(-6, 4).den() == 2);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational parsing round-trips") {
    CHECK(Rat::from_string("22/7") == Rat(22, 7));
    CHECK(Rat::from_string("-3") == Rat(-3));
    CHECK(Rat::from_string("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(Rat::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::from_string("1/0"), std::domain_error);

    SeedStream s(7, 99);
    for (int i = 0; i < 200; ++i) {
        const Rat r = testsup::rnd_rat(s, 1000, 997);
        CHECK(Rat::from_string(r.str()) == r);
    }
}

TEST_CASE("rational arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 3) - Rat(1, 2) == Rat(-1, 6));
    CHECK(Rat(2, 3) * Rat(9, 4) == Rat(3, 2));
    CHECK(Rat(1, 3) / Rat(2, 5) == Rat(5, 6));
    CHECK(Rat(1, 2) < Rat(2, 3));
    CHECK(Rat(-1, 2).abs() == Rat(1, 2));
    CHECK(Rat(5, 3).sign() == 1);
    CHECK(Rat(0).sign() == 0);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK(dyadic(5, 3) == Rat(5, 8));
    CHECK(dyadic(-1, 0) == Rat(-1));
    CHECK(pow_mpz(6, 2) == 36);
}

TEST_CASE("surd normalization") {
    CHECK(Surd(Rat(0), Rat(1), Rat(4)).is_rational());
    CHECK(Surd(Rat(0), Rat(1), Rat(4)).rational_value() == Rat(2));
    CHECK(Surd(Rat(1), Rat(2), Rat(9, 4)).rational_value() == Rat(4));
    CHECK(Surd(Rat(3), Rat(5), Rat(0)).rational_value() == Rat(3));
    CHECK(Surd(Rat(3), Rat(0), Rat(2)).rational_value() == Rat(3));
    CHECK_FALSE(Surd(Rat(0), Rat(1), Rat(2)).is_rational());
    CHECK_THROWS_AS(Surd(Rat(0), Rat(1), Rat(-1)), std::domain_error);
    CHECK_THROWS_AS(Surd(Rat(1), Rat(1), Rat(2)).rational_value(), std::logic_error);
}

TEST_CASE("surd sign") {
    CHECK(Surd(Rat(1), Rat(0), Rat(0)).sign() == 1);
    CHECK(Surd(Rat(-3), Rat(2), Rat(2)).sign() == -1);
    CHECK(Surd(Rat(-2), Rat(2), Rat(1)).sign() == 0);
    CHECK(Surd(Rat(-1), Rat(1), Rat(2)).sign() == 1);
    CHECK(Surd(Rat(0), Rat(-1), Rat(3)).sign() == -1);
    CHECK(Surd(Rat(2), Rat(-1), Rat(4)).sign() == 0);
    CHECK(Surd(Rat(2), Rat(-1), Rat(5)).sign() == -1);
}

TEST_CASE("surd sign agrees with interval oracle") {
    SeedStream s(11, 98);
    for (int i = 0; i < 400; ++i) {
        const Rat a = testsup::rnd_rat(s, 8, 5);
        const Rat b = testsup::rnd_rat(s, 8, 5);
        const Rat r = testsup::rnd_rat(s, 30, 1).abs();
        const Surd v(a, b, r);
        CHECK(v.sign() == testsup::surd_sign_oracle(a, b, r));
        CHECK((-v).sign() == -v.sign());
    }
}

TEST_CASE("surd arithmetic") {
    const Surd s2(Rat(0), Rat(1), Rat(2));
    CHECK(s2.square().rational_value() == Rat(2));
    CHECK((s2 * s2).rational_value() == Rat(2));
    CHECK((s2 - s2).rational_value() == Rat(0));
    CHECK((Surd(Rat(1), Rat(1), Rat(2)) * Surd(Rat(1), Rat(-1), Rat(2))).rational_value() == Rat(-1));
    CHECK((Surd(Rat(1), Rat(1), Rat(2)) + Surd(Rat(2), Rat(-1), Rat(2))).rational_value() == Rat(3));
    CHECK((s2 + Surd(Rat(5))).rational_part() == Rat(5));
    CHECK_THROWS_AS(Surd(Rat(0), Rat(1), Rat(2)) + Surd(Rat(0), Rat(1), Rat(3)), std::domain_error);
    CHECK_THROWS_AS(Surd(Rat(0), Rat(1), Rat(2)) * Surd(Rat(0), Rat(1), Rat(3)), std::domain_error);

    SeedStream s(13, 97);
    for (int i = 0; i < 200; ++i) {
        const Rat r = testsup::rnd_rat(s, 30, 1).abs();
        const Surd u(testsup::rnd_rat(s), testsup::rnd_rat(s), r);
        const Surd v(testsup::rnd_rat(s), testsup::rnd_rat(s), r);
        CHECK((u * v).sign() == u.sign() * v.sign());
        CHECK((u - u).sign() == 0);
        CHECK((u + u).sign() == u.sign());
    }
}

TEST_CASE("vector and matrix access is range-checked") {
    RVec v{Rat(1), Rat(2)};
    CHECK(v.size() == 2);
    CHECK_THROWS_AS(v[2], std::out_of_range);
    RMat m(2, 3);
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m(0, 3), std::out_of_range);
    CHECK_THROWS_AS(RMat::from_rows({RVec{Rat(1)}, RVec{Rat(1), Rat(2)}}), std::invalid_argument);
}

TEST_CASE("determinant basics") {
    RMat m(2, 2);
    m(0, 0) = Rat(1); m(0, 1) = Rat(2);
    m(1, 0) = Rat(3); m(1, 1) = Rat(4);
    CHECK(det(m) == Rat(-2));

    RMat id(5, 5);
    for (int i = 0; i < 5; ++i) id(i, i) = Rat(1);
    CHECK(det(id) == Rat(1));

    RMat rep(3, 3);
    for (int j = 0; j < 3; ++j) {
        rep(0, j) = Rat(j + 1);
        rep(1, j) = Rat(j + 1);
        rep(2, j) = Rat(j * j);
    }
    CHECK(det(rep) == Rat(0));

    CHECK(det(RMat(0, 0)) == Rat(1));
    CHECK_THROWS_AS(det(RMat(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant of a fixed rational matrix") {
    RMat m(4, 4);
    const Rat vals[4][4] = {{Rat(1, 2), Rat(-2, 3), Rat(3), Rat(0)},
                            {Rat(5), Rat(1, 7), Rat(-1), Rat(2, 5)},
                            {Rat(0), Rat(4), Rat(1, 3), Rat(-3)},
                            {Rat(7, 2), Rat(-1, 6), Rat(0), Rat(1)}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
    CHECK(det(m) == Rat(51389, 1260));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    SeedStream s(17, 96);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = 1 + s.next() % 5;
        const RMat m = testsup::rnd_mat(s, n, n);
        CHECK(det(m) == testsup::det_naive(m));
        CHECK(det(m.transposed()) == det(m));
    }
}

TEST_CASE("determinant is multilinear in rows") {
    SeedStream s(19, 95);
    for (int i = 0; i < 40; ++i) {
        RMat m = testsup::rnd_mat(s, 4, 4);
        const Rat d0 = det(m);
        const Rat scale(7, 3);
        RMat m2 = m;
        for (int j = 0; j < 4; ++j) m2(2, j) = m(2, j) * scale;
        CHECK(det(m2) == d0 * scale);
    }
}

TEST_CASE("rank basics") {
    CHECK(rank(RMat(4, 4)) == 0);
    CHECK(rank(RMat(0, 3)) == 0);

    RMat id(5, 5);
    for (int i = 0; i < 5; ++i) id(i, i) = Rat(1);
    CHECK(rank(id) == 5);

    RMat r1(2, 2);
    r1(0, 0) = Rat(1); r1(0, 1) = Rat(2);
    r1(1, 0) = Rat(2); r1(1, 1) = Rat(4);
    CHECK(rank(r1) == 1);

    // Outer product has rank 1.
    RMat outer(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) outer(i, j) = Rat(i + 1) * Rat(2 * j + 1, 3);
    CHECK(rank(outer) == 1);
}

TEST_CASE("rank of the degree-two monomial images of five points") {
    // Rows (x^2, xy, y^2, x, y) for (1,2),(2,3),(3,5),(4,7),(5,11).
    const int pts[5][2] = {{1, 2}, {2, 3}, {3, 5}, {4, 7}, {5, 11}};
    RMat m(5, 5);
    for (int i = 0; i < 5; ++i) {
        const Rat x(pts[i][0]), y(pts[i][1]);
        m(i, 0) = x * x;
        m(i, 1) = x * y;
        m(i, 2) = y * y;
        m(i, 3) = x;
        m(i, 4) = y;
    }
    CHECK(det(m) == Rat(-4));
    CHECK(rank(m) == 5);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    SeedStream s(23, 94);
    for (int i = 0; i < 40; ++i) {
        const std::size_t r = 1 + s.next() % 5;
        const std::size_t c = 1 + s.next() % 5;
        const RMat m = testsup::rnd_mat(s, r, c);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("rank detects planted row dependencies") {
    SeedStream s(29, 93);
    for (int i = 0; i < 40; ++i) {
        RMat m = testsup::rnd_mat(s, 4, 5);
        // Replace the last row with a combination of the first two.
        const Rat u = testsup::rnd_rat(s), v = testsup::rnd_rat(s);
        for (int j = 0; j < 5; ++j) m(3, j) = u * m(0, j) + v * m(1, j);
        CHECK(rank(m) <= 3);
    }
}

TEST_CASE("affine independence") {
    CHECK(affinely_independent({RVec{Rat(0), Rat(0)}, RVec{Rat(1), Rat(0)}, RVec{Rat(0), Rat(1)}}));
    CHECK_FALSE(affinely_independent(
        {RVec{Rat(0), Rat(0)}, RVec{Rat(1), Rat(1)}, RVec{Rat(2), Rat(2)}}));
    CHECK(affinely_independent({}));
    CHECK(affinely_independent({RVec{Rat(5), Rat(7)}}));
    CHECK_THROWS_AS(
        affinely_independent({RVec{Rat(0)}, RVec{Rat(1)}, RVec{Rat(2)}}),
        std::invalid_argument);

    // The degree-two monomial images of five generic planar points are
    // affinely independent in R^5.
    const int pts[5][2] = {{1, 2}, {2, 3}, {3, 5}, {4, 7}, {5, 11}};
    std::vector<RVec> nu;
    for (auto& p : pts) {
        const Rat x(p[0]), y(p[1]);
        nu.push_back(RVec{x * x, x * y, y * y, x, y});
    }
    CHECK(affinely_independent(nu));
}

TEST_CASE("hyperplane normalization") {
    const Hyperplane h(Rat(1, 2), RVec{Rat(-1, 3), Rat(1, 6)});
    CHECK(h.coeffs() == RVec{Rat(2), Rat(-1)});
    CHECK(h.constant() == Rat(-3));
    CHECK_THROWS_AS(Hyperplane(Rat(1), RVec{Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(h.eval(RVec{Rat(1)}), std::invalid_argument);
}

TEST_CASE("hyperplane through points") {
    const Hyperplane diag = hyperplane_through({RVec{Rat(0), Rat(0)}, RVec{Rat(1), Rat(1)}});
    CHECK(diag.coeffs() == RVec{Rat(1), Rat(-1)});
    CHECK(diag.constant() == Rat(0));

    const Hyperplane shifted = hyperplane_through({RVec{Rat(1), Rat(2)}, RVec{Rat(3), Rat(4)}});
    CHECK(shifted.coeffs() == RVec{Rat(1), Rat(-1)});
    CHECK(shifted.constant() == Rat(1));

    const Hyperplane simplex = hyperplane_through(
        {RVec{Rat(1), Rat(0), Rat(0)}, RVec{Rat(0), Rat(1), Rat(0)}, RVec{Rat(0), Rat(0), Rat(1)}});
    CHECK(simplex.coeffs() == RVec{Rat(1), Rat(1), Rat(1)});
    CHECK(simplex.constant() == Rat(-1));

    CHECK_THROWS_AS(hyperplane_through({RVec{Rat(0), Rat(0), Rat(0)}, RVec{Rat(1), Rat(1), Rat(1)},
                                        RVec{Rat(2), Rat(2), Rat(2)}}),
                    AffinelyDependentError);
}

TEST_CASE("hyperplane through random points vanishes on them") {
    SeedStream s(31, 92);
    int built = 0;
    for (int i = 0; i < 60; ++i) {
        const std::size_t d = 2 + s.next() % 4;
        std::vector<RVec> pts;
        for (std::size_t k = 0; k < d; ++k) {
            RVec p(d);
            for (std::size_t j = 0; j < d; ++j) p[j] = testsup::rnd_rat(s);
            pts.push_back(p);
        }
        auto f = affine_span_functional(pts);
        if (!f) continue;
        ++built;
        const Hyperplane h = hyperplane_through(pts);
        for (const auto& p : pts) {
            CHECK(h.eval(p) == Rat(0));
            // The raw cofactor functional vanishes as well.
            Rat raw = f->first;
            for (std::size_t j = 0; j < d; ++j) raw += f->second[j] * p[j];
            CHECK(raw == Rat(0));
        }
    }
    CHECK(built > 30);
}
