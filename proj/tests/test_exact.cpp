// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include "kdelta/exact.hpp"

using namespace kdelta;

namespace {

Rational q(const char* s) { return parse_rational(s); }

} // namespace

TEST_CASE("parse_rational accepts canonical and reducible input") {
    CHECK(q("3/4") == Rational(3, 4));
    CHECK(q("-6/8") == Rational(-3, 4));
    CHECK(q("5") == Rational(5));
    CHECK(q("0") == Rational(0));
}

TEST_CASE("parse_rational rejects malformed input") {
    for (const char* bad : {"", "1/0", "abc", "1.5", "1/2/3", "/2", "2/", "1e3", "0x10", " 2/3"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_rational(bad), Error);
    }
}

TEST_CASE("to_string renders p/q or p") {
    CHECK(to_string(Rational(6, 5)) == "6/5");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(to_string(parse_rational(to_string(Rational(-22, 7)))) == "-22/7");
}

TEST_CASE("polynomial arithmetic and evaluation") {
    Poly p({1, -3, 2}); // 1 - 3x + 2x^2
    Poly x = Poly::variable();
    CHECK(p.degree() == 2);
    CHECK(p(Rational(1, 2)) == 0);
    CHECK(p(1) == 0);
    CHECK((x - Poly::constant(1)) * (Poly::constant(2) * x - Poly::constant(1)) == p);
    CHECK(p.derivative() == Poly({-3, 4}));
    CHECK(p.antiderivative().derivative() == p);
    CHECK((p - p).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(p.eval(0.25) == doctest::Approx(1 - 0.75 + 0.125));
}

TEST_CASE("polynomial division and gcd") {
    Poly a = Poly({-1, 0, 1}) * Poly({2, 1}); // (x^2 - 1)(x + 2)
    Poly b({1, 1});
    auto [quot, rem] = divmod(a, b);
    CHECK(rem.is_zero());
    CHECK(quot * b == a);
    Poly g = gcd(a, Poly({-1, 0, 1}) * Poly({5}));
    CHECK(g == Poly({-1, 0, 1}));
    CHECK_THROWS_AS(divmod(a, Poly()), Error);
}

TEST_CASE("exact integration") {
    CHECK(integrate(Poly({0, 0, 1}), 0, 3) == 9);
    CHECK(integrate(Poly({1}), Rational(1, 3), Rational(1, 2)) == Rational(1, 6));
    PiecewisePoly f({0, 1, 3}, {Poly({0, 1}), Poly({Rational(3, 2), Rational(-1, 2)})});
    CHECK(f.is_continuous());
    CHECK(integrate_piecewise(f) == Rational(1, 2) + 1);
    CHECK(f(1) == 1);
    CHECK(f.piece_index(1) == 0);
    CHECK(f.piece_index(Rational(3, 2)) == 1);
}

TEST_CASE("discontinuous piecewise functions are detected") {
    PiecewisePoly f({0, 1, 2}, {Poly({0, 1}), Poly({2})});
    CHECK_FALSE(f.is_continuous());
}

TEST_CASE("rational roots in an interval") {
    Poly p = Poly({Rational(-1, 2), 1}) * Poly({Rational(-2, 3), 1});
    auto roots = roots_in_interval(p, 0, 1);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(1, 2));
    CHECK(roots[1] == Rational(2, 3));
    CHECK(roots_in_interval(p, Rational(3, 5), 1).size() == 1);
    CHECK(roots_in_interval(Poly({-3, 2}), 0, 2) == std::vector<Rational>{Rational(3, 2)});
    CHECK(root_bound(Poly({-5, 1}) * Poly({1, 1})) >= 5);
}

TEST_CASE("irrational roots and unsupported degrees are errors") {
    try {
        roots_in_interval(Poly({-2, 0, 1}), 0, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IrrationalRoot);
    }
    try {
        roots_in_interval(Poly({-1, 0, 0, 1}), 0, 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnsupportedDegree);
    }
}

TEST_CASE("rational functions are stored reduced with monic denominator") {
    RationalFunction f(Poly({6, -8}) * Poly({1, 1}), Poly({6, -8}) * Poly({3, -4}));
    RationalFunction g(Poly({Rational(1, 3), Rational(1, 3)}), Poly({1, Rational(-4, 3)}));
    CHECK(f == g);
    CHECK(f.denominator().leading() == 1);
    CHECK(f(Rational(1, 2)) == Rational(3, 2));
    CHECK_THROWS_AS(f(Rational(3, 4)), Error);
}

TEST_CASE("fit_rational_function recovers a known function") {
    RationalFunction target(Poly({15, -18}), Poly({15, -20}));
    std::vector<Sample> samples;
    for (int k = 1; k <= 7; ++k) {
        Rational x(k, 11);
        samples.push_back({x, target(x)});
    }
    CHECK(fit_rational_function(samples, 2, 2) == target);
    CHECK(fit_rational_function(samples, 1, 1) == target);
}

TEST_CASE("fit_rational_function reports when no fit exists") {
    std::vector<Sample> samples;
    for (int k = 1; k <= 6; ++k) {
        Rational x(k, 7);
        samples.push_back({x, x * x * x * x});
    }
    CHECK_THROWS_AS(fit_rational_function(samples, 1, 1), Error);
}

TEST_CASE("linear algebra helpers") {
    Matrix m{{2, 1}, {1, 3}};
    CHECK(determinant(m) == 5);
    auto x = solve(m, {3, 4});
    REQUIRE(x);
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK_FALSE(solve(Matrix{{1, 2}, {2, 4}}, {1, 3}).has_value());
    auto ns = nullspace(Matrix{{1, 2, 3}, {2, 4, 6}}, 3);
    CHECK(ns.size() == 2);
    CHECK(is_negative_definite(Matrix{{-2, 1}, {1, -2}}));
    CHECK_FALSE(is_negative_definite(Matrix{{-1, 2}, {2, -1}}));
    CHECK_FALSE(is_negative_definite(Matrix{{0}}));
}

TEST_CASE("ratio builds fractions in lowest terms") {
    CHECK(ratio(6, 9) == Rational(2, 3));
    CHECK(ratio(3, 3) == 1);
    CHECK(ratio(3, 3).get_den() == 1);
    CHECK(ratio(2, -4) == Rational(-1, 2));
    CHECK(is_canonical(ratio(10, 4)));
    CHECK_THROWS_AS(ratio(1, 0), Error);
}
