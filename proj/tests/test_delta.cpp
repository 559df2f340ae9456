// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <cmath>
#include <functional>
#include <optional>
#include <utility>

#include "kdelta/catalog.hpp"
#include "kdelta/delta.hpp"
#include "kdelta/surface.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kdelta;
using kdelta::testing::all_case_degrees;
using kdelta::testing::evenly_inside;
using kdelta::testing::close;
using kdelta::testing::midpoint;
using kdelta::testing::PositivePart;

namespace {

Rational q(const char* s) { return parse_rational(s); }

const PointRow* row(const DeltaReport& r, const std::string& label) {
    for (const auto& p : r.points) {
        if (p.label == label) return &p;
    }
    return nullptr;
}

} // namespace

TEST_CASE("S of the exceptional curve: reference values") {
    CHECK(s_divisor("A2", 4, q("1/2")) == q("5/3"));
    CHECK(s_divisor("A1", 4, 0) == 2);
    CHECK(s_divisor("smooth_conic", 2, 0) == 3);
}

TEST_CASE("S of the exceptional curve against per-case closed forms") {
    struct Row {
        const char* id;
        Rational multiple;
    };
    const std::vector<Row> rows = {{"A1", q("2/3")}, {"A2", q("5/3")}, {"A4", q("13/6")}, {"A6", q("5/2")}, {"E6", q("7/3")}};
    const Catalog& c = Catalog::builtin();
    for (const auto& r : rows) {
        for (const Rational& lambda : evenly_inside(c.resolve(r.id).degree(4)->validity, 3)) {
            CAPTURE(r.id);
            CAPTURE(to_string(lambda));
            CHECK(s_divisor(r.id, 4, lambda) == r.multiple * (3 - 4 * lambda));
        }
    }
}

TEST_CASE("log discrepancy of the exceptional curve") {
    CHECK(a_divisor("A2", q("1/2")) == 2);
    CHECK(a_divisor("E7", q("1/3")) == 2);
    for (const auto& e : Catalog::builtin().entries()) {
        CHECK(a_divisor(e.id, 0) == 1 + Catalog::builtin().resolve(e.id).k_E);
    }
}

TEST_CASE("flag S and log discrepancy at points") {
    CHECK(s_flag_point("A2", 4, q("1/2"), "generic") == q("1/9"));
    CHECK(s_flag_point("A2", 4, q("1/2"), "EL") == q("1/6"));
    CHECK(s_flag_point("A1", 4, 0, "generic") == 1);
    CHECK(a_flag_point("A2", q("1/2"), "Q") == q("1/2"));
    CHECK(a_flag_point("A2", q("1/5"), "P1") == q("1/3"));
    CHECK(a_flag_point("A2", q("2/3"), "P1") == q("1/3"));
    CHECK(a_flag_point("D5", q("1/2"), "P1") == q("1/6"));
    CHECK(a_flag_point("A2", q("1/2"), "generic") == 1);
    try {
        s_flag_point("A2", 4, q("1/2"), "nowhere");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownPoint);
    }
}

TEST_CASE("delta at A2, d = 4, λ = 1/2") {
    const DeltaReport r = delta_point("A2", 4, q("1/2"));
    CHECK(r.exact);
    CHECK(r.value() == q("6/5"));
    CHECK(r.minimizers == std::vector<std::string>{"E"});
    REQUIRE(row(r, "P1"));
    CHECK(row(r, "P1")->ratio == 3);
    CHECK(row(r, "P2")->ratio == 3);
    CHECK(row(r, "Q")->ratio == q("9/2"));
    CHECK(row(r, "generic")->ratio == 9);
    CHECK(r.validity_ok);
    CHECK(r.matches_expected() == std::optional<bool>(true));
}

TEST_CASE("A4 below 3/8 gives only a lower bound") {
    const DeltaReport r = delta_point("A4", 4, q("1/4"));
    CHECK_FALSE(r.exact);
    CHECK(r.lower == q("3/4"));
    CHECK(r.lower < r.upper);
    CHECK(r.minimizers == std::vector<std::string>{"P12"});
    CHECK_FALSE(r.validity_ok);
    CHECK_FALSE(r.expected.has_value());
}

TEST_CASE("λ outside [0, 3/d) is rejected") {
    CHECK_THROWS_AS(delta_point("A2", 4, q("7/8")), Error);
    CHECK_THROWS_AS(delta_point("A2", 4, q("3/4")), Error);
    CHECK_THROWS_AS(delta_point("A2", 4, q("-1/8")), Error);
    CHECK_THROWS_AS(delta_point("A2", 4, q("1/2"), 7), Error);
}

TEST_CASE("S and log discrepancy of plane curves") {
    auto r = s_curve_on_plane(1, q("1/2"), 1, 1);
    CHECK(r.A / r.S == q("3/5"));
    r = s_curve_on_plane(4, q("1/4"), 1, 2);
    CHECK(r.A / r.S == q("3/4"));
    r = s_curve_on_plane(3, 0, 1, 0);
    CHECK(r.S == 1);
    CHECK(r.A == 1);
    CHECK_THROWS_AS(s_curve_on_plane(3, 0, 0, 0), Error);
}

TEST_CASE("closed-form reconstruction") {
    CHECK(delta_closed_form("A2", 4) == RationalFunction(Poly({15, -18}), Poly({15, -20})));
    CHECK(delta_closed_form("D4", 3) == RationalFunction(Poly({2, -3}), Poly({2, -2})));
    CHECK(delta_closed_form("E6", 4) == RationalFunction(Poly({21, -36}), Poly({21, -28})));
    CHECK(delta_closed_form("quadruple_line", 4) == RationalFunction(Poly({3, -12}), Poly({3, -4})));

    // A7: the fit reproduces direct evaluations at seven interior points.
    const RationalFunction a7 = delta_closed_form("A7", 4);
    CHECK(a7 == RationalFunction(Poly({15, -24}), Poly({12, -16})));
    for (const Rational& lambda : evenly_inside(Interval{q("3/8"), q("5/8")}, 7)) {
        CHECK(a7(lambda) == delta_point("A7", 4, lambda).value());
    }
}

TEST_CASE("closed-form reconstruction requires exactness") {
    Catalog c = Catalog::builtin();
    c.raw("A4").degrees[0].validity.lo = 0;
    try {
        delta_closed_form(c, "A4", 4);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotExactOnInterval);
    }
}

TEST_CASE("interior samples are evenly spaced and strictly inside") {
    auto s = interior_samples(Interval{0, 1}, 3);
    CHECK(s == std::vector<Rational>{q("1/4"), q("1/2"), q("3/4")});
}

TEST_CASE("sandwich, exactness and expected values across the catalog") {
    const Catalog& c = Catalog::builtin();
    kdelta::testing::Gen gen(7);
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        const Interval iv = spec.degree(d)->validity;
        for (int k = 0; k < 10; ++k) {
            const Rational lambda = gen.rational_inside(iv.lo, iv.hi);
            CAPTURE(id);
            CAPTURE(d);
            CAPTURE(to_string(lambda));
            for (std::size_t opt = 0; opt < spec.options.size(); ++opt) {
                const DeltaReport r = delta_point(c, id, d, lambda, opt);
                CHECK(r.lower <= r.upper);
                CHECK(r.exact);
                CHECK(r.value() == spec.expected(d, lambda));
                CHECK(sgn(r.A_E) > 0);
                CHECK(sgn(r.S_E) > 0);
                CHECK(r.minimizers == spec.minimizers);
            }
        }
    }
}

TEST_CASE("λ = 0 gives δ = 1 whenever the validity interval contains 0") {
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        if (!spec.degree(d)->validity.contains(0)) continue;
        CAPTURE(id);
        CAPTURE(d);
        for (std::size_t opt = 0; opt < spec.options.size(); ++opt) {
            const DeltaReport r = delta_point(c, id, d, 0, opt);
            CHECK(r.exact);
            CHECK(r.value() == 1);
        }
    }
}

TEST_CASE("exact S values agree with midpoint quadrature of the integrands") {
    constexpr int kPanels = 1000000;
    constexpr double kTolerance = 1e-6;
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        if (!spec.alias_of.empty()) continue; // aliases share the integrands of their base
        const BuiltCase b = build_case(c, id, d);
        for (const Rational& lambda : evenly_inside(spec.degree(d)->validity, 3)) {
            CAPTURE(id);
            CAPTURE(d);
            CAPTURE(to_string(lambda));
            const ZariskiPieces z = zariski_decompose_full(b.model, b.divisor(lambda));
            const PositivePart pp(b.model, z, b.index_E(), b.index_L());
            const double a = to_double(b.a(lambda));
            const double tau = to_double(z.tau());

            const double s_e = midpoint([&](double v) { return pp.square(v); }, 0, tau, kPanels) / (a * a);
            CHECK(close(s_e, s_divisor(c, id, d, lambda), kTolerance));

            const double s_gen = 2 * midpoint([&](double v) { return pp.h_generic(v); }, 0, tau, kPanels) / (a * a);
            CHECK(close(s_gen, s_flag_point(c, id, d, lambda, "generic"), kTolerance));

            if (spec.companion) {
                const double s_el = 2 * midpoint([&](double v) { return pp.h_el(v); }, 0, tau, kPanels) / (a * a);
                CHECK(close(s_el, s_flag_point(c, id, d, lambda, "EL"), kTolerance));
            }
        }
    }
}

TEST_CASE("exact S values match frozen quadrature results") {
    // Values produced once by the 10^6-panel midpoint rule above and frozen here.
    struct Frozen {
        const char* id;
        int d;
        const char* lambda;
        const char* what;
        double value;
    };
    const std::vector<Frozen> rows = {
        {"A5", 4, "1/2", "E", 1.166666666667},
        {"A5", 4, "1/2", "generic", 0.166666666666},
        {"A5", 4, "1/2", "EL", 0.222222222222},
        {"D6", 4, "1/3", "E", 1.666666666667},
        {"D6", 4, "1/3", "generic", 0.277777777778},
        {"D6", 4, "1/3", "EL", 0.555555555556},
        {"E7", 4, "1/4", "E", 3.333333333333},
        {"E7", 4, "1/4", "generic", 0.222222222222},
        {"E7", 4, "1/4", "EL", 0.333333333334},
        {"double_conic", 4, "1/5", "E", 2.200000000000},
        {"double_conic", 4, "1/5", "generic", 0.366666666666},
        {"double_conic", 4, "1/5", "EL", 0.733333333334},
        {"smooth_cubic_flex", 3, "1/2", "E", 2.000000000000},
        {"smooth_cubic_flex", 3, "1/2", "generic", 0.166666666667},
        {"smooth_cubic_flex", 3, "1/2", "EL", 0.500000000000},
        {"triple_line_plus_line_singular", 4, "1/5", "E", 1.466666666667},
        {"triple_line_plus_line_singular", 4, "1/5", "generic", 0.733333333333},
    };
    for (const auto& r : rows) {
        CAPTURE(r.id);
        CAPTURE(r.what);
        const Rational lambda = q(r.lambda);
        const std::string what = r.what;
        const Rational exact = what == "E" ? s_divisor(r.id, r.d, lambda) : s_flag_point(r.id, r.d, lambda, what);
        CHECK(close(r.value, exact, 1e-9));
    }
}
