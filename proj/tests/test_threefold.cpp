// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <algorithm>

#include "kdelta/catalog.hpp"
#include "kdelta/delta.hpp"
#include "kdelta/threefold.hpp"
#include "support.hpp"

using namespace kdelta;

namespace {

Rational q(const char* s) { return parse_rational(s); }

const CorollaryResult& find(const std::vector<CorollaryResult>& all, const std::string& name,
                            const std::string& point) {
    auto it = std::find_if(all.begin(), all.end(), [&](const CorollaryResult& r) {
        return r.config.name == name && r.config.point_type == point;
    });
    REQUIRE(it != all.end());
    return *it;
}

std::vector<CorollaryResult> all_corollaries() {
    std::vector<CorollaryResult> out;
    for (const auto& c : corollary_configs()) out.push_back(evaluate_corollary(Catalog::builtin(), c));
    return out;
}

} // namespace

TEST_CASE("S of a plane through a smooth point") {
    CHECK(s_plane_flag(4, q("1/2")) == q("1/2"));
    CHECK(s_plane_flag(3, q("2/3")) == q("1/2"));
    for (int s = 1; s <= 6; ++s) CHECK(s_plane_flag(s, 0) == 1);
}

TEST_CASE("S of the exceptional divisor of a point blowup") {
    CHECK(s_blowup_flag(4, q("1/2")) == q("3/2"));
    CHECK(s_blowup_flag(6, q("1/2")) == q("3/4"));
    CHECK(s_blowup_flag(5, 0) == 3);
}

TEST_CASE("smooth-point combinator") {
    CHECK(delta_bound_smooth(3, q("2/3"), q("5/3")) == q("10/9"));
    CHECK(delta_bound_smooth(3, 0, 1) == 1);
    CHECK(delta_bound_smooth(4, q("1/2"), 1) == q("2/3"));
}

TEST_CASE("blowup combinator") {
    CHECK(delta_bound_blowup(4, 2, q("1/2"), 1) == q("4/3"));
    CHECK(delta_bound_blowup(6, 4, q("1/2"), q("9/5")) == q("4/3"));
    CHECK(delta_bound_blowup(6, 4, q("1/2"), q("3/4")) == q("4/3") * q("3/4"));
    CHECK(delta_bound_blowup(5, 3, 0, 1) == 1);
    CHECK(delta_bound_blowup(4, 3, q("1/2"), q("5/4")) == 1);
}

TEST_CASE("blowup combinator terms differ by the factor delta2d") {
    kdelta::testing::Gen gen(42);
    for (int k = 0; k < 5; ++k) {
        const int s = gen.integer(1, 6);
        const int m = gen.integer(2, 4);
        const Rational lambda = gen.rational_inside(0, std::min(ratio(4, s), ratio(3, m)));
        const Rational delta2d = gen.rational_inside(0, 3);
        const Rational factor = 4 * (3 - lambda * m) / (3 * (4 - lambda * s));
        CAPTURE(s);
        CAPTURE(m);
        CAPTURE(to_string(lambda));
        CHECK(delta_bound_blowup(s, m, lambda, delta2d) == std::min<Rational>(factor, delta2d * factor));
        CHECK(delta_bound_blowup(s, m, lambda, 1) == factor);
    }
}

TEST_CASE("quadric combinator") {
    CHECK(delta_bound_quadric(2, q("2/3"), 1) == q("20/19"));
    CHECK(delta_bound_quadric(2, 0, 1) == q("4/5"));
    // At λ = 2/3 the three terms specialize to 3 - 2m/3, 1 + (9 - 4m)/(27 - 4m) and 4(1 - 2m/9) δ.
    for (int m = 1; m <= 3; ++m) {
        for (const Rational& delta : {q("1/2"), q("1"), q("3/2")}) {
            const Rational expected = std::min<Rational>({3 - ratio(2 * m, 3), 1 + ratio(9 - 4 * m, 27 - 4 * m),
                                                delta * 4 * (1 - ratio(2 * m, 9))});
            CHECK(delta_bound_quadric(m, q("2/3"), delta) == expected);
        }
    }
}

TEST_CASE("volume integrals reproduce their closed forms") {
    CHECK(verify_threefold_volumes(VolumeKind::Plane, 4, q("1/2")));
    const VolumeCheck quad = threefold_volume_check(VolumeKind::Quadric, 0, q("1/3"));
    CHECK(quad.ok);
    CHECK(quad.closed_form == 2);
    CHECK(threefold_volume_check(VolumeKind::Quadric, 0, 0).closed_form == 3);
    for (const Rational& lambda : {q("0"), q("1/5"), q("1/3"), q("1/2"), q("2/3")}) {
        CAPTURE(to_string(lambda));
        for (int s = 1; s <= 5; ++s) {
            CHECK(verify_threefold_volumes(VolumeKind::Plane, s, lambda));
            CHECK(verify_threefold_volumes(VolumeKind::Blowup, s, lambda));
        }
        CHECK(verify_threefold_volumes(VolumeKind::Quadric, 0, lambda));
    }
}

TEST_CASE("cone lookup table maps point types to catalog cases of the right degree") {
    const Catalog& c = Catalog::builtin();
    for (const auto& entry : cone_lookup_table()) {
        CAPTURE(entry.point_type);
        CHECK_FALSE(entry.cones.empty());
        for (const auto& cone : entry.cones) {
            CHECK(cone.d == entry.m);
            CHECK(c.resolve(cone.id).degree(cone.d) != nullptr);
        }
    }
}

TEST_CASE("corollary bounds") {
    const auto all = all_corollaries();
    for (const auto& r : all) {
        CAPTURE(r.config.name);
        CAPTURE(r.config.point_type);
        CHECK(r.at_least_one);
        CHECK(r.bound >= 1);
        CHECK(r.strict == (r.bound > 1));
    }
    CHECK(find(all, "quartic double solid", "node").bound == q("4/3"));
    CHECK(find(all, "quadric threefold", "node").bound == q("20/19"));
    CHECK(find(all, "cubic threefold", "node").bound == q("10/9"));
    const auto& triple = find(all, "quartic double solid", "ordinary triple point");
    CHECK(triple.bound == 1);
    CHECK_FALSE(triple.strict);
}

TEST_CASE("cone degree mismatch is rejected") {
    try {
        cone_delta(Catalog::builtin(), {ConeCase{"smooth_conic", 3}}, q("1/2"));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeNotAdmissible);
    }
}
