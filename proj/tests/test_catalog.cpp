// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <algorithm>
#include <set>

#include "kdelta/catalog.hpp"

using namespace kdelta;

namespace {

bool has_message(const std::vector<std::string>& msgs, const std::string& needle) {
    return std::any_of(msgs.begin(), msgs.end(),
                       [&](const std::string& m) { return m.find(needle) != std::string::npos; });
}

struct ExpectedRow {
    const char* id;
    int d;
    Rational scale;
    Rational c0;
    Rational c1;
    Rational lo;
    Rational hi;
};

} // namespace

TEST_CASE("builtin catalog is large and internally consistent") {
    const Catalog& c = Catalog::builtin();
    CHECK(c.entries().size() >= 30);
    CHECK(validate_catalog(c).empty());
    std::set<std::string> ids;
    for (const auto& e : c.entries()) {
        CHECK(ids.insert(e.id).second);
        CAPTURE(e.id);
        CHECK(validate_case(c, e.id).empty());
    }
}

TEST_CASE("closed forms and validity intervals of representative entries") {
    const std::vector<ExpectedRow> rows = {
        {"line_component_smooth_point", 4, 3, 1, -1, 0, Rational(3, 4)},
        {"smooth_conic", 2, 1, 3, -2, 0, Rational(3, 4)},
        {"A1", 4, 1, 3, -3, 0, Rational(3, 4)},
        {"A2", 4, Rational(3, 5), 5, -6, 0, Rational(3, 4)},
        {"A2", 3, Rational(3, 5), 5, -6, 0, Rational(5, 6)},
        {"A3", 4, 1, 3, -4, 0, Rational(3, 4)},
        {"A4", 4, Rational(6, 13), 7, -10, Rational(3, 8), Rational(7, 10)},
        {"A5", 4, Rational(6, 7), 4, -6, Rational(3, 8), Rational(2, 3)},
        {"A5_line_in_C", 4, Rational(3, 4), 4, -6, 0, Rational(2, 3)},
        {"A7", 4, Rational(3, 4), 5, -8, Rational(3, 8), Rational(5, 8)},
        {"D4", 4, Rational(3, 2), 2, -3, 0, Rational(2, 3)},
        {"D5", 4, Rational(3, 5), 5, -8, 0, Rational(5, 8)},
        {"D6", 4, 1, 3, -5, 0, Rational(3, 5)},
        {"E6", 4, Rational(3, 7), 7, -12, 0, Rational(7, 12)},
        {"E7", 4, Rational(3, 5), 5, -9, 0, Rational(5, 9)},
        {"four_lines", 4, 1, 3, -6, 0, Rational(1, 2)},
        {"quadruple_line", 4, 3, 1, -4, 0, Rational(1, 4)},
        {"smooth_quartic_tangent", 4, 1, 3, -2, 0, Rational(3, 4)},
        {"smooth_quartic_flex", 4, Rational(3, 4), 4, -3, 0, Rational(3, 4)},
        {"smooth_quartic_hyperflex", 4, Rational(3, 5), 5, -4, 0, Rational(3, 4)},
    };
    const Catalog& c = Catalog::builtin();
    for (const auto& row : rows) {
        CAPTURE(row.id);
        CAPTURE(row.d);
        const CaseSpec spec = c.resolve(row.id);
        const DegreeEntry* deg = spec.degree(row.d);
        REQUIRE(deg != nullptr);
        CHECK(deg->validity.lo == row.lo);
        CHECK(deg->validity.hi == row.hi);
        const Rational a = 3 - row.d * Rational(1, 5);
        CHECK(spec.expected(row.d, Rational(1, 5)) == row.scale * (row.c0 + row.c1 * Rational(1, 5)) / a);
    }
}

TEST_CASE("smooth cubic entries use the 3 - 3λ denominator") {
    const CaseSpec tangent = Catalog::builtin().resolve("smooth_cubic_tangent");
    const CaseSpec flex = Catalog::builtin().resolve("smooth_cubic_flex");
    const Rational l(1, 3);
    CHECK(tangent.expected(3, l) == (3 - 2 * l) / (3 - 3 * l));
    CHECK(flex.expected(3, l) == (4 - 3 * l) / (4 - 4 * l));
}

TEST_CASE("lower-bound regime is declared for A4, A5, A6 and A7") {
    const Catalog& c = Catalog::builtin();
    for (const char* id : {"A4", "A5", "A6", "A7"}) {
        CAPTURE(id);
        const CaseSpec s = c.resolve(id);
        REQUIRE(s.lower_regime.has_value());
        CHECK(s.lower_regime->interval.lo == 0);
        CHECK(s.lower_regime->interval.hi == Rational(3, 8));
        CHECK(s.lower_regime->bound(4, Rational(1, 4)) == Rational(3, 2) / (3 - 4 * Rational(1, 4)));
    }
    CHECK_FALSE(c.resolve("A5_line_in_C").lower_regime.has_value());
}

TEST_CASE("aliases resolve to the data of their base entry") {
    const Catalog& c = Catalog::builtin();
    std::size_t aliases = 0;
    for (const auto& e : c.entries()) {
        if (e.alias_of.empty()) continue;
        ++aliases;
        CAPTURE(e.id);
        const CaseSpec merged = c.resolve(e.id);
        const CaseSpec base = c.resolve(e.alias_of);
        CHECK(merged.id == e.id);
        CHECK(merged.alias_of == e.alias_of);
        CHECK(merged.E2 == base.E2);
        CHECK(merged.gram() == base.gram());
        CHECK(merged.m_C == base.m_C);
    }
    CHECK(aliases > 0);
}

TEST_CASE("lookup errors carry their codes") {
    const Catalog& c = Catalog::builtin();
    try {
        c.resolve("no_such_case");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownCase);
    }
    try {
        build_case(c, "A2", 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeNotAdmissible);
    }
    CHECK(c.contains("A2"));
    CHECK_FALSE(c.contains("A9"));
}

TEST_CASE("built models carry E and the companion curve") {
    const BuiltCase b = build_case(Catalog::builtin(), "A4", 4);
    CHECK(b.model.size() == 2);
    CHECK(b.model.gram[0][0] == Rational(-1, 10));
    CHECK(b.model.gram[0][1] == Rational(2, 5));
    CHECK(b.model.gram[1][1] == Rational(-3, 5));
    CHECK(b.index_L() == std::optional<std::size_t>(1));
    CHECK(b.a(Rational(1, 2)) == 1);
    const BuiltCase s = build_case(Catalog::builtin(), "A1", 3);
    CHECK(s.model.size() == 1);
    CHECK_FALSE(s.index_L().has_value());
}

TEST_CASE("validation names the broken field") {
    Catalog c = Catalog::builtin();
    SUBCASE("log discrepancy") {
        c.raw("A2").A_E.c0 += 1;
        CHECK(has_message(validate_case(c, "A2"), "A(λ) mismatch"));
    }
    SUBCASE("different coefficient") {
        c.raw("A2").options[0].points[0].coeff.c0 = 2;
        CHECK_FALSE(validate_case(c, "A2").empty());
    }
    SUBCASE("negative definiteness of E") {
        c.raw("A1").E2 = 1;
        CHECK_FALSE(validate_case(c, "A1").empty());
    }
    SUBCASE("validity beyond 3/d") {
        c.raw("A1").degrees.back().validity.hi = 1;
        CHECK_FALSE(validate_case(c, "A1").empty());
    }
    SUBCASE("reserved point label") {
        c.raw("A2").options[0].points[0].label = "generic";
        CHECK_FALSE(validate_case(c, "A2").empty());
    }
    SUBCASE("duplicate ids") {
        std::vector<CaseSpec> entries = c.entries();
        entries.push_back(entries.front());
        CHECK_FALSE(validate_catalog(Catalog(entries)).empty());
    }
}

TEST_CASE("fault sites cover the numeric fields of every base entry") {
    const Catalog& c = Catalog::builtin();
    const auto sites = fault_sites(c);
    std::set<std::string> cases;
    for (const auto& s : sites) cases.insert(s.case_id);
    for (const auto& e : c.entries()) {
        if (e.alias_of.empty()) CHECK(cases.count(e.id) == 1);
        else CHECK(cases.count(e.id) == 0);
    }
    CHECK(std::any_of(sites.begin(), sites.end(), [](const FaultSite& s) { return s.field == "m_C"; }));
    CHECK(std::any_of(sites.begin(), sites.end(), [](const FaultSite& s) { return s.field == "EL"; }));
}

TEST_CASE("apply_fault_spec overwrites one field") {
    Catalog c = Catalog::builtin();
    apply_fault_spec(c, "A2.m_C=5");
    CHECK(c.raw("A2").m_C == 5);
    CHECK_THROWS_AS(apply_fault_spec(c, "A2.bogus=1"), Error);
    CHECK_THROWS_AS(apply_fault_spec(c, "A2m_C=1"), Error);
    CHECK_THROWS_AS(apply_fault_spec(c, "A2.m_C=x"), Error);
    CHECK_THROWS_AS(apply_fault_spec(c, "nope.m_C=1"), Error);
}

TEST_CASE("multiplicity clause describes its interval") {
    const Catalog& c = Catalog::builtin();
    const CaseSpec s = c.resolve("quadruple_line");
    REQUIRE(s.clause.has_value());
    CHECK(s.clause->interval().hi == Rational(1, 4));
    CHECK_FALSE(s.clause->describe().empty());
    CHECK_THROWS_AS((*s.clause)(4, Rational(1, 2)), Error);
}
