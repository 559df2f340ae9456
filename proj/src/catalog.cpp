// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kdelta {

const char* location_name(Location loc) {
    switch (loc) {
    case Location::Generic: return "isolated";
    case Location::OnC: return "on_C";
    case Location::OnL: return "on_L";
    }
    return "?";
}

std::string Interval::to_string() const {
    return "[" + kdelta::to_string(lo) + "," + kdelta::to_string(hi) + "]";
}

Rational ClosedForm::operator()(int d, const Rational& lambda) const {
    Rational den = Rational(3) - d * lambda;
    if (sgn(den) == 0) throw Error(Errc::InvalidInput, "closed form has a pole at " + to_string(lambda));
    Rational out = scale * num(lambda) / den;
    return out;
}

RationalFunction ClosedForm::as_function(int d) const {
    return RationalFunction(scale * num.as_poly(), Poly({Rational(3), Rational(-d)}));
}

Interval MultiplicityClause::interval() const {
    if (double_conic) return Interval{0, ratio(3, 8)};
    return Interval{0, ratio(1, line_multiplicity)};
}

Rational MultiplicityClause::operator()(int d, const Rational& lambda) const {
    if (!interval().contains(lambda)) {
        throw Error(Errc::InvalidInput, "λ = " + to_string(lambda) + " outside " + interval().to_string());
    }
    if (double_conic) return 1;
    Rational out = 3 * (1 - line_multiplicity * lambda) / (3 - d * lambda);
    return out;
}

std::string MultiplicityClause::describe() const {
    if (double_conic) return "conic component of multiplicity 2";
    return "line component of multiplicity " + std::to_string(line_multiplicity);
}

const DegreeEntry* CaseSpec::degree(int d) const {
    for (const auto& e : degrees) {
        if (e.d == d) return &e;
    }
    return nullptr;
}

Matrix CaseSpec::gram() const {
    if (!companion) return Matrix{{E2}};
    return Matrix{{E2, EL}, {EL, L2}};
}

namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

Affine lam(Rational c0, Rational c1) { return Affine{std::move(c0), std::move(c1)}; }
Affine cst(Rational c0) { return Affine{std::move(c0), 0}; }

PointSpec pt(std::string label, Affine c, Location loc) { return PointSpec{std::move(label), std::move(c), loc}; }

DegreeEntry deg(int d, Rational lo, Rational hi) { return DegreeEntry{d, Interval{std::move(lo), std::move(hi)}}; }

// Exceptional curve E with a companion line L̄ through the blown-up point.
struct Lattice {
    Rational E2, EL, L2, m_L, k;
    FlagMultipliers flags;
};

CaseSpec two_curve(std::string id, std::string label, std::string description, const Lattice& lat,
                   Rational m_C, std::vector<PointOption> options, ClosedForm expected,
                   std::vector<DegreeEntry> degrees) {
    CaseSpec c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.description = std::move(description);
    c.degrees = std::move(degrees);
    c.companion = true;
    c.E2 = lat.E2;
    c.EL = lat.EL;
    c.L2 = lat.L2;
    c.m_L = lat.m_L;
    c.k_E = lat.k;
    c.m_C = m_C;
    c.A_E = Affine{1 + lat.k, -m_C};
    c.options = std::move(options);
    c.expected = std::move(expected);
    c.flags = lat.flags;
    c.minimizers = {"E"};
    return c;
}

// Ordinary blowup: a single (-1)-curve E.
CaseSpec single(std::string id, std::string label, std::string description, Rational m_C,
                std::vector<PointSpec> points, ClosedForm expected, std::vector<DegreeEntry> degrees,
                std::vector<std::string> minimizers) {
    CaseSpec c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.description = std::move(description);
    c.degrees = std::move(degrees);
    c.companion = false;
    c.E2 = -1;
    c.k_E = 1;
    c.m_C = m_C;
    c.A_E = Affine{2, -m_C};
    c.options = {PointOption{"default", std::move(points)}};
    c.expected = std::move(expected);
    c.flags = FlagMultipliers{1, q(2, 3), q(1, 3), std::nullopt};
    c.minimizers = std::move(minimizers);
    return c;
}

CaseSpec alias(std::string id, std::string label, std::string description, std::string base,
               std::vector<DegreeEntry> degrees, std::optional<MultiplicityClause> clause) {
    CaseSpec c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.description = std::move(description);
    c.alias_of = std::move(base);
    c.degrees = std::move(degrees);
    c.clause = clause;
    return c;
}

PointOption opt(std::vector<PointSpec> points) { return PointOption{"default", std::move(points)}; }

MultiplicityClause line_mult(int l) { return MultiplicityClause{l, false}; }

ExtraBound ltilde(long l) { return ExtraBound{"Ltilde", 1, l}; }

std::vector<CaseSpec> builtin_entries() {
    const Lattice tangency{q(-1, 2), 1, -1, 2, 2, FlagMultipliers{2, 1, q(1, 6), q(1, 3)}};
    const Lattice flex{q(-1, 3), 1, -2, 3, 3, FlagMultipliers{3, q(4, 3), q(1, 9), q(1, 3)}};
    const Lattice hyperflex{q(-1, 4), 1, -3, 4, 4, FlagMultipliers{4, q(5, 3), q(1, 12), q(1, 3)}};
    const Lattice cusp{q(-1, 6), q(1, 2), q(-1, 2), 3, 4, FlagMultipliers{3, q(5, 3), q(1, 9), q(1, 6)}};
    const Lattice a4{q(-1, 10), q(2, 5), q(-3, 5), 4, 6, FlagMultipliers{4, q(13, 6), q(1, 12), q(2, 15)}};
    const Lattice a5{q(-1, 3), q(2, 3), q(-1, 3), 2, 3, FlagMultipliers{2, q(7, 6), q(1, 6), q(2, 9)}};
    const Lattice a6{q(-1, 14), q(2, 7), q(-1, 7), 4, 8, FlagMultipliers{4, q(5, 2), q(1, 12), q(2, 21)}};
    const Lattice a7{q(-1, 4), q(1, 2), 0, 2, 4, FlagMultipliers{2, q(4, 3), q(1, 6), q(1, 6)}};
    const Lattice e6{q(-1, 12), q(1, 3), q(-1, 3), 4, 6, FlagMultipliers{4, q(7, 3), q(1, 12), q(1, 9)}};

    const Location G = Location::Generic;
    const Location OC = Location::OnC;
    const Location OL = Location::OnL;
    const Affine L1 = lam(0, 1);
    const Affine L2x = lam(0, 2);
    const Affine L3x = lam(0, 3);
    const Affine L4x = lam(0, 4);
    const LowerRegime below{Interval{0, q(3, 8)}, ClosedForm{q(3, 2), cst(1)}};

    auto tangency_points = [&] {
        return std::vector<PointOption>{opt({pt("P", cst(q(1, 2)), G), pt("Q", L1, OC), pt("EL", cst(0), OL)})};
    };
    auto flex_points = [&] {
        return std::vector<PointOption>{opt({pt("P", cst(q(2, 3)), G), pt("Q", L1, OC), pt("EL", cst(0), OL)})};
    };

    std::vector<CaseSpec> v;

    v.push_back(single("line_component_smooth_point", "smooth point on a line component",
                       "smooth point of C lying on a line component of C", 1, {pt("Q", L1, OC)},
                       ClosedForm{3, lam(1, -1)},
                       {deg(1, 0, 1), deg(2, 0, 1), deg(3, 0, 1), deg(4, 0, q(3, 4))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(1)};

    v.push_back(two_curve("smooth_conic", "smooth", "smooth point of a smooth conic", tangency, 2,
                          tangency_points(), ClosedForm{1, lam(3, -2)}, {deg(2, 0, q(3, 4))}));

    v.push_back(single("A1", "A_1", "ordinary double point", 2, {pt("Q1", L1, OC), pt("Q2", L1, OC)},
                       ClosedForm{q(3, 2), lam(2, -2)}, {deg(2, 0, 1), deg(3, 0, 1), deg(4, 0, q(3, 4))},
                       {"E", "Q1", "Q2"}));

    v.push_back(single("double_line", "double line", "point of a double line", 2, {pt("Q", L2x, OC)},
                       ClosedForm{3, lam(1, -2)}, {deg(2, 0, q(1, 2))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(two_curve("smooth_cubic_tangent", "smooth", "smooth point of a cubic, not a flex", tangency,
                          2, tangency_points(), ClosedForm{1, lam(3, -2)}, {deg(3, 0, q(3, 4))}));

    v.push_back(two_curve("smooth_cubic_flex", "smooth, flex", "flex point of a smooth cubic", flex, 3,
                          flex_points(), ClosedForm{q(3, 4), lam(4, -3)}, {deg(3, 0, q(8, 9))}));

    v.push_back(two_curve("A2", "A_2", "ordinary cusp", cusp, 6,
                          {opt({pt("P1", cst(q(2, 3)), G), pt("P2", cst(q(1, 2)), OL), pt("Q", L1, OC)})},
                          ClosedForm{q(3, 5), lam(5, -6)}, {deg(3, 0, q(5, 6)), deg(4, 0, q(3, 4))}));

    v.push_back(two_curve("A3", "A_3", "tacnode", tangency, 4,
                          {PointOption{"two branches", {pt("P", cst(q(1, 2)), G), pt("Q1", L1, OC),
                                                        pt("Q2", L1, OC), pt("EL", cst(0), OL)}},
                           PointOption{"line branch", {pt("P", cst(q(1, 2)), G), pt("Q", L1, OC),
                                                       pt("QL", L1, OL)}}},
                          ClosedForm{1, lam(3, -4)}, {deg(3, 0, q(3, 4)), deg(4, 0, q(3, 4))}));

    v.push_back(single("D4", "D_4", "ordinary triple point", 3,
                       {pt("Q1", L1, OC), pt("Q2", L1, OC), pt("Q3", L1, OC)}, ClosedForm{q(3, 2), lam(2, -3)},
                       {deg(3, 0, q(2, 3)), deg(4, 0, q(2, 3))}, {"E"}));

    v.push_back(single("double_line_plus_line_double_point", "double line + line, smooth point of L",
                       "smooth point of the reduced double line in a double line plus a line", 2,
                       {pt("Q", L2x, OC)}, ClosedForm{3, lam(1, -2)}, {deg(3, 0, q(1, 2))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("double_line_plus_line_singular", "double line + line, singular point",
                       "intersection of the double line with the other line", 3,
                       {pt("Q1", L1, OC), pt("Q2", L2x, OC)}, ClosedForm{3, lam(1, -2)}, {deg(3, 0, q(1, 2))},
                       {"Q2", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("triple_line", "triple line", "point of a triple line", 3, {pt("Q", L3x, OC)},
                       ClosedForm{3, lam(1, -3)}, {deg(3, 0, q(1, 3))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(3)};
    v.back().clause = line_mult(3);

    v.push_back(two_curve("smooth_quartic_tangent", "smooth", "smooth point of a quartic, simple tangency",
                          tangency, 2, tangency_points(), ClosedForm{1, lam(3, -2)}, {deg(4, 0, q(3, 4))}));

    v.push_back(two_curve("smooth_quartic_flex", "smooth, flex", "smooth point of a quartic, flex tangency",
                          flex, 3, flex_points(), ClosedForm{q(3, 4), lam(4, -3)}, {deg(4, 0, q(3, 4))}));

    v.push_back(two_curve("smooth_quartic_hyperflex", "smooth, hyperflex",
                          "smooth point of a quartic with a 4-tangent line", hyperflex, 4,
                          {opt({pt("P", cst(q(3, 4)), G), pt("Q", L1, OC), pt("EL", cst(0), OL)})},
                          ClosedForm{q(3, 5), lam(5, -4)}, {deg(4, 0, q(3, 4))}));

    v.push_back(two_curve("A4", "A_4", "A_4 singular point", a4, 10,
                          {opt({pt("P12", cst(q(4, 5)), OL), pt("P3", cst(q(1, 2)), G), pt("Q", L1, OC)})},
                          ClosedForm{q(6, 13), lam(7, -10)}, {deg(4, q(3, 8), q(7, 10))}));
    v.back().lower_regime = below;

    v.push_back(two_curve("A5", "A_5", "A_5 singular point, no line component through it", a5, 6,
                          {opt({pt("P", cst(q(2, 3)), OL), pt("Q1", L1, OC), pt("Q2", L1, OC)})},
                          ClosedForm{q(6, 7), lam(4, -6)}, {deg(4, q(3, 8), q(2, 3))}));
    v.back().lower_regime = below;

    v.push_back(two_curve("A5_line_in_C", "A_5, line component",
                          "A_5 singular point where the tangent line is a component of C", flex, 6,
                          {opt({pt("P", cst(q(2, 3)), G), pt("Q", L1, OC), pt("QL", L1, OL)})},
                          ClosedForm{q(3, 4), lam(4, -6)}, {deg(4, 0, q(2, 3))}));
    v.back().L_in_C = 1;

    v.push_back(two_curve("A6", "A_6", "A_6 singular point", a6, 14,
                          {opt({pt("P123", cst(q(6, 7)), OL), pt("P4", cst(q(1, 2)), G), pt("Q", L1, OC)})},
                          ClosedForm{q(2, 5), lam(9, -14)}, {deg(4, q(3, 8), q(1, 2))}));
    v.back().lower_regime = below;

    v.push_back(two_curve("A7", "A_7", "A_7 singular point", a7, 8,
                          {opt({pt("P", cst(q(3, 4)), G), pt("Q1", L1, OC), pt("Q2", L1, OC),
                                pt("EL", cst(0), OL)})},
                          ClosedForm{q(3, 4), lam(5, -8)}, {deg(4, q(3, 8), q(5, 8))}));
    v.back().lower_regime = below;

    v.push_back(two_curve("D5", "D_5", "D_5 singular point", cusp, 8,
                          {opt({pt("P1", lam(q(2, 3), q(1, 3)), OC), pt("P2", cst(q(1, 2)), OL), pt("Q", L1, OC)})},
                          ClosedForm{q(3, 5), lam(5, -8)}, {deg(4, 0, q(5, 8))}));

    v.push_back(two_curve("D6", "D_6", "D_6 singular point", tangency, 5,
                          {opt({pt("P", lam(q(1, 2), q(1, 2)), OC), pt("Q", L1, OC), pt("QL", L1, OL)})},
                          ClosedForm{1, lam(3, -5)}, {deg(4, 0, q(3, 5))}));
    v.back().L_in_C = 1;

    v.push_back(two_curve("E6", "E_6", "E_6 singular point", e6, 12,
                          {opt({pt("P1", cst(q(3, 4)), G), pt("P23", cst(q(2, 3)), OL), pt("Q", L1, OC)})},
                          ClosedForm{q(3, 7), lam(7, -12)}, {deg(4, 0, q(7, 12))}));

    v.push_back(two_curve("E7", "E_7", "E_7 singular point", cusp, 9,
                          {opt({pt("P1", cst(q(2, 3)), G), pt("P2", lam(q(1, 2), q(1, 2)), OL), pt("Q", L1, OC)})},
                          ClosedForm{q(3, 5), lam(5, -9)}, {deg(4, 0, q(5, 9))}));
    v.back().L_in_C = 1;

    v.push_back(single("four_lines", "four concurrent lines", "ordinary quadruple point", 4,
                       {pt("Q1", L1, OC), pt("Q2", L1, OC), pt("Q3", L1, OC), pt("Q4", L1, OC)},
                       ClosedForm{q(3, 2), lam(2, -4)}, {deg(4, 0, q(1, 2))}, {"E"}));

    v.push_back(two_curve("double_conic", "double conic", "point of a double conic", tangency, 4,
                          {opt({pt("P", cst(q(1, 2)), G), pt("Q", L2x, OC), pt("EL", cst(0), OL)})},
                          ClosedForm{1, lam(3, -4)}, {deg(4, 0, q(3, 8))}));
    v.back().clause = MultiplicityClause{0, true};

    v.push_back(single("conic_double_chord_line_point", "conic + double chord, point of the line",
                       "smooth point of the reduced double chord of a conic", 2, {pt("Q", L2x, OC)},
                       ClosedForm{3, lam(1, -2)}, {deg(4, 0, q(1, 2))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("conic_double_chord_singular", "conic + double chord, singular point",
                       "intersection of a conic with a double chord", 3, {pt("Q1", L1, OC), pt("Q2", L2x, OC)},
                       ClosedForm{3, lam(1, -2)}, {deg(4, 0, q(1, 2))}, {"Q2", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(two_curve("conic_double_tangent_singular", "conic + double tangent, singular point",
                          "tangency point of a conic with a double tangent line", tangency, 6,
                          {opt({pt("P", cst(q(1, 2)), G), pt("Q1", L1, OC), pt("Q2", L2x, OL)})},
                          ClosedForm{3, lam(1, -2)}, {deg(4, 0, q(1, 2))}));
    v.back().extra = {ltilde(2)};
    v.back().minimizers = {"E", "Q2", "Ltilde"};
    v.back().L_in_C = 2;
    v.back().clause = line_mult(2);

    v.push_back(single("double_line_two_lines_general_singular", "double line + two lines, singular point",
                       "point where a double line meets one of two further lines in general position", 3,
                       {pt("Q1", L1, OC), pt("Q2", L2x, OC)}, ClosedForm{3, lam(1, -2)}, {deg(4, 0, q(1, 2))},
                       {"Q2", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("double_line_two_concurrent_singular", "double line + two lines, triple point",
                       "common point of a double line and two further lines through it", 4,
                       {pt("Q1", L1, OC), pt("Q2", L1, OC), pt("Q3", L2x, OC)}, ClosedForm{3, lam(1, -2)},
                       {deg(4, 0, q(1, 2))}, {"E", "Q3", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("two_double_lines_singular", "two double lines, singular point",
                       "intersection point of two double lines", 4, {pt("Q1", L2x, OC), pt("Q2", L2x, OC)},
                       ClosedForm{3, lam(1, -2)}, {deg(4, 0, q(1, 2))}, {"E", "Q1", "Q2", "Ltilde"}));
    v.back().extra = {ltilde(2)};
    v.back().clause = line_mult(2);

    v.push_back(single("triple_line_plus_line_triple_point", "triple line + line, point of the triple line",
                       "smooth point of the reduced triple line in a triple line plus a line", 3,
                       {pt("Q", L3x, OC)}, ClosedForm{3, lam(1, -3)}, {deg(4, 0, q(1, 3))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(3)};
    v.back().clause = line_mult(3);

    v.push_back(single("triple_line_plus_line_singular", "triple line + line, singular point",
                       "intersection of a triple line with another line", 4, {pt("Q1", L1, OC), pt("Q2", L3x, OC)},
                       ClosedForm{3, lam(1, -3)}, {deg(4, 0, q(1, 3))}, {"Q2", "Ltilde"}));
    v.back().extra = {ltilde(3)};
    v.back().clause = line_mult(3);

    v.push_back(single("quadruple_line", "quadruple line", "point of a quadruple line", 4, {pt("Q", L4x, OC)},
                       ClosedForm{3, lam(1, -4)}, {deg(4, 0, q(1, 4))}, {"Q", "Ltilde"}));
    v.back().extra = {ltilde(4)};
    v.back().clause = line_mult(4);

    // Entries whose data coincide with an earlier entry at the stated degree.
    v.push_back(alias("double_line_plus_line_smooth", "double line + line, smooth point of the line",
                      "smooth point of the simple line in a double line plus a line",
                      "line_component_smooth_point", {deg(3, 0, 1)}, line_mult(2)));
    v.push_back(alias("conic_double_chord_conic_point", "conic + double chord, point of the conic",
                      "smooth point on the conic of a conic plus a double chord", "smooth_quartic_tangent",
                      {deg(4, 0, q(3, 4))}, line_mult(2)));
    v.push_back(alias("conic_double_tangent_conic_point", "conic + double tangent, point of the conic",
                      "smooth point on the conic of a conic plus a double tangent line", "smooth_quartic_tangent",
                      {deg(4, 0, q(3, 4))}, line_mult(2)));
    v.push_back(alias("conic_double_tangent_line_point", "conic + double tangent, point of the line",
                      "smooth point on the double tangent line of a conic plus that line",
                      "conic_double_chord_line_point", {deg(4, 0, q(1, 2))}, line_mult(2)));
    v.push_back(alias("double_line_two_lines_general_smooth", "double line + two lines, smooth point",
                      "smooth point of a simple line, lines in general position", "line_component_smooth_point",
                      {deg(4, 0, q(3, 4))}, line_mult(2)));
    v.push_back(alias("double_line_two_lines_general_A1", "double line + two lines, A_1",
                      "intersection of the two simple lines, lines in general position", "A1",
                      {deg(4, 0, q(3, 4))}, line_mult(2)));
    v.push_back(alias("double_line_two_lines_general_double_point", "double line + two lines, point of the double line",
                      "smooth point of the double line, lines in general position",
                      "conic_double_chord_line_point", {deg(4, 0, q(1, 2))}, line_mult(2)));
    v.push_back(alias("double_line_two_concurrent_smooth", "double line + two concurrent lines, smooth point",
                      "smooth point of a simple line, all lines concurrent", "line_component_smooth_point",
                      {deg(4, 0, q(3, 4))}, line_mult(2)));
    v.push_back(alias("double_line_two_concurrent_double_point",
                      "double line + two concurrent lines, point of the double line",
                      "smooth point of the double line, all lines concurrent", "conic_double_chord_line_point",
                      {deg(4, 0, q(1, 2))}, line_mult(2)));
    v.push_back(alias("two_double_lines_double_point", "two double lines, smooth point",
                      "smooth point of one of two double lines", "conic_double_chord_line_point",
                      {deg(4, 0, q(1, 2))}, line_mult(2)));
    v.push_back(alias("triple_line_plus_line_smooth", "triple line + line, point of the simple line",
                      "smooth point of the simple line in a triple line plus a line",
                      "line_component_smooth_point", {deg(4, 0, q(3, 4))}, line_mult(3)));
    return v;
}

} // namespace

Catalog::Catalog(std::vector<CaseSpec> entries) : entries_(std::move(entries)) {}

const Catalog& Catalog::builtin() {
    static const Catalog catalog(builtin_entries());
    return catalog;
}

bool Catalog::contains(const std::string& id) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const CaseSpec& c) { return c.id == id; });
}

const CaseSpec& Catalog::raw(const std::string& id) const {
    for (const auto& c : entries_) {
        if (c.id == id) return c;
    }
    throw Error(Errc::UnknownCase, "no catalog entry named '" + id + "'");
}

CaseSpec& Catalog::raw(const std::string& id) {
    return const_cast<CaseSpec&>(static_cast<const Catalog&>(*this).raw(id));
}

CaseSpec Catalog::resolve(const std::string& id) const {
    const CaseSpec& entry = raw(id);
    if (entry.alias_of.empty()) return entry;
    CaseSpec base = resolve(entry.alias_of);
    base.id = entry.id;
    base.label = entry.label;
    base.description = entry.description;
    base.alias_of = entry.alias_of;
    base.degrees = entry.degrees;
    base.clause = entry.clause;
    return base;
}

std::optional<std::size_t> BuiltCase::index_L() const {
    if (spec.companion) return 1;
    return std::nullopt;
}

DivisorExpr BuiltCase::divisor(const Rational& lambda) const {
    DivisorExpr dv = DivisorExpr::zero(model);
    dv.ambient = Affine{a(lambda), 0};
    dv.coeffs[index_E()] = Affine{0, -1};
    return dv;
}

BuiltCase build_case(const Catalog& catalog, const std::string& id, int d) {
    CaseSpec spec = catalog.resolve(id);
    if (spec.degree(d) == nullptr) {
        std::string list;
        for (const auto& e : spec.degrees) list += (list.empty() ? "" : ",") + std::to_string(e.d);
        throw Error(Errc::DegreeNotAdmissible,
                    "case " + id + " is defined for degrees {" + list + "}, not " + std::to_string(d));
    }
    BuiltCase out;
    out.d = d;
    out.model.name = spec.id;
    out.model.gram = spec.gram();
    if (spec.companion) {
        out.model.curves = {"E", "L"};
        out.model.ambient_pairing = {0, spec.e_L};
        out.model.candidate = {false, true};
    } else {
        out.model.curves = {"E"};
        out.model.ambient_pairing = {0};
        out.model.candidate = {false};
    }
    out.model.ambient_square = 1;
    out.model.validate();
    out.spec = std::move(spec);
    return out;
}

std::vector<CaseSummary> list_cases(const Catalog& catalog) {
    std::vector<CaseSummary> out;
    for (const auto& c : catalog.entries()) {
        out.push_back(CaseSummary{c.id, c.label, c.alias_of, c.degrees, c.description});
    }
    return out;
}

std::vector<std::string> validate_case(const Catalog& catalog, const std::string& id) {
    std::vector<std::string> out;
    const CaseSpec& raw = catalog.raw(id);
    auto fail = [&](const std::string& msg) { out.push_back(id + ": " + msg); };

    if (!raw.alias_of.empty() && !catalog.contains(raw.alias_of)) {
        fail("alias target '" + raw.alias_of + "' does not exist");
        return out;
    }
    const CaseSpec c = catalog.resolve(id);

    if (c.degrees.empty()) fail("no admissible degree");
    for (const auto& e : c.degrees) {
        if (e.d < 1) fail("degree " + std::to_string(e.d) + " is not positive");
        if (sgn(e.validity.lo) < 0 || e.validity.lo > e.validity.hi) {
            fail("validity interval " + e.validity.to_string() + " is malformed");
        }
        if (e.d >= 1 && e.validity.hi > ratio(3, e.d)) {
            fail("validity interval " + e.validity.to_string() + " exceeds 3/d for d = " + std::to_string(e.d));
        }
    }

    const Matrix g = c.gram();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (g[i][j] != g[j][i]) fail("intersection table is not symmetric");
        }
    }
    if (sgn(c.E2) >= 0) fail("E^2 = " + to_string(c.E2) + " is not negative");

    if (c.companion) {
        Rational pull_E = c.EL + c.m_L * c.E2;
        if (sgn(pull_E) != 0) {
            fail("pullback identity L.E + m_L E^2 = 0 fails: got " + to_string(pull_E));
        }
        Rational pull_L = c.L2 + c.m_L * c.EL;
        if (pull_L != c.e_L * c.e_L) {
            fail("pullback identity L^2 + m_L L.E = e_L^2 fails: got " + to_string(pull_L));
        }
    }

    const Affine derived{1 + c.k_E, -c.m_C};
    if (!(derived == c.A_E)) {
        fail("A(λ) mismatch: got " + derived.as_poly().to_string() + ", expected " + c.A_E.as_poly().to_string());
    }

    // Adjunction on the exceptional curve: the different has degree -(K + E).E.
    const Affine adjunction{2 + (c.k_E + 1) * c.E2, -c.m_C * c.E2};
    if (c.options.empty()) fail("no point data");
    for (const auto& option : c.options) {
        Affine total;
        std::map<std::string, int> seen;
        int on_l = 0;
        for (const auto& p : option.points) {
            total = total + p.coeff;
            if (++seen[p.label] > 1) fail("point label " + p.label + " repeated");
            if (p.label == "generic" || p.label == "E") fail("point label " + p.label + " is reserved");
            if (p.location == Location::OnL) {
                ++on_l;
                if (!c.companion) fail("point " + p.label + " is on L but the model has no L");
            }
            for (const auto& e : c.degrees) {
                const Rational lo = p.coeff(e.validity.lo);
                const Rational hi = p.coeff(e.validity.hi);
                bool bad = sgn(lo) < 0 || sgn(hi) < 0 || lo >= 1 || hi > 1;
                if (bad) {
                    fail("different out of [0,1): " + p.label + " = " + p.coeff.as_poly().to_string() +
                         " on " + e.validity.to_string());
                }
            }
        }
        if (on_l > 1) fail("more than one point on L");
        if (!(total == adjunction)) {
            fail("different degree " + total.as_poly().to_string() + " does not match adjunction value " +
                 adjunction.as_poly().to_string() + " (option " + option.name + ")");
        }
    }

    for (const auto& x : c.extra) {
        if (sgn(x.e) <= 0 || sgn(x.l) <= 0) fail("extra bound " + x.label + " has non-positive data");
    }
    if (sgn(c.expected.scale) == 0) fail("expected closed form is zero");
    if (c.minimizers.empty()) fail("expected minimizer set is empty");
    if (c.companion != c.flags.s_EL.has_value()) fail("flag multiplier for the point on L is inconsistent");
    return out;
}

std::vector<std::string> validate_catalog(const Catalog& catalog) {
    std::vector<std::string> out;
    std::map<std::string, int> ids;
    for (const auto& c : catalog.entries()) {
        if (++ids[c.id] > 1) out.push_back(c.id + ": duplicate id");
        auto v = validate_case(catalog, c.id);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

namespace {

using Accessor = std::function<Rational*(CaseSpec&)>;

std::vector<std::pair<std::string, Accessor>> accessors(CaseSpec& c) {
    std::vector<std::pair<std::string, Accessor>> out;
    if (!c.alias_of.empty()) return out;
    out.emplace_back("E2", [](CaseSpec& s) { return &s.E2; });
    if (c.companion) {
        out.emplace_back("EL", [](CaseSpec& s) { return &s.EL; });
        out.emplace_back("L2", [](CaseSpec& s) { return &s.L2; });
        out.emplace_back("m_L", [](CaseSpec& s) { return &s.m_L; });
        out.emplace_back("e_L", [](CaseSpec& s) { return &s.e_L; });
    }
    out.emplace_back("k_E", [](CaseSpec& s) { return &s.k_E; });
    out.emplace_back("m_C", [](CaseSpec& s) { return &s.m_C; });
    out.emplace_back("A_E.c0", [](CaseSpec& s) { return &s.A_E.c0; });
    out.emplace_back("A_E.c1", [](CaseSpec& s) { return &s.A_E.c1; });
    for (std::size_t o = 0; o < c.options.size(); ++o) {
        for (std::size_t i = 0; i < c.options[o].points.size(); ++i) {
            const std::string base = "point[" + std::to_string(o) + "]." + c.options[o].points[i].label;
            out.emplace_back(base + ".c0", [o, i](CaseSpec& s) { return &s.options.at(o).points.at(i).coeff.c0; });
            out.emplace_back(base + ".c1", [o, i](CaseSpec& s) { return &s.options.at(o).points.at(i).coeff.c1; });
        }
    }
    for (std::size_t i = 0; i < c.extra.size(); ++i) {
        out.emplace_back("extra." + c.extra[i].label + ".e", [i](CaseSpec& s) { return &s.extra.at(i).e; });
        out.emplace_back("extra." + c.extra[i].label + ".l", [i](CaseSpec& s) { return &s.extra.at(i).l; });
    }
    out.emplace_back("expected.scale", [](CaseSpec& s) { return &s.expected.scale; });
    out.emplace_back("expected.c0", [](CaseSpec& s) { return &s.expected.num.c0; });
    out.emplace_back("expected.c1", [](CaseSpec& s) { return &s.expected.num.c1; });
    if (c.lower_regime) {
        out.emplace_back("lower.scale", [](CaseSpec& s) { return &s.lower_regime->bound.scale; });
    }
    out.emplace_back("flags.tau", [](CaseSpec& s) { return &s.flags.tau; });
    out.emplace_back("flags.s_E", [](CaseSpec& s) { return &s.flags.s_E; });
    out.emplace_back("flags.s_generic", [](CaseSpec& s) { return &s.flags.s_generic; });
    if (c.flags.s_EL) out.emplace_back("flags.s_EL", [](CaseSpec& s) { return &*s.flags.s_EL; });
    return out;
}

} // namespace

std::vector<FaultSite> fault_sites(const Catalog& catalog) {
    std::vector<FaultSite> out;
    for (const auto& entry : catalog.entries()) {
        CaseSpec copy = entry;
        for (auto& [field, get] : accessors(copy)) {
            out.push_back(FaultSite{entry.id, field, *get(copy)});
        }
    }
    return out;
}

void apply_fault(Catalog& catalog, const std::string& case_id, const std::string& field, const Rational& value) {
    CaseSpec& entry = catalog.raw(case_id);
    for (auto& [name, get] : accessors(entry)) {
        if (name == field) {
            *get(entry) = value;
            return;
        }
    }
    throw Error(Errc::InvalidInput, "case " + case_id + " has no numeric field '" + field + "'");
}

void apply_fault_spec(Catalog& catalog, const std::string& spec) {
    const auto eq = spec.find('=');
    const auto dot = spec.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
        throw Error(Errc::InvalidInput, "expected CASE.field=value, got '" + spec + "'");
    }
    apply_fault(catalog, spec.substr(0, dot), spec.substr(dot + 1, eq - dot - 1),
                parse_rational(spec.substr(eq + 1)));
}

} // namespace kdelta
