// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_DELTA_HPP
#define KDELTA_DELTA_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/exact.hpp"

namespace kdelta {

/// One point of the exceptional curve in the flag estimate.
struct PointRow {
    std::string label;
    Location location = Location::Generic;
    Rational A;
    Rational S;
    Rational ratio;
};

/// A curve on the plane used as an additional upper bound.
struct BoundRow {
    std::string label;
    Rational e;
    Rational l;
    Rational A;
    Rational S;
    Rational ratio;
};

struct DeltaReport {
    std::string case_id;
    int d = 0;
    Rational lambda;
    std::size_t option = 0;
    std::string option_name;

    Rational A_E;
    Rational S_E;
    Rational tau;
    Rational ratio_E;
    std::vector<PointRow> points;
    std::vector<BoundRow> bounds;

    Rational lower;
    Rational upper;
    bool exact = false;
    /// Every label ("E", a point label or an extra curve label) attaining value().
    std::vector<std::string> minimizers;
    bool validity_ok = false;
    /// Expected value from the catalog when λ lies in the validity interval.
    std::optional<Rational> expected;

    /// The exact value when known, otherwise the lower bound.
    const Rational& value() const { return exact ? upper : lower; }
    /// True when there is an expected value and the computed one is exact and equal to it.
    std::optional<bool> matches_expected() const;
};

/// Checks 0 <= λ < 3/d; throws Error(InvalidInput).
void require_lambda(int d, const Rational& lambda);

/// S of the exceptional curve: (1/a^2) times the integral of the volume up to τ.
Rational s_divisor(const Catalog& catalog, const std::string& id, int d, const Rational& lambda);
Rational s_divisor(const std::string& id, int d, const Rational& lambda);

/// Log discrepancy 1 + k_E - λ m_C of the exceptional curve.
Rational a_divisor(const Catalog& catalog, const std::string& id, const Rational& lambda);
Rational a_divisor(const std::string& id, const Rational& lambda);

/// S(W; O) of the flag through the named point. Labels: "generic", "EL", or a declared point.
Rational s_flag_point(const Catalog& catalog, const std::string& id, int d, const Rational& lambda,
                      const std::string& point, std::size_t option = 0);
Rational s_flag_point(const std::string& id, int d, const Rational& lambda, const std::string& point,
                      std::size_t option = 0);

/// 1 minus the different coefficient at the named point.
Rational a_flag_point(const Catalog& catalog, const std::string& id, const Rational& lambda,
                      const std::string& point, std::size_t option = 0);
Rational a_flag_point(const std::string& id, const Rational& lambda, const std::string& point,
                      std::size_t option = 0);

/// Integrands of the flag computation as functions of v on [0, τ].
struct FlagIntegrands {
    Rational a;
    Rational tau;
    PiecewisePoly volume;
    /// (P.E)^2 / 2.
    PiecewisePoly h_generic;
    /// h at the point where E meets L; absent without a companion curve.
    std::optional<PiecewisePoly> h_EL;
};

FlagIntegrands flag_integrands(const Catalog& catalog, const std::string& id, int d, const Rational& lambda);

DeltaReport delta_point(const Catalog& catalog, const std::string& id, int d, const Rational& lambda,
                        std::size_t option = 0);
DeltaReport delta_point(const std::string& id, int d, const Rational& lambda, std::size_t option = 0);

struct CurveInvariants {
    Rational S;
    Rational A;
};

/// S and log discrepancy of a plane curve of degree e appearing with multiplicity l in C.
CurveInvariants s_curve_on_plane(int d, const Rational& lambda, const Rational& e, const Rational& l);

/// Rational λ values strictly inside [lo, hi] at lo + (hi - lo) k / (n + 1), k = 1..n.
std::vector<Rational> interior_samples(const Interval& interval, std::size_t n);

/// Fits δ on the validity interval from exact samples and cross-validates it.
/// Throws NoFit or NotExactOnInterval.
RationalFunction delta_closed_form(const Catalog& catalog, const std::string& id, int d,
                                   std::size_t option = 0, int num_deg = 2, int den_deg = 2);
RationalFunction delta_closed_form(const std::string& id, int d, std::size_t option = 0);

} // namespace kdelta

#endif // KDELTA_DELTA_HPP
