// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_SURFACE_HPP
#define KDELTA_SURFACE_HPP

#include <string>
#include <vector>

#include "kdelta/exact.hpp"

namespace kdelta {

/// c0 + c1 * t for a single parameter t (the flag parameter v, or λ in the catalog).
struct Affine {
    Rational c0 = 0;
    Rational c1 = 0;

    Rational operator()(const Rational& t) const { return c0 + c1 * t; }
    Poly as_poly() const { return Poly({c0, c1}); }
    friend bool operator==(const Affine& a, const Affine& b) { return a.c0 == b.c0 && a.c1 == b.c1; }
    friend Affine operator+(const Affine& a, const Affine& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
    friend Affine operator-(const Affine& a, const Affine& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
    friend Affine operator*(const Rational& s, const Affine& a) { return {s * a.c0, s * a.c1}; }
};

/// Finite lattice of curve classes on a blown-up plane.
///
/// `ambient_pairing[i]` is the intersection of the pulled-back hyperplane class with curve i,
/// and `ambient_square` is the self-intersection of that class.
struct SurfaceModel {
    std::string name;
    std::vector<std::string> curves;
    Matrix gram;
    std::vector<Rational> ambient_pairing;
    Rational ambient_square = 1;
    /// Curves allowed to enter the negative part of a Zariski decomposition.
    std::vector<bool> candidate;

    std::size_t size() const { return curves.size(); }
    /// Index of a named curve; throws Error(InvalidInput) when absent.
    std::size_t index(const std::string& curve) const;
    /// Checks shape and symmetry; throws Error(InvalidInput).
    void validate() const;
};

/// amb * (pulled-back hyperplane class) + sum_i coeff[i] * curve_i, all coefficients affine in v.
struct DivisorExpr {
    std::string model;
    Affine ambient;
    std::vector<Affine> coeffs;

    static DivisorExpr zero(const SurfaceModel& m);
    static DivisorExpr curve(const SurfaceModel& m, std::size_t i);

    DivisorExpr evaluated(const Rational& v) const;
    friend DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b);
    friend DivisorExpr operator-(DivisorExpr a, const DivisorExpr& b);
    friend DivisorExpr operator*(const Rational& s, DivisorExpr a);
};

/// Intersection number of two families as a polynomial in v (degree <= 2).
Poly pair(const SurfaceModel& model, const DivisorExpr& d1, const DivisorExpr& d2);

struct ZariskiPiece {
    Rational lo;
    Rational hi;
    DivisorExpr positive;
    DivisorExpr negative;
    std::vector<std::size_t> support;
};

struct ZariskiPieces {
    std::vector<ZariskiPiece> pieces;

    std::vector<Rational> breakpoints() const;
    const Rational& tau() const { return pieces.back().hi; }
    /// Piece containing v under the left-piece convention.
    const ZariskiPiece& at(const Rational& v) const;
};

/// Support-growth decomposition of D(v) on [0, v_max]; v_max must not exceed the
/// pseudo-effective threshold. Throws NotPseudoEffective, IndefiniteSupport,
/// IrrationalBreakpoint, Unbounded or InvalidInput.
ZariskiPieces zariski_decompose(const SurfaceModel& model, const DivisorExpr& d,
                                const Rational& v_max);

/// Runs the decomposition until the volume reaches zero and returns the full result.
ZariskiPieces zariski_decompose_full(const SurfaceModel& model, const DivisorExpr& d);

Rational pseudo_effective_threshold(const SurfaceModel& model, const DivisorExpr& d);

/// v -> P(v)^2 over the decomposition.
PiecewisePoly volume_function(const SurfaceModel& model, const ZariskiPieces& z);

/// v -> P(v) . curve over the decomposition.
PiecewisePoly positive_pairing(const SurfaceModel& model, const ZariskiPieces& z,
                               std::size_t curve);

/// v -> coefficient of curve in N(v) over the decomposition.
PiecewisePoly negative_coefficient(const ZariskiPieces& z, std::size_t curve);

} // namespace kdelta

#endif // KDELTA_SURFACE_HPP
