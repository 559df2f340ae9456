// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_EXACT_HPP
#define KDELTA_EXACT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdelta/error.hpp"

namespace kdelta {

using Rational = mpq_class;

// Parses "p/q", "p" or "-p/q" (whitespace not allowed). Throws Error(InvalidInput).
Rational parse_rational(std::string_view text);

// Canonical rendering: "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// p/q in lowest terms; throws Error(InvalidInput) when q = 0.
Rational ratio(long p, long q);

// True when r is in lowest terms with a positive denominator.
bool is_canonical(const Rational& r);

double to_double(const Rational& r);

/// Univariate polynomial with rational coefficients, index = degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    static Poly variable();

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    Poly derivative() const;
    Poly antiderivative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form in ascending powers, e.g. "3 - 3λ + λ^2".
    std::string to_string(std::string_view var = "λ") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) is 0.
Poly gcd(Poly a, Poly b);

/// Exact definite integral over [a, b]. Requires a <= b.
Rational integrate(const Poly& p, const Rational& a, const Rational& b);

/// Polynomial pieces over consecutive closed intervals.
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    const Rational& lo() const { return breakpoints_.front(); }
    const Rational& hi() const { return breakpoints_.back(); }

    /// Evaluates at x in [lo, hi]; interior breakpoints use the left piece.
    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    /// Index of the piece used for x under the left-piece convention.
    std::size_t piece_index(const Rational& x) const;

    /// True when adjacent pieces agree at every interior breakpoint.
    bool is_continuous() const;

private:
    std::vector<Rational> breakpoints_;
    std::vector<Poly> pieces_;
};

Rational integrate_piecewise(const PiecewisePoly& f);

/// Rational roots of p in [a, b], ascending, without repetition. Degree of p must be at most 2.
std::vector<Rational> roots_in_interval(const Poly& p, const Rational& a, const Rational& b);

/// Cauchy bound: every real root of a nonzero non-constant p has |x| <= bound.
Rational root_bound(const Poly& p);

/// Reduced rational function: coprime numerator and monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Poly::constant(1)) {}
    RationalFunction(Poly num, Poly den);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    /// Throws Error(InvalidInput) at a pole.
    Rational operator()(const Rational& x) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "λ") const;

private:
    Poly num_;
    Poly den_;
};

struct Sample {
    Rational x;
    Rational value;
};

/// Interpolates exact samples by a rational function with deg(num) <= num_deg and
/// deg(den) <= den_deg. Needs at least num_deg + den_deg + 2 samples with distinct x.
/// Throws Error(NoFit) or Error(Degenerate).
RationalFunction fit_rational_function(const std::vector<Sample>& samples, int num_deg,
                                       int den_deg);

using Matrix = std::vector<std::vector<Rational>>;

/// Basis of the right null space of m, computed by exact Gauss-Jordan elimination.
std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols);

/// Solves the square system m x = rhs; std::nullopt when m is singular.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs);

/// Sylvester test: all leading principal minors alternate in sign starting negative.
bool is_negative_definite(const Matrix& m);

Rational determinant(Matrix m);

} // namespace kdelta

#endif // KDELTA_EXACT_HPP
