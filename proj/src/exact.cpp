// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/exact.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

namespace kdelta {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::IrrationalRoot: return "IrrationalRoot";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::NoFit: return "NoFit";
    case Errc::Degenerate: return "Degenerate";
    case Errc::ModelMismatch: return "ModelMismatch";
    case Errc::NotPseudoEffective: return "NotPseudoEffective";
    case Errc::IndefiniteSupport: return "IndefiniteSupport";
    case Errc::IrrationalBreakpoint: return "IrrationalBreakpoint";
    case Errc::Unbounded: return "Unbounded";
    case Errc::UnknownCase: return "UnknownCase";
    case Errc::DegreeNotAdmissible: return "DegreeNotAdmissible";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::NotExactOnInterval: return "NotExactOnInterval";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
    static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
    std::string s(text);
    if (!std::regex_match(s, pattern)) {
        throw Error(Errc::InvalidInput, "not an exact rational \"p/q\": '" + s + "'");
    }
    auto slash = s.find('/');
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(1);
    if (slash != std::string::npos) {
        den = mpz_class(s.substr(slash + 1), 10);
        if (den == 0) {
            throw Error(Errc::InvalidInput, "zero denominator in '" + s + "'");
        }
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(long p, long q) {
    if (q == 0) throw Error(Errc::InvalidInput, "zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

bool is_canonical(const Rational& r) {
    if (sgn(r.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

double to_double(const Rational& r) { return r.get_d(); }

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::variable() { return monomial(1, 1); }

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(v));
}

Poly Poly::antiderivative() const {
    if (is_zero()) return Poly();
    std::vector<Rational> v(coeffs_.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    }
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    for (auto& c : coeffs_) c.canonicalize();
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    for (auto& c : coeffs_) c.canonicalize();
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    for (auto& c : v) c.canonicalize();
    coeffs_ = std::move(v);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) {
        c *= s;
        c.canonicalize();
    }
    trim();
    return *this;
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (mag == 1);
        std::string m = kdelta::to_string(mag);
        if (k == 0) {
            out << m;
            continue;
        }
        if (!unit) {
            if (m.find('/') != std::string::npos) out << "(" << m << ")";
            else out << m;
        }
        out << var;
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::InvalidInput, "polynomial division by zero");
    Poly q;
    Poly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly t = Poly::monomial(r.leading() / b.leading(), r.degree() - b.degree());
        q += t;
        r -= t * b;
    }
    return {q, r};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Rational integrate(const Poly& p, const Rational& a, const Rational& b) {
    if (a > b) throw Error(Errc::InvalidInput, "integration bounds out of order");
    Poly F = p.antiderivative();
    Rational r = F(b) - F(a);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// PiecewisePoly

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size()) {
        throw Error(Errc::InvalidInput, "piecewise polynomial needs k+1 breakpoints for k pieces");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1])) {
            throw Error(Errc::InvalidInput, "breakpoints must be strictly increasing");
        }
    }
}

std::size_t PiecewisePoly::piece_index(const Rational& x) const {
    if (x < lo() || x > hi()) {
        throw Error(Errc::InvalidInput, "evaluation point " + kdelta::to_string(x) +
                                            " outside [" + kdelta::to_string(lo()) + ", " +
                                            kdelta::to_string(hi()) + "]");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (x <= breakpoints_[i + 1]) return i;
    }
    return pieces_.size() - 1;
}

Rational PiecewisePoly::operator()(const Rational& x) const { return pieces_[piece_index(x)](x); }

double PiecewisePoly::eval(double x) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (x <= breakpoints_[i + 1].get_d()) return pieces_[i].eval(x);
    }
    return pieces_.back().eval(x);
}

bool PiecewisePoly::is_continuous() const {
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i - 1](breakpoints_[i]) != pieces_[i](breakpoints_[i])) return false;
    }
    return true;
}

Rational integrate_piecewise(const PiecewisePoly& f) {
    Rational total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        total += integrate(f.pieces()[i], f.breakpoints()[i], f.breakpoints()[i + 1]);
    }
    total.canonicalize();
    return total;
}

// ---------------------------------------------------------------------------
// Roots

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const mpz_class& n = r.get_num();
    const mpz_class& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational s(sn, sd);
    s.canonicalize();
    return s;
}

// Decides whether an irrational quadratic root lies in [a, b] using only exact sign tests.
bool irrational_root_in(const Poly& p, const Rational& a, const Rational& b) {
    int sa = sgn(p(a));
    int sb = sgn(p(b));
    if (sa * sb < 0) return true;
    Rational vertex = -p.coeff(1) / (2 * p.coeff(2));
    if (vertex <= a || vertex >= b) return false;
    return sgn(p(vertex)) * sa < 0;
}

} // namespace

std::vector<Rational> roots_in_interval(const Poly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw Error(Errc::InvalidInput, "the zero polynomial has no isolated roots");
    if (p.degree() > 2) {
        throw Error(Errc::UnsupportedDegree,
                    "root finding supports degree <= 2, got " + std::to_string(p.degree()));
    }
    std::vector<Rational> roots;
    auto keep = [&](Rational r) {
        r.canonicalize();
        if (r >= a && r <= b) roots.push_back(r);
    };
    if (p.degree() == 1) {
        keep(-p.coeff(0) / p.coeff(1));
    } else if (p.degree() == 2) {
        Rational A = p.coeff(2), B = p.coeff(1), C = p.coeff(0);
        Rational disc = B * B - 4 * A * C;
        disc.canonicalize();
        if (sgn(disc) >= 0) {
            auto s = rational_sqrt(disc);
            if (!s) {
                if (irrational_root_in(p, a, b)) {
                    throw Error(Errc::IrrationalRoot,
                                "quadratic " + p.to_string("v") + " has an irrational root in [" +
                                    to_string(a) + ", " + to_string(b) + "]");
                }
            } else {
                keep((-B - *s) / (2 * A));
                keep((-B + *s) / (2 * A));
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

Rational root_bound(const Poly& p) {
    if (p.degree() < 1) return 0;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = abs(p.coeff(i) / p.leading());
        if (q > m) m = q;
    }
    Rational r = 1 + m;
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw Error(Errc::InvalidInput, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num, den);
    num = divmod(num, g).quotient;
    den = divmod(den, g).quotient;
    Rational lc = den.leading();
    num_ = num * (Rational(1) / lc);
    den_ = den * (Rational(1) / lc);
}

Rational RationalFunction::operator()(const Rational& x) const {
    Rational d = den_(x);
    if (sgn(d) == 0) throw Error(Errc::InvalidInput, "pole at " + kdelta::to_string(x));
    Rational r = num_(x) / d;
    r.canonicalize();
    return r;
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (den_.degree() == 0) {
        return num_.degree() <= 0 ? num_.to_string(var) : "(" + num_.to_string(var) + ")";
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<std::vector<Rational>> nullspace(Matrix m, std::size_t cols) {
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t col = 0; col < cols; ++col) {
            if (pivot_of_col[col] >= 0) {
                v[col] = -m[static_cast<std::size_t>(pivot_of_col[col])][free];
                v[col].canonicalize();
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(m[sel][col]) == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(m[sel], m[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = m[i][n] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

Rational determinant(Matrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && sgn(m[sel][col]) == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    det.canonicalize();
    return det;
}

bool is_negative_definite(const Matrix& m) {
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Matrix minor(k, std::vector<Rational>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[i][j];
        int expected = (k % 2 == 1) ? -1 : 1;
        if (sgn(determinant(minor)) != expected) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Rational-function reconstruction

RationalFunction fit_rational_function(const std::vector<Sample>& samples, int num_deg,
                                       int den_deg) {
    if (num_deg < 0 || den_deg < 0) {
        throw Error(Errc::InvalidInput, "degree bounds must be non-negative");
    }
    const std::size_t needed = static_cast<std::size_t>(num_deg + den_deg + 2);
    if (samples.size() < needed) {
        throw Error(Errc::InvalidInput, "need at least " + std::to_string(needed) +
                                            " samples, got " + std::to_string(samples.size()));
    }
    for (std::size_t i = 0; i < samples.size(); ++i)
        for (std::size_t j = i + 1; j < samples.size(); ++j)
            if (samples[i].x == samples[j].x)
                throw Error(Errc::InvalidInput, "sample abscissae must be distinct");

    const std::size_t np = static_cast<std::size_t>(num_deg) + 1;
    const std::size_t nq = static_cast<std::size_t>(den_deg) + 1;
    Matrix rows;
    rows.reserve(samples.size());
    for (const auto& s : samples) {
        std::vector<Rational> row(np + nq);
        Rational pw = 1;
        for (std::size_t j = 0; j < std::max(np, nq); ++j) {
            if (j < np) row[j] = pw;
            if (j < nq) row[np + j] = -s.value * pw;
            pw *= s.x;
        }
        rows.push_back(std::move(row));
    }
    auto basis = nullspace(rows, np + nq);
    if (basis.empty()) {
        throw Error(Errc::NoFit, "no rational function with numerator degree <= " +
                                     std::to_string(num_deg) + " and denominator degree <= " +
                                     std::to_string(den_deg) + " fits the samples");
    }
    const auto& v = basis.front();
    Poly p(std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(np)));
    Poly q(std::vector<Rational>(v.begin() + static_cast<long>(np), v.end()));
    if (q.is_zero()) throw Error(Errc::Degenerate, "only the zero denominator solves the system");
    RationalFunction f(p, q);
    for (const auto& s : samples) {
        if (sgn(f.denominator()(s.x)) == 0 || f(s.x) != s.value) {
            throw Error(Errc::Degenerate,
                        "every solution vanishes in the denominator at x = " + to_string(s.x));
        }
    }
    return f;
}

} // namespace kdelta
