// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/surface.hpp"

#include <algorithm>
#include <optional>

namespace kdelta {

std::size_t SurfaceModel::index(const std::string& curve) const {
    auto it = std::find(curves.begin(), curves.end(), curve);
    if (it == curves.end()) throw Error(Errc::InvalidInput, "model " + name + " has no curve " + curve);
    return static_cast<std::size_t>(it - curves.begin());
}

void SurfaceModel::validate() const {
    const std::size_t n = curves.size();
    if (gram.size() != n || ambient_pairing.size() != n || candidate.size() != n) {
        throw Error(Errc::InvalidInput, "model " + name + " has inconsistent dimensions");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw Error(Errc::InvalidInput, "model " + name + " gram is not square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram[i][j] != gram[j][i]) {
                throw Error(Errc::InvalidInput, "model " + name + " gram is not symmetric");
            }
        }
    }
}

DivisorExpr DivisorExpr::zero(const SurfaceModel& m) {
    return DivisorExpr{m.name, Affine{}, std::vector<Affine>(m.size())};
}

DivisorExpr DivisorExpr::curve(const SurfaceModel& m, std::size_t i) {
    DivisorExpr d = zero(m);
    d.coeffs.at(i) = Affine{1, 0};
    return d;
}

DivisorExpr DivisorExpr::evaluated(const Rational& v) const {
    DivisorExpr d = *this;
    d.ambient = Affine{ambient(v), 0};
    for (auto& c : d.coeffs) c = Affine{c(v), 0};
    return d;
}

namespace {

void require_same(const DivisorExpr& a, const DivisorExpr& b) {
    if (a.model != b.model || a.coeffs.size() != b.coeffs.size()) {
        throw Error(Errc::ModelMismatch, "divisors live on models '" + a.model + "' and '" + b.model + "'");
    }
}

} // namespace

DivisorExpr operator+(DivisorExpr a, const DivisorExpr& b) {
    require_same(a, b);
    a.ambient = a.ambient + b.ambient;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return a;
}

DivisorExpr operator-(DivisorExpr a, const DivisorExpr& b) {
    require_same(a, b);
    a.ambient = a.ambient - b.ambient;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] = a.coeffs[i] - b.coeffs[i];
    return a;
}

DivisorExpr operator*(const Rational& s, DivisorExpr a) {
    a.ambient = s * a.ambient;
    for (auto& c : a.coeffs) c = s * c;
    return a;
}

Poly pair(const SurfaceModel& model, const DivisorExpr& d1, const DivisorExpr& d2) {
    require_same(d1, d2);
    if (d1.model != model.name || d1.coeffs.size() != model.size()) {
        throw Error(Errc::ModelMismatch, "divisor on '" + d1.model + "' paired on model '" + model.name + "'");
    }
    const Poly a1 = d1.ambient.as_poly();
    const Poly a2 = d2.ambient.as_poly();
    Poly total = a1 * a2 * model.ambient_square;
    for (std::size_t i = 0; i < model.size(); ++i) {
        const Poly c1 = d1.coeffs[i].as_poly();
        const Poly c2 = d2.coeffs[i].as_poly();
        total += (a1 * c2 + a2 * c1) * model.ambient_pairing[i];
        for (std::size_t j = 0; j < model.size(); ++j) {
            total += c1 * d2.coeffs[j].as_poly() * model.gram[i][j];
        }
    }
    return total;
}

std::vector<Rational> ZariskiPieces::breakpoints() const {
    std::vector<Rational> b;
    b.reserve(pieces.size() + 1);
    b.push_back(pieces.front().lo);
    for (const auto& p : pieces) b.push_back(p.hi);
    return b;
}

const ZariskiPiece& ZariskiPieces::at(const Rational& v) const {
    for (const auto& p : pieces) {
        if (v <= p.hi) return p;
    }
    return pieces.back();
}

namespace {

std::vector<Rational> exact_roots(const Poly& p, const Rational& a, const Rational& b) {
    try {
        return roots_in_interval(p, a, b);
    } catch (const Error& e) {
        if (e.code() == Errc::IrrationalRoot) throw Error(Errc::IrrationalBreakpoint, e.what());
        throw;
    }
}

// Negative part for a fixed support: solves (P . C_i) = 0 for every C_i in the support.
DivisorExpr negative_part(const SurfaceModel& model, const DivisorExpr& d,
                          const std::vector<std::size_t>& support) {
    DivisorExpr n = DivisorExpr::zero(model);
    if (support.empty()) return n;
    const std::size_t k = support.size();
    Matrix g(k, std::vector<Rational>(k));
    std::vector<Rational> rhs0(k), rhs1(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) g[a][b] = model.gram[support[a]][support[b]];
        Poly p = pair(model, d, DivisorExpr::curve(model, support[a]));
        rhs0[a] = p.coeff(0);
        rhs1[a] = p.coeff(1);
    }
    if (!is_negative_definite(g)) {
        std::string names;
        for (auto i : support) names += (names.empty() ? "" : ",") + model.curves[i];
        throw Error(Errc::IndefiniteSupport, "support {" + names + "} on model " + model.name +
                                                 " is not negative definite");
    }
    auto c0 = solve(g, rhs0);
    auto c1 = solve(g, rhs1);
    for (std::size_t a = 0; a < k; ++a) n.coeffs[support[a]] = Affine{(*c0)[a], (*c1)[a]};
    return n;
}

} // namespace

ZariskiPieces zariski_decompose_full(const SurfaceModel& model, const DivisorExpr& d) {
    model.validate();
    if (d.model != model.name || d.coeffs.size() != model.size()) {
        throw Error(Errc::ModelMismatch, "divisor on '" + d.model + "' decomposed on '" + model.name + "'");
    }
    for (std::size_t i = 0; i < model.size(); ++i) {
        Rational p0 = pair(model, d, DivisorExpr::curve(model, i))(0);
        if (sgn(p0) < 0) {
            throw Error(Errc::NotPseudoEffective, "D(0) pairs to " + to_string(p0) + " with " +
                                                      model.curves[i] + " on model " + model.name);
        }
    }

    ZariskiPieces out;
    std::vector<std::size_t> support;
    Rational v = 0;
    for (std::size_t iter = 0; iter <= model.size() + 1; ++iter) {
        DivisorExpr n = negative_part(model, d, support);
        DivisorExpr p = d - n;
        Poly vol = pair(model, p, p);

        std::optional<Rational> crossing;
        std::vector<std::size_t> entering;
        for (std::size_t j = 0; j < model.size(); ++j) {
            if (!model.candidate[j] || std::find(support.begin(), support.end(), j) != support.end()) {
                continue;
            }
            Poly f = pair(model, p, DivisorExpr::curve(model, j));
            if (f.degree() < 1 || sgn(f.leading()) >= 0) continue;
            Rational r = -f.coeff(0) / f.coeff(1);
            if (r < v) {
                throw Error(Errc::NotPseudoEffective, "P(v) already negative on " + model.curves[j] +
                                                          " at v = " + to_string(v));
            }
            if (!crossing || r < *crossing) {
                crossing = r;
                entering.assign(1, j);
            } else if (r == *crossing) {
                entering.push_back(j);
            }
        }

        if (crossing && *crossing == v) {
            support.insert(support.end(), entering.begin(), entering.end());
            std::sort(support.begin(), support.end());
            continue;
        }

        std::optional<Rational> vol_root;
        if (vol.degree() >= 1) {
            Rational hi = v + root_bound(vol);
            if (crossing) hi = *crossing;
            for (const auto& r : exact_roots(vol, v, hi)) {
                if (r > v) {
                    vol_root = r;
                    break;
                }
            }
        }

        if (vol_root && (!crossing || *vol_root <= *crossing)) {
            out.pieces.push_back(ZariskiPiece{v, *vol_root, p, n, support});
            return out;
        }
        if (!crossing) {
            throw Error(Errc::Unbounded, "volume never reaches zero on model " + model.name);
        }
        out.pieces.push_back(ZariskiPiece{v, *crossing, p, n, support});
        support.insert(support.end(), entering.begin(), entering.end());
        std::sort(support.begin(), support.end());
        v = *crossing;
    }
    throw Error(Errc::Unbounded, "support growth did not terminate on model " + model.name);
}

ZariskiPieces zariski_decompose(const SurfaceModel& model, const DivisorExpr& d,
                                const Rational& v_max) {
    ZariskiPieces full = zariski_decompose_full(model, d);
    if (v_max > full.tau()) {
        throw Error(Errc::NotPseudoEffective, "v_max " + to_string(v_max) +
                                            " exceeds the pseudo-effective threshold " +
                                            to_string(full.tau()));
    }
    if (sgn(v_max) <= 0) throw Error(Errc::InvalidInput, "v_max must be positive");
    ZariskiPieces out;
    for (const auto& piece : full.pieces) {
        if (piece.lo >= v_max) break;
        ZariskiPiece copy = piece;
        if (copy.hi > v_max) copy.hi = v_max;
        out.pieces.push_back(std::move(copy));
    }
    return out;
}

Rational pseudo_effective_threshold(const SurfaceModel& model, const DivisorExpr& d) {
    return zariski_decompose_full(model, d).tau();
}

PiecewisePoly volume_function(const SurfaceModel& model, const ZariskiPieces& z) {
    std::vector<Poly> pieces;
    for (const auto& p : z.pieces) pieces.push_back(pair(model, p.positive, p.positive));
    return PiecewisePoly(z.breakpoints(), std::move(pieces));
}

PiecewisePoly positive_pairing(const SurfaceModel& model, const ZariskiPieces& z, std::size_t curve) {
    std::vector<Poly> pieces;
    for (const auto& p : z.pieces) pieces.push_back(pair(model, p.positive, DivisorExpr::curve(model, curve)));
    return PiecewisePoly(z.breakpoints(), std::move(pieces));
}

PiecewisePoly negative_coefficient(const ZariskiPieces& z, std::size_t curve) {
    std::vector<Poly> pieces;
    for (const auto& p : z.pieces) pieces.push_back(p.negative.coeffs.at(curve).as_poly());
    return PiecewisePoly(z.breakpoints(), std::move(pieces));
}

} // namespace kdelta
