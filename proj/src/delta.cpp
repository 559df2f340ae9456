// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/delta.hpp"

#include <algorithm>

#include "kdelta/surface.hpp"

namespace kdelta {

std::optional<bool> DeltaReport::matches_expected() const {
    if (!expected) return std::nullopt;
    return exact && upper == *expected;
}

void require_lambda(int d, const Rational& lambda) {
    if (d < 1) throw Error(Errc::InvalidInput, "degree must be positive");
    if (sgn(lambda) < 0 || lambda >= ratio(3, d)) {
        throw Error(Errc::InvalidInput, "λ = " + to_string(lambda) + " outside [0, 3/" + std::to_string(d) + ")");
    }
}

namespace {

struct FlagData {
    BuiltCase built;
    Rational lambda;
    Rational a;
    ZariskiPieces z;
    FlagIntegrands integrands;
};

FlagData compute_flag(const Catalog& catalog, const std::string& id, int d, const Rational& lambda) {
    require_lambda(d, lambda);
    FlagData f{build_case(catalog, id, d), lambda, 0, {}, {}};
    f.a = f.built.a(lambda);
    f.z = zariski_decompose_full(f.built.model, f.built.divisor(lambda));

    const std::size_t e = f.built.index_E();
    PiecewisePoly pe = positive_pairing(f.built.model, f.z, e);
    std::vector<Poly> gen;
    for (const auto& p : pe.pieces()) gen.push_back(p * p * Rational(1, 2));
    f.integrands.a = f.a;
    f.integrands.tau = f.z.tau();
    f.integrands.volume = volume_function(f.built.model, f.z);
    f.integrands.h_generic = PiecewisePoly(pe.breakpoints(), gen);
    if (auto l = f.built.index_L()) {
        PiecewisePoly nl = negative_coefficient(f.z, *l);
        const Rational le = f.built.model.gram[*l][e];
        std::vector<Poly> el;
        for (std::size_t i = 0; i < pe.size(); ++i) {
            el.push_back(pe.pieces()[i] * nl.pieces()[i] * le + gen[i]);
        }
        f.integrands.h_EL = PiecewisePoly(pe.breakpoints(), el);
    }
    return f;
}

const PointOption& option_at(const CaseSpec& spec, std::size_t option) {
    if (option >= spec.options.size()) {
        throw Error(Errc::InvalidInput, "case " + spec.id + " has " + std::to_string(spec.options.size()) +
                                            " point option(s), not index " + std::to_string(option));
    }
    return spec.options[option];
}

// Resolves a label to (coefficient, location).
PointSpec find_point(const CaseSpec& spec, const std::string& label, std::size_t option) {
    const PointOption& opt = option_at(spec, option);
    if (label == "generic") return PointSpec{"generic", Affine{}, Location::Generic};
    for (const auto& p : opt.points) {
        if (p.label == label) return p;
    }
    if (label == "EL" && spec.companion) {
        for (const auto& p : opt.points) {
            if (p.location == Location::OnL) return p;
        }
        return PointSpec{"EL", Affine{}, Location::OnL};
    }
    throw Error(Errc::UnknownPoint, "case " + spec.id + " has no point '" + label + "'");
}

Rational flag_s(const FlagData& f, Location loc) {
    const Rational scale = 2 / (f.a * f.a);
    if (loc == Location::OnL) {
        if (!f.integrands.h_EL) throw Error(Errc::UnknownPoint, "case has no curve L");
        Rational s = scale * integrate_piecewise(*f.integrands.h_EL);
        return s;
    }
    Rational s = scale * integrate_piecewise(f.integrands.h_generic);
    return s;
}

Rational divisor_s(const FlagData& f) {
    Rational s = integrate_piecewise(f.integrands.volume) / (f.a * f.a);
    return s;
}

std::vector<PointSpec> report_points(const CaseSpec& spec, std::size_t option) {
    std::vector<PointSpec> pts = option_at(spec, option).points;
    const bool has_on_l =
        std::any_of(pts.begin(), pts.end(), [](const PointSpec& p) { return p.location == Location::OnL; });
    if (spec.companion && !has_on_l) pts.push_back(PointSpec{"EL", Affine{}, Location::OnL});
    pts.push_back(PointSpec{"generic", Affine{}, Location::Generic});
    return pts;
}

} // namespace

FlagIntegrands flag_integrands(const Catalog& catalog, const std::string& id, int d, const Rational& lambda) {
    return compute_flag(catalog, id, d, lambda).integrands;
}

Rational s_divisor(const Catalog& catalog, const std::string& id, int d, const Rational& lambda) {
    return divisor_s(compute_flag(catalog, id, d, lambda));
}

Rational s_divisor(const std::string& id, int d, const Rational& lambda) {
    return s_divisor(Catalog::builtin(), id, d, lambda);
}

Rational a_divisor(const Catalog& catalog, const std::string& id, const Rational& lambda) {
    const CaseSpec spec = catalog.resolve(id);
    Rational a = 1 + spec.k_E - lambda * spec.m_C;
    return a;
}

Rational a_divisor(const std::string& id, const Rational& lambda) {
    return a_divisor(Catalog::builtin(), id, lambda);
}

Rational s_flag_point(const Catalog& catalog, const std::string& id, int d, const Rational& lambda,
                      const std::string& point, std::size_t option) {
    const CaseSpec spec = catalog.resolve(id);
    const PointSpec p = find_point(spec, point, option);
    return flag_s(compute_flag(catalog, id, d, lambda), p.location);
}

Rational s_flag_point(const std::string& id, int d, const Rational& lambda, const std::string& point,
                      std::size_t option) {
    return s_flag_point(Catalog::builtin(), id, d, lambda, point, option);
}

Rational a_flag_point(const Catalog& catalog, const std::string& id, const Rational& lambda,
                      const std::string& point, std::size_t option) {
    const CaseSpec spec = catalog.resolve(id);
    Rational a = 1 - find_point(spec, point, option).coeff(lambda);
    return a;
}

Rational a_flag_point(const std::string& id, const Rational& lambda, const std::string& point,
                      std::size_t option) {
    return a_flag_point(Catalog::builtin(), id, lambda, point, option);
}

CurveInvariants s_curve_on_plane(int d, const Rational& lambda, const Rational& e, const Rational& l) {
    if (sgn(e) <= 0) throw Error(Errc::InvalidInput, "curve degree must be positive");
    Rational s = (3 - d * lambda) / (3 * e);
    Rational a = 1 - l * lambda;
    return CurveInvariants{s, a};
}

DeltaReport delta_point(const Catalog& catalog, const std::string& id, int d, const Rational& lambda,
                        std::size_t option) {
    const FlagData f = compute_flag(catalog, id, d, lambda);
    const CaseSpec& spec = f.built.spec;

    DeltaReport r;
    r.case_id = id;
    r.d = d;
    r.lambda = lambda;
    r.option = option;
    r.option_name = option_at(spec, option).name;
    r.A_E = 1 + spec.k_E - lambda * spec.m_C;
    r.S_E = divisor_s(f);
    r.tau = f.z.tau();
    if (sgn(r.S_E) <= 0) throw Error(Errc::Degenerate, "S of the exceptional curve vanishes");
    r.ratio_E = r.A_E / r.S_E;

    const Rational s_generic = flag_s(f, Location::Generic);
    std::optional<Rational> s_el;
    if (spec.companion) s_el = flag_s(f, Location::OnL);
    for (const auto& p : report_points(spec, option)) {
        PointRow row{p.label, p.location, 1 - p.coeff(lambda), 0, 0};
        row.S = p.location == Location::OnL ? *s_el : s_generic;
        row.ratio = row.A / row.S;
        r.points.push_back(std::move(row));
    }
    for (const auto& x : spec.extra) {
        CurveInvariants c = s_curve_on_plane(d, lambda, x.e, x.l);
        Rational ratio = c.A / c.S;
        r.bounds.push_back(BoundRow{x.label, x.e, x.l, c.A, c.S, ratio});
    }

    r.lower = r.ratio_E;
    for (const auto& p : r.points) r.lower = std::min(r.lower, p.ratio);
    r.upper = r.ratio_E;
    for (const auto& b : r.bounds) r.upper = std::min(r.upper, b.ratio);
    r.exact = r.lower == r.upper;

    const Rational& v = r.value();
    if (r.ratio_E == v) r.minimizers.push_back("E");
    for (const auto& p : r.points) {
        if (p.ratio == v) r.minimizers.push_back(p.label);
    }
    for (const auto& b : r.bounds) {
        if (b.ratio == v) r.minimizers.push_back(b.label);
    }

    const DegreeEntry* entry = spec.degree(d);
    r.validity_ok = entry != nullptr && entry->validity.contains(lambda);
    if (r.validity_ok) r.expected = spec.expected(d, lambda);
    return r;
}

DeltaReport delta_point(const std::string& id, int d, const Rational& lambda, std::size_t option) {
    return delta_point(Catalog::builtin(), id, d, lambda, option);
}

std::vector<Rational> interior_samples(const Interval& interval, std::size_t n) {
    std::vector<Rational> out;
    const Rational width = interval.hi - interval.lo;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational x = interval.lo + width * static_cast<long>(k) / static_cast<long>(n + 1);
        out.push_back(x);
    }
    return out;
}

RationalFunction delta_closed_form(const Catalog& catalog, const std::string& id, int d, std::size_t option,
                                   int num_deg, int den_deg) {
    const CaseSpec spec = catalog.resolve(id);
    const DegreeEntry* entry = spec.degree(d);
    if (entry == nullptr) {
        throw Error(Errc::DegreeNotAdmissible, "case " + id + " is not defined in degree " + std::to_string(d));
    }
    const Interval domain = entry->validity;

    const std::size_t fit_n = std::max<std::size_t>(6, static_cast<std::size_t>(num_deg + den_deg + 2));
    const std::vector<Rational> xs = interior_samples(domain, fit_n + 3);
    std::vector<Sample> fit;
    std::vector<Sample> check;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        DeltaReport r = delta_point(catalog, id, d, xs[i], option);
        if (!r.exact) {
            throw Error(Errc::NotExactOnInterval,
                        "case " + id + " gives only a lower bound at λ = " + to_string(xs[i]));
        }
        // Interleave the cross-validation samples with the fitting samples.
        if (i % 3 == 1 && check.size() < 3) {
            check.push_back(Sample{xs[i], r.upper});
        } else {
            fit.push_back(Sample{xs[i], r.upper});
        }
    }
    RationalFunction f = fit_rational_function(fit, num_deg, den_deg);
    for (const auto& s : check) {
        if (f(s.x) != s.value) {
            throw Error(Errc::NoFit, "fitted form " + f.to_string() + " misses the sample at λ = " + to_string(s.x));
        }
    }
    return f;
}

RationalFunction delta_closed_form(const std::string& id, int d, std::size_t option) {
    return delta_closed_form(Catalog::builtin(), id, d, option);
}

} // namespace kdelta
