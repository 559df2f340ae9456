// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/threefold.hpp"

#include <algorithm>

#include "kdelta/delta.hpp"

namespace kdelta {

namespace {

void require_p3(int s, const Rational& lambda) {
    if (s < 1) throw Error(Errc::InvalidInput, "surface degree must be positive");
    if (sgn(lambda) < 0 || lambda * s >= 4) {
        throw Error(Errc::InvalidInput, "need 0 <= λ and λ s < 4, got λ = " + to_string(lambda) +
                                            ", s = " + std::to_string(s));
    }
}

void require_quadric(const Rational& lambda) {
    if (sgn(lambda) < 0 || lambda >= 1) {
        throw Error(Errc::InvalidInput, "need 0 <= λ < 1 on the quadric, got " + to_string(lambda));
    }
}

void require_m(int m) {
    if (m < 1) throw Error(Errc::InvalidInput, "multiplicity must be at least 1");
}

// (c - u)^3 as a polynomial in u.
Poly shifted_cube(const Rational& c) {
    Poly lin({c, Rational(-1)});
    return lin * lin * lin;
}

} // namespace

Rational s_plane_flag(int s, const Rational& lambda) {
    require_p3(s, lambda);
    const Rational c = 4 - lambda * s;
    Rational out = integrate(shifted_cube(c), 0, c) / (c * c * c);
    return out;
}

Rational s_blowup_flag(int s, const Rational& lambda) {
    require_p3(s, lambda);
    const Rational c = 4 - lambda * s;
    const Poly vol = Poly::constant(c * c * c) - Poly::monomial(1, 3);
    Rational out = integrate(vol, 0, c) / (c * c * c);
    return out;
}

Rational delta_bound_smooth(int s, const Rational& lambda, const Rational& delta2d) {
    require_p3(s, lambda);
    const Rational c = 4 - lambda * s;
    Rational first = 4 / c;
    Rational second = delta2d * 4 * (3 - lambda * s) / (3 * c);
    return std::min(first, second);
}

Rational delta_bound_blowup(int s, int m, const Rational& lambda, const Rational& delta2d) {
    require_p3(s, lambda);
    require_m(m);
    Rational factor = 4 * (3 - lambda * m) / (3 * (4 - lambda * s));
    Rational second = delta2d * factor;
    return std::min(factor, second);
}

Rational delta_bound_quadric(int m, const Rational& lambda, const Rational& delta2d) {
    require_quadric(lambda);
    require_m(m);
    const Rational top = 3 - lambda * m;
    Rational first = top / (3 * (1 - lambda));
    Rational second = 4 * top / (15 - 9 * lambda - 2 * lambda * m);
    Rational third = delta2d * 4 * top / (9 * (1 - lambda));
    return std::min({first, second, third});
}

VolumeCheck threefold_volume_check(VolumeKind kind, int s, const Rational& lambda) {
    VolumeCheck out;
    switch (kind) {
    case VolumeKind::Plane: {
        require_p3(s, lambda);
        const Rational c = 4 - lambda * s;
        out.volume = PiecewisePoly({0, c}, {shifted_cube(c)});
        out.normalization = c * c * c;
        out.closed_form = c / 4;
        break;
    }
    case VolumeKind::Blowup: {
        require_p3(s, lambda);
        const Rational c = 4 - lambda * s;
        out.volume = PiecewisePoly({0, c}, {Poly::constant(c * c * c) - Poly::monomial(1, 3)});
        out.normalization = c * c * c;
        out.closed_form = 3 * c / 4;
        break;
    }
    case VolumeKind::Quadric: {
        require_quadric(lambda);
        const Rational t = 1 - lambda;
        const Rational l2 = lambda * lambda;
        const Rational l3 = l2 * lambda;
        Poly first = Poly::constant(54 - 162 * lambda + 162 * l2 - 54 * l3) - Poly::monomial(1, 3);
        out.volume = PiecewisePoly({0, 3 * t, 6 * t}, {first, shifted_cube(6 * t)});
        out.normalization = 54 * t * t * t;
        out.closed_form = 3 - 3 * lambda;
        break;
    }
    }
    if (sgn(out.normalization) == 0) throw Error(Errc::Degenerate, "volume normalization vanishes");
    out.integral = integrate_piecewise(out.volume) / out.normalization;
    out.ok = out.integral == out.closed_form && out.volume.is_continuous();
    return out;
}

bool verify_threefold_volumes(VolumeKind kind, int s, const Rational& lambda) {
    return threefold_volume_check(kind, s, lambda).ok;
}

const char* ambient_kind_name(AmbientKind kind) {
    switch (kind) {
    case AmbientKind::Smooth: return "smooth";
    case AmbientKind::Blowup: return "blowup";
    case AmbientKind::Quadric: return "quadric";
    }
    return "?";
}

const std::vector<ConeLookup>& cone_lookup_table() {
    static const std::vector<ConeLookup> table = {
        {"node", 2, {{"smooth_conic", 2}}},
        {"A_n, n >= 2", 2, {{"A1", 2}, {"line_component_smooth_point", 2}}},
        {"ordinary triple point", 3, {{"smooth_cubic_tangent", 3}, {"smooth_cubic_flex", 3}}},
        {"ordinary quadruple point", 4,
         {{"smooth_quartic_tangent", 4}, {"smooth_quartic_flex", 4}, {"smooth_quartic_hyperflex", 4}}},
    };
    return table;
}

namespace {

std::vector<ConeCase> cones_for(const std::string& point_type) {
    for (const auto& row : cone_lookup_table()) {
        if (row.point_type == point_type) return row.cones;
    }
    throw Error(Errc::InvalidInput, "no tangent cone entry for '" + point_type + "'");
}

int multiplicity_of(const std::string& point_type) {
    for (const auto& row : cone_lookup_table()) {
        if (row.point_type == point_type) return row.m;
    }
    throw Error(Errc::InvalidInput, "no tangent cone entry for '" + point_type + "'");
}

} // namespace

std::vector<CorollaryConfig> corollary_configs() {
    std::vector<CorollaryConfig> out;
    auto add = [&](const std::string& name, const std::string& type, AmbientKind kind, int s, Rational lambda) {
        out.push_back(CorollaryConfig{name, type, kind, s, multiplicity_of(type), std::move(lambda), cones_for(type)});
    };
    const Rational two_thirds(2, 3);
    const Rational half(1, 2);
    add("cubic threefold", "node", AmbientKind::Blowup, 3, two_thirds);
    add("quartic double solid", "node", AmbientKind::Blowup, 4, half);
    add("quartic double solid", "A_n, n >= 2", AmbientKind::Blowup, 4, half);
    add("quartic double solid", "ordinary triple point", AmbientKind::Blowup, 4, half);
    add("quintic surface pair", "node", AmbientKind::Blowup, 5, half);
    add("quintic surface pair", "A_n, n >= 2", AmbientKind::Blowup, 5, half);
    add("quintic surface pair", "ordinary triple point", AmbientKind::Blowup, 5, half);
    add("sextic double solid", "node", AmbientKind::Blowup, 6, half);
    add("sextic double solid", "A_n, n >= 2", AmbientKind::Blowup, 6, half);
    add("sextic double solid", "ordinary triple point", AmbientKind::Blowup, 6, half);
    add("sextic double solid", "ordinary quadruple point", AmbientKind::Blowup, 6, half);
    add("quadric threefold", "node", AmbientKind::Quadric, 0, two_thirds);
    return out;
}

Rational cone_delta(const Catalog& catalog, const std::vector<ConeCase>& cones, const Rational& lambda) {
    if (cones.empty()) throw Error(Errc::InvalidInput, "at least one tangent cone case is required");
    std::optional<Rational> best;
    for (const auto& c : cones) {
        DeltaReport r = delta_point(catalog, c.id, c.d, lambda);
        if (!best || r.value() < *best) best = r.value();
    }
    return *best;
}

CorollaryResult evaluate_corollary(const Catalog& catalog, const CorollaryConfig& config) {
    CorollaryResult r;
    r.config = config;
    for (const auto& c : config.cones) {
        if (c.d != config.m) {
            throw Error(Errc::DegreeNotAdmissible, "tangent cone case " + c.id + " has degree " +
                                                       std::to_string(c.d) + ", expected " + std::to_string(config.m));
        }
    }
    r.delta2d = cone_delta(catalog, config.cones, config.lambda);
    switch (config.kind) {
    case AmbientKind::Smooth: r.bound = delta_bound_smooth(config.s, config.lambda, r.delta2d); break;
    case AmbientKind::Blowup: r.bound = delta_bound_blowup(config.s, config.m, config.lambda, r.delta2d); break;
    case AmbientKind::Quadric: r.bound = delta_bound_quadric(config.m, config.lambda, r.delta2d); break;
    }
    r.at_least_one = r.bound >= 1;
    r.strict = r.bound > 1;
    return r;
}

} // namespace kdelta
