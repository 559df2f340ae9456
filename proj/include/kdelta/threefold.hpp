// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_THREEFOLD_HPP
#define KDELTA_THREEFOLD_HPP

#include <string>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/exact.hpp"

namespace kdelta {

/// S of a plane through a smooth point of the pair (P^3, λ S_s), by exact integration.
Rational s_plane_flag(int s, const Rational& lambda);

/// S of the exceptional divisor of the point blowup of (P^3, λ S_s), by exact integration.
Rational s_blowup_flag(int s, const Rational& lambda);

/// min{ 4/(4-λs), δ2 * 4(3-λs)/(3(4-λs)) } at a smooth point of S_s.
Rational delta_bound_smooth(int s, const Rational& lambda, const Rational& delta2d);

/// min{ F, δ2 * F } with F = 4(3-λm)/(3(4-λs)), at a point of multiplicity m.
Rational delta_bound_blowup(int s, int m, const Rational& lambda, const Rational& delta2d);

/// Three-term bound on the smooth quadric threefold at a point of multiplicity m of S.
Rational delta_bound_quadric(int m, const Rational& lambda, const Rational& delta2d);

enum class VolumeKind { Plane, Blowup, Quadric };

struct VolumeCheck {
    PiecewisePoly volume;
    Rational normalization;
    Rational integral;
    Rational closed_form;
    bool ok = false;
};

/// Integrates the piecewise cubic volume of the given kind and compares with its closed form.
/// `s` is ignored for the quadric.
VolumeCheck threefold_volume_check(VolumeKind kind, int s, const Rational& lambda);
bool verify_threefold_volumes(VolumeKind kind, int s, const Rational& lambda);

enum class AmbientKind { Smooth, Blowup, Quadric };

const char* ambient_kind_name(AmbientKind kind);

/// A catalog entry used to bound δ of the projectivized tangent cone, at degree `d`.
struct ConeCase {
    std::string id;
    int d = 0;
};

/// A point type on a surface, with the plane curves realizing its tangent cone.
struct ConeLookup {
    std::string point_type;
    int m = 0;
    std::vector<ConeCase> cones;
};

/// Singularity type to tangent-cone catalog cases.
const std::vector<ConeLookup>& cone_lookup_table();

struct CorollaryConfig {
    std::string name;
    std::string point_type;
    AmbientKind kind = AmbientKind::Blowup;
    int s = 0;
    int m = 0;
    Rational lambda;
    std::vector<ConeCase> cones;
};

struct CorollaryResult {
    CorollaryConfig config;
    /// Minimum over the cone cases of their δ values (lower bounds where not exact).
    Rational delta2d;
    Rational bound;
    bool at_least_one = false;
    bool strict = false;
};

/// Configurations covering the K-stability corollaries.
std::vector<CorollaryConfig> corollary_configs();

/// min over the cone cases of the delta module's value at λ; throws DegreeNotAdmissible when a
/// cone case is not defined in the requested degree.
Rational cone_delta(const Catalog& catalog, const std::vector<ConeCase>& cones, const Rational& lambda);

CorollaryResult evaluate_corollary(const Catalog& catalog, const CorollaryConfig& config);

} // namespace kdelta

#endif // KDELTA_THREEFOLD_HPP
