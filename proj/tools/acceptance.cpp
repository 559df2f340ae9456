// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

// Runs the acceptance checks and prints one PASS or FAIL line per criterion.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/cli.hpp"
#include "kdelta/delta.hpp"
#include "kdelta/surface.hpp"
#include "kdelta/threefold.hpp"
#include "kdelta/verify.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kdelta;
using kdelta::testing::all_case_degrees;
using kdelta::testing::evenly_inside;

namespace {

// Collects failure messages of one criterion; only the first few are printed.
class Outcome {
public:
    void fail(const std::string& msg) {
        if (failures_ < 3) detail_ += (detail_.empty() ? "" : "; ") + msg;
        ++failures_;
    }
    void expect(bool ok, const std::string& msg) {
        ++checks_;
        if (!ok) fail(msg);
    }
    bool pass() const { return failures_ == 0 && checks_ > 0; }
    std::string summary() const {
        std::ostringstream s;
        s << checks_ << " checks";
        if (failures_ > 0) s << ", " << failures_ << " failed: " << detail_;
        if (checks_ == 0) s << ", nothing was checked";
        return s.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string detail_;
};

std::string where(const std::string& id, int d, const Rational& lambda) {
    return id + " d=" + std::to_string(d) + " λ=" + to_string(lambda);
}

void exact_reproduction(Outcome& o) {
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        for (const Rational& lambda : interior_samples(spec.degree(d)->validity, 6)) {
            for (std::size_t opt = 0; opt < spec.options.size(); ++opt) {
                const DeltaReport r = delta_point(c, id, d, lambda, opt);
                o.expect(r.exact && r.value() == spec.expected(d, lambda), where(id, d, lambda));
            }
        }
    }
}

void closed_forms(Outcome& o) {
    const Catalog& c = Catalog::builtin();
    const RationalFunction lambda_var(Poly::variable(), Poly::constant(1));
    auto affine = [](const Rational& c0, const Rational& c1) { return Poly({c0, c1}); };
    struct Named {
        const char* id;
        int d;
        RationalFunction form;
    };
    const std::vector<Named> named = {
        {"A2", 4, RationalFunction(affine(3, ratio(-18, 5)), affine(3, -4))},
        {"E6", 4, RationalFunction(affine(3, ratio(-36, 7)), affine(3, -4))},
        {"quadruple_line", 4, RationalFunction(affine(3, -12), affine(3, -4))},
    };
    for (const auto& n : named) o.expect(delta_closed_form(c, n.id, n.d) == n.form, std::string(n.id));
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        for (std::size_t opt = 0; opt < spec.options.size(); ++opt) {
            o.expect(delta_closed_form(c, id, d, opt) == spec.expected.as_function(d),
                     id + " d=" + std::to_string(d) + " option " + std::to_string(opt));
        }
    }
}

void lower_regimes(Outcome& o) {
    const Catalog& c = Catalog::builtin();
    const int d = 4;
    for (const char* id : {"A4", "A5", "A6", "A7"}) {
        for (const Rational& lambda : {ratio(1, 8), ratio(1, 5), ratio(1, 3)}) {
            const DeltaReport r = delta_point(c, id, d, lambda);
            const Rational bound = Rational(3) / (2 * (3 - d * lambda));
            o.expect(!r.exact && r.lower == bound, where(id, d, lambda));
        }
    }
}

void s_spot_table(Outcome& o) {
    const Catalog& c = Catalog::builtin();
    struct Row {
        const char* id;
        Rational multiplier;
    };
    const std::vector<Row> rows = {
        {"A1", ratio(2, 3)}, {"A2", ratio(5, 3)}, {"A4", ratio(13, 6)}, {"A6", ratio(5, 2)}, {"E6", ratio(7, 3)},
    };
    const int d = 4;
    for (const auto& row : rows) {
        const CaseSpec spec = c.resolve(row.id);
        for (const Rational& lambda : evenly_inside(spec.degree(d)->validity, 3)) {
            o.expect(s_divisor(c, row.id, d, lambda) == row.multiplier * (3 - d * lambda), where(row.id, d, lambda));
        }
    }
}

void lambda_zero(Outcome& o) {
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        if (!spec.degree(d)->validity.contains(0)) continue;
        const DeltaReport r = delta_point(c, id, d, 0);
        o.expect(r.exact && r.value() == 1, where(id, d, 0));
    }
}

void zariski_properties(Outcome& o) {
    using kdelta::testing::dot_curve;
    using kdelta::testing::self_dot;
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        const BuiltCase b = build_case(c, id, d);
        for (const Rational& lambda : evenly_inside(spec.degree(d)->validity, 5)) {
            const std::string at = where(id, d, lambda);
            const DivisorExpr D = b.divisor(lambda);
            const ZariskiPieces z = zariski_decompose_full(b.model, D);
            o.expect(z.tau() == spec.flags.tau * b.a(lambda), at + " τ");
            const PiecewisePoly vol = volume_function(b.model, z);
            o.expect(vol.is_continuous(), at + " continuity");
            o.expect(vol(z.tau()) == 0, at + " vol(τ)");
            Rational previous = vol(0);
            for (const auto& piece : z.pieces) {
                Matrix g(piece.support.size(), std::vector<Rational>(piece.support.size()));
                for (std::size_t r = 0; r < piece.support.size(); ++r) {
                    for (std::size_t s = 0; s < piece.support.size(); ++s) {
                        g[r][s] = b.model.gram[piece.support[r]][piece.support[s]];
                    }
                }
                if (!g.empty()) o.expect(is_negative_definite(g), at + " support not negative definite");
                for (int k = 0; k <= 4; ++k) {
                    const Rational v = piece.lo + (piece.hi - piece.lo) * k / 4;
                    const DivisorExpr P = piece.positive.evaluated(v);
                    const DivisorExpr N = piece.negative.evaluated(v);
                    for (std::size_t i = 0; i < b.model.size(); ++i) {
                        o.expect(sgn(N.coeffs[i].c0) >= 0, at + " N < 0");
                        o.expect(sgn(dot_curve(b.model, P, i)) >= 0, at + " P not nef");
                    }
                    for (std::size_t s : piece.support) o.expect(dot_curve(b.model, P, s) == 0, at + " P.C != 0");
                    const Rational now = vol(v);
                    o.expect(now <= previous, at + " volume increases");
                    o.expect(now == self_dot(b.model, P), at + " volume != P^2");
                    previous = now;
                }
            }
        }
    }
}

void quadrature(Outcome& o) {
    using kdelta::testing::close;
    using kdelta::testing::midpoint;
    using kdelta::testing::PositivePart;
    constexpr int kPanels = 1000000;
    constexpr double kTolerance = 1e-6;
    const Catalog& c = Catalog::builtin();
    for (const auto& [id, d] : all_case_degrees(c)) {
        const CaseSpec spec = c.resolve(id);
        if (!spec.alias_of.empty()) continue;
        const BuiltCase b = build_case(c, id, d);
        for (const Rational& lambda : evenly_inside(spec.degree(d)->validity, 2)) {
            const std::string at = where(id, d, lambda);
            const ZariskiPieces z = zariski_decompose_full(b.model, b.divisor(lambda));
            const PositivePart pp(b.model, z, b.index_E(), b.index_L());
            const double a2 = to_double(b.a(lambda)) * to_double(b.a(lambda));
            const double tau = to_double(z.tau());
            const double s_e = midpoint([&](double v) { return pp.square(v); }, 0, tau, kPanels) / a2;
            o.expect(close(s_e, s_divisor(c, id, d, lambda), kTolerance), at + " S(E)");
            const double s_gen = 2 * midpoint([&](double v) { return pp.h_generic(v); }, 0, tau, kPanels) / a2;
            o.expect(close(s_gen, s_flag_point(c, id, d, lambda, "generic"), kTolerance), at + " S(W;generic)");
            if (spec.companion) {
                const double s_el = 2 * midpoint([&](double v) { return pp.h_el(v); }, 0, tau, kPanels) / a2;
                o.expect(close(s_el, s_flag_point(c, id, d, lambda, "EL"), kTolerance), at + " S(W;EL)");
            }
        }
    }
}

void threefold_suite(Outcome& o) {
    for (const Rational& lambda : {Rational(0), ratio(1, 5), ratio(1, 3), ratio(1, 2), ratio(2, 3)}) {
        for (int s = 1; s <= 5; ++s) {
            o.expect(verify_threefold_volumes(VolumeKind::Plane, s, lambda), "plane s=" + std::to_string(s));
            o.expect(verify_threefold_volumes(VolumeKind::Blowup, s, lambda), "blowup s=" + std::to_string(s));
        }
        o.expect(verify_threefold_volumes(VolumeKind::Quadric, 0, lambda), "quadric λ=" + to_string(lambda));
    }
    bool saw_double_solid_node = false;
    bool saw_quadric_node = false;
    bool saw_triple_point = false;
    for (const auto& config : corollary_configs()) {
        const CorollaryResult r = evaluate_corollary(Catalog::builtin(), config);
        const std::string name = config.name + " / " + config.point_type;
        o.expect(r.at_least_one && r.bound >= 1, name + " below 1");
        o.expect(r.strict == (r.bound > 1), name + " strictness flag");
        if (config.name == "quartic double solid" && config.point_type == "node") {
            saw_double_solid_node = true;
            o.expect(r.bound == ratio(4, 3), name + " bound " + to_string(r.bound));
        }
        if (config.name == "quadric threefold" && config.point_type == "node") {
            saw_quadric_node = true;
            o.expect(r.bound == ratio(20, 19), name + " bound " + to_string(r.bound));
        }
        if (config.s == 4 && config.m == 3) {
            saw_triple_point = true;
            o.expect(r.bound == 1 && !r.strict, name + " not flagged as equality");
        }
    }
    o.expect(saw_double_solid_node && saw_quadric_node && saw_triple_point, "missing corollary configuration");
}

void fault_injection(Outcome& o) {
    const auto sites = fault_sites(Catalog::builtin());
    o.expect(!sites.empty(), "no fault sites");
    for (const auto& site : sites) {
        Catalog c = Catalog::builtin();
        apply_fault(c, site.case_id, site.field, site.current + ratio(1, 7));
        o.expect(!verify_case(c, site.case_id).pass, site.case_id + "." + site.field);
    }
    kdelta::testing::Gen gen(9);
    for (int k = 0; k < 5; ++k) {
        const FaultSite& site = gen.pick(sites);
        const std::string spec = site.case_id + "." + site.field + "=" + to_string(site.current - ratio(2, 5));
        std::ostringstream out, err;
        o.expect(run_cli({"--jobs", "4", "verify", "--all", "--inject", spec}, out, err) == kExitMismatch,
                 "verify --all --inject " + spec);
    }
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
        {"exact reproduction of the closed forms at 6 samples per case", exact_reproduction},
        {"closed-form reconstruction", closed_forms},
        {"lower-bound regimes of A4, A5, A6, A7", lower_regimes},
        {"S of the exceptional curve spot table", s_spot_table},
        {"normalization at λ = 0", lambda_zero},
        {"Zariski decomposition properties", zariski_properties},
        {"10^6-panel quadrature oracle", quadrature},
        {"threefold volumes and corollary bounds", threefold_suite},
        {"fault injection is detected", fault_injection},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass()) ++failed;
        std::printf("[%s] %d. %s (%s)\n", o.pass() ? "PASS" : "FAIL", ++index, name, o.summary().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
