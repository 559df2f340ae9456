// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "kdelta/delta.hpp"
#include "kdelta/threefold.hpp"

namespace kdelta {

bool VerifyReport::pass() const {
    return catalog_failures.empty() && threefold_failures.empty() &&
           std::all_of(cases.begin(), cases.end(), [](const CaseVerification& c) { return c.pass; });
}

std::size_t VerifyReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseVerification& c) { return c.pass; }));
}

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return out;
}

std::string where(int d, std::size_t option, const Rational& lambda) {
    return "d=" + std::to_string(d) + " option=" + std::to_string(option) + " λ=" + to_string(lambda);
}

void check_sample(const Catalog& catalog, const CaseSpec& spec, int d, std::size_t option, const Rational& lambda,
                  CaseVerification& out) {
    auto fail = [&](const std::string& msg) { out.failures.push_back(where(d, option, lambda) + ": " + msg); };
    DeltaReport r = delta_point(catalog, spec.id, d, lambda, option);
    ++out.samples;
    const Rational expected = spec.expected(d, lambda);
    if (r.lower > r.upper) {
        fail("lower bound " + to_string(r.lower) + " exceeds upper bound " + to_string(r.upper));
    }
    if (!r.exact) {
        fail("not exact: lower " + to_string(r.lower) + ", upper " + to_string(r.upper) + ", expected " +
             to_string(expected));
    } else if (r.upper != expected) {
        fail("δ = " + to_string(r.upper) + ", expected " + to_string(expected));
    }
    std::set<std::string> got(r.minimizers.begin(), r.minimizers.end());
    std::set<std::string> want(spec.minimizers.begin(), spec.minimizers.end());
    if (got != want) fail("minimizers {" + join(r.minimizers) + "}, expected {" + join(spec.minimizers) + "}");

    const Rational a = 3 - d * lambda;
    auto compare = [&](const std::string& name, const Rational& computed, const Rational& multiplier) {
        Rational want_value = multiplier * a;
        if (computed != want_value) {
            fail(name + " = " + to_string(computed) + ", expected " + to_string(want_value));
        }
    };
    compare("τ", r.tau, spec.flags.tau);
    compare("S(E)", r.S_E, spec.flags.s_E);
    for (const auto& p : r.points) {
        if (p.label == "generic") compare("S(W;generic)", p.S, spec.flags.s_generic);
        if (p.location == Location::OnL && spec.flags.s_EL) compare("S(W;" + p.label + ")", p.S, *spec.flags.s_EL);
    }
    if (spec.companion && !spec.flags.s_EL) fail("no flag multiplier for the point on L");

    Rational printed_a = spec.A_E(lambda);
    if (r.A_E != printed_a) fail("A(E) = " + to_string(r.A_E) + ", expected " + to_string(printed_a));
}

} // namespace

CaseVerification verify_case(const Catalog& catalog, const std::string& id) {
    CaseVerification out;
    out.id = id;
    try {
        out.failures = validate_case(catalog, id);
        const CaseSpec spec = catalog.resolve(id);
        for (const auto& entry : spec.degrees) {
            const int d = entry.d;
            for (std::size_t option = 0; option < spec.options.size(); ++option) {
                for (const auto& lambda : interior_samples(entry.validity, kVerifySamples)) {
                    check_sample(catalog, spec, d, option, lambda, out);
                }
                if (entry.validity.contains(0)) {
                    DeltaReport r = delta_point(catalog, id, d, 0, option);
                    if (!r.exact || r.upper != 1) {
                        out.failures.push_back(where(d, option, 0) + ": δ = " + to_string(r.value()) +
                                               (r.exact ? "" : " (lower bound)") + ", expected 1");
                    }
                }
                FittedForm form{d, option, "", false, std::nullopt};
                try {
                    RationalFunction f = delta_closed_form(catalog, id, d, option);
                    form.text = f.to_string();
                    form.fitted = f;
                    form.matches = f == spec.expected.as_function(d);
                    if (!form.matches) {
                        out.failures.push_back("d=" + std::to_string(d) + " option=" + std::to_string(option) +
                                               ": closed form " + form.text + ", expected " +
                                               spec.expected.as_function(d).to_string());
                    }
                } catch (const Error& e) {
                    form.text = e.what();
                    out.failures.push_back("d=" + std::to_string(d) + " option=" + std::to_string(option) +
                                           ": closed form failed: " + e.what());
                }
                out.forms.push_back(form);

                if (spec.lower_regime) {
                    Interval below = spec.lower_regime->interval;
                    const Rational cap = ratio(3, d);
                    if (below.hi > cap) below.hi = cap;
                    for (const auto& lambda : interior_samples(below, 3)) {
                        DeltaReport r = delta_point(catalog, id, d, lambda, option);
                        const Rational want = spec.lower_regime->bound(d, lambda);
                        if (r.exact || r.lower != want) {
                            out.failures.push_back(where(d, option, lambda) + ": lower regime gives " +
                                                   to_string(r.lower) + (r.exact ? " (exact)" : "") +
                                                   ", expected lower bound " + to_string(want));
                        }
                    }
                }
            }
        }
    } catch (const Error& e) {
        out.failures.push_back(std::string("error: ") + e.what());
    }
    out.pass = out.failures.empty();
    return out;
}

std::vector<std::string> verify_threefold(const Catalog& catalog) {
    std::vector<std::string> out;
    const std::vector<Rational> samples = {0, Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    for (int s = 1; s <= 6; ++s) {
        for (const auto& lambda : samples) {
            if (lambda * s >= 4) continue;
            for (VolumeKind kind : {VolumeKind::Plane, VolumeKind::Blowup}) {
                VolumeCheck c = threefold_volume_check(kind, s, lambda);
                if (!c.ok) {
                    out.push_back(std::string(kind == VolumeKind::Plane ? "plane" : "blowup") + " volume s=" +
                                  std::to_string(s) + " λ=" + to_string(lambda) + ": integral " +
                                  to_string(c.integral) + ", closed form " + to_string(c.closed_form));
                }
            }
        }
    }
    for (const auto& lambda : samples) {
        VolumeCheck c = threefold_volume_check(VolumeKind::Quadric, 0, lambda);
        if (!c.ok) {
            out.push_back("quadric volume λ=" + to_string(lambda) + ": integral " + to_string(c.integral) +
                          ", closed form " + to_string(c.closed_form));
        }
    }
    try {
        for (const auto& config : corollary_configs()) {
            CorollaryResult r = evaluate_corollary(catalog, config);
            if (!r.at_least_one) {
                out.push_back(config.name + " (" + config.point_type + "): bound " + to_string(r.bound) + " < 1");
            }
        }
    } catch (const Error& e) {
        out.push_back(std::string("corollary evaluation failed: ") + e.what());
    }
    return out;
}

VerifyReport verify_catalog(const Catalog& catalog, const std::vector<std::string>& ids, unsigned jobs) {
    std::vector<std::string> todo = ids;
    VerifyReport report;
    if (todo.empty()) {
        for (const auto& c : catalog.entries()) todo.push_back(c.id);
        std::set<std::string> seen;
        for (const auto& c : catalog.entries()) {
            if (!seen.insert(c.id).second) report.catalog_failures.push_back(c.id + ": duplicate id");
        }
    }
    for (const auto& id : todo) {
        if (!catalog.contains(id)) throw Error(Errc::UnknownCase, "no catalog entry named '" + id + "'");
    }

    report.cases.resize(todo.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < todo.size(); i = next++) report.cases[i] = verify_case(catalog, todo[i]);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(todo.size())));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    report.threefold_failures = verify_threefold(catalog);
    return report;
}

} // namespace kdelta
