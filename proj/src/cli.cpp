// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "kdelta/catalog.hpp"
#include "kdelta/delta.hpp"
#include "kdelta/format.hpp"
#include "kdelta/threefold.hpp"
#include "kdelta/verify.hpp"

namespace kdelta {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "plain";
    unsigned jobs = 1;

    std::string case_id;
    int degree = 0;
    std::string lambda;
    std::optional<std::size_t> option;

    std::string from;
    std::string to;
    int samples = 11;
    int num_deg = 2;
    int den_deg = 2;

    std::vector<std::string> cases;
    bool all = false;
    std::vector<std::string> inject;

    std::string kind;
    int s = 0;
    int m = 0;
    std::vector<std::string> cones;
    std::string delta2d;
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string validity_text(const CaseSpec& c) {
    std::vector<std::string> parts;
    for (const auto& e : c.degrees) parts.push_back("d=" + std::to_string(e.d) + " " + e.validity.to_string());
    return join(parts, "; ");
}

int cmd_list(const Options& o, std::ostream& out) {
    const Catalog& catalog = Catalog::builtin();
    const Format format = parse_format(o.format);
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& c : catalog.entries()) arr.push_back(to_json(catalog.resolve(c.id)));
        out << json{{"schema_version", kSchemaVersion}, {"cases", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : list_cases(catalog)) {
        std::vector<std::string> degs;
        for (const auto& e : s.degrees) degs.push_back(std::to_string(e.d));
        CaseSpec c = catalog.resolve(s.id);
        rows.push_back({s.id, render_label(s.label, format), join(degs, " "), validity_text(c), s.alias_of});
    }
    out << render_grid({"case", "label", "degrees", "validity", "alias_of"}, rows, format);
    return kExitOk;
}

std::vector<std::size_t> options_to_run(const CaseSpec& spec, const std::optional<std::size_t>& option) {
    if (option) return {*option};
    std::vector<std::size_t> all(spec.options.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
}

void print_report_plain(const DeltaReport& r, const CaseSpec& spec, std::ostream& out) {
    out << "case " << r.case_id << "  d=" << r.d << "  λ=" << to_string(r.lambda);
    if (spec.options.size() > 1) out << "  option=" << r.option_name;
    out << "\n";
    out << "A(E) = " << to_string(r.A_E) << "  S(E) = " << to_string(r.S_E) << "  τ = " << to_string(r.tau)
        << "  A/S = " << to_string(r.ratio_E) << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : r.points) {
        rows.push_back({p.label, location_name(p.location), to_string(p.A), to_string(p.S), to_string(p.ratio)});
    }
    for (const auto& b : r.bounds) {
        rows.push_back({b.label, "curve e=" + to_string(b.e) + " l=" + to_string(b.l), to_string(b.A), to_string(b.S),
                        to_string(b.ratio)});
    }
    out << render_grid({"point", "location", "A", "S", "A/S"}, rows, Format::Plain);
    if (r.exact) {
        out << "δ = " << to_string(r.upper) << " (exact)";
    } else {
        out << "δ ≥ " << to_string(r.lower) << " (lower bound only; upper bound " << to_string(r.upper) << ")";
    }
    out << "  minimizer " << join(r.minimizers, ", ") << "\n";
    if (r.expected) {
        out << "expected " << to_string(*r.expected) << ": " << (r.matches_expected().value_or(false) ? "match" : "MISMATCH")
            << "\n";
    } else {
        out << "λ outside the validity window " << validity_text(spec) << "\n";
    }
}

std::optional<json> clause_json(const CaseSpec& spec, int d, const Rational& lambda) {
    if (!spec.clause) return std::nullopt;
    json j{{"description", spec.clause->describe()}, {"interval", spec.clause->interval().to_string()}};
    if (spec.clause->interval().contains(lambda)) {
        j["value"] = to_string((*spec.clause)(d, lambda));
    } else {
        j["value"] = nullptr;
    }
    return j;
}

int cmd_delta(const Options& o, std::ostream& out) {
    const Catalog& catalog = Catalog::builtin();
    const Format format = parse_format(o.format);
    const Rational lambda = parse_rational(o.lambda);
    const CaseSpec spec = catalog.resolve(o.case_id);
    std::vector<DeltaReport> reports;
    for (std::size_t opt : options_to_run(spec, o.option)) {
        reports.push_back(delta_point(catalog, o.case_id, o.degree, lambda, opt));
    }
    const auto clause = clause_json(spec, o.degree, lambda);
    if (format == Format::Json) {
        json records = json::array();
        json details = json::array();
        for (const auto& r : reports) {
            records.push_back(to_json(to_record(r)));
            details.push_back(to_json(r));
        }
        json doc{{"schema_version", kSchemaVersion}, {"records", records}, {"reports", details}};
        if (clause) doc["multiplicity_clause"] = *clause;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (format == Format::Plain) {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out << "\n";
            print_report_plain(reports[i], spec, out);
        }
        if (clause) {
            out << "multiplicity clause (" << (*clause)["description"].get<std::string>() << ", "
                << (*clause)["interval"].get<std::string>() << "): "
                << ((*clause)["value"].is_null() ? "not applicable" : (*clause)["value"].get<std::string>()) << "\n";
        }
        return kExitOk;
    }
    std::vector<OutputRecord> records;
    for (const auto& r : reports) records.push_back(to_record(r));
    out << render_records(records, format);
    return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
    const Catalog& catalog = Catalog::builtin();
    const Format format = parse_format(o.format);
    const Rational from = parse_rational(o.from);
    const Rational to = parse_rational(o.to);
    if (from >= to) throw Error(Errc::InvalidInput, "scan needs from < to");
    if (sgn(from) < 0) throw Error(Errc::InvalidInput, "scan needs from >= 0");
    if (o.samples < 2) throw Error(Errc::InvalidInput, "scan needs at least 2 samples");
    build_case(catalog, o.case_id, o.degree);
    const std::size_t opt = o.option.value_or(0);
    std::vector<OutputRecord> records;
    for (int i = 0; i < o.samples; ++i) {
        Rational lambda = from + (to - from) * i / (o.samples - 1);
        if (lambda >= ratio(3, o.degree)) {
            OutputRecord r;
            r.case_id = o.case_id;
            r.d = o.degree;
            r.lambda = lambda;
            r.note = "outside domain";
            records.push_back(r);
            continue;
        }
        records.push_back(to_record(delta_point(catalog, o.case_id, o.degree, lambda, opt)));
    }
    out << render_records(records, format);
    return kExitOk;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
    const Catalog& catalog = Catalog::builtin();
    const Format format = parse_format(o.format);
    const CaseSpec spec = catalog.resolve(o.case_id);
    if (spec.degree(o.degree) == nullptr) build_case(catalog, o.case_id, o.degree);
    const RationalFunction expected = spec.expected.as_function(o.degree);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    bool all_match = true;
    for (std::size_t opt : options_to_run(spec, o.option)) {
        RationalFunction f = delta_closed_form(catalog, o.case_id, o.degree, opt, o.num_deg, o.den_deg);
        const bool match = f == expected;
        all_match = all_match && match;
        arr.push_back({{"case", o.case_id},
                       {"d", o.degree},
                       {"option", spec.options[opt].name},
                       {"closed_form", pretty_closed_form(f)},
                       {"reduced", f.to_string()},
                       {"expected", pretty_closed_form(expected)},
                       {"match", match}});
        rows.push_back({o.case_id, std::to_string(o.degree), spec.options[opt].name,
                        format == Format::Latex ? latex_closed_form(f) : pretty_closed_form(f),
                        format == Format::Latex ? latex_closed_form(expected) : pretty_closed_form(expected),
                        match ? "true" : "false"});
    }
    if (format == Format::Json) {
        out << json{{"schema_version", kSchemaVersion}, {"closed_forms", arr}}.dump(2) << "\n";
    } else {
        out << render_grid({"case", "d", "option", "closed_form", "expected", "match"}, rows, format);
    }
    return all_match ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    if (o.all == !o.cases.empty()) throw Error(Errc::InvalidInput, "verify needs exactly one of --case or --all");
    Catalog catalog = Catalog::builtin();
    for (const auto& spec : o.inject) apply_fault_spec(catalog, spec);
    const VerifyReport report = verify_catalog(catalog, o.all ? std::vector<std::string>{} : o.cases, o.jobs);

    if (format == Format::Json) {
        json cases = json::array();
        for (const auto& c : report.cases) cases.push_back(to_json(c));
        out << json{{"schema_version", kSchemaVersion},
                    {"pass", report.pass()},
                    {"cases", cases},
                    {"catalog_failures", report.catalog_failures},
                    {"threefold_failures", report.threefold_failures}}
                   .dump(2)
            << "\n";
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : report.cases) {
            std::vector<std::string> forms;
            for (const auto& f : c.forms) forms.push_back("d=" + std::to_string(f.d) + ": " + (f.fitted ? pretty_closed_form(*f.fitted) : f.text));
            rows.push_back({c.id, c.pass ? "PASS" : "FAIL", std::to_string(c.samples), join(forms, "; ")});
        }
        out << render_grid({"case", "status", "samples", "closed forms"}, rows, format);
        if (format == Format::Plain) {
            for (const auto& c : report.cases) {
                for (const auto& f : c.failures) out << "mismatch " << c.id << ": " << f << "\n";
            }
            for (const auto& f : report.catalog_failures) out << "catalog: " << f << "\n";
            for (const auto& f : report.threefold_failures) out << "threefold: " << f << "\n";
            out << report.passed() << "/" << report.cases.size() << " cases pass; threefold checks "
                << (report.threefold_failures.empty() ? "pass" : "FAIL") << "\n";
        }
    }
    return report.pass() ? kExitOk : kExitMismatch;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Format format = parse_format(o.format);
    out << render_table(build_table(Catalog::builtin()), format);
    return kExitOk;
}

int cmd_threefold(const Options& o, std::ostream& out) {
    const Catalog& catalog = Catalog::builtin();
    const Format format = parse_format(o.format);
    std::vector<CorollaryResult> results;

    if (o.kind == "corollaries") {
        for (const auto& config : corollary_configs()) results.push_back(evaluate_corollary(catalog, config));
    } else {
        CorollaryConfig config;
        config.name = o.kind;
        config.point_type = "user";
        config.lambda = parse_rational(o.lambda);
        config.s = o.s;
        config.m = o.m;
        int cone_degree = 0;
        if (o.kind == "smooth") {
            config.kind = AmbientKind::Smooth;
            if (o.s < 1) throw Error(Errc::InvalidInput, "smooth needs --s");
            cone_degree = o.s;
        } else if (o.kind == "blowup") {
            config.kind = AmbientKind::Blowup;
            if (o.s < 1 || o.m < 1) throw Error(Errc::InvalidInput, "blowup needs --s and --m");
            cone_degree = o.m;
        } else if (o.kind == "quadric") {
            config.kind = AmbientKind::Quadric;
            if (o.m < 1) throw Error(Errc::InvalidInput, "quadric needs --m");
            cone_degree = o.m;
        } else {
            throw Error(Errc::InvalidInput, "unknown threefold kind '" + o.kind + "'");
        }
        if (o.cones.empty() == o.delta2d.empty()) {
            throw Error(Errc::InvalidInput, "give either --cone (one or more) or --delta2d");
        }
        CorollaryResult r;
        if (!o.delta2d.empty()) {
            r.delta2d = parse_rational(o.delta2d);
        } else {
            for (const auto& id : o.cones) {
                const CaseSpec spec = catalog.resolve(id);
                if (spec.degree(cone_degree) == nullptr) {
                    throw Error(Errc::DegreeNotAdmissible, "tangent cone case " + id + " is not a curve of degree " +
                                                               std::to_string(cone_degree));
                }
                config.cones.push_back(ConeCase{id, cone_degree});
            }
            r.delta2d = cone_delta(catalog, config.cones, config.lambda);
        }
        switch (config.kind) {
        case AmbientKind::Smooth: r.bound = delta_bound_smooth(config.s, config.lambda, r.delta2d); break;
        case AmbientKind::Blowup: r.bound = delta_bound_blowup(config.s, config.m, config.lambda, r.delta2d); break;
        case AmbientKind::Quadric: r.bound = delta_bound_quadric(config.m, config.lambda, r.delta2d); break;
        }
        r.at_least_one = r.bound >= 1;
        r.strict = r.bound > 1;
        r.config = config;
        results.push_back(r);
    }

    auto flag = [](const CorollaryResult& r) {
        if (!r.at_least_one) return std::string("bound below 1");
        return std::string(r.strict ? "" : "bound not strict");
    };
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : results) {
            std::vector<std::string> cones;
            for (const auto& c : r.config.cones) cones.push_back(c.id);
            arr.push_back({{"name", r.config.name},
                           {"point_type", r.config.point_type},
                           {"kind", ambient_kind_name(r.config.kind)},
                           {"s", r.config.s},
                           {"m", r.config.m},
                           {"lambda", to_string(r.config.lambda)},
                           {"cones", cones},
                           {"delta2d", to_string(r.delta2d)},
                           {"bound", to_string(r.bound)},
                           {"at_least_one", r.at_least_one},
                           {"strict", r.strict},
                           {"note", flag(r)}});
        }
        out << json{{"schema_version", kSchemaVersion}, {"bounds", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results) {
        std::vector<std::string> cones;
        for (const auto& c : r.config.cones) cones.push_back(c.id);
        rows.push_back({r.config.name, r.config.point_type, ambient_kind_name(r.config.kind),
                        std::to_string(r.config.s), std::to_string(r.config.m), to_string(r.config.lambda),
                        cones.empty() ? "-" : join(cones, "+"), to_string(r.delta2d), to_string(r.bound),
                        r.at_least_one ? "yes" : "no", flag(r)});
    }
    out << render_grid({"setting", "point", "kind", "s", "m", "lambda", "cone", "delta2d", "bound",
                        "K-stable-bound", "note"},
                       rows, format);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact δ-invariants of log del Pezzo pairs (P^2, λC) and threefold bounds", "kdelta"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "md", "latex", "plain"}));
    app.add_option("--jobs", o.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);

    auto add_case = [&](CLI::App* sub) {
        sub->add_option("--case", o.case_id, "Catalog case id")->required();
        sub->add_option("--degree,-d", o.degree, "Curve degree")->required();
    };

    CLI::App* list = app.add_subcommand("list", "List catalog cases");

    CLI::App* delta = app.add_subcommand("delta", "Evaluate δ at one λ");
    add_case(delta);
    delta->add_option("--lambda", o.lambda, "λ as p/q")->required();
    delta->add_option("--option", o.option, "Point option index (all when omitted)");

    CLI::App* scan = app.add_subcommand("scan", "Evaluate δ on evenly spaced λ");
    add_case(scan);
    scan->add_option("--from", o.from, "First λ")->required();
    scan->add_option("--to", o.to, "Last λ")->required();
    scan->add_option("--samples", o.samples, "Number of λ values");
    scan->add_option("--option", o.option, "Point option index");

    CLI::App* closed = app.add_subcommand("closed-form", "Reconstruct δ as a rational function of λ");
    add_case(closed);
    closed->add_option("--option", o.option, "Point option index (all when omitted)");
    closed->add_option("--num-deg", o.num_deg, "Numerator degree bound");
    closed->add_option("--den-deg", o.den_deg, "Denominator degree bound");

    CLI::App* verify = app.add_subcommand("verify", "Check every case against its closed form");
    verify->add_option("--case", o.cases, "Case id (repeatable)");
    verify->add_flag("--all", o.all, "Verify every case");
    verify->add_option("--inject", o.inject, "Overwrite a catalog number first: CASE.field=p/q (repeatable)");

    CLI::App* table = app.add_subcommand("table", "Regenerate the table of closed forms");

    CLI::App* three = app.add_subcommand("threefold", "Lower bounds for δ of threefold pairs");
    three->add_option("kind", o.kind, "smooth, blowup, quadric or corollaries")
        ->required()
        ->check(CLI::IsMember({"smooth", "blowup", "quadric", "corollaries"}));
    three->add_option("--s", o.s, "Degree of the surface in P^3");
    three->add_option("--m", o.m, "Multiplicity of the surface at the point");
    three->add_option("--lambda", o.lambda, "λ as p/q");
    three->add_option("--cone", o.cones, "Tangent cone case id (repeatable; the minimum is used)");
    three->add_option("--delta2d", o.delta2d, "δ of the tangent cone pair, instead of --cone");

    // Allow global options after the subcommand name as well.
    for (CLI::App* sub : {list, delta, scan, closed, verify, table, three}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*list) return cmd_list(o, out);
        if (*delta) return cmd_delta(o, out);
        if (*scan) return cmd_scan(o, out);
        if (*closed) return cmd_closed_form(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*table) return cmd_table(o, out);
        if (*three) {
            if (o.kind != "corollaries" && o.lambda.empty()) throw Error(Errc::InvalidInput, "--lambda is required");
            return cmd_threefold(o, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace kdelta
