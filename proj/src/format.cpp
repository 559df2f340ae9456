// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include "kdelta/format.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kdelta {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "md") return Format::Md;
    if (name == "latex") return Format::Latex;
    if (name == "plain") return Format::Plain;
    throw Error(Errc::InvalidInput, "unknown format '" + name + "' (json, csv, md, latex, plain)");
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

json rational_or_null(const std::optional<Rational>& r) { return r ? json(to_string(*r)) : json(nullptr); }

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&' || c == '%' || c == '#' || c == '_' || c == '$') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

OutputRecord to_record(const DeltaReport& r) {
    OutputRecord o;
    o.case_id = r.case_id;
    o.d = r.d;
    o.lambda = r.lambda;
    o.value = r.value();
    o.exact = r.exact;
    o.minimizer = join(r.minimizers, "+");
    o.validity = r.validity_ok;
    o.expected = r.expected;
    o.match = r.matches_expected();
    if (!r.exact) o.note = "lower bound only";
    return o;
}

json to_json(const OutputRecord& r) {
    json j;
    j["case"] = r.case_id;
    j["d"] = r.d;
    j["lambda"] = to_string(r.lambda);
    j["value"] = rational_or_null(r.value);
    j["exact"] = r.exact;
    j["minimizer"] = r.minimizer;
    j["validity"] = r.validity;
    j["expected"] = rational_or_null(r.expected);
    j["match"] = r.match ? json(*r.match) : json(nullptr);
    j["note"] = r.note;
    return j;
}

json to_json(const DeltaReport& r) {
    json j;
    j["case"] = r.case_id;
    j["d"] = r.d;
    j["lambda"] = to_string(r.lambda);
    j["option"] = r.option_name;
    j["A_E"] = to_string(r.A_E);
    j["S_E"] = to_string(r.S_E);
    j["tau"] = to_string(r.tau);
    j["ratio_E"] = to_string(r.ratio_E);
    j["points"] = json::array();
    for (const auto& p : r.points) {
        j["points"].push_back({{"label", p.label},
                               {"location", location_name(p.location)},
                               {"A", to_string(p.A)},
                               {"S", to_string(p.S)},
                               {"ratio", to_string(p.ratio)}});
    }
    j["bounds"] = json::array();
    for (const auto& b : r.bounds) {
        j["bounds"].push_back({{"label", b.label},
                               {"e", to_string(b.e)},
                               {"l", to_string(b.l)},
                               {"A", to_string(b.A)},
                               {"S", to_string(b.S)},
                               {"ratio", to_string(b.ratio)}});
    }
    j["lower"] = to_string(r.lower);
    j["upper"] = to_string(r.upper);
    j["exact"] = r.exact;
    j["minimizers"] = r.minimizers;
    j["validity"] = r.validity_ok;
    j["expected"] = rational_or_null(r.expected);
    return j;
}

json to_json(const CaseSpec& c) {
    auto affine = [](const Affine& a) { return json{{"c0", to_string(a.c0)}, {"c1", to_string(a.c1)}}; };
    json j;
    j["id"] = c.id;
    j["label"] = c.label;
    j["description"] = c.description;
    j["alias_of"] = c.alias_of.empty() ? json(nullptr) : json(c.alias_of);
    j["degrees"] = json::array();
    for (const auto& e : c.degrees) {
        j["degrees"].push_back({{"d", e.d}, {"lo", to_string(e.validity.lo)}, {"hi", to_string(e.validity.hi)}});
    }
    json gram = json::array();
    for (const auto& row : c.gram()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        gram.push_back(r);
    }
    j["curves"] = c.companion ? json{"E", "L"} : json{"E"};
    j["gram"] = gram;
    j["k_E"] = to_string(c.k_E);
    j["m_C"] = to_string(c.m_C);
    if (c.companion) {
        j["m_L"] = to_string(c.m_L);
        j["e_L"] = to_string(c.e_L);
        j["L_in_C"] = to_string(c.L_in_C);
    }
    j["A_E"] = affine(c.A_E);
    j["different"] = json::array();
    for (const auto& o : c.options) {
        json pts = json::array();
        for (const auto& p : o.points) {
            pts.push_back({{"label", p.label}, {"coeff", affine(p.coeff)}, {"location", location_name(p.location)}});
        }
        j["different"].push_back({{"option", o.name}, {"points", pts}});
    }
    j["extra_upper_bounds"] = json::array();
    for (const auto& x : c.extra) {
        j["extra_upper_bounds"].push_back({{"label", x.label}, {"e", to_string(x.e)}, {"l", to_string(x.l)}});
    }
    j["expected"] = {{"scale", to_string(c.expected.scale)}, {"numerator", affine(c.expected.num)}};
    if (c.lower_regime) {
        j["expected_lower_bound"] = {{"lo", to_string(c.lower_regime->interval.lo)},
                                     {"hi", to_string(c.lower_regime->interval.hi)},
                                     {"scale", to_string(c.lower_regime->bound.scale)},
                                     {"numerator", affine(c.lower_regime->bound.num)}};
    }
    json flags = {{"tau", to_string(c.flags.tau)},
                  {"S_E", to_string(c.flags.s_E)},
                  {"S_generic", to_string(c.flags.s_generic)}};
    if (c.flags.s_EL) flags["S_EL"] = to_string(*c.flags.s_EL);
    j["flag_multipliers"] = flags;
    j["minimizers"] = c.minimizers;
    if (c.clause) j["multiplicity_clause"] = c.clause->describe();
    return j;
}

json to_json(const CaseVerification& c) {
    json j;
    j["case"] = c.id;
    j["pass"] = c.pass;
    j["samples"] = c.samples;
    j["closed_forms"] = json::array();
    for (const auto& f : c.forms) {
        j["closed_forms"].push_back({{"d", f.d}, {"option", f.option}, {"form", f.fitted ? pretty_closed_form(*f.fitted) : f.text}, {"match", f.matches}});
    }
    j["failures"] = c.failures;
    return j;
}

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> cols = {"case",     "d",        "lambda",   "value", "exact",
                                                  "minimizer", "validity", "expected", "match", "note"};
    return cols;
}

std::vector<std::string> record_cells(const OutputRecord& r) {
    return {r.case_id,
            std::to_string(r.d),
            to_string(r.lambda),
            r.value ? to_string(*r.value) : "",
            bool_text(r.exact),
            r.minimizer,
            bool_text(r.validity),
            r.expected ? to_string(*r.expected) : "",
            r.match ? bool_text(*r.match) : "",
            r.note};
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            const std::string& f = row[i];
            if (f.find_first_of(",\"\n\r") == std::string::npos) {
                out += f;
                continue;
            }
            out += '"';
            for (char c : f) {
                if (c == '"') out += '"';
                out += c;
            }
            out += '"';
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool at_field_start = true;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                quoted = false;
                ++i;
                if (i < text.size() && text[i] != ',' && text[i] != '\n') {
                    throw Error(Errc::InvalidInput, "csv: text after closing quote");
                }
                continue;
            }
            field += c;
            ++i;
            continue;
        }
        if (c == '"' && at_field_start) {
            quoted = true;
            at_field_start = false;
            ++i;
            continue;
        }
        if (c == '"') throw Error(Errc::InvalidInput, "csv: stray quote");
        if (c == ',') {
            row.push_back(std::move(field));
            field.clear();
            at_field_start = true;
        } else if (c == '\n') {
            row.push_back(std::move(field));
            field.clear();
            rows.push_back(std::move(row));
            row.clear();
            at_field_start = true;
        } else {
            field += c;
            at_field_start = false;
        }
        ++i;
    }
    if (quoted) throw Error(Errc::InvalidInput, "csv: unterminated quote");
    if (!field.empty() || !row.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                        Format format) {
    std::ostringstream out;
    switch (format) {
    case Format::Csv: {
        std::vector<std::vector<std::string>> all = {header};
        all.insert(all.end(), rows.begin(), rows.end());
        return render_csv(all);
    }
    case Format::Md: {
        out << "| " << join(header, " | ") << " |\n|";
        for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
        out << "\n";
        for (const auto& r : rows) {
            std::vector<std::string> cells;
            for (const auto& c : r) {
                std::string e;
                for (char ch : c) {
                    if (ch == '|') e += '\\';
                    e += ch;
                }
                cells.push_back(e);
            }
            out << "| " << join(cells, " | ") << " |\n";
        }
        return out.str();
    }
    case Format::Latex: {
        out << "\\begin{tabular}{" << std::string(header.size(), 'l') << "}\n\\hline\n";
        std::vector<std::string> h;
        for (const auto& c : header) h.push_back(latex_escape(c));
        out << join(h, " & ") << " \\\\\n\\hline\n";
        for (const auto& r : rows) {
            std::vector<std::string> cells;
            for (const auto& c : r) cells.push_back(latex_escape(c));
            out << join(cells, " & ") << " \\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        return out.str();
    }
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows) {
            json o;
            for (std::size_t i = 0; i < header.size() && i < r.size(); ++i) o[header[i]] = r[i];
            arr.push_back(o);
        }
        return json{{"schema_version", kSchemaVersion}, {"rows", arr}}.dump(2) + "\n";
    }
    case Format::Plain: {
        std::vector<std::size_t> width(header.size());
        auto measure = [](const std::string& s) {
            // Count code points so that λ and subscripts occupy one column.
            std::size_t n = 0;
            for (unsigned char c : s) n += (c & 0xC0) != 0x80;
            return n;
        };
        for (std::size_t i = 0; i < header.size(); ++i) width[i] = measure(header[i]);
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], measure(r[i]));
        }
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(width[i] - measure(r[i]) + 2, ' ');
            }
            out << s << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out.str();
    }
    }
    return {};
}

std::string render_records(const std::vector<OutputRecord>& records, Format format) {
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(to_json(r));
        return json{{"schema_version", kSchemaVersion}, {"records", arr}}.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : records) rows.push_back(record_cells(r));
    return render_grid(record_columns(), rows, format);
}

namespace {

// Integer coefficients of num and den after clearing denominators and common content, with a
// positive leading coefficient of lowest degree in the denominator.
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> integer_form(const RationalFunction& f) {
    mpz_class l = 1;
    for (const Poly* p : {&f.numerator(), &f.denominator()}) {
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    auto scale = [&](const Poly& p) {
        std::vector<mpz_class> out;
        for (const auto& c : p.coeffs()) {
            Rational x = c * Rational(l);
            out.push_back(x.get_num());
        }
        return out;
    };
    auto num = scale(f.numerator());
    auto den = scale(f.denominator());
    mpz_class g = 0;
    for (const auto* v : {&num, &den}) {
        for (const auto& c : *v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 0) g = 1;
    mpz_class lowest = 0;
    for (const auto& c : den) {
        if (c != 0) {
            lowest = c;
            break;
        }
    }
    if (lowest < 0) g = -g;
    for (auto* v : {&num, &den}) {
        for (auto& c : *v) c /= g;
    }
    return {num, den};
}

std::string render_int_poly(const std::vector<mpz_class>& c, const std::string& var, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        mpz_class mag = abs(c[i]);
        std::string term;
        if (i == 0 || mag != 1) term = mag.get_str();
        if (i >= 1) term += var;
        if (i >= 2) term += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
        if (out.empty()) {
            out = (c[i] < 0 ? "-" : "") + term;
        } else {
            out += (c[i] < 0 ? "-" : "+") + term;
        }
    }
    return out.empty() ? "0" : out;
}

bool is_single_term(const std::vector<mpz_class>& c) {
    return std::count_if(c.begin(), c.end(), [](const mpz_class& x) { return x != 0; }) <= 1;
}

} // namespace

std::string pretty_closed_form(const RationalFunction& f, const std::string& var) {
    auto [num, den] = integer_form(f);
    const std::string n = render_int_poly(num, var, false);
    if (den.size() == 1 && den[0] == 1) return n;
    const std::string d = render_int_poly(den, var, false);
    const std::string nn = is_single_term(num) ? n : "(" + n + ")";
    const std::string dd = is_single_term(den) ? d : "(" + d + ")";
    return nn + "/" + dd;
}

std::string latex_closed_form(const RationalFunction& f) {
    auto [num, den] = integer_form(f);
    const std::string n = render_int_poly(num, "\\lambda", true);
    if (den.size() == 1 && den[0] == 1) return "$" + n + "$";
    return "$\\frac{" + n + "}{" + render_int_poly(den, "\\lambda", true) + "}$";
}

std::string render_label(const std::string& label, Format format) {
    static const char* const subscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
    std::string out;
    for (std::size_t i = 0; i < label.size(); ++i) {
        const bool sub = label[i] == '_' && i + 1 < label.size() && std::isdigit(static_cast<unsigned char>(label[i + 1]));
        if (!sub) {
            if (format == Format::Latex) {
                out += latex_escape(std::string(1, label[i]));
            } else {
                out += label[i];
            }
            continue;
        }
        std::size_t j = i + 1;
        std::string digits;
        while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j]))) digits += label[j++];
        if (format == Format::Latex) {
            out += "$_{" + digits + "}$";
        } else if (format == Format::Csv || format == Format::Json) {
            out += "_" + digits;
        } else {
            for (char dch : digits) out += subscripts[dch - '0'];
        }
        i = j - 1;
    }
    return out;
}

std::vector<TableRow> build_table(const Catalog& catalog) {
    std::vector<TableRow> rows;
    for (const auto& entry : catalog.entries()) {
        const CaseSpec spec = catalog.resolve(entry.id);
        for (const auto& e : spec.degrees) {
            rows.push_back(TableRow{spec.id, spec.label, e.d, delta_closed_form(catalog, spec.id, e.d), e.validity});
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return a.d < b.d; });
    return rows;
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
    const std::vector<std::string> header = {"singularity", "degree", "delta", "validity", "case"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::string form = format == Format::Latex ? latex_closed_form(r.closed_form) : pretty_closed_form(r.closed_form);
        std::string validity = r.validity.to_string();
        if (format == Format::Latex) validity = "$" + validity + "$";
        cells.push_back({render_label(r.label, format), std::to_string(r.d), form, validity, r.case_id});
    }
    if (format == Format::Latex) {
        // Cells are already valid LaTeX; emit them without escaping.
        std::ostringstream out;
        out << "\\begin{tabular}{lllll}\n\\hline\n";
        out << "singularity & $d$ & $\\delta$ & validity & case \\\\\n\\hline\n";
        for (const auto& c : cells) {
            out << c[0] << " & " << c[1] << " & " << c[2] << " & " << c[3] << " & \\texttt{" << latex_escape(c[4])
                << "} \\\\\n";
        }
        out << "\\hline\n\\end{tabular}\n";
        return out.str();
    }
    return render_grid(header, cells, format);
}

} // namespace kdelta
