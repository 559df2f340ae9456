// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "kdelta/delta.hpp"
#include "kdelta/format.hpp"
#include "support.hpp"

using namespace kdelta;
using nlohmann::json;

namespace {

Rational q(const char* s) { return parse_rational(s); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

// Number of occurrences of `c` not preceded by a backslash.
int unescaped(const std::string& s, char c) {
    int n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == c && (i == 0 || s[i - 1] != '\\')) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("format names") {
    CHECK(parse_format("json") == Format::Json);
    CHECK(parse_format("csv") == Format::Csv);
    CHECK(parse_format("md") == Format::Md);
    CHECK(parse_format("latex") == Format::Latex);
    CHECK(parse_format("plain") == Format::Plain);
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("records carry canonical rationals that round-trip") {
    const OutputRecord r = to_record(delta_point("A2", 4, q("1/2")));
    const json j = to_json(r);
    CHECK(j["case"] == "A2");
    CHECK(j["d"] == 4);
    CHECK(j["lambda"] == "1/2");
    CHECK(j["value"] == "6/5");
    CHECK(j["exact"] == true);
    CHECK(j["minimizer"] == "E");
    CHECK(j["validity"] == true);
    CHECK(j["expected"] == "6/5");
    CHECK(j["match"] == true);
    CHECK(parse_rational(j["value"].get<std::string>()) == q("6/5"));
    CHECK(to_string(parse_rational(j["lambda"].get<std::string>())) == j["lambda"]);
}

TEST_CASE("lower-bound records are flagged") {
    const OutputRecord r = to_record(delta_point("A4", 4, q("1/4")));
    CHECK_FALSE(r.exact);
    CHECK(r.value == q("3/4"));
    CHECK(r.note == "lower bound only");
    const json j = to_json(r);
    CHECK(j["expected"].is_null());
    CHECK(j["match"].is_null());
}

TEST_CASE("json record output is versioned") {
    const std::vector<OutputRecord> recs = {to_record(delta_point("A2", 4, q("1/2")))};
    const json doc = json::parse(render_records(recs, Format::Json));
    CHECK(doc["schema_version"] == kSchemaVersion);
    REQUIRE(doc["records"].size() == 1);
    for (const auto& col : record_columns()) CHECK(doc["records"][0].contains(col));
}

TEST_CASE("csv round trip is byte-identical") {
    const std::vector<std::vector<std::string>> rows = {
        {"case", "note"}, {"a,b", "say \"hi\""}, {"multi\nline", ""}, {"plain", "λ"}};
    const std::string text = render_csv(rows);
    CHECK(parse_csv(text) == rows);
    CHECK(render_csv(parse_csv(text)) == text);

    const std::string table = render_table(build_table(Catalog::builtin()), Format::Csv);
    CHECK(render_csv(parse_csv(table)) == table);
    CHECK_THROWS_AS(parse_csv("\"open"), Error);
}

TEST_CASE("random csv tables round trip") {
    kdelta::testing::Gen gen(99);
    const std::vector<std::string> atoms = {"a", ",", "\"", "\n", "λ", " ", "x1", "", "3/4"};
    for (int trial = 0; trial < 200; ++trial) {
        const int cols = gen.integer(1, 4);
        std::vector<std::vector<std::string>> rows(gen.integer(1, 5));
        for (auto& row : rows) {
            for (int c = 0; c < cols; ++c) {
                std::string cell;
                for (int k = gen.integer(0, 4); k > 0; --k) cell += gen.pick(atoms);
                row.push_back(cell);
            }
        }
        // A single empty cell alone on a line is indistinguishable from a blank line.
        if (cols == 1) {
            for (auto& row : rows) {
                if (row[0].empty()) row[0] = "x";
            }
        }
        const std::string text = render_csv(rows);
        CHECK(parse_csv(text) == rows);
    }
}

TEST_CASE("pretty closed forms use integer coefficients") {
    CHECK(pretty_closed_form(RationalFunction(Poly({15, -18}), Poly({15, -20}))) == "(15-18λ)/(15-20λ)");
    CHECK(pretty_closed_form(RationalFunction(Poly({Rational(5, 3), -2}), Poly({Rational(5, 3), Rational(-5, 3)}))) ==
          "(5-6λ)/(5-5λ)");
    CHECK(pretty_closed_form(RationalFunction(Poly({1}), Poly({1}))) == "1");
    CHECK(latex_closed_form(RationalFunction(Poly({15, -18}), Poly({15, -20}))).find("\\frac{") != std::string::npos);
}

TEST_CASE("labels render per format") {
    CHECK(render_label("A_2", Format::Md) == "A₂");
    CHECK(render_label("A_2", Format::Plain) == "A₂");
    CHECK(render_label("A_2", Format::Csv) == "A_2");
    CHECK(render_label("A_2", Format::Latex).find("_{2}") != std::string::npos);
}

TEST_CASE("markdown table row for the cubic A2") {
    const std::string md = render_table(build_table(Catalog::builtin()), Format::Md);
    CHECK(md.find("| A₂ | 3 | (5-6λ)/(5-5λ) | [0,5/6] |") != std::string::npos);
    CHECK(md.find("| A₂ | 4 | (15-18λ)/(15-20λ) | [0,3/4] |") != std::string::npos);
}

TEST_CASE("table lists every case and degree in degree order") {
    const Catalog& c = Catalog::builtin();
    const auto rows = build_table(c);
    CHECK(rows.size() == kdelta::testing::all_case_degrees(c).size());
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].d <= rows[i].d);
}

TEST_CASE("latex table is a well-formed tabular fragment") {
    const std::string tex = render_table(build_table(Catalog::builtin()), Format::Latex);
    const auto ls = lines(tex);
    REQUIRE(ls.size() > 3);
    CHECK(ls.front().rfind("\\begin{tabular}{", 0) == 0);
    CHECK(ls.back() == "\\end{tabular}");
    int depth = 0;
    for (std::size_t i = 0; i < tex.size(); ++i) {
        if (tex[i] == '{' && (i == 0 || tex[i - 1] != '\\')) ++depth;
        if (tex[i] == '}' && (i == 0 || tex[i - 1] != '\\')) --depth;
        REQUIRE(depth >= 0);
    }
    CHECK(depth == 0);
    for (const auto& line : ls) {
        if (line.find(" & ") == std::string::npos) continue;
        CAPTURE(line);
        CHECK(unescaped(line, '&') == 4);
        CHECK(line.size() >= 3);
        CHECK(line.substr(line.size() - 3) == " \\\\");
        CHECK(unescaped(line, '$') % 2 == 0);
    }
}

TEST_CASE("grids render in every format") {
    const std::vector<std::string> header = {"a", "b|c"};
    const std::vector<std::vector<std::string>> rows = {{"1", "x|y"}, {"λ", "2"}};
    CHECK(render_grid(header, rows, Format::Md).find("x\\|y") != std::string::npos);
    const json j = json::parse(render_grid(header, rows, Format::Json));
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["rows"][1]["a"] == "λ");
    CHECK(parse_csv(render_grid(header, rows, Format::Csv)).size() == 3);
    const auto plain = lines(render_grid(header, rows, Format::Plain));
    CHECK(plain.size() == 3);
    CHECK(render_grid(header, rows, Format::Latex).find("\\begin{tabular}") != std::string::npos);
}
