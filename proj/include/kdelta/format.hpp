// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_FORMAT_HPP
#define KDELTA_FORMAT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/delta.hpp"
#include "kdelta/exact.hpp"
#include "kdelta/verify.hpp"

namespace kdelta {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Md, Latex, Plain };

/// Throws Error(InvalidInput) for unknown names.
Format parse_format(const std::string& name);

/// Flat view of a DeltaReport.
struct OutputRecord {
    std::string case_id;
    int d = 0;
    Rational lambda;
    /// Absent for rows outside the domain 0 <= λ < 3/d.
    std::optional<Rational> value;
    bool exact = false;
    std::string minimizer;
    bool validity = false;
    std::optional<Rational> expected;
    std::optional<bool> match;
    std::string note;
};

OutputRecord to_record(const DeltaReport& r);

nlohmann::json to_json(const OutputRecord& r);
nlohmann::json to_json(const DeltaReport& r);
nlohmann::json to_json(const CaseSpec& c);
nlohmann::json to_json(const CaseVerification& c);

/// Column names used by the csv, md and latex renderings of records.
const std::vector<std::string>& record_columns();
std::vector<std::string> record_cells(const OutputRecord& r);

/// Renders rows in the given format (json is rendered as an array of objects keyed by header).
std::string render_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                        Format format);

std::string render_records(const std::vector<OutputRecord>& records, Format format);

/// RFC 4180 style: fields containing comma, quote or newline are quoted.
std::string render_csv(const std::vector<std::vector<std::string>>& rows);
/// Inverse of render_csv; throws Error(InvalidInput) on malformed quoting.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// Closed form with coprime integer coefficients and a positive constant term in the
/// denominator, e.g. "(5-6λ)/(5-5λ)".
std::string pretty_closed_form(const RationalFunction& f, const std::string& var = "λ");
std::string latex_closed_form(const RationalFunction& f);

/// "A_2" becomes "A₂" (md, plain) or "$A_{2}$" (latex).
std::string render_label(const std::string& label, Format format);

struct TableRow {
    std::string case_id;
    std::string label;
    int d = 0;
    RationalFunction closed_form;
    Interval validity;
};

/// One row per (case, degree), ordered by degree and then catalog order. Closed forms are
/// reconstructed from sampled δ values.
std::vector<TableRow> build_table(const Catalog& catalog);
std::string render_table(const std::vector<TableRow>& rows, Format format);

} // namespace kdelta

#endif // KDELTA_FORMAT_HPP
