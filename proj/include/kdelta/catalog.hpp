// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_CATALOG_HPP
#define KDELTA_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdelta/exact.hpp"
#include "kdelta/surface.hpp"

namespace kdelta {

/// Where a point of the exceptional curve sits relative to the other curves in the model.
enum class Location { Generic, OnC, OnL };

const char* location_name(Location loc);

/// A point of the exceptional curve together with its different coefficient (affine in λ).
struct PointSpec {
    std::string label;
    Affine coeff;
    Location location = Location::Generic;
};

/// A curve of self-intersection e on the plane whose multiplicity in the boundary is l.
struct ExtraBound {
    std::string label;
    Rational e;
    Rational l;
};

struct Interval {
    Rational lo;
    Rational hi;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    std::string to_string() const;
};

struct DegreeEntry {
    int d = 0;
    Interval validity;
};

/// scale * (num.c0 + num.c1 λ) / (3 - d λ).
struct ClosedForm {
    Rational scale = 1;
    Affine num;

    Rational operator()(int d, const Rational& lambda) const;
    RationalFunction as_function(int d) const;
};

/// Flag data expressed as multiples of a = 3 - dλ.
struct FlagMultipliers {
    Rational tau;
    Rational s_E;
    Rational s_generic;
    std::optional<Rational> s_EL;
};

/// One admissible choice of the points on the exceptional curve.
struct PointOption {
    std::string name;
    std::vector<PointSpec> points;
};

/// Below `interval`, only a lower bound `scale * num / a` is attained by the flag method.
struct LowerRegime {
    Interval interval;
    ClosedForm bound;
};

/// Coarse formula covering every point of a curve with a line component of multiplicity
/// l >= 2, or a double conic.
struct MultiplicityClause {
    int line_multiplicity = 0;
    bool double_conic = false;

    Interval interval() const;
    /// Throws Error(InvalidInput) when λ lies outside interval().
    Rational operator()(int d, const Rational& lambda) const;
    std::string describe() const;
};

struct CaseSpec {
    std::string id;
    std::string label;
    std::string description;
    /// Non-empty for entries that reuse the data of another entry.
    std::string alias_of;
    std::vector<DegreeEntry> degrees;

    bool companion = false;
    Rational E2;
    Rational EL;
    Rational L2;
    Rational m_L;
    Rational e_L = 1;
    Rational k_E;
    Rational m_C;
    Affine A_E;
    std::vector<PointOption> options;
    std::vector<ExtraBound> extra;
    ClosedForm expected;
    std::optional<LowerRegime> lower_regime;
    FlagMultipliers flags;
    std::vector<std::string> minimizers;
    /// Multiplicity of the line component L̄ inside σ*C (0 when L is not a component).
    Rational L_in_C = 0;
    /// Coarse formula for curves with a non-reduced component, when it applies.
    std::optional<MultiplicityClause> clause;

    const DegreeEntry* degree(int d) const;
    Matrix gram() const;
};

class Catalog {
public:
    explicit Catalog(std::vector<CaseSpec> entries);

    /// The built-in table.
    static const Catalog& builtin();

    const std::vector<CaseSpec>& entries() const { return entries_; }
    bool contains(const std::string& id) const;
    /// Entry with alias data merged in; throws Error(UnknownCase).
    CaseSpec resolve(const std::string& id) const;
    /// Raw entry (aliases not merged); throws Error(UnknownCase).
    CaseSpec& raw(const std::string& id);
    const CaseSpec& raw(const std::string& id) const;

private:
    std::vector<CaseSpec> entries_;
};

/// Surface model and boundary data of one case at one degree.
struct BuiltCase {
    CaseSpec spec;
    int d = 0;
    SurfaceModel model;

    Rational a(const Rational& lambda) const { return Rational(3) - d * lambda; }
    /// a σ*H - v E as a family in v at the given λ.
    DivisorExpr divisor(const Rational& lambda) const;
    std::size_t index_E() const { return 0; }
    std::optional<std::size_t> index_L() const;
};

/// Throws Error(UnknownCase) or Error(DegreeNotAdmissible).
BuiltCase build_case(const Catalog& catalog, const std::string& id, int d);

struct CaseSummary {
    std::string id;
    std::string label;
    std::string alias_of;
    std::vector<DegreeEntry> degrees;
    std::string description;
};

std::vector<CaseSummary> list_cases(const Catalog& catalog);

/// Static consistency checks; returns one message per violation.
std::vector<std::string> validate_case(const Catalog& catalog, const std::string& id);
std::vector<std::string> validate_catalog(const Catalog& catalog);

/// A numeric field of a raw catalog entry that can be overwritten.
struct FaultSite {
    std::string case_id;
    std::string field;
    Rational current;
};

/// Every overwritable numeric field of the non-alias entries.
std::vector<FaultSite> fault_sites(const Catalog& catalog);

/// Overwrites one field; throws Error(InvalidInput) for unknown fields.
void apply_fault(Catalog& catalog, const std::string& case_id, const std::string& field,
                 const Rational& value);

/// Parses "CASE.field=value" and applies it.
void apply_fault_spec(Catalog& catalog, const std::string& spec);

} // namespace kdelta

#endif // KDELTA_CATALOG_HPP
