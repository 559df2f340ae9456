// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_VERIFY_HPP
#define KDELTA_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/exact.hpp"

namespace kdelta {

/// Closed form reconstructed for one (degree, option) of a case.
struct FittedForm {
    int d = 0;
    std::size_t option = 0;
    /// Reduced form, or the error message when reconstruction failed.
    std::string text;
    bool matches = false;
    std::optional<RationalFunction> fitted;
};

struct CaseVerification {
    std::string id;
    bool pass = true;
    std::size_t samples = 0;
    std::vector<FittedForm> forms;
    std::vector<std::string> failures;
};

struct VerifyReport {
    std::vector<CaseVerification> cases;
    /// Violations from whole-catalog checks (duplicate ids and the like).
    std::vector<std::string> catalog_failures;
    std::vector<std::string> threefold_failures;

    bool pass() const;
    std::size_t passed() const;
};

/// Number of rational λ samples per validity interval.
inline constexpr std::size_t kVerifySamples = 6;

/// Runs every check for one case: static validation, exact values and minimizers at sampled λ,
/// flag multipliers, closed-form reconstruction, lower-bound regime and λ = 0 normalization.
CaseVerification verify_case(const Catalog& catalog, const std::string& id);

/// Volume integrals and corollary bounds of the threefold module.
std::vector<std::string> verify_threefold(const Catalog& catalog);

/// Verifies the listed cases (all when empty) using up to `jobs` threads. The report lists
/// cases in the order given, independent of `jobs`.
VerifyReport verify_catalog(const Catalog& catalog, const std::vector<std::string>& ids, unsigned jobs = 1);

} // namespace kdelta

#endif // KDELTA_VERIFY_HPP
