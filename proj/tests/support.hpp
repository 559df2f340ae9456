// Copyright 2026 kdelta authors
// SPDX-License-Identifier: MIT

#ifndef KDELTA_TESTS_SUPPORT_HPP
#define KDELTA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kdelta/catalog.hpp"
#include "kdelta/exact.hpp"

namespace kdelta::testing {

/// Seeded generator of random test inputs. Every property test fixes its seed so failures
/// replay exactly.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// Rational p/q with 1 <= q <= max_den strictly inside (lo, hi) when possible, else the midpoint.
    Rational rational_inside(const Rational& lo, const Rational& hi, int max_den = 97) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            const int den = integer(1, max_den);
            const mpz_class lo_num = mpz_class(floor_value(lo * den)) + 1;
            const mpz_class hi_num = mpz_class(ceil_value(hi * den)) - 1;
            if (lo_num > hi_num) continue;
            const mpz_class span = hi_num - lo_num;
            const long pick = integer(0, static_cast<int>(std::min<long>(span.get_si(), 1000000)));
            Rational r(lo_num + pick, den);
            r.canonicalize();
            if (r > lo && r < hi) return r;
        }
        return (lo + hi) / 2;
    }

    /// Rational in the closed interval [lo, hi].
    Rational rational_in(const Rational& lo, const Rational& hi, int max_den = 97) {
        if (integer(0, 9) == 0) return integer(0, 1) ? lo : hi;
        return rational_inside(lo, hi, max_den);
    }

    Poly poly(int max_degree, int coeff_range) {
        std::vector<Rational> c;
        const int deg = integer(0, max_degree);
        for (int i = 0; i <= deg; ++i) c.push_back(ratio(integer(-coeff_range, coeff_range), integer(1, 9)));
        return Poly(c);
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
    }

private:
    static mpz_class floor_value(const Rational& r) {
        mpz_class out;
        mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return out;
    }
    static mpz_class ceil_value(const Rational& r) {
        mpz_class out;
        mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
        return out;
    }

    std::mt19937_64 rng_;
};

/// Every (case id, degree) pair of the catalog, aliases included.
inline std::vector<std::pair<std::string, int>> all_case_degrees(const Catalog& catalog) {
    std::vector<std::pair<std::string, int>> out;
    for (const auto& c : catalog.entries()) {
        for (const auto& e : catalog.resolve(c.id).degrees) out.emplace_back(c.id, e.d);
    }
    return out;
}

/// λ samples strictly inside [lo, hi] at lo + (hi - lo) k / (n + 1).
inline std::vector<Rational> evenly_inside(const Interval& iv, int n) {
    std::vector<Rational> out;
    for (int k = 1; k <= n; ++k) out.push_back(iv.lo + (iv.hi - iv.lo) * k / (n + 1));
    return out;
}

} // namespace kdelta::testing

#endif // KDELTA_TESTS_SUPPORT_HPP
