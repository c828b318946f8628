#pragma once

// Comparisons between closed-form expectations and the MDS lower bound as
// q or k grows, and the limiting constants they approach. Limits can only be
// checked on finite grids, so every evaluator returns exact values where
// they exist and 50-digit decimals elsewhere.

#include "covdepth/codes.hpp"
#include "covdepth/coverage.hpp"
#include "covdepth/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace covdepth {

/// (1/R) ln(1/(1-R)): limit of E[C_n]/k_n for MDS codes of rate R.
inline Decimal mds_rate_limit(const Decimal& rate) {
    if (!(rate > 0) || !(rate < 1)) throw std::invalid_argument("rate must lie in (0,1)");
    return log(Decimal(1) / (Decimal(1) - rate)) / rate;
}

/// Limit of E[C_i]/k_i when k_i/n_i -> 0.
inline Decimal mds_vanishing_rate_limit() { return Decimal(1); }

/// mds_bound(n, floor(nR)) / floor(nR).
inline Decimal mds_bound_per_dimension(std::uint64_t n, const Decimal& rate) {
    const auto k = static_cast<std::uint64_t>(floor(Decimal(n) * rate).convert_to<long long>());
    if (k < 1) throw std::invalid_argument("floor(nR) must be positive");
    return to_decimal(mds_bound(n, k) / Rational(k));
}

/// 2(H_{2m} - H_m) = mds_bound(2m, m)/m for m = 1..max_m, accumulated in
/// 50-digit decimals (exact rationals get too wide for a long sweep).
inline std::vector<Decimal> half_rate_sweep(std::uint64_t max_m) {
    std::vector<Decimal> out;
    out.reserve(max_m);
    Decimal diff = 0;  // H_{2m} - H_m
    for (std::uint64_t m = 1; m <= max_m; ++m) {
        // H_{2m} - H_m = H_{2m-2} - H_{m-1} + 1/(2m-1) + 1/(2m) - 1/m
        diff += Decimal(1) / Decimal(2 * m - 1) + Decimal(1) / Decimal(2 * m) - Decimal(1) / Decimal(m);
        out.push_back(2 * diff);
    }
    return out;
}

struct GapReport {
    std::uint64_t q = 0;
    std::size_t k_or_r = 0;
    std::uint64_t n = 0;
    Rational exact;  // E[C]
    Rational bound;  // mds_bound(n, dim)
    Rational gap;    // exact - bound
    Decimal ratio;   // exact / bound
    std::optional<Decimal> predicted;
};

namespace detail {

inline GapReport make_gap(std::uint64_t q, std::size_t param, std::uint64_t n, Rational exact, Rational bound) {
    GapReport g;
    g.q = q;
    g.k_or_r = param;
    g.n = n;
    g.gap = exact - bound;
    g.ratio = to_decimal(exact / bound);
    g.exact = std::move(exact);
    g.bound = std::move(bound);
    return g;
}

}  // namespace detail

/// Simplex code vs the bound. The 1/(q-1) prediction is attached only for
/// k >= 3, where the leading-order estimate applies.
inline GapReport simplex_gap(std::uint64_t q, std::size_t k) {
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    const std::uint64_t n = projective_point_count(q, k);
    GapReport g = detail::make_gap(q, k, n, expectation_simplex(q, k), mds_bound(n, k));
    if (k >= 3) g.predicted = Decimal(1) / Decimal(q - 1);
    return g;
}

struct SeriesValue {
    Decimal value;
    std::size_t terms = 0;
};

/// sum_{i>=1} 1/(q^i - 1), stopped once the tail bound 2/q^i is below tol.
inline SeriesValue simplex_gap_series_limit(std::uint64_t q, const Decimal& tol) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    SeriesValue s;
    Decimal qi = 1;
    while (true) {
        qi *= q;
        s.value += Decimal(1) / (qi - 1);
        ++s.terms;
        if (Decimal(2) / qi < tol) break;
    }
    return s;
}

/// (H_r - (r-1)/r) q^{r-2}: leading term of the Hamming gap upper estimate.
inline Rational hamming_gap_leading_term(std::uint64_t q, std::size_t r) {
    if (r < 2) throw std::invalid_argument("Hamming code needs r >= 2");
    BigInt qp = 1;
    for (std::size_t i = 2; i < r; ++i) qp *= q;
    return (harmonic(r) - Rational(r - 1, r)) * Rational(qp);
}

/// Hamming code vs the bound, with the leading-term estimate as prediction.
inline GapReport hamming_gap(std::uint64_t q, std::size_t r) {
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power");
    const std::uint64_t n = projective_point_count(q, r);
    GapReport g = detail::make_gap(q, r, n, expectation_hamming(q, r), mds_bound(n, n - r));
    g.predicted = to_decimal(hamming_gap_leading_term(q, r));
    return g;
}

struct BinaryHammingRatio {
    Rational limit_bound;        // H_{2^r-1} - H_r
    Rational difference_coeff;   // (H_{2^r-1} - H_r - 1) 2^r
    std::optional<Rational> exact_ratio;  // E[C] / bound, when computed
};

/// Binary Hamming code of redundancy r. The exact ratio is filled in when
/// with_exact is set (cost grows like 2^r harmonic terms).
inline BinaryHammingRatio binary_hamming_ratio_bound(std::size_t r, bool with_exact = true) {
    if (r < 2) throw std::invalid_argument("Hamming code needs r >= 2");
    if (r > 40) throw std::invalid_argument("redundancy too large");
    const std::uint64_t n = (std::uint64_t{1} << r) - 1;
    BinaryHammingRatio out;
    out.limit_bound = harmonic_range(r, n);
    out.difference_coeff = (out.limit_bound - 1) * Rational(BigInt(n + 1));
    if (with_exact) out.exact_ratio = expectation_hamming(2, r) / mds_bound(n, n - r);
    return out;
}

}  // namespace covdepth
