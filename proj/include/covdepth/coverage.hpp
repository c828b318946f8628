#pragma once

// Expected number of uniform column draws (with repetition) until the drawn
// columns of a generator matrix reach full rank.
//
//   exact      nH_n - sum_{s=k}^{n-1} alpha(C,s) / C(n-1,s)
//   dual       same sum, alpha(C,s) read off the dual code as the number of
//              independent (n-s)-subsets of its generator columns
//   formula    closed forms for simplex and Hamming codes
//   lower bound n(H_n - H_{n-k}), met exactly by MDS codes
//   monte carlo i.i.d. trials on a counter-based stream per trial

#include "covdepth/codes.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"
#include "covdepth/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace covdepth {

/// n(H_n - H_{n-k}) = sum_{i=0}^{k-1} n/(n-i).
inline Rational mds_bound(std::uint64_t n, std::uint64_t k) {
    if (k < 1 || k > n) throw std::invalid_argument("mds_bound needs 1 <= k <= n");
    return Rational(n) * harmonic_range(n - k, n);
}

/// nH_n - sum_{s=k}^{n-1} alpha[s] / C(n-1, s).
inline Rational expectation_from_alpha(std::size_t n, std::size_t k, const std::vector<BigInt>& alpha) {
    Rational e = Rational(n) * harmonic(n);
    for (std::size_t s = k; s < n; ++s) e -= Rational(alpha[s], binomial(n - 1, s));
    return e;
}

inline Rational expectation_exact(const LinearCode& code) {
    if (code.dimension() == 0) throw std::invalid_argument("expectation of a zero-dimensional code");
    return expectation_from_alpha(code.length(), code.dimension(), information_set_counts(code));
}

/// Throws std::domain_error when the rows are dependent.
inline Rational expectation_exact(const Matrix& generator) {
    if (rank(generator) != generator.rows()) throw std::domain_error("generator matrix is rank deficient");
    return expectation_exact(LinearCode(generator));
}

/// Cheaper than the primal route when n - k is small: only independent
/// column sets of size <= n - k of the dual generator are visited.
inline Rational expectation_exact_dual(const LinearCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    if (k == 0) throw std::invalid_argument("expectation of a zero-dimensional code");
    const LinearCode d = dual(code);
    const auto independent = independent_set_counts(d, n - k);
    // alpha(C, s) = beta_{s-k}(C^perp, n-s) = #independent (n-s)-subsets of C^perp
    std::vector<BigInt> alpha(n + 1, 0);
    for (std::size_t s = k; s < n; ++s) alpha[s] = independent[n - s];
    return expectation_from_alpha(n, k, alpha);
}

enum class ExactRoute { primal, dual };

/// Dual when n - k < k.
inline ExactRoute preferred_route(const LinearCode& code) {
    return code.length() - code.dimension() < code.dimension() ? ExactRoute::dual : ExactRoute::primal;
}

inline Rational expectation(const LinearCode& code) {
    return preferred_route(code) == ExactRoute::dual ? expectation_exact_dual(code) : expectation_exact(code);
}

/// Closed form for the q-ary simplex code of dimension k:
/// k + sum_{i=1}^k (q^{i-1} - 1) / (q^k - q^{i-1}).
inline Rational expectation_simplex(std::uint64_t q, std::size_t k) {
    if (k < 2) throw std::invalid_argument("simplex code needs k >= 2");
    BigInt qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    Rational e = k;
    BigInt qi = 1;  // q^{i-1}
    for (std::size_t i = 1; i <= k; ++i, qi *= q) e += Rational(qi - 1, qk - qi);
    return e;
}

inline Rational expectation_simplex(const Field& field, std::size_t k) { return expectation_simplex(field.order(), k); }

/// Closed form for the q-ary Hamming code of redundancy r, n = (q^r-1)/(q-1):
/// nH_n - sum_{l=1}^r [prod_{i<l} (q^r - q^i)/(q-1)] / (l! C(n-1, n-l)).
inline Rational expectation_hamming(std::uint64_t q, std::size_t r) {
    if (r < 2) throw std::invalid_argument("Hamming code needs r >= 2");
    const std::uint64_t n = projective_point_count(q, r);
    BigInt qr = 1;
    for (std::size_t i = 0; i < r; ++i) qr *= q;
    Rational e = Rational(n) * harmonic(n);
    BigInt product = 1, factorial = 1, qi = 1;
    for (std::size_t l = 1; l <= r; ++l) {
        // (q^r - q^{l-1}) is divisible by (q - 1)
        product *= (qr - qi) / (q - 1);
        factorial *= l;
        qi *= q;
        e -= Rational(product, factorial * binomial(n - 1, n - l));
    }
    return e;
}

inline Rational expectation_hamming(const Field& field, std::size_t r) { return expectation_hamming(field.order(), r); }

/// Draw-by-draw simulation of one trial. Columns are copied once; reuse a
/// runner for many trials.
class TrialRunner {
public:
    explicit TrialRunner(const LinearCode& code)
        : cols_(code.generator().columns()), span_(code.field(), code.dimension()) {
        if (cols_.size() > std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("code too long for simulation");
    }

    /// Number of draws until the drawn columns span GF(q)^k.
    std::uint64_t run(CounterStream& rng) {
        span_.clear();
        std::uint64_t draws = 0;
        const auto n = static_cast<std::uint32_t>(cols_.size());
        while (!span_.full()) {
            span_.insert(cols_[rng.uniform(n)]);
            ++draws;
        }
        return draws;
    }

    /// Draws spent in each rank phase: entry i is the number of draws taken
    /// while the span had dimension i.
    std::vector<std::uint64_t> run_phases(CounterStream& rng) {
        span_.clear();
        std::vector<std::uint64_t> phases(span_.dimension(), 0);
        const auto n = static_cast<std::uint32_t>(cols_.size());
        while (!span_.full()) {
            ++phases[span_.rank()];
            span_.insert(cols_[rng.uniform(n)]);
        }
        return phases;
    }

private:
    std::vector<std::vector<Element>> cols_;
    IncrementalSpan span_;
};

/// One trial on stream `trial_index` of `seed`.
inline std::uint64_t simulate_trial(const LinearCode& code, std::uint64_t seed, std::uint64_t trial_index) {
    TrialRunner runner(code);
    CounterStream rng(seed, trial_index);
    return runner.run(rng);
}

struct McEstimate {
    Rational mean;      // exact sample mean
    Decimal std_error;  // sample std / sqrt(trials); 0 for a single trial
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t min_draws = 0;
    std::uint64_t max_draws = 0;
};

namespace detail {

struct McTotals {
    BigInt sum = 0;
    BigInt sum_sq = 0;
    std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max = 0;

    void merge(const McTotals& o) {
        sum += o.sum;
        sum_sq += o.sum_sq;
        min = std::min(min, o.min);
        max = std::max(max, o.max);
    }
};

inline McTotals run_trials(const LinearCode& code, std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
    TrialRunner runner(code);
    McTotals t;
    // 64-bit partial sums, flushed before they could overflow
    std::uint64_t s = 0, ss = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        CounterStream rng(seed, i);
        const std::uint64_t d = runner.run(rng);
        if (d > (std::uint64_t{1} << 31) || ss > (std::uint64_t{1} << 62)) {
            t.sum += s;
            t.sum_sq += ss;
            s = ss = 0;
        }
        s += d;
        ss += d * d;
        t.min = std::min(t.min, d);
        t.max = std::max(t.max, d);
    }
    t.sum += s;
    t.sum_sq += ss;
    return t;
}

}  // namespace detail

/// Trial i uses stream i of `seed`; totals are exact integers, so the
/// result is identical for every `jobs` value.
inline McEstimate expectation_monte_carlo(const LinearCode& code, std::uint64_t trials, std::uint64_t seed,
                                          unsigned jobs = 1) {
    if (trials < 1) throw std::invalid_argument("monte carlo needs at least one trial");
    if (code.dimension() == 0) throw std::invalid_argument("expectation of a zero-dimensional code");
    jobs = std::max(1u, jobs);
    if (jobs > trials) jobs = static_cast<unsigned>(trials);

    std::vector<detail::McTotals> parts(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = trials / jobs, extra = trials % jobs;
    std::uint64_t begin = 0;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t end = begin + chunk + (j < extra ? 1 : 0);
        workers.emplace_back([&, j, begin, end] { parts[j] = detail::run_trials(code, seed, begin, end); });
        begin = end;
    }
    for (auto& w : workers) w.join();

    detail::McTotals total;
    for (const auto& p : parts) total.merge(p);

    McEstimate est;
    est.trials = trials;
    est.seed = seed;
    est.min_draws = total.min;
    est.max_draws = total.max;
    est.mean = Rational(total.sum, BigInt(trials));
    if (trials > 1) {
        // unbiased variance (sum_sq - sum^2/N) / (N-1), then / N for the mean
        const Rational var = (Rational(total.sum_sq) - Rational(total.sum * total.sum, BigInt(trials))) /
                             Rational(BigInt(trials - 1));
        est.std_error = sqrt(to_decimal(var / Rational(BigInt(trials))));
    }
    return est;
}

}  // namespace covdepth
