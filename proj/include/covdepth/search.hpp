#pragma once

// Exhaustive search for the [n,k]_q codes with the smallest expected draw
// count.
//
// Permuting columns or scaling one by a nonzero constant does not change the
// rank of any set of drawn columns, so the draw-count distribution only
// depends on the multiset of projective points the columns represent. The
// projective mode enumerates those multisets; the full mode enumerates raw
// generator matrices and exists to check that reduction on tiny parameters.

#include "covdepth/codes.hpp"
#include "covdepth/coverage.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace covdepth {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SearchMode { projective, full };

inline std::string to_string(SearchMode m) { return m == SearchMode::projective ? "projective" : "full"; }

inline SearchMode parse_search_mode(const std::string& s) {
    if (s == "projective") return SearchMode::projective;
    if (s == "full") return SearchMode::full;
    throw std::invalid_argument("unknown search mode: " + s);
}

/// Sorted projective-point indices (into projective_points(F, k)), plus the
/// number of zero columns (full mode only).
struct CandidateMultiset {
    std::vector<std::size_t> points;
    std::size_t zero_columns = 0;

    auto operator<=>(const CandidateMultiset&) const = default;
    bool operator==(const CandidateMultiset&) const = default;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    unsigned jobs = 1;
    bool include_zero_columns = false;  // full mode only
    bool collect_values = false;        // keep every distinct value
    bool check_canonical = false;       // full mode: rescore each canonical multiset
};

struct SearchReport {
    std::uint64_t q = 0;
    std::size_t k = 0;
    std::size_t n = 0;
    SearchMode mode = SearchMode::projective;
    BigInt raw_candidates = 0;              // before the rank filter
    std::uint64_t candidates_examined = 0;  // rank-k candidates scored
    Rational minimum;
    std::vector<CandidateMultiset> optimal_candidates;  // sorted, deduplicated
    std::optional<Rational> runner_up;                  // smallest value > minimum
    std::set<Rational> values;                          // when collect_values
    Rational zero_column_minimum = -1;                  // -1 when none scored
    bool canonical_consistent = true;                   // when check_canonical
    double wall_time_seconds = 0;
};

namespace detail {

struct SearchFold {
    std::optional<Rational> best;
    std::vector<CandidateMultiset> argmin;
    std::optional<Rational> second;
    std::uint64_t examined = 0;
    std::set<Rational> values;
    std::optional<Rational> zero_best;
    bool canonical_ok = true;

    void offer_value(const Rational& v) {
        if (!best || v < *best) {
            if (best) second = second ? std::min(*second, *best) : *best;
            best = v;
            argmin.clear();
        } else if (v > *best && (!second || v < *second)) {
            second = v;
        }
    }

    void add(const Rational& v, const CandidateMultiset& c, bool keep_values) {
        ++examined;
        if (keep_values) values.insert(v);
        if (c.zero_columns > 0 && (!zero_best || v < *zero_best)) zero_best = v;
        offer_value(v);
        if (v == *best) argmin.push_back(c);
    }

    void merge(SearchFold&& o) {
        examined += o.examined;
        values.merge(o.values);
        canonical_ok = canonical_ok && o.canonical_ok;
        if (o.zero_best && (!zero_best || *o.zero_best < *zero_best)) zero_best = o.zero_best;
        if (!o.best) return;
        offer_value(*o.best);
        if (*o.best == *best) argmin.insert(argmin.end(), o.argmin.begin(), o.argmin.end());
        // o.second > o.best >= best, so it can only become the runner-up
        if (o.second) offer_value(*o.second);
    }
};

inline BigInt int_pow(std::uint64_t base, std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Runs part(0..parts-1) on `jobs` threads and folds the results in part order.
inline SearchFold run_partitioned(std::size_t parts, unsigned jobs, const std::function<SearchFold(std::size_t)>& part) {
    std::vector<SearchFold> results(parts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < parts; i = next++) results[i] = part(i);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(parts, 1))));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    SearchFold total;
    for (auto& r : results) total.merge(std::move(r));
    return total;
}

// Index of v in projective_points order, or nullopt for the zero vector.
inline std::optional<std::size_t> projective_index(const Field& f, const std::vector<std::vector<Element>>& points,
                                                   std::vector<Element> v) {
    auto lead = std::find_if(v.begin(), v.end(), [](Element x) { return x != 0; });
    if (lead == v.end()) return std::nullopt;
    const Element scale = f.inv(*lead);
    for (auto& x : v) x = f.mul_raw(x, scale);
    auto it = std::lower_bound(points.begin(), points.end(), v);
    return static_cast<std::size_t>(it - points.begin());
}

inline Matrix candidate_matrix(const Field& f, std::size_t k, const std::vector<std::vector<Element>>& points,
                               const CandidateMultiset& c) {
    Matrix g(f, k, c.points.size() + c.zero_columns);
    for (std::size_t j = 0; j < c.points.size(); ++j)
        for (std::size_t r = 0; r < k; ++r) g(r, j) = points[c.points[j]][r];
    return g;
}

}  // namespace detail

/// Number of size-n multisets over the projective points, C(P+n-1, n).
inline BigInt projective_multiset_count(std::uint64_t q, std::size_t k, std::size_t n) {
    const std::uint64_t p = projective_point_count(q, k);
    return binomial(p + n - 1, n);
}

/// Calls visit(candidate) for every spanning size-n multiset of projective
/// points whose smallest element is `first` (all of them if first is
/// nullopt), in lexicographic order.
template <typename Visit>
void enumerate_projective(const Field& field, std::size_t k, std::size_t n, std::optional<std::size_t> first,
                          Visit&& visit) {
    const auto points = projective_points(field, k);
    const std::size_t p = points.size();
    if (n == 0) return;
    std::vector<std::size_t> idx(n, first.value_or(0));
    IncrementalSpan span(field, k);
    while (true) {
        if (first && idx[0] != *first) return;
        span.clear();
        for (auto i : idx) span.insert(points[i]);
        if (span.full()) visit(CandidateMultiset{idx, 0});
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == p - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[i - 1];
    }
}

/// Every spanning candidate in lexicographic order. Throws BudgetExceeded
/// when the raw multiset count is above `budget`.
inline std::vector<CandidateMultiset> enumerate_candidates(const Field& field, std::size_t k, std::size_t n,
                                                           std::uint64_t budget = 10'000'000) {
    if (k < 1 || k > n) throw std::invalid_argument("search needs 1 <= k <= n");
    if (projective_multiset_count(field.order(), k, n) > budget)
        throw BudgetExceeded("candidate count exceeds budget");
    std::vector<CandidateMultiset> out;
    enumerate_projective(field, k, n, std::nullopt, [&](const CandidateMultiset& c) { out.push_back(c); });
    return out;
}

/// E_opt[n,k]_q with every minimizing candidate and the next value up.
/// Deterministic for any number of jobs.
inline SearchReport optimal_coverage(const Field& field, std::size_t k, std::size_t n, SearchMode mode,
                                     const SearchOptions& opt = {}) {
    if (k < 1 || k > n) throw std::invalid_argument("search needs 1 <= k <= n");
    const auto start = std::chrono::steady_clock::now();
    const auto points = projective_points(field, k);
    const std::uint64_t q = field.order();

    SearchReport report;
    report.q = q;
    report.k = k;
    report.n = n;
    report.mode = mode;

    auto score = [&](const Matrix& g) { return expectation(LinearCode(g)); };

    detail::SearchFold fold;
    if (mode == SearchMode::projective) {
        report.raw_candidates = projective_multiset_count(q, k, n);
        if (report.raw_candidates > opt.budget) throw BudgetExceeded("candidate count exceeds budget");
        fold = detail::run_partitioned(points.size(), opt.jobs, [&](std::size_t first) {
            detail::SearchFold part;
            enumerate_projective(field, k, n, first, [&](const CandidateMultiset& c) {
                part.add(score(detail::candidate_matrix(field, k, points, c)), c, opt.collect_values);
            });
            return part;
        });
    } else {
        // columns are integers in [0, q^k), coordinate 0 most significant
        const std::uint64_t qk = static_cast<std::uint64_t>(detail::int_pow(q, k));
        const std::uint64_t lowest = opt.include_zero_columns ? 0 : 1;
        const std::uint64_t per_col = qk - lowest;
        report.raw_candidates = detail::int_pow(per_col, n);
        if (report.raw_candidates > opt.budget) throw BudgetExceeded("matrix count exceeds budget");
        auto column = [&](std::uint64_t code) {
            std::vector<Element> v(k);
            for (std::size_t r = k; r-- > 0; code /= q) v[r] = static_cast<Element>(code % q);
            return v;
        };
        fold = detail::run_partitioned(per_col, opt.jobs, [&](std::size_t first) {
            detail::SearchFold part;
            std::vector<std::uint64_t> cols(n, lowest);
            cols[0] = lowest + first;
            Matrix g(field, k, n);
            while (true) {
                CandidateMultiset c;
                for (std::size_t j = 0; j < n; ++j) {
                    auto v = column(cols[j]);
                    for (std::size_t r = 0; r < k; ++r) g(r, j) = v[r];
                    if (auto idx = detail::projective_index(field, points, std::move(v)))
                        c.points.push_back(*idx);
                    else
                        ++c.zero_columns;
                }
                std::sort(c.points.begin(), c.points.end());
                if (rank(g) == k) {
                    const Rational v = score(g);
                    if (opt.check_canonical && c.zero_columns == 0 &&
                        score(detail::candidate_matrix(field, k, points, c)) != v)
                        part.canonical_ok = false;
                    part.add(v, c, opt.collect_values);
                }
                std::size_t j = n;
                while (j > 1 && cols[j - 1] == qk - 1) cols[--j] = lowest;
                if (j == 1) break;
                ++cols[j - 1];
            }
            return part;
        });
    }

    if (!fold.best) throw std::invalid_argument("no rank-k candidate exists");
    report.candidates_examined = fold.examined;
    report.minimum = *fold.best;
    report.runner_up = fold.second;
    std::sort(fold.argmin.begin(), fold.argmin.end());
    fold.argmin.erase(std::unique(fold.argmin.begin(), fold.argmin.end()), fold.argmin.end());
    report.optimal_candidates = std::move(fold.argmin);
    report.values = std::move(fold.values);
    if (fold.zero_best) report.zero_column_minimum = *fold.zero_best;
    report.canonical_consistent = fold.canonical_ok;
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

struct ReductionCheck {
    bool value_sets_equal = false;
    bool minima_equal = false;
    bool canonical_consistent = false;  // each matrix scores like its multiset
    bool zero_columns_dominated = false;
    std::uint64_t matrices = 0;

    bool passed() const { return value_sets_equal && minima_equal && canonical_consistent && zero_columns_dominated; }
};

/// Compares the full enumeration of k x n generator matrices against the
/// projective candidates. Guarded at 10^7 matrices (zero columns included).
inline ReductionCheck verify_reduction_report(const Field& field, std::size_t k, std::size_t n, unsigned jobs = 1) {
    constexpr std::uint64_t kGuard = 10'000'000;
    if (detail::int_pow(field.order(), k * n) > kGuard) throw BudgetExceeded("verify_reduction: too many matrices");
    SearchOptions opt;
    opt.budget = kGuard;
    opt.jobs = jobs;
    opt.collect_values = true;

    const SearchReport proj = optimal_coverage(field, k, n, SearchMode::projective, opt);
    opt.check_canonical = true;
    const SearchReport full = optimal_coverage(field, k, n, SearchMode::full, opt);
    opt.check_canonical = false;
    opt.collect_values = false;
    opt.include_zero_columns = true;
    const SearchReport with_zero = optimal_coverage(field, k, n, SearchMode::full, opt);

    ReductionCheck out;
    out.matrices = static_cast<std::uint64_t>(with_zero.raw_candidates);
    out.value_sets_equal = proj.values == full.values;
    out.minima_equal = proj.minimum == full.minimum && with_zero.minimum == full.minimum;
    out.canonical_consistent = full.canonical_consistent;
    // a candidate with a zero column never beats the best zero-free one
    out.zero_columns_dominated = with_zero.zero_column_minimum < 0 || with_zero.zero_column_minimum >= full.minimum;
    return out;
}

inline bool verify_reduction(const Field& field, std::size_t k, std::size_t n, unsigned jobs = 1) {
    return verify_reduction_report(field, k, n, jobs).passed();
}

}  // namespace covdepth
