#include "oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace covdepth;

namespace {

TEST(Search, BinarySimplexIsTheUniqueOptimum) {
    SearchOptions opt;
    opt.collect_values = true;
    const auto r = optimal_coverage(Field(2, 1), 3, 7, SearchMode::projective, opt);
    EXPECT_EQ(r.raw_candidates, 1716);
    EXPECT_EQ(r.candidates_examined, 1478u);
    EXPECT_EQ(r.minimum, Rational(47, 12));
    ASSERT_EQ(r.optimal_candidates.size(), 1u);
    EXPECT_EQ(r.optimal_candidates[0].points, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
    ASSERT_TRUE(r.runner_up);
    EXPECT_EQ(*r.runner_up, Rational(17, 4));
    auto it = r.values.begin();
    EXPECT_EQ(*it++, Rational(47, 12));
    EXPECT_EQ(*it++, Rational(17, 4));
    EXPECT_EQ(*it, Rational(67, 15));
}

TEST(Search, SmallInstances) {
    const auto a = optimal_coverage(Field(2, 1), 2, 2, SearchMode::projective);
    EXPECT_EQ(a.raw_candidates, 6);
    EXPECT_EQ(a.candidates_examined, 3u);
    EXPECT_EQ(a.minimum, Rational(3));

    const auto b = optimal_coverage(Field(2, 1), 2, 3, SearchMode::projective);
    EXPECT_EQ(b.raw_candidates, 10);
    EXPECT_EQ(b.candidates_examined, 7u);
    EXPECT_EQ(b.minimum, Rational(5, 2));

    const auto c = optimal_coverage(Field(3, 1), 2, 4, SearchMode::projective);
    EXPECT_EQ(c.raw_candidates, 35);
    EXPECT_EQ(c.candidates_examined, 31u);
    EXPECT_EQ(c.minimum, Rational(7, 3));
    EXPECT_EQ(c.minimum, mds_bound(4, 2));
}

TEST(Search, MinimumDominatesEveryCandidate) {
    const Field f(3, 1);
    const auto r = optimal_coverage(f, 2, 5, SearchMode::projective);
    const auto pts = projective_points(f, 2);
    std::size_t hits = 0;
    for (const auto& c : enumerate_candidates(f, 2, 5)) {
        const Rational v = expectation_exact(detail::candidate_matrix(f, 2, pts, c));
        ASSERT_GE(v, r.minimum);
        if (v == r.minimum) ++hits;
    }
    EXPECT_EQ(hits, r.optimal_candidates.size());
}

TEST(Search, JobCountDoesNotChangeTheReport) {
    SearchOptions opt;
    opt.collect_values = true;
    const auto a = optimal_coverage(Field(2, 2), 2, 6, SearchMode::projective, opt);
    opt.jobs = 4;
    const auto b = optimal_coverage(Field(2, 2), 2, 6, SearchMode::projective, opt);
    EXPECT_EQ(a.minimum, b.minimum);
    EXPECT_EQ(a.optimal_candidates, b.optimal_candidates);
    EXPECT_EQ(a.runner_up, b.runner_up);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(dump(search_report_json(a, Field(2, 2), 20)), dump(search_report_json(b, Field(2, 2), 20)));
}

TEST(Search, ReductionAgreesWithFullEnumeration) {
    for (auto [q, k, n] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{
             {2, 2, 3}, {2, 2, 4}, {3, 2, 3}}) {
        const auto r = verify_reduction_report(Field::from_order(q), k, n);
        EXPECT_TRUE(r.value_sets_equal);
        EXPECT_TRUE(r.minima_equal);
        EXPECT_TRUE(r.canonical_consistent);
        EXPECT_TRUE(r.zero_columns_dominated);
        EXPECT_EQ(r.matrices, static_cast<std::uint64_t>(std::pow(q, k * n)));
    }
}

TEST(Search, BudgetAndArgumentErrors) {
    SearchOptions opt;
    opt.budget = 100;
    EXPECT_THROW(optimal_coverage(Field(2, 1), 3, 7, SearchMode::projective, opt), BudgetExceeded);
    EXPECT_THROW(optimal_coverage(Field(2, 1), 3, 2, SearchMode::projective), std::invalid_argument);
    EXPECT_THROW(verify_reduction(Field(5, 1), 3, 4), BudgetExceeded);
    EXPECT_THROW(parse_search_mode("greedy"), std::invalid_argument);
    EXPECT_EQ(parse_search_mode("full"), SearchMode::full);
}

TEST(Asymptotics, SimplexGapTimesQMinusOneApproachesOne) {
    Decimal prev_dev = 10;
    for (std::uint64_t q : {4, 8, 16, 32, 64}) {
        const auto g = simplex_gap(q, 3);
        ASSERT_TRUE(g.predicted);
        EXPECT_EQ(*g.predicted, Decimal(1) / Decimal(q - 1));
        const Decimal dev = abs(to_decimal(g.gap) * Decimal(q - 1) - 1);
        EXPECT_LT(dev, prev_dev) << q;
        prev_dev = dev;
    }
    EXPECT_LT(prev_dev, Decimal("0.1"));
    EXPECT_LT(abs(simplex_gap(64, 3).ratio - 1), Decimal("1e-2"));
    EXPECT_FALSE(simplex_gap(2, 2).predicted);
    EXPECT_THROW(simplex_gap(6, 3), std::invalid_argument);
}

TEST(Asymptotics, SimplexGapRisesTowardsTheSeries) {
    const auto series = simplex_gap_series_limit(2, Decimal("1e-30"));
    EXPECT_LT(abs(series.value - Decimal("1.6066951524152917637833015231909245804805796715057")), Decimal("1e-29"));
    Rational prev = 0;
    for (std::size_t k = 3; k <= 12; ++k) {
        const Rational gap = simplex_gap(2, k).gap;
        EXPECT_GT(gap, prev);
        EXPECT_LT(to_decimal(gap), series.value);
        prev = gap;
    }
}

TEST(Asymptotics, HammingGapStaysUnderLeadingTerm) {
    // (H_r - (r-1)/r) q^{r-2}; r = 3 gives (11/6 - 2/3) q
    EXPECT_EQ(hamming_gap_leading_term(5, 3), Rational(35, 6));
    EXPECT_EQ(hamming_gap_leading_term(9, 2), Rational(1));
    // r = 2 Hamming codes are MDS
    EXPECT_EQ(hamming_gap(7, 2).gap, 0);
    const Rational slack = harmonic(3) - Rational(2, 3) + Rational(1, 2);
    Decimal prev = 10;
    for (std::uint64_t q : {4, 8, 16, 32}) {
        const auto g = hamming_gap(q, 3);
        EXPECT_GE(g.gap, 0);
        EXPECT_LE(g.gap, hamming_gap_leading_term(q, 3));
        EXPECT_LE(g.gap / Rational(q), slack);
        EXPECT_GT(g.ratio, 1);
        EXPECT_LT(g.ratio, prev) << q;
        prev = g.ratio;
    }
}

TEST(Asymptotics, BinaryHammingRatio) {
    const auto b = binary_hamming_ratio_bound(3);
    EXPECT_EQ(b.limit_bound, harmonic(7) - harmonic(3));
    ASSERT_TRUE(b.exact_ratio);
    EXPECT_EQ(*b.exact_ratio, Rational(347, 319));
    EXPECT_THROW(binary_hamming_ratio_bound(1), std::invalid_argument);
}

TEST(Asymptotics, HalfRateSweepIncreasesToTwoLn2) {
    const auto sweep = half_rate_sweep(2000);
    ASSERT_EQ(sweep.size(), 2000u);
    for (std::size_t m = 1; m < sweep.size(); ++m) ASSERT_GT(sweep[m], sweep[m - 1]);
    EXPECT_EQ(sweep[0], Decimal(1));
    EXPECT_LT(abs(sweep.back() - Decimal(2) * log(Decimal(2))), Decimal("1e-2"));
    EXPECT_LT(abs(mds_rate_limit(Decimal("0.5")) - Decimal(2) * log(Decimal(2))), Decimal("1e-40"));
    EXPECT_EQ(mds_vanishing_rate_limit(), Decimal(1));
}

TEST(Io, MatrixTextRoundTrip) {
    const auto g = simplex_code(Field(3, 1), 2).generator();
    std::stringstream ss;
    write_matrix(ss, g);
    EXPECT_EQ(ss.str(), "2 4 3\n0 1 1 1\n1 0 1 2\n");
    EXPECT_EQ(read_matrix(ss), g);
    std::stringstream bad1("2 2 2\n1 0\n0"), bad2("1 2 2\n1 2\n"), bad3("1 1 6\n1\n"), bad4("1 1 2\n1\n1\n");
    EXPECT_THROW(read_matrix(bad1), std::invalid_argument);
    EXPECT_THROW(read_matrix(bad2), std::invalid_argument);
    EXPECT_THROW(read_matrix(bad3), std::invalid_argument);
    EXPECT_THROW(read_matrix(bad4), std::invalid_argument);
}

TEST(Io, ResolveCode) {
    const Field f(2, 1);
    EXPECT_EQ(resolve_code("simplex", f, {3, {}, {}}).code.length(), 7u);
    EXPECT_EQ(resolve_code("hamming", f, {{}, 3, {}}).code.dimension(), 4u);
    EXPECT_EQ(resolve_code("dual-of:simplex", f, {3, {}, {}}).code.dimension(), 4u);
    EXPECT_EQ(resolve_code("rs", Field(7, 1), {3, {}, 7}).family, CodeFamily::reed_solomon);
    EXPECT_THROW(resolve_code("simplex", f, {}), std::invalid_argument);
    EXPECT_THROW(resolve_code("golay", f, {}), std::invalid_argument);
    EXPECT_THROW(resolve_code("file:/nonexistent/x.txt", f, {}), std::invalid_argument);
}

TEST(Io, JsonDocumentsAreStable) {
    const auto code = simplex_code(Field(2, 1), 3);
    const Json j = exact_result_json(code, "exact", expectation_exact(code), 30);
    EXPECT_EQ(j["value_rational"], "47/12");
    EXPECT_EQ(j["bound_rational"], "107/30");
    EXPECT_EQ(j["gap_rational"], "7/20");
    EXPECT_EQ(j["meets_mds_bound"], false);
    const std::string text = dump(j);
    EXPECT_EQ(dump(Json::parse(text)), text);
    EXPECT_EQ(parse_rational(j["value_rational"].get<std::string>()), Rational(47, 12));

    const auto r = optimal_coverage(Field(2, 1), 3, 7, SearchMode::projective);
    const Json s = search_report_json(r, Field(2, 1), 10);
    EXPECT_EQ(s["raw_candidates"], "1716");
    EXPECT_EQ(s["optimal_candidates"][0]["points"], Json::parse("[1,2,3,4,5,6,7]"));
    EXPECT_FALSE(s.contains("wall_time_seconds"));
    EXPECT_EQ(Matrix::from_rows(Field(2, 1), s["representative_generator"].get<std::vector<std::vector<Element>>>()),
              simplex_code(Field(2, 1), 3).generator());
}

}  // namespace
