#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace covdepth;

namespace {

TEST(Codes, SimplexAndHammingShapes) {
    for (std::uint64_t q : {2, 3, 4}) {
        const Field f = Field::from_order(q);
        for (std::size_t k : {2, 3}) {
            const auto s = simplex_code(f, k);
            EXPECT_EQ(s.length(), projective_point_count(q, k));
            EXPECT_EQ(s.dimension(), k);
            const auto h = hamming_code(f, k);
            EXPECT_EQ(h.length(), s.length());
            EXPECT_EQ(h.dimension(), s.length() - k);
            EXPECT_TRUE(same_code(dual(s), h));
            EXPECT_TRUE(same_code(dual(dual(h)), h));
        }
    }
    EXPECT_THROW(simplex_code(Field(2, 1), 1), std::invalid_argument);
    EXPECT_THROW(hamming_code(Field(2, 1), 1), std::invalid_argument);
}

TEST(Codes, ProjectivePointsAreNormalised) {
    const Field f(3, 1);
    const auto pts = projective_points(f, 3);
    ASSERT_EQ(pts.size(), 13u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto lead = std::find_if(pts[i].begin(), pts[i].end(), [](Element e) { return e != 0; });
        ASSERT_NE(lead, pts[i].end());
        EXPECT_EQ(*lead, 1u);
        if (i) EXPECT_LT(pts[i - 1], pts[i]);
    }
}

TEST(Codes, ReedSolomonIsMds) {
    for (auto [q, n, k] : std::vector<std::tuple<std::uint64_t, std::size_t, std::size_t>>{
             {7, 7, 3}, {5, 5, 2}, {3, 3, 2}, {8, 8, 4}}) {
        const auto c = reed_solomon(Field::from_order(q), n, k);
        EXPECT_EQ(information_set_counts(c)[k], binomial(n, k));
    }
    EXPECT_THROW(reed_solomon(Field(5, 1), 6, 2), std::invalid_argument);
    EXPECT_THROW(LinearCode(Matrix::from_rows(Field(2, 1), {{1, 1}, {1, 1}})), std::invalid_argument);
}

TEST(Codes, AlphaBetaAgainstOracle) {
    for (const auto& c : random_code_fixture(12, 99, 7)) {
        const auto table = beta_table(c);
        for (std::size_t s = 0; s <= c.length(); ++s) {
            ASSERT_EQ(alpha(c, s), oracle::beta(c.generator(), 0, s)) << c.describe();
            for (std::size_t l = 0; l <= c.dimension(); ++l) {
                const BigInt want = oracle::beta(c.generator(), l, s);
                ASSERT_EQ(beta(c, l, s), want);
                ASSERT_EQ(table[l][s], want);
            }
        }
    }
}

TEST(Codes, ShortenedSubcodeDimension) {
    // codewords supported on S: k - rank of the columns outside S
    const auto c = simplex_code(Field(2, 1), 3);
    const std::vector<std::size_t> none{}, five{0, 1, 2, 3, 4}, all{0, 1, 2, 3, 4, 5, 6};
    EXPECT_EQ(shortened_subcode_dim(c, none), 0u);
    EXPECT_EQ(shortened_subcode_dim(c, five), 1u);
    EXPECT_EQ(shortened_subcode_dim(c, all), 3u);
    const std::vector<std::size_t> bad{7};
    EXPECT_THROW(shortened_subcode_dim(c, bad), std::out_of_range);
}

TEST(Coverage, WorkedExamples) {
    const Field f2(2, 1);
    EXPECT_EQ(expectation_exact(simplex_code(f2, 3)), Rational(47, 12));
    EXPECT_EQ(expectation_simplex(2, 3), Rational(47, 12));
    EXPECT_EQ(expectation_exact_dual(simplex_code(f2, 3)), Rational(47, 12));
    EXPECT_EQ(expectation_hamming(2, 3), Rational(347, 60));
    EXPECT_EQ(expectation_exact(hamming_code(f2, 3)), Rational(347, 60));
    EXPECT_EQ(expectation_hamming(3, 3), Rational(507173, 27720));
    EXPECT_EQ(mds_bound(7, 3), Rational(107, 30));
    EXPECT_EQ(mds_bound(15, 4), Rational(1629, 364));
    EXPECT_EQ(to_decimal_string(expectation_simplex(2, 4), 9), "5.19642857");
    EXPECT_EQ(to_decimal_string(expectation_simplex(3, 4), 9), "4.61823362");
}

TEST(Coverage, MarkovChainOracle) {
    for (const auto& c : random_code_fixture(15, 5, 7)) {
        const Rational want = oracle::expectation_markov(c.generator());
        ASSERT_EQ(expectation_exact(c), want) << c.describe();
        ASSERT_EQ(expectation_exact_dual(c), want) << c.describe();
    }
    ASSERT_EQ(oracle::expectation_markov(simplex_code(Field(2, 1), 3).generator()), Rational(47, 12));
}

TEST(Coverage, BoundAndEqualityCondition) {
    for (const auto& c : random_code_fixture(30, 8)) {
        const Rational e = expectation_exact(c), b = mds_bound(c.length(), c.dimension());
        ASSERT_GE(e, b);
        const bool mds = alpha(c, c.dimension()) == binomial(c.length(), c.dimension());
        ASSERT_EQ(e == b, mds) << c.describe();
    }
}

TEST(Coverage, ClosedFormsAgreeWithExactRoutes) {
    for (auto [q, k] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 2}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {5, 2}})
        EXPECT_EQ(expectation_simplex(q, k), expectation_exact(simplex_code(Field::from_order(q), k)));
    for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 2}, {2, 4}, {3, 2}, {4, 2}, {5, 2}})
        EXPECT_EQ(expectation_hamming(q, r), expectation_exact_dual(hamming_code(Field::from_order(q), r)));
}

TEST(Coverage, InvariantUnderEquivalence) {
    std::mt19937_64 rng(4);
    for (const auto& c : random_code_fixture(12, 21)) {
        const Rational e = expectation_exact(c);
        const Field& f = c.field();
        const Matrix a = random_matrix(f, c.dimension(), c.dimension(), rng);
        EXPECT_EQ(expectation_exact(a * c.generator()), e);
        std::vector<std::size_t> perm(c.length());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(expectation_exact(c.generator().select_columns(perm)), e);
        const auto s = static_cast<Element>(1 + rng() % (f.order() - 1));
        EXPECT_EQ(expectation_exact(c.generator().scale_column(0, s)), e);
    }
}

TEST(Coverage, ZeroAndRepeatedColumns) {
    const Field f(2, 1);
    // [1 0 0]: only the first column matters, draws are geometric with p = 1/3
    EXPECT_EQ(expectation_exact(Matrix::from_rows(f, {{1, 0, 0}})), Rational(3));
    EXPECT_EQ(expectation_exact(Matrix::from_rows(f, {{1, 1}})), Rational(1));
    EXPECT_THROW(expectation_exact(Matrix::from_rows(f, {{1, 1}, {1, 1}})), std::domain_error);
}

TEST(Rng, PhiloxKnownAnswers) {
    using C = Philox4x32::Counter;
    EXPECT_EQ(Philox4x32::block({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Rng, UniformIsInRangeAndRoughlyFlat) {
    CounterStream rng(1, 2);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i) {
        const auto v = rng.uniform(7);
        ASSERT_LT(v, 7u);
        ++hist[v];
    }
    for (int h : hist) EXPECT_NEAR(h, 10000, 500);
}

TEST(MonteCarlo, DeterministicAcrossJobCounts) {
    const auto code = reed_solomon(Field(7, 1), 7, 3);
    const auto a = expectation_monte_carlo(code, 20001, 9, 1);
    for (unsigned jobs : {2u, 3u, 8u}) {
        const auto b = expectation_monte_carlo(code, 20001, 9, jobs);
        EXPECT_EQ(a.mean, b.mean);
        EXPECT_EQ(a.std_error, b.std_error);
        EXPECT_EQ(a.min_draws, b.min_draws);
        EXPECT_EQ(a.max_draws, b.max_draws);
    }
    EXPECT_EQ(simulate_trial(code, 9, 17), simulate_trial(code, 9, 17));
}

TEST(MonteCarlo, ConsistentWithExact) {
    const auto code = simplex_code(Field(3, 1), 2);
    const auto est = expectation_monte_carlo(code, 100000, 3);
    const Decimal z = abs(to_decimal(est.mean - expectation_exact(code))) / est.std_error;
    EXPECT_LE(z, 4);
    EXPECT_GE(est.min_draws, 2u);
}

TEST(MonteCarlo, EdgeCases) {
    const auto code = simplex_code(Field(2, 1), 2);
    const auto one = expectation_monte_carlo(code, 1, 0);
    EXPECT_EQ(one.std_error, 0);
    EXPECT_THROW(expectation_monte_carlo(code, 0, 0), std::invalid_argument);
}

TEST(Invariants, SuitePasses) {
    for (const auto& r : run_invariant_suite()) EXPECT_TRUE(r.passed) << r.name << " " << r.detail;
}

}  // namespace
