#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace covdepth;

namespace {

const std::vector<std::uint64_t> kSmallOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41,
                                              43, 47, 49, 53, 59, 61, 64};

TEST(Rational, HarmonicMatchesNaiveSum) {
    for (std::uint64_t m : {0, 1, 2, 7, 30, 101}) EXPECT_EQ(harmonic(m), oracle::harmonic(m)) << m;
    EXPECT_EQ(harmonic_range(11, 15), oracle::harmonic(15) - oracle::harmonic(11));
    EXPECT_EQ(harmonic(4), Rational(25, 12));
}

TEST(Rational, Binomial) {
    EXPECT_EQ(binomial(13, 3), 286);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
}

TEST(Rational, FractionStringRoundTrip) {
    for (const Rational& r : {Rational(47, 12), Rational(-3, 7), Rational(5), Rational(0)}) {
        EXPECT_EQ(parse_rational(to_fraction_string(r)), r);
    }
    EXPECT_EQ(to_fraction_string(Rational(10, 2)), "5");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rational, DecimalRendering) {
    EXPECT_EQ(to_decimal_string(Rational(47, 12)), "3.91666666666666666666666666667");
    EXPECT_EQ(to_decimal_string(Rational(107, 30), 5), "3.5667");
    EXPECT_EQ(to_decimal_string(Rational(1, 8), 2), "0.12");  // half-even
    EXPECT_EQ(to_decimal_string(Rational(3, 8), 2), "0.38");
    EXPECT_EQ(to_decimal_string(Rational(999, 100), 2), "10");
    EXPECT_EQ(to_decimal_string(Rational(-1, 3), 3), "-0.333");
    EXPECT_EQ(to_decimal_string(Rational(1, 400), 2), "0.0025");
    EXPECT_EQ(to_decimal_string(Rational(12345), 3), "12300");
    EXPECT_THROW(to_decimal_string(Rational(1), 0), std::invalid_argument);
}

TEST(Field, ExhaustiveAgainstPolynomialArithmetic) {
    for (auto q : kSmallOrders) {
        const Field f = Field::from_order(q);
        ASSERT_EQ(f.order(), q);
        for (Element a = 0; a < f.size(); ++a) {
            for (Element b = 0; b < f.size(); ++b) {
                ASSERT_EQ(f.mul(a, b), oracle::gf_mul(f, a, b)) << "q=" << q << " " << a << "*" << b;
                ASSERT_EQ(f.add(a, b), oracle::gf_add(f, a, b)) << "q=" << q << " " << a << "+" << b;
                ASSERT_EQ(f.sub(f.add(a, b), b), a);
            }
            if (a != 0) {
                ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
                ASSERT_EQ(f.div(a, a), 1u);
            }
        }
    }
}

TEST(Field, MultiplicativeGroupIsCyclic) {
    for (auto q : kSmallOrders) {
        const Field f = Field::from_order(q);
        std::uint64_t best = 0;
        for (Element a = 1; a < f.size(); ++a) {
            const auto ord = f.multiplicative_order(a);
            ASSERT_EQ((q - 1) % ord, 0u);
            ASSERT_EQ(f.pow(a, static_cast<std::int64_t>(ord)), 1u);
            best = std::max(best, ord);
        }
        EXPECT_EQ(best, q - 1) << q;
    }
}

TEST(Field, PowConventions) {
    const Field f(7, 1);
    EXPECT_EQ(f.pow(0, 0), 1u);
    EXPECT_EQ(f.pow(3, -1), f.inv(3));
    EXPECT_EQ(f.pow(3, 6), 1u);
    EXPECT_THROW(f.pow(0, -1), std::domain_error);
}

TEST(Field, Parsing) {
    EXPECT_EQ(Field::parse("8").order(), 8u);
    EXPECT_EQ(Field::parse("2^3"), Field(2, 3));
    EXPECT_EQ(Field::parse("q=9").degree(), 2u);
    EXPECT_EQ(Field::parse("3^2").describe(), "3^2");
    EXPECT_THROW(Field::parse("6"), std::invalid_argument);
    EXPECT_THROW(Field::parse("1"), std::invalid_argument);
    EXPECT_THROW(Field::parse("two"), std::invalid_argument);
    EXPECT_THROW(Field::parse("4^2"), std::invalid_argument);
    EXPECT_THROW(Field::parse("2^40"), std::invalid_argument);
}

TEST(Field, ErrorPaths) {
    const Field f(2, 3);
    EXPECT_THROW(f.inv(0), std::domain_error);
    EXPECT_THROW(f.add(8, 1), std::out_of_range);
    EXPECT_THROW(f.mul(1, 9), std::out_of_range);
    EXPECT_THROW(Field(4, 1), std::invalid_argument);
    EXPECT_THROW(Field(2, 0), std::invalid_argument);
    EXPECT_THROW(Field(2, 17), std::invalid_argument);
    EXPECT_THROW(Field(3, 20), std::invalid_argument);
    EXPECT_THROW(Field::from_order((std::uint64_t{1} << 31) + 11), std::invalid_argument);
    // x^2 + 1 = (x+1)^2 over GF(2)
    EXPECT_THROW(Field(2, 2, std::vector<std::uint64_t>{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Field(2, 2, std::vector<std::uint64_t>{1, 1, 0}), std::invalid_argument);
}

TEST(Field, ExplicitModulus) {
    // x^3 + x^2 + 1 instead of the default x^3 + x + 1
    const Field f(2, 3, std::vector<std::uint64_t>{1, 0, 1, 1});
    EXPECT_FALSE(f == Field(2, 3));
    for (Element a = 0; a < 8; ++a)
        for (Element b = 0; b < 8; ++b) ASSERT_EQ(f.mul(a, b), oracle::gf_mul(f, a, b));
}

TEST(Field, LargeFieldsWithoutTables) {
    std::mt19937_64 rng(3);
    for (const Field& f : {Field(2147483647, 1), Field(3, 13), Field(2, 16), Field(5, 9), Field(7, 8)}) {
        for (int t = 0; t < 200; ++t) {
            const auto a = static_cast<Element>(1 + rng() % (f.order() - 1));
            const auto b = static_cast<Element>(rng() % f.order());
            const auto c = static_cast<Element>(rng() % f.order());
            ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << f.describe();
            ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            ASSERT_EQ(f.mul(a, b), oracle::gf_mul(f, a, b));
        }
    }
}

TEST(Matrix, RankMatchesNaiveElimination) {
    std::mt19937_64 rng(17);
    for (std::uint64_t q : {2, 3, 4, 5, 8, 9}) {
        const Field f = Field::from_order(q);
        for (int t = 0; t < 60; ++t) {
            const Matrix m = random_matrix(f, 1 + rng() % 6, 1 + rng() % 8, rng, false);
            ASSERT_EQ(rank(m), oracle::rank(m));
            ASSERT_EQ(rank(m), rank(m.transpose()));
        }
    }
}

TEST(Matrix, RrefShape) {
    std::mt19937_64 rng(5);
    const Field f(3, 1);
    for (int t = 0; t < 50; ++t) {
        const Matrix m = random_matrix(f, 4, 6, rng, false);
        const auto [r, piv] = rref(m);
        for (std::size_t i = 0; i < piv.size(); ++i) {
            if (i) ASSERT_LT(piv[i - 1], piv[i]);
            for (std::size_t row = 0; row < r.rows(); ++row) ASSERT_EQ(r(row, piv[i]), row == i ? 1u : 0u);
        }
        for (std::size_t row = piv.size(); row < r.rows(); ++row)
            for (std::size_t c = 0; c < r.cols(); ++c) ASSERT_EQ(r(row, c), 0u);
        // row operations preserve the row space
        ASSERT_EQ(row_space_canonical(m), row_space_canonical(r));
    }
}

TEST(Matrix, KernelAndRankNullity) {
    std::mt19937_64 rng(23);
    for (std::uint64_t q : {2, 4, 7}) {
        const Field f = Field::from_order(q);
        for (int t = 0; t < 40; ++t) {
            const Matrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 7, rng, false);
            const Matrix ker = kernel_basis(m);
            ASSERT_EQ(rank(m) + ker.rows(), m.cols());
            ASSERT_EQ(rank(ker), ker.rows());
            if (ker.rows()) ASSERT_TRUE((m * ker.transpose()).is_zero());
        }
    }
}

TEST(Matrix, ConstructionErrors) {
    const Field f(2, 1);
    EXPECT_THROW(Matrix(f, 2, 2, {0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(Matrix(f, 1, 2, {0, 2}), std::out_of_range);
    EXPECT_THROW(Matrix::from_rows(f, {{1, 0}, {1}}), std::invalid_argument);
    EXPECT_THROW(Matrix::identity(f, 2) * Matrix(f, 3, 1), std::invalid_argument);
    EXPECT_THROW(Matrix(f, 2, 2).at(2, 0), std::out_of_range);
    const std::vector<std::size_t> bad{3};
    EXPECT_THROW(Matrix(f, 2, 2).select_columns(bad), std::out_of_range);
}

TEST(Matrix, IncrementalSpanAgreesWithRank) {
    std::mt19937_64 rng(31);
    const Field f(2, 2);
    for (int t = 0; t < 40; ++t) {
        const Matrix m = random_matrix(f, 7, 4, rng, false);
        IncrementalSpan span(f, 4);
        std::vector<std::vector<Element>> seen;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const std::vector<Element> v(m.row(i).begin(), m.row(i).end());
            const bool inside = seen.empty() ? std::all_of(v.begin(), v.end(), [](Element e) { return e == 0; })
                                             : in_span(f, seen, v);
            ASSERT_EQ(span.insert(v), !inside);
            seen.push_back(v);
            ASSERT_EQ(span.rank(), oracle::rank(f, seen));
        }
        const std::size_t before = span.rank();
        span.truncate(before > 0 ? before - 1 : 0);
        ASSERT_EQ(span.rank(), before > 0 ? before - 1 : 0);
    }
    IncrementalSpan span(f, 3);
    const std::vector<Element> short_vec{1, 0};
    EXPECT_THROW(span.insert(short_vec), std::invalid_argument);
    EXPECT_THROW(span.truncate(1), std::out_of_range);
}

}  // namespace
