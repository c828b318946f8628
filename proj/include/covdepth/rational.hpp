#pragma once

// Exact integers and rationals, plus the decimal rendering used by every
// report. All exact paths in the library go through these types.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace covdepth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits; used where a limit or logarithm is involved.
using Decimal = boost::multiprecision::cpp_dec_float_50;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace detail {

// Binary splitting of sum_{i=lo}^{hi-1} 1/i as an unreduced fraction.
inline std::pair<BigInt, BigInt> reciprocal_sum(std::uint64_t lo, std::uint64_t hi) {
    if (hi - lo == 1) return {BigInt(1), BigInt(lo)};
    const std::uint64_t mid = lo + (hi - lo) / 2;
    auto [a, b] = reciprocal_sum(lo, mid);
    auto [c, d] = reciprocal_sum(mid, hi);
    return {a * d + b * c, b * d};
}

}  // namespace detail

/// sum_{i=lo+1}^{hi} 1/i, i.e. H_hi - H_lo. Empty range gives 0.
inline Rational harmonic_range(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("harmonic_range: hi < lo");
    if (hi == lo) return Rational(0);
    auto [num, den] = detail::reciprocal_sum(lo + 1, hi + 1);
    return Rational(num, den);
}

/// H_m = sum_{i=1}^m 1/i, with H_0 = 0.
inline Rational harmonic(std::uint64_t m) { return harmonic_range(0, m); }

/// "num/den", or just "num" when the value is an integer.
inline std::string to_fraction_string(const Rational& r) {
    const BigInt& den = denominator(r);
    if (den == 1) return numerator(r).str();
    return numerator(r).str() + "/" + den.str();
}

inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
        BigInt num(std::string(text.substr(0, slash)));
        BigInt den(std::string(text.substr(slash + 1)));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: " + std::string(text));
    }
}

namespace detail {

// round-half-even of num/den to an integer, num, den > 0
inline BigInt round_half_even(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;
    return q;
}

inline BigInt pow10(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace detail

/// Positional decimal with `digits` significant digits, round-half-even,
/// trailing zeros kept so the width is fixed for a given magnitude.
inline std::string to_decimal_string(const Rational& value, int digits = 30) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    if (value == 0) return "0";
    const bool negative = value < 0;
    const BigInt num = abs(numerator(value));
    const BigInt& den = denominator(value);

    // exponent e with 10^e <= |value| < 10^(e+1)
    int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    auto at_least = [&](int ex) {  // |value| >= 10^ex
        return ex >= 0 ? num >= den * detail::pow10(ex) : num * detail::pow10(-ex) >= den;
    };
    while (!at_least(e)) --e;
    while (at_least(e + 1)) ++e;

    const int shift = digits - 1 - e;
    BigInt scaled = shift >= 0 ? detail::round_half_even(num * detail::pow10(shift), den)
                               : detail::round_half_even(num, den * detail::pow10(-shift));
    if (scaled == detail::pow10(digits)) {  // rounding carried into a new digit
        scaled /= 10;
        ++e;
    }
    std::string mantissa = scaled.str();
    const int point = e + 1;  // digits before the decimal point
    std::string out;
    if (point <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + mantissa;
    } else if (point >= static_cast<int>(mantissa.size())) {
        out = mantissa + std::string(static_cast<std::size_t>(point) - mantissa.size(), '0');
    } else {
        out = mantissa.substr(0, static_cast<std::size_t>(point)) + "." +
              mantissa.substr(static_cast<std::size_t>(point));
    }
    return negative ? "-" + out : out;
}

inline Decimal to_decimal(const Rational& value) {
    return Decimal(numerator(value)) / Decimal(denominator(value));
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace covdepth
