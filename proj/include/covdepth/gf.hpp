#pragma once

// Finite fields GF(p^m) with elements encoded as integers in [0, q): the
// base-p digits of the encoding are the polynomial-basis coefficients,
// least significant digit = coefficient of x^0.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covdepth {

using Element = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Dense polynomials over GF(p), coefficient i = coefficient of x^i, no
// trailing zeros (zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = powmod(f.back(), p - 2, p);
    while (a.size() > df) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        trim(a);
    }
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), f, p);
}

inline Poly poly_powmod(Poly b, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r{1};
    b = poly_mod(std::move(b), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, f, p);
        b = poly_mulmod(b, b, f, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^j) mod f by j successive p-th powers.
inline Poly frobenius_power_of_x(std::uint64_t j, const Poly& f, std::uint64_t p) {
    Poly x = poly_mod(Poly{0, 1}, f, p);
    for (std::uint64_t i = 0; i < j; ++i) x = poly_powmod(x, p, f, p);
    return x;
}

// Rabin's test: f of degree m is irreducible iff x^(p^m) = x (mod f) and
// gcd(x^(p^(m/d)) - x, f) = 1 for every prime d | m.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    const Poly x = poly_mod(Poly{0, 1}, f, p);
    if (poly_sub(frobenius_power_of_x(m, f, p), x, p).size() != 0) return false;
    for (std::uint64_t d : prime_factors(m)) {
        Poly g = poly_gcd(f, poly_sub(frobenius_power_of_x(m / d, f, p), x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    return detail::prime_factors(q).size() == 1;
}

/// GF(p^m). Immutable after construction; copies share the lookup tables.
class Field {
public:
    static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;
    static constexpr unsigned kMaxDegree = 16;

    /// Throws std::invalid_argument for a non-prime p, m out of [1,16],
    /// q > 2^31, or a modulus that is not monic irreducible of degree m.
    /// Without a modulus the lexicographically smallest monic irreducible is
    /// used (non-leading coefficients read as a base-p integer, x^0 least
    /// significant).
    Field(std::uint64_t p, unsigned m, std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
        if (m < 1 || m > kMaxDegree) throw std::invalid_argument("field degree out of range [1,16]");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^31");
        }
        auto t = std::make_shared<Tables>();
        t->p = p;
        t->m = m;
        t->q = q;
        if (modulus) {
            detail::Poly f = *modulus;
            if (f.size() != m + 1) throw std::invalid_argument("modulus must have degree m");
            for (auto c : f)
                if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
            if (f.back() != 1) throw std::invalid_argument("modulus must be monic");
            if (!detail::is_irreducible(f, p)) throw std::invalid_argument("modulus is reducible");
            t->modulus = std::move(f);
        } else {
            t->modulus = smallest_irreducible(p, m);
        }
        table_ = std::move(t);
        build_tables();
    }

    /// Accepts "N" (factored automatically) or "p^m".
    static Field parse(std::string_view text) {
        auto to_u64 = [](std::string_view s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
                throw std::invalid_argument("bad field description: " + std::string(s));
            return std::stoull(std::string(s));
        };
        if (text.rfind("q=", 0) == 0) text.remove_prefix(2);
        const auto caret = text.find('^');
        if (caret != std::string_view::npos) {
            const auto m = to_u64(text.substr(caret + 1));
            if (m > kMaxDegree) throw std::invalid_argument("field degree out of range [1,16]");
            return Field(to_u64(text.substr(0, caret)), static_cast<unsigned>(m));
        }
        return from_order(to_u64(text));
    }

    static Field from_order(std::uint64_t q) {
        if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^31");
        const auto primes = detail::prime_factors(q);
        if (primes.size() != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
        unsigned m = 0;
        for (std::uint64_t v = q; v > 1; v /= primes[0]) ++m;
        return Field(primes[0], m);
    }

    std::uint64_t characteristic() const { return table_->p; }
    unsigned degree() const { return table_->m; }
    std::uint64_t order() const { return table_->q; }
    Element size() const { return static_cast<Element>(table_->q); }
    /// Monic modulus, low-degree coefficient first; x for prime fields.
    const std::vector<std::uint64_t>& modulus() const { return table_->modulus; }
    bool contains(std::uint64_t a) const { return a < table_->q; }

    Element add(Element a, Element b) const {
        check(a);
        check(b);
        return add_raw(a, b);
    }
    Element neg(Element a) const {
        check(a);
        return neg_raw(a);
    }
    Element sub(Element a, Element b) const {
        check(a);
        check(b);
        return add_raw(a, neg_raw(b));
    }
    Element mul(Element a, Element b) const {
        check(a);
        check(b);
        return mul_raw(a, b);
    }
    Element inv(Element a) const {
        check(a);
        if (a == 0) throw std::domain_error("inverse of zero");
        const Tables& t = *table_;
        if (!t.log.empty()) return t.exp[(t.q - 1) - t.log[a]];
        return pow_raw(a, t.q - 2);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    /// Negative exponents invert first; pow(0, 0) = 1.
    Element pow(Element a, std::int64_t e) const {
        check(a);
        if (e < 0) {
            a = inv(a);
            e = -e;
        }
        return pow_raw(a, static_cast<std::uint64_t>(e));
    }

    std::vector<Element> elements() const {
        std::vector<Element> out(table_->q);
        for (Element i = 0; i < out.size(); ++i) out[i] = i;
        return out;
    }
    std::vector<Element> nonzero_elements() const {
        std::vector<Element> out(table_->q - 1);
        for (Element i = 0; i < out.size(); ++i) out[i] = i + 1;
        return out;
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(Element a) const {
        check(a);
        if (a == 0) throw std::domain_error("zero has no multiplicative order");
        std::uint64_t ord = table_->q - 1;
        for (auto f : detail::prime_factors(table_->q - 1))
            while (ord % f == 0 && pow_raw(a, ord / f) == 1) ord /= f;
        return ord;
    }

    friend bool operator==(const Field& a, const Field& b) {
        return a.table_ == b.table_ ||
               (a.table_->p == b.table_->p && a.table_->m == b.table_->m && a.table_->modulus == b.table_->modulus);
    }

    std::string describe() const {
        if (table_->m == 1) return std::to_string(table_->p);
        return std::to_string(table_->p) + "^" + std::to_string(table_->m);
    }

    // Unchecked arithmetic for inner loops; callers guarantee a, b < q.
    Element add_raw(Element a, Element b) const {
        const Tables& t = *table_;
        if (t.p == 2) return a ^ b;
        if (t.m == 1) {
            const std::uint64_t s = std::uint64_t{a} + b;
            return static_cast<Element>(s >= t.p ? s - t.p : s);
        }
        if (!t.add.empty()) return t.add[std::size_t{a} * t.q + b];
        return digitwise(a, b, false);
    }
    Element neg_raw(Element a) const {
        const Tables& t = *table_;
        if (t.p == 2 || a == 0) return a;
        if (t.m == 1) return static_cast<Element>(t.p - a);
        return digitwise(0, a, true);
    }
    Element mul_raw(Element a, Element b) const {
        if (a == 0 || b == 0) return 0;
        const Tables& t = *table_;
        if (!t.log.empty()) return t.exp[t.log[a] + t.log[b]];
        if (t.m == 1) return static_cast<Element>(std::uint64_t{a} * b % t.p);
        return poly_mul(a, b);
    }

private:
    struct Tables {
        std::uint64_t p = 2;
        unsigned m = 1;
        std::uint64_t q = 2;
        std::vector<std::uint64_t> modulus;
        std::vector<Element> exp;  // 2(q-1) entries so log sums need no reduction
        std::vector<std::uint32_t> log;
        std::vector<Element> add;  // q*q, only for small odd-characteristic extensions
    };

    static constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;
    static constexpr std::uint64_t kAddTableLimit = 256;

    void check(Element a) const {
        if (a >= table_->q) throw std::out_of_range("field element out of range: " + std::to_string(a));
    }

    static detail::Poly smallest_irreducible(std::uint64_t p, unsigned m) {
        if (m == 1) return {0, 1};
        std::uint64_t count = 1;
        for (unsigned i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::Poly f(m + 1, 0);
            std::uint64_t v = code;
            for (unsigned i = 0; i < m; ++i, v /= p) f[i] = v % p;
            f[m] = 1;
            if (f[0] == 0) continue;  // divisible by x
            if (detail::is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    detail::Poly to_poly(Element a) const {
        const Tables& t = *table_;
        detail::Poly out;
        for (unsigned i = 0; i < t.m; ++i, a = static_cast<Element>(a / t.p)) out.push_back(a % t.p);
        detail::trim(out);
        return out;
    }

    Element from_poly(const detail::Poly& f) const {
        std::uint64_t v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * table_->p + f[i];
        return static_cast<Element>(v);
    }

    Element digitwise(Element a, Element b, bool subtract) const {
        const std::uint64_t p = table_->p;
        std::uint64_t out = 0, scale = 1;
        for (unsigned i = 0; i < table_->m; ++i) {
            const std::uint64_t da = a % p, db = b % p;
            const std::uint64_t d = subtract ? (da + p - db) % p : (da + db) % p;
            out += d * scale;
            scale *= p;
            a = static_cast<Element>(a / p);
            b = static_cast<Element>(b / p);
        }
        return static_cast<Element>(out);
    }

    Element poly_mul(Element a, Element b) const {
        return from_poly(detail::poly_mulmod(to_poly(a), to_poly(b), table_->modulus, table_->p));
    }

    Element pow_raw(Element a, std::uint64_t e) const {
        Element r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        auto t = std::const_pointer_cast<Tables>(table_);
        const std::uint64_t q = t->q;
        if (t->m > 1 && t->p != 2 && q <= kAddTableLimit) {
            std::vector<Element> add(q * q);
            for (Element a = 0; a < q; ++a)
                for (Element b = 0; b < q; ++b) add[a * q + b] = digitwise(a, b, false);
            t->add = std::move(add);
        }
        if (q > kLogTableLimit) return;
        const Element g = find_primitive();
        std::vector<Element> exp(2 * (q - 1));
        std::vector<std::uint32_t> log(q, 0);
        Element x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp[i] = x;
            log[x] = static_cast<std::uint32_t>(i);
            x = mul_raw(x, g);
        }
        for (std::uint64_t i = q - 1; i < 2 * (q - 1); ++i) exp[i] = exp[i - (q - 1)];
        t->exp = std::move(exp);
        t->log = std::move(log);
    }

    // Runs before the log tables exist, so mul_raw takes the slow path here.
    Element find_primitive() const {
        const std::uint64_t q = table_->q;
        if (q == 2) return 1;
        const auto factors = detail::prime_factors(q - 1);
        for (Element g = 2; g < q; ++g) {
            bool ok = true;
            for (auto f : factors)
                if (pow_raw(g, (q - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw std::logic_error("no primitive element");
    }

    std::shared_ptr<const Tables> table_;
};

}  // namespace covdepth
