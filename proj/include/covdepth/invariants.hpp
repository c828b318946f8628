#pragma once

// Self-check suite behind `covdepth verify`: the structural identities the
// library relies on, evaluated on a fixed pseudo-random fixture set.

#include "covdepth/codes.hpp"
#include "covdepth/coverage.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/search.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace covdepth {

/// `count` random codes, n in [2, max_n], k in [1, n], q cycling over
/// {2, 3, 4}. Deterministic for a given seed.
inline std::vector<LinearCode> random_code_fixture(std::size_t count, std::uint64_t seed, std::size_t max_n = 8) {
    std::mt19937_64 rng(seed);
    const std::vector<Field> fields{Field(2, 1), Field(3, 1), Field(2, 2)};
    std::vector<LinearCode> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Field& f = fields[i % fields.size()];
        const std::size_t n = 2 + rng() % (max_n - 1);
        const std::size_t k = 1 + rng() % n;
        out.emplace_back(random_matrix(f, k, n, rng));
    }
    return out;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

inline bool field_axioms_hold(const Field& f) {
    const Element q = f.size();
    for (Element a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) return false;
        if (a != 0 && f.mul(a, f.inv(a)) != 1) return false;
        for (Element b = 0; b < q; ++b) {
            if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) return false;
            for (Element c = 0; c < q; ++c) {
                if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) return false;
                if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) return false;
                if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
            }
        }
    }
    return true;
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite() {
    std::vector<CheckResult> results;
    auto run = [&](std::string name, const std::function<bool(std::string&)>& body) {
        CheckResult r;
        r.name = std::move(name);
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.passed = body(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    };

    const auto fixture = random_code_fixture(25, 20240611);

    run("field axioms (q <= 16)", [](std::string&) {
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16})
            if (!detail::field_axioms_hold(Field::from_order(q))) return false;
        return true;
    });

    run("rank-nullity and rank(M) = rank(M^T)", [](std::string&) {
        std::mt19937_64 rng(7);
        for (std::uint64_t q : {2, 3, 4, 5}) {
            const Field f = Field::from_order(q);
            for (int t = 0; t < 20; ++t) {
                const Matrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 7, rng, false);
                const Matrix ker = kernel_basis(m);
                if (rank(m) != rank(m.transpose())) return false;
                if (rank(m) + ker.rows() != m.cols()) return false;
                if (ker.rows() > 0 && !(m * ker.transpose()).is_zero()) return false;
            }
        }
        return true;
    });

    run("duality identity beta_l(C,s) = beta_{l+s-k}(C^perp, n-s)", [&](std::string& why) {
        for (const auto& c : fixture) {
            const auto d = dual(c);
            const std::size_t n = c.length(), k = c.dimension();
            for (std::size_t s = 0; s <= n; ++s)
                for (std::size_t l = 0; l <= k; ++l) {
                    const std::ptrdiff_t l2 = static_cast<std::ptrdiff_t>(l + s) - static_cast<std::ptrdiff_t>(k);
                    const BigInt rhs = (l2 < 0 || static_cast<std::size_t>(l2) > n - k)
                                           ? BigInt(0)
                                           : beta(d, static_cast<std::size_t>(l2), n - s);
                    if (beta(c, l, s) != rhs) {
                        why = c.describe() + " l=" + std::to_string(l) + " s=" + std::to_string(s);
                        return false;
                    }
                }
        }
        return true;
    });

    run("alpha: enumeration = pruned walk = dual route", [&](std::string& why) {
        for (const auto& c : fixture) {
            const auto fast = information_set_counts(c);
            for (std::size_t s = 0; s <= c.length(); ++s) {
                const BigInt a = alpha(c, s);
                if (a != fast[s] || (s >= c.dimension() && a != alpha_via_dual(c, s))) {
                    why = c.describe() + " s=" + std::to_string(s);
                    return false;
                }
            }
        }
        return true;
    });

    run("primal = dual route and E >= n(H_n - H_{n-k})", [&](std::string& why) {
        for (const auto& c : fixture) {
            const Rational e = expectation_exact(c);
            if (e != expectation_exact_dual(c) || e < mds_bound(c.length(), c.dimension())) {
                why = c.describe();
                return false;
            }
        }
        return true;
    });

    run("closed forms match the exact routes", [](std::string& why) {
        const std::vector<std::pair<std::uint64_t, std::size_t>> simplex{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}};
        for (auto [q, k] : simplex)
            if (expectation_simplex(q, k) != expectation_exact(simplex_code(Field::from_order(q), k))) {
                why = "simplex q=" + std::to_string(q) + " k=" + std::to_string(k);
                return false;
            }
        const std::vector<std::pair<std::uint64_t, std::size_t>> hamming{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}};
        for (auto [q, r] : hamming)
            if (expectation_hamming(q, r) != expectation_exact_dual(hamming_code(Field::from_order(q), r))) {
                why = "hamming q=" + std::to_string(q) + " r=" + std::to_string(r);
                return false;
            }
        return true;
    });

    run("generator and column-scaling invariance", [&](std::string&) {
        std::mt19937_64 rng(11);
        for (std::size_t i = 0; i < fixture.size(); i += 3) {
            const auto& c = fixture[i];
            const Field& f = c.field();
            const Rational e = expectation_exact(c);
            const Matrix a = random_matrix(f, c.dimension(), c.dimension(), rng);
            if (expectation_exact(LinearCode(a * c.generator())) != e) return false;
            const Element s = static_cast<Element>(1 + rng() % (f.order() - 1));
            if (expectation_exact(LinearCode(c.generator().scale_column(rng() % c.length(), s))) != e) return false;
        }
        return true;
    });

    run("projective reduction (2,2,3) (2,2,4) (3,2,3)", [](std::string&) {
        return verify_reduction(Field(2, 1), 2, 3) && verify_reduction(Field(2, 1), 2, 4) &&
               verify_reduction(Field(3, 1), 2, 3);
    });

    run("monte carlo within 4 sigma of 47/12", [](std::string& why) {
        const auto est = expectation_monte_carlo(simplex_code(Field(2, 1), 3), 200000, 42);
        const Decimal z = abs(to_decimal(est.mean - Rational(47, 12))) / est.std_error;
        why = "z = " + z.str(6);
        return z <= 4;
    });

    return results;
}

}  // namespace covdepth
