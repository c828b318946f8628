#pragma once

// Linear codes, the standard constructions used for coverage depth, and the
// subset counters alpha (information sets by size) and beta (subsets by the
// dimension of the shortened subcode on their complement).

#include "covdepth/gf.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace covdepth {

/// An [n,k]_q code given by a rank-k generator. Zero and repeated columns
/// are allowed; k = 0 is represented by a 0 x n generator.
class LinearCode {
public:
    explicit LinearCode(Matrix generator) : generator_(std::move(generator)) {
        if (rank(generator_) != generator_.rows())
            throw std::invalid_argument("generator matrix is not of full row rank");
    }

    const Field& field() const { return generator_.field(); }
    const Matrix& generator() const { return generator_; }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }

    std::string describe() const {
        return "[" + std::to_string(length()) + "," + std::to_string(dimension()) + "]_" +
               std::to_string(field().order());
    }

private:
    Matrix generator_;
};

/// Number of points of PG(k-1, q), (q^k - 1)/(q - 1). Throws if it would
/// not fit in 63 bits.
inline std::uint64_t projective_point_count(std::uint64_t q, std::size_t k) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if (n > (std::uint64_t{1} << 62) / q) throw std::overflow_error("projective point count overflow");
        n = n * q + 1;
    }
    return n;
}

/// One representative per scalar class of nonzero vectors in GF(q)^k, the
/// one whose first nonzero coordinate is 1, in lexicographic order
/// (coordinate 0 most significant).
inline std::vector<std::vector<Element>> projective_points(const Field& field, std::size_t k) {
    if (k < 1) throw std::invalid_argument("projective_points: k must be >= 1");
    const Element q = field.size();
    const std::uint64_t count = projective_point_count(q, k);
    std::vector<std::vector<Element>> out;
    out.reserve(count);
    // Leading 1 at position lead, zeros before, anything after.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::vector<Element> v(k, 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            std::size_t i = k;
            while (i-- > lead + 1) {
                if (++v[i] < q) break;
                v[i] = 0;
            }
            if (i == lead) break;
        }
    }
    // Vectors with an earlier leading 1 are lexicographically larger, so the
    // blocks come out in reverse.
    std::sort(out.begin(), out.end());
    return out;
}

/// Generator columns are the projective points of GF(q)^k in canonical order.
inline LinearCode simplex_code(const Field& field, std::size_t k) {
    if (k < 2) throw std::invalid_argument("simplex code needs k >= 2");
    return LinearCode(Matrix::from_columns(field, k, projective_points(field, k)));
}

/// Dual of the simplex code of dimension r: an [n, n-r]_q code.
inline LinearCode hamming_code(const Field& field, std::size_t r) {
    if (r < 2) throw std::invalid_argument("Hamming code needs redundancy r >= 2");
    return LinearCode(kernel_basis(simplex_code(field, r).generator()));
}

/// Vandermonde generator G[i][j] = a_j^i over the first n field elements.
inline LinearCode reed_solomon(const Field& field, std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("reed_solomon: k > n");
    if (n > field.order()) throw std::invalid_argument("reed_solomon: n exceeds the field size");
    Matrix g(field, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element x = 1;
        for (std::size_t i = 0; i < k; ++i) {
            g(i, j) = x;
            x = field.mul_raw(x, static_cast<Element>(j));
        }
    }
    return LinearCode(std::move(g));
}

inline LinearCode dual(const LinearCode& code) { return LinearCode(kernel_basis(code.generator())); }

inline bool same_code(const LinearCode& a, const LinearCode& b) {
    return row_space_canonical(a.generator()) == row_space_canonical(b.generator());
}

namespace detail {

inline void check_indices(std::span<const std::size_t> idx, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (auto i : idx) {
        if (i >= n) throw std::out_of_range("coordinate index out of range: " + std::to_string(i));
        if (seen[i]) throw std::invalid_argument("repeated coordinate index: " + std::to_string(i));
        seen[i] = true;
    }
}

inline std::size_t rank_of_columns(const LinearCode& code, std::span<const std::size_t> idx) {
    IncrementalSpan span(code.field(), code.dimension());
    for (auto j : idx) span.insert(code.generator().column(j));
    return span.rank();
}

// Visits every s-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t s, Visit&& visit) {
    if (s > n) return;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
        visit(std::span<const std::size_t>(idx));
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// dim C(S) = k - rank(columns indexed by the complement of S); indices 0-based.
inline std::size_t shortened_subcode_dim(const LinearCode& code, std::span<const std::size_t> subset) {
    const std::size_t n = code.length();
    detail::check_indices(subset, n);
    std::vector<bool> in(n, false);
    for (auto i : subset) in[i] = true;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) complement.push_back(i);
    return code.dimension() - detail::rank_of_columns(code, complement);
}

/// Number of information sets of size s, by enumerating all s-subsets.
inline BigInt alpha(const LinearCode& code, std::size_t s) {
    const std::size_t n = code.length(), k = code.dimension();
    if (s > n) throw std::invalid_argument("alpha: s > n");
    if (s < k) return 0;
    std::uint64_t count = 0;
    detail::for_each_subset(n, s, [&](std::span<const std::size_t> idx) {
        if (detail::rank_of_columns(code, idx) == k) ++count;
    });
    return count;
}

/// |{S : |S| = s, dim C(S^c) = l}|, by enumeration. l = 0 is admitted and
/// coincides with alpha.
inline BigInt beta(const LinearCode& code, std::size_t l, std::size_t s) {
    const std::size_t n = code.length(), k = code.dimension();
    if (l > k) throw std::invalid_argument("beta: l > k");
    if (s > n) throw std::invalid_argument("beta: s > n");
    std::uint64_t count = 0;
    detail::for_each_subset(n, s, [&](std::span<const std::size_t> idx) {
        // C(S^c) has dimension k - rank(G_S)
        if (k - detail::rank_of_columns(code, idx) == l) ++count;
    });
    return count;
}

/// alpha(C, s) computed as beta_{s-k}(C^perp, n - s).
inline BigInt alpha_via_dual(const LinearCode& code, std::size_t s) {
    const std::size_t n = code.length(), k = code.dimension();
    if (s < k) throw std::invalid_argument("alpha_via_dual: s < k");
    if (s > n) throw std::invalid_argument("alpha_via_dual: s > n");
    return beta(dual(code), s - k, n - s);
}

namespace detail {

class ColumnDfs {
public:
    explicit ColumnDfs(const LinearCode& code)
        : cols_(code.generator().columns()), span_(code.field(), code.dimension()), n_(code.length()) {}

    // counts[t] += number of t-subsets with full rank
    void information_sets(std::vector<BigInt>& counts, const std::vector<std::vector<BigInt>>& binom) {
        info_rec(0, 0, counts, binom);
    }

    // counts[t] += number of independent t-subsets, t <= max_size
    void independent_sets(std::vector<BigInt>& counts, std::size_t max_size) {
        std::vector<std::uint64_t> local(counts.size(), 0);
        indep_rec(0, 0, local, max_size);
        for (std::size_t t = 0; t < local.size(); ++t) counts[t] += local[t];
    }

    // profile[t][r] += number of t-subsets with rank r
    void rank_profile(std::vector<std::vector<std::uint64_t>>& profile) { profile_rec(0, 0, profile); }

private:
    void info_rec(std::size_t i, std::size_t t, std::vector<BigInt>& counts,
                  const std::vector<std::vector<BigInt>>& binom) {
        if (span_.full()) {
            const std::size_t rest = n_ - i;
            for (std::size_t j = 0; j <= rest; ++j) counts[t + j] += binom[rest][j];
            return;
        }
        if (i == n_ || span_.rank() + (n_ - i) < span_.dimension()) return;
        const std::size_t r0 = span_.rank();
        span_.insert(cols_[i]);
        info_rec(i + 1, t + 1, counts, binom);
        span_.truncate(r0);
        info_rec(i + 1, t, counts, binom);
    }

    void indep_rec(std::size_t i, std::size_t t, std::vector<std::uint64_t>& counts, std::size_t max_size) {
        ++counts[t];
        if (t == max_size) return;
        for (std::size_t j = i; j < n_; ++j) {
            const std::size_t r0 = span_.rank();
            if (span_.insert(cols_[j])) {
                indep_rec(j + 1, t + 1, counts, max_size);
                span_.truncate(r0);
            }
        }
    }

    void profile_rec(std::size_t i, std::size_t t, std::vector<std::vector<std::uint64_t>>& profile) {
        if (i == n_) {
            ++profile[t][span_.rank()];
            return;
        }
        const std::size_t r0 = span_.rank();
        span_.insert(cols_[i]);
        profile_rec(i + 1, t + 1, profile);
        span_.truncate(r0);
        profile_rec(i + 1, t, profile);
    }

    std::vector<std::vector<Element>> cols_;
    IncrementalSpan span_;
    std::size_t n_;
};

inline std::vector<std::vector<BigInt>> binomial_table(std::size_t n) {
    std::vector<std::vector<BigInt>> b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        b[i].assign(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j) b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
    }
    return b;
}

}  // namespace detail

/// alpha(C, s) for every s in [0, n], by a depth-first walk over subsets
/// that stops as soon as the chosen columns span (every extension then
/// spans too) or can no longer reach rank k.
inline std::vector<BigInt> information_set_counts(const LinearCode& code) {
    const std::size_t n = code.length();
    std::vector<BigInt> counts(n + 1, 0);
    detail::ColumnDfs dfs(code);
    dfs.information_sets(counts, detail::binomial_table(n));
    return counts;
}

/// Number of linearly independent column subsets of each size t <= max_size.
inline std::vector<BigInt> independent_set_counts(const LinearCode& code, std::size_t max_size) {
    max_size = std::min(max_size, code.dimension());
    std::vector<BigInt> counts(max_size + 1, 0);
    detail::ColumnDfs dfs(code);
    dfs.independent_sets(counts, max_size);
    return counts;
}

/// profile[s][r] = number of s-subsets of columns with rank r. Visits all
/// 2^n subsets; intended for n <= ~20.
inline std::vector<std::vector<std::uint64_t>> rank_profile(const LinearCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    if (n > 30) throw std::invalid_argument("rank_profile: length too large for full enumeration");
    std::vector<std::vector<std::uint64_t>> profile(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    detail::ColumnDfs dfs(code);
    dfs.rank_profile(profile);
    return profile;
}

/// beta_l(C, s) for all l, s from one walk: table[l][s].
inline std::vector<std::vector<BigInt>> beta_table(const LinearCode& code) {
    const std::size_t n = code.length(), k = code.dimension();
    const auto profile = rank_profile(code);
    std::vector<std::vector<BigInt>> table(k + 1, std::vector<BigInt>(n + 1, 0));
    for (std::size_t s = 0; s <= n; ++s)
        for (std::size_t r = 0; r <= k; ++r) table[k - r][s] = profile[s][r];
    return table;
}

}  // namespace covdepth
