#pragma once

// Text and JSON interchange: the matrix file format, code descriptions used
// on the command line, and the result documents.
//
// Matrix text format: a header line "k n q", then k lines of n integers in
// [0, q) using the Field element encoding.

#include "covdepth/asymptotics.hpp"
#include "covdepth/codes.hpp"
#include "covdepth/coverage.hpp"
#include "covdepth/gf.hpp"
#include "covdepth/matrix.hpp"
#include "covdepth/rational.hpp"
#include "covdepth/search.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace covdepth {

using Json = nlohmann::ordered_json;

inline Matrix read_matrix(std::istream& in) {
    std::uint64_t k = 0, n = 0, q = 0;
    if (!(in >> k >> n >> q)) throw std::invalid_argument("matrix file: expected header 'k n q'");
    const Field field = Field::from_order(q);
    Matrix m(field, k, n);
    for (std::uint64_t r = 0; r < k; ++r)
        for (std::uint64_t c = 0; c < n; ++c) {
            std::int64_t v = 0;
            if (!(in >> v)) throw std::invalid_argument("matrix file: too few entries");
            if (v < 0 || static_cast<std::uint64_t>(v) >= q)
                throw std::invalid_argument("matrix file: entry outside [0, q)");
            m(r, c) = static_cast<Element>(v);
        }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("matrix file: trailing data");
    return m;
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.field().order() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

struct CodeParams {
    std::optional<std::size_t> k;
    std::optional<std::size_t> r;
    std::optional<std::size_t> n;
};

enum class CodeFamily { simplex, hamming, reed_solomon, other };

struct ResolvedCode {
    LinearCode code;
    CodeFamily family = CodeFamily::other;
    std::size_t family_param = 0;  // k for simplex, r for Hamming
};

/// simplex (k) | hamming (r) | rs (n, k) | dual-of:<spec> | file:<path>
inline ResolvedCode resolve_code(const std::string& spec, const Field& field, const CodeParams& p) {
    auto need = [&](const std::optional<std::size_t>& v, const char* name) {
        if (!v) throw std::invalid_argument("code '" + spec + "' needs --" + name);
        return *v;
    };
    if (spec == "simplex") {
        const auto k = need(p.k, "k");
        return {simplex_code(field, k), CodeFamily::simplex, k};
    }
    if (spec == "hamming") {
        const auto r = need(p.r, "r");
        return {hamming_code(field, r), CodeFamily::hamming, r};
    }
    if (spec == "rs") return {reed_solomon(field, need(p.n, "n"), need(p.k, "k")), CodeFamily::reed_solomon, 0};
    if (spec.rfind("dual-of:", 0) == 0) {
        const auto inner = resolve_code(spec.substr(8), field, p);
        return {dual(inner.code), CodeFamily::other, 0};
    }
    if (spec.rfind("file:", 0) == 0) return {LinearCode(read_matrix_file(spec.substr(5))), CodeFamily::other, 0};
    throw std::invalid_argument("unknown code: " + spec);
}

inline Json search_report_json(const SearchReport& r, const Field& field, int digits, bool with_timing = false) {
    const auto points = projective_points(field, r.k);
    const Rational bound = mds_bound(r.n, r.k);
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["q"] = r.q;
    j["mode"] = to_string(r.mode);
    j["raw_candidates"] = r.raw_candidates.str();
    j["candidates_examined"] = r.candidates_examined;
    j["minimum"] = to_fraction_string(r.minimum);
    j["minimum_decimal"] = to_decimal_string(r.minimum, digits);
    j["runner_up"] = r.runner_up ? Json(to_fraction_string(*r.runner_up)) : Json(nullptr);
    j["runner_up_decimal"] = r.runner_up ? Json(to_decimal_string(*r.runner_up, digits)) : Json(nullptr);
    j["bound_rational"] = to_fraction_string(bound);
    j["meets_mds_bound"] = r.minimum == bound;
    Json cands = Json::array();
    for (const auto& c : r.optimal_candidates) {
        Json item;
        Json idx = Json::array();
        for (auto i : c.points) idx.push_back(i + 1);  // 1-based for reports
        item["points"] = idx;
        item["zero_columns"] = c.zero_columns;
        cands.push_back(item);
    }
    j["optimal_candidates"] = cands;
    if (!r.optimal_candidates.empty()) {
        const auto g = detail::candidate_matrix(field, r.k, points, r.optimal_candidates.front());
        Json rows = Json::array();
        for (std::size_t i = 0; i < g.rows(); ++i) {
            Json row = Json::array();
            for (auto e : g.row(i)) row.push_back(e);
            rows.push_back(row);
        }
        j["representative_generator"] = rows;
    }
    if (with_timing) j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

/// `digits` significant digits of a Decimal, rendered like the exact values.
inline std::string decimal_string(const Decimal& x, int digits = 15) {
    if (x == 0) return "0";
    // integer with digits + 5 significant digits, then the exact rounding
    const int e = static_cast<int>(floor(log10(abs(x))).convert_to<long long>());
    const int shift = digits + 5 - 1 - e;
    const BigInt ten = detail::pow10(shift >= 0 ? shift : -shift);
    const Decimal scaled = shift >= 0 ? x * Decimal(ten) : x / Decimal(ten);
    const BigInt integral = round(scaled).convert_to<BigInt>();
    const Rational value = shift >= 0 ? Rational(integral, ten) : Rational(integral * ten);
    return to_decimal_string(value, digits);
}

inline Json exact_result_json(const LinearCode& code, const std::string& method, const Rational& value, int digits) {
    const Rational bound = mds_bound(code.length(), code.dimension());
    Json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["q"] = code.field().order();
    j["method"] = method;
    j["value_rational"] = to_fraction_string(value);
    j["value_decimal"] = to_decimal_string(value, digits);
    j["bound_rational"] = to_fraction_string(bound);
    j["gap_rational"] = to_fraction_string(value - bound);
    j["meets_mds_bound"] = value == bound;
    return j;
}

inline Json monte_carlo_json(const LinearCode& code, const McEstimate& est, int digits) {
    const Rational bound = mds_bound(code.length(), code.dimension());
    Json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["q"] = code.field().order();
    j["method"] = "mc";
    j["bound_rational"] = to_fraction_string(bound);
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    j["mean"] = to_decimal_string(est.mean, digits);
    j["std_error"] = decimal_string(est.std_error, std::min(digits, 40));
    j["min_draws"] = est.min_draws;
    j["max_draws"] = est.max_draws;
    return j;
}

/// Renders a Json document with 2-space indentation and a final newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace covdepth
