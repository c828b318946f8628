// covdepth: command-line front end for the coverage depth library.
//
//   covdepth expect      --code simplex --k 3 --field 2 --method formula
//   covdepth bound       --n 7 --k 3
//   covdepth search      --field 2 --k 3 --n 7 [--mode projective|full]
//   covdepth simulate    --code rs --field 7 --n 7 --k 3 --trials 1000000 --seed 42
//   covdepth asymptotics --family simplex --k 3 --q-grid 2..64
//   covdepth figure1
//   covdepth verify
//
// Exit codes: 0 ok, 1 usage error, 2 budget exceeded, 3 invariant violation.

#include "covdepth/covdepth.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace covdepth;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInvariant = 3;

struct RunConfig {
    std::string field = "2";
    std::string format = "plain";
    std::string out;
    int digits = 30;
    unsigned jobs = 1;
    std::uint64_t budget = 100'000'000;

    std::string code;
    std::string method = "auto";
    std::optional<std::size_t> k, r, n;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::size_t trace = 0;
    std::string mode = "projective";
    std::string family = "simplex";
    std::string q_grid = "2..64";
    std::string k_grid = "3..12";
    std::string rates = "0.5";
};

class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_grid(const std::string& text, bool prime_powers_only) {
    std::vector<std::uint64_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const auto lo = std::stoull(text.substr(0, dots));
        const auto hi = std::stoull(text.substr(dots + 2));
        for (auto v = lo; v <= hi; ++v)
            if (!prime_powers_only || is_prime_power(v)) out.push_back(v);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) out.push_back(std::stoull(item));
        if (prime_powers_only)
            for (auto v : out)
                if (!is_prime_power(v)) throw std::invalid_argument("not a prime power: " + std::to_string(v));
    }
    if (out.empty()) throw std::invalid_argument("empty grid: " + text);
    return out;
}

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw std::invalid_argument(std::string("missing --") + flag);
    return *v;
}

// Worst-case number of subsets the exact routes may visit.
BigInt enumeration_cost(const LinearCode& c, ExactRoute route) {
    const std::size_t n = c.length(), k = c.dimension();
    if (route == ExactRoute::primal) return BigInt(1) << n;
    BigInt total = 0;
    for (std::size_t t = 0; t <= n - k; ++t) total += binomial(n, t);
    return total;
}

std::string fraction_and_decimal(const Rational& v, int digits) {
    return to_fraction_string(v) + " (" + to_decimal_string(v, digits) + ")";
}

void cmd_expect(const RunConfig& cfg, std::ostream& out) {
    const Field field = Field::parse(cfg.field);
    const ResolvedCode rc = resolve_code(cfg.code, field, {cfg.k, cfg.r, cfg.n});
    const LinearCode& code = rc.code;
    if (code.dimension() == 0) throw std::invalid_argument("zero-dimensional code");

    Rational value;
    std::string method = cfg.method;
    if (method == "auto") method = preferred_route(code) == ExactRoute::dual ? "dual" : "exact";
    if (method == "formula") {
        if (rc.family == CodeFamily::simplex)
            value = expectation_simplex(field, rc.family_param);
        else if (rc.family == CodeFamily::hamming)
            value = expectation_hamming(field, rc.family_param);
        else
            throw std::invalid_argument("method formula needs --code simplex or hamming");
    } else if (method == "exact" || method == "dual") {
        const auto route = method == "dual" ? ExactRoute::dual : ExactRoute::primal;
        if (enumeration_cost(code, route) > cfg.budget) throw BudgetExceeded("exact enumeration exceeds budget");
        value = route == ExactRoute::dual ? expectation_exact_dual(code) : expectation_exact(code);
    } else if (method == "mc") {
        const auto est = expectation_monte_carlo(code, cfg.trials, cfg.seed, cfg.jobs);
        if (cfg.format == "json") {
            out << dump(monte_carlo_json(code, est, cfg.digits));
        } else {
            out << to_decimal_string(est.mean, cfg.digits) << " +/- " << decimal_string(est.std_error) << "\n";
        }
        return;
    } else {
        throw std::invalid_argument("unknown method: " + method);
    }

    const Rational bound = mds_bound(code.length(), code.dimension());
    if (cfg.format == "json") {
        out << dump(exact_result_json(code, method, value, cfg.digits));
        return;
    }
    if (cfg.format == "csv") {
        out << "n,k,q,method,value_rational,value_decimal,bound_rational,gap_rational\n";
        out << code.length() << ',' << code.dimension() << ',' << field.order() << ',' << method << ','
            << to_fraction_string(value) << ',' << to_decimal_string(value, cfg.digits) << ','
            << to_fraction_string(bound) << ',' << to_fraction_string(value - bound) << "\n";
        return;
    }
    out << fraction_and_decimal(value, cfg.digits) << "\n";
    out << "code   " << code.describe() << "\n";
    out << "method " << method << "\n";
    out << "bound  " << fraction_and_decimal(bound, cfg.digits) << "\n";
    out << "gap    " << fraction_and_decimal(value - bound, cfg.digits) << "\n";
    if (value == bound) out << "meets MDS bound\n";
}

void cmd_bound(const RunConfig& cfg, std::ostream& out) {
    const auto n = require(cfg.n, "n"), k = require(cfg.k, "k");
    const Rational b = mds_bound(n, k);
    if (cfg.format == "json") {
        Json j;
        j["n"] = n;
        j["k"] = k;
        j["bound_rational"] = to_fraction_string(b);
        j["bound_decimal"] = to_decimal_string(b, cfg.digits);
        out << dump(j);
    } else {
        out << fraction_and_decimal(b, cfg.digits) << "\n";
    }
}

void cmd_search(const RunConfig& cfg, std::ostream& out) {
    const Field field = Field::parse(cfg.field);
    SearchOptions opt;
    opt.budget = cfg.budget;
    opt.jobs = cfg.jobs;
    const auto k = require(cfg.k, "k"), n = require(cfg.n, "n");
    const SearchReport r = optimal_coverage(field, k, n, parse_search_mode(cfg.mode), opt);
    if (cfg.format == "json") {
        out << dump(search_report_json(r, field, cfg.digits));
        return;
    }
    const Rational bound = mds_bound(n, k);
    out << "E_opt[" << n << "," << k << "]_" << field.order() << " (" << to_string(r.mode) << " search)\n";
    out << std::left << std::setw(22) << "raw candidates" << r.raw_candidates << "\n";
    out << std::setw(22) << "rank-k candidates" << r.candidates_examined << "\n";
    out << std::setw(22) << "minimum" << fraction_and_decimal(r.minimum, cfg.digits) << "\n";
    out << std::setw(22) << "runner-up"
        << (r.runner_up ? fraction_and_decimal(*r.runner_up, cfg.digits) : std::string("-")) << "\n";
    out << std::setw(22) << "MDS bound" << fraction_and_decimal(bound, cfg.digits) << "\n";
    out << std::setw(22) << "optimal candidates" << r.optimal_candidates.size() << "\n";
    for (const auto& c : r.optimal_candidates) {
        out << "  {";
        for (std::size_t i = 0; i < c.points.size(); ++i) out << (i ? "," : "") << c.points[i] + 1;
        out << "}";
        if (c.zero_columns) out << " + " << c.zero_columns << " zero column(s)";
        out << "\n";
    }
    out << std::setw(22) << "wall time (s)" << r.wall_time_seconds << "\n";
}

void cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const Field field = Field::parse(cfg.field);
    const LinearCode code = resolve_code(cfg.code, field, {cfg.k, cfg.r, cfg.n}).code;
    const auto est = expectation_monte_carlo(code, cfg.trials, cfg.seed, cfg.jobs);
    if (cfg.format == "json") {
        out << dump(monte_carlo_json(code, est, cfg.digits));
    } else {
        out << "code      " << code.describe() << "\n";
        out << "trials    " << est.trials << " (seed " << est.seed << ")\n";
        out << "mean      " << to_decimal_string(est.mean, cfg.digits) << "\n";
        out << "std_error " << decimal_string(est.std_error) << "\n";
        out << "draws     min " << est.min_draws << ", max " << est.max_draws << "\n";
    }
    if (cfg.trace > 0) {
        // per-phase draw counts: phase i lasts while the drawn span has dimension i
        TrialRunner runner(code);
        for (std::uint64_t t = 0; t < cfg.trace && t < cfg.trials; ++t) {
            CounterStream rng(cfg.seed, t);
            const auto phases = runner.run_phases(rng);
            std::cerr << "trial " << t << ":";
            for (auto p : phases) std::cerr << ' ' << p;
            std::cerr << "\n";
        }
    }
}

void gap_csv_row(std::ostream& out, const GapReport& g, int digits) {
    out << g.q << ',' << g.k_or_r << ',' << g.n << ',' << to_decimal_string(g.exact, digits) << ','
        << to_decimal_string(g.bound, digits) << ',' << to_decimal_string(g.gap, digits) << ','
        << decimal_string(g.ratio, std::min(digits, 40)) << ','
        << (g.predicted ? decimal_string(*g.predicted, std::min(digits, 40)) : std::string()) << ',';
    if (g.predicted) out << decimal_string(to_decimal(g.gap) / *g.predicted, std::min(digits, 40));
    out << "\n";
}

void cmd_asymptotics(const RunConfig& cfg, std::ostream& out) {
    const int digits = cfg.digits;
    const std::string header = "q,k_or_r,n,exact,bound,gap,ratio,predicted_term,normalized_gap\n";
    if (cfg.family == "simplex" || cfg.family == "hamming") {
        const auto param = require(cfg.family == "simplex" ? cfg.k : cfg.r, cfg.family == "simplex" ? "k" : "r");
        out << header;
        for (auto q : parse_grid(cfg.q_grid, true))
            gap_csv_row(out, cfg.family == "simplex" ? simplex_gap(q, param) : hamming_gap(q, param), digits);
    } else if (cfg.family == "simplex-k") {
        // fixed q, growing k; predicted_term is the k -> infinity limit of the gap
        const std::uint64_t q = Field::parse(cfg.field).order();
        const Decimal limit = simplex_gap_series_limit(q, Decimal("1e-40")).value;
        out << header;
        for (auto k : parse_grid(cfg.k_grid, false)) {
            GapReport g = simplex_gap(q, k);
            g.predicted = limit;
            gap_csv_row(out, g, digits);
        }
    } else if (cfg.family == "binary-hamming") {
        out << "r,n,limit_bound,difference_coeff,exact_ratio\n";
        for (auto r : parse_grid(cfg.k_grid, false)) {
            const auto b = binary_hamming_ratio_bound(r, r <= 12);
            out << r << ',' << ((std::uint64_t{1} << r) - 1) << ',' << to_decimal_string(b.limit_bound, digits) << ','
                << to_decimal_string(b.difference_coeff, digits) << ','
                << (b.exact_ratio ? to_decimal_string(*b.exact_ratio, digits) : std::string()) << "\n";
        }
    } else if (cfg.family == "mds-rate") {
        out << "rate,n,k,bound_per_k,limit\n";
        std::stringstream ss(cfg.rates);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const Decimal rate(item);
            const Decimal limit = mds_rate_limit(rate);
            for (std::uint64_t n : {10, 100, 1000, 10000}) {
                const auto k = static_cast<std::uint64_t>(floor(Decimal(n) * rate).convert_to<long long>());
                if (k < 1) continue;
                out << item << ',' << n << ',' << k << ',' << decimal_string(mds_bound_per_dimension(n, rate), 20)
                    << ',' << decimal_string(limit, 20) << "\n";
            }
        }
    } else {
        throw std::invalid_argument("unknown family: " + cfg.family);
    }
}

void cmd_figure1(const RunConfig& cfg, std::ostream& out) {
    const int digits = std::max(cfg.digits, 20);
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (std::size_t k = 3; k <= 7; ++k)
            for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23}) {
                const auto g = simplex_gap(q, k);
                Json row;
                row["k"] = k;
                row["q"] = q;
                row["simplex_value"] = to_decimal_string(g.exact, digits);
                row["bound_value"] = to_decimal_string(g.bound, digits);
                rows.push_back(row);
            }
        out << dump(rows);
        return;
    }
    out << "k,q,simplex_value,bound_value\n";
    for (std::size_t k = 3; k <= 7; ++k)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23}) {
            const auto g = simplex_gap(q, k);
            out << k << ',' << q << ',' << to_decimal_string(g.exact, digits) << ','
                << to_decimal_string(g.bound, digits) << "\n";
        }
}

void cmd_verify(const RunConfig&, std::ostream& out) {
    bool ok = true;
    for (const auto& r : run_invariant_suite()) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) out << " [" << r.detail << "]";
        out << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
        ok = ok && r.passed;
    }
    if (!ok) throw InvariantViolation("invariant suite failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected draws to full rank for linear codes over small fields"};
    app.require_subcommand(1);
    RunConfig cfg;

    app.add_option("--field", cfg.field, "Field as q or p^m")->capture_default_str();
    app.add_option("--format", cfg.format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Write output to this file");
    app.add_option("--digits", cfg.digits, "Significant digits of decimal output")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    app.add_option("--budget", cfg.budget, "Enumeration budget")->capture_default_str();

    auto code_opts = [&](CLI::App* sub) {
        sub->add_option("--code", cfg.code, "simplex | hamming | rs | dual-of:<code> | file:<path>")->required();
        sub->add_option("--k", cfg.k, "Dimension");
        sub->add_option("--r", cfg.r, "Redundancy (Hamming)");
        sub->add_option("--n", cfg.n, "Length");
    };

    auto* expect = app.add_subcommand("expect", "Expected number of draws for a code");
    code_opts(expect);
    expect->add_option("--method", cfg.method, "auto | exact | dual | formula | mc")
        ->check(CLI::IsMember({"auto", "exact", "dual", "formula", "mc"}));
    expect->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    expect->add_option("--seed", cfg.seed);

    auto* bound = app.add_subcommand("bound", "MDS lower bound n(H_n - H_{n-k})");
    bound->add_option("--n", cfg.n)->required();
    bound->add_option("--k", cfg.k)->required();

    auto* search = app.add_subcommand("search", "Exhaustive search for E_opt[n,k]_q");
    search->add_option("--k", cfg.k)->required();
    search->add_option("--n", cfg.n)->required();
    search->add_option("--mode", cfg.mode)->check(CLI::IsMember({"projective", "full"}));

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the expectation");
    code_opts(simulate);
    simulate->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", cfg.seed);
    simulate->add_option("--trace", cfg.trace, "Print per-phase draw counts of the first N trials to stderr");

    auto* asym = app.add_subcommand("asymptotics", "Gap to the MDS bound on a parameter grid (CSV)");
    asym->add_option("--family", cfg.family, "simplex | simplex-k | hamming | binary-hamming | mds-rate")
        ->check(CLI::IsMember({"simplex", "simplex-k", "hamming", "binary-hamming", "mds-rate"}));
    asym->add_option("--k", cfg.k);
    asym->add_option("--r", cfg.r);
    asym->add_option("--q-grid", cfg.q_grid, "a..b or comma list; non prime powers in a range are skipped");
    asym->add_option("--k-grid", cfg.k_grid, "k (or r) values for simplex-k / binary-hamming");
    asym->add_option("--rates", cfg.rates, "Comma list of rates for mds-rate");

    auto* fig = app.add_subcommand("figure1", "Simplex expectation vs bound, k = 3..7 (CSV)");
    auto* verify = app.add_subcommand("verify", "Run the invariant self-check suite");

    for (auto* sub : {expect, bound, search, simulate, asym, fig, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out << "\n";
            return kExitUsage;
        }
    }
    std::ostream& out = cfg.out.empty() ? std::cout : file;

    try {
        if (*expect) cmd_expect(cfg, out);
        else if (*bound) cmd_bound(cfg, out);
        else if (*search) cmd_search(cfg, out);
        else if (*simulate) cmd_simulate(cfg, out);
        else if (*asym) cmd_asymptotics(cfg, out);
        else if (*fig) cmd_figure1(cfg, out);
        else if (*verify) cmd_verify(cfg, out);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}
