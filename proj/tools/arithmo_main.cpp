// Command-line front end: exact evaluation, tabulation, convolution,
// Dirichlet series partial sums, and identity verification.
//
// Exit codes: 0 success (or identity holds), 1 counterexample found,
// 2 usage, domain, or resource errors.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithmo/arithmo.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

arithmo::ArithFn parse_fn(const std::string& name) {
    const auto fn = arithmo::fn_from_name(name);
    if (!fn) throw std::invalid_argument("unknown function '" + name + "'");
    return *fn;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run_eval(const std::string& fn_name, std::uint64_t n) {
    std::cout << arithmo::to_string(arithmo::eval(parse_fn(fn_name), n)) << "\n";
    return kExitOk;
}

int run_table(const std::vector<std::string>& fn_names, std::uint64_t max,
              const std::string& format, std::uint64_t sieve_limit) {
    if (max == 0) throw std::invalid_argument("table: --max must be >= 1");
    if (max > sieve_limit)
        throw arithmo::resource_error("table: --max " + std::to_string(max) +
                                      " exceeds --sieve-limit " + std::to_string(sieve_limit));
    std::vector<arithmo::ArithFn> fns;
    for (const std::string& name : fn_names) fns.push_back(parse_fn(name));

    std::vector<std::vector<arithmo::QValue>> columns;
    if (max == 1) {
        for (arithmo::ArithFn f : fns) columns.push_back(arithmo::sieve_range(f, 1));
    } else {
        const arithmo::SieveTable sieve = arithmo::build_sieve(max);
        for (arithmo::ArithFn f : fns) columns.push_back(arithmo::sieve_range(f, max, sieve));
    }

    if (format == "json") {
        nlohmann::json j;
        j["max"] = max;
        j["functions"] = fn_names;
        j["rows"] = nlohmann::json::array();
        for (std::uint64_t n = 1; n <= max; ++n) {
            nlohmann::json row = {n};
            for (const auto& col : columns) row.push_back(arithmo::to_string(col[n]));
            j["rows"].push_back(std::move(row));
        }
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    const char sep = format == "csv" ? ',' : ' ';
    std::cout << "n";
    for (const std::string& name : fn_names) std::cout << sep << name;
    std::cout << "\n";
    for (std::uint64_t n = 1; n <= max; ++n) {
        std::cout << n;
        for (const auto& col : columns) std::cout << sep << arithmo::to_string(col[n]);
        std::cout << "\n";
    }
    return kExitOk;
}

int run_convolve(const std::string& f_name, const std::string& g_name, std::uint64_t n,
                 bool fast) {
    const arithmo::ArithFn f = parse_fn(f_name), g = parse_fn(g_name);
    const arithmo::QValue oracle = arithmo::convolve_at(f, g, n);
    if (!fast) {
        std::cout << arithmo::to_string(oracle) << "\n";
        return kExitOk;
    }
    arithmo::QValue value;
    if (arithmo::is_multiplicative(f) && arithmo::is_multiplicative(g)) {
        value = arithmo::convolve_multiplicative_at(f, g, n);
    } else if (g == arithmo::ArithFn::delta && arithmo::is_multiplicative(f)) {
        value = arithmo::f_star_delta_at(f, n);
    } else if (f == arithmo::ArithFn::delta && arithmo::is_multiplicative(g)) {
        value = arithmo::f_star_delta_at(g, n);
    } else {
        throw arithmo::unsupported_path_error(
            "--fast needs both functions multiplicative, or one of them delta with the "
            "other multiplicative");
    }
    std::cout << arithmo::to_string(value) << "\n";
    std::cout << "oracle " << arithmo::to_string(oracle) << "\n";
    if (value != oracle) {
        std::cerr << "error: fast path disagrees with the oracle\n";
        return kExitCounterexample;
    }
    return kExitOk;
}

void print_series_sum(const char* label, const arithmo::SeriesSum& sum) {
    std::cout << label << " value=" << format_double(sum.value) << " terms=" << sum.terms
              << " tail_bound=" << format_double(sum.tail_bound) << "\n";
}

int run_verify(const std::string& identity, const std::string& f_name, std::uint64_t max,
               double s, std::uint64_t terms, std::uint64_t coeff_max,
               const std::string& format, std::uint64_t sieve_limit) {
    const arithmo::VerifyOptions opts{sieve_limit};
    arithmo::IdentityReport report;
    bool extras_ok = true;
    arithmo::SeriesIdentityResult series;
    const bool is_series = identity == "series";

    if (identity == "theorem1") {
        report = arithmo::check_theorem1(parse_fn(f_name), max, opts);
    } else if (identity == "lemma2") {
        report = arithmo::check_lemma2(parse_fn(f_name), max, opts);
    } else if (identity == "prop6") {
        report = arithmo::check_prop6(max, opts);
    } else if (identity == "eq11") {
        report = arithmo::check_conjecture_eq11(max, opts);
    } else if (identity == "leibniz") {
        report = arithmo::check_leibniz(max, opts);
    } else if (is_series) {
        series = arithmo::check_series_identity(s, terms, coeff_max, opts);
        report = series.report;
        extras_ok = series.within_bound;
    } else {
        throw std::invalid_argument("unknown identity '" + identity + "'");
    }

    if (format == "json") {
        nlohmann::json j = arithmo::to_json(report);
        if (is_series) {
            j["series"] = {{"s", s},
                           {"terms", terms},
                           {"zeta_value", series.zeta_factor.value},
                           {"zeta_tail", series.zeta_factor.tail_bound},
                           {"delta_value", series.delta_series.value},
                           {"delta_tail", series.delta_series.tail_bound},
                           {"delta_tau_value", series.delta_tau_series.value},
                           {"delta_tau_tail", series.delta_tau_series.tail_bound},
                           {"product", series.product},
                           {"difference", series.difference},
                           {"combined_bound", series.combined_bound},
                           {"within_bound", series.within_bound}};
        }
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << arithmo::to_csv(report);
    } else {
        std::cout << arithmo::to_plain(report);
        if (is_series) {
            print_series_sum("zeta(s-1)", series.zeta_factor);
            print_series_sum("delta", series.delta_series);
            print_series_sum("delta_tau", series.delta_tau_series);
            std::cout << "product " << format_double(series.product) << "\n"
                      << "difference " << format_double(series.difference) << "\n"
                      << "combined_bound " << format_double(series.combined_bound) << "\n"
                      << "within_bound " << (series.within_bound ? "yes" : "no") << "\n";
        }
    }
    const bool ok = report.status == arithmo::IdentityStatus::holds && extras_ok;
    return ok ? kExitOk : kExitCounterexample;
}

int run_series(const std::string& name, double s, std::uint64_t terms,
               std::uint64_t sieve_limit) {
    const bool needs_table =
        name != "one" && name != "eps" && name != "id";
    if (needs_table && terms > sieve_limit)
        throw arithmo::resource_error("series: --terms " + std::to_string(terms) +
                                      " exceeds --sieve-limit " + std::to_string(sieve_limit));
    arithmo::SeriesSum sum;
    if (name == "delta_tau") {
        sum = arithmo::series_partial_sum_delta_tau(s, terms);
    } else {
        sum = arithmo::series_partial_sum(parse_fn(name), s, terms);
    }
    std::cout << "value " << format_double(sum.value) << "\n"
              << "terms " << sum.terms << "\n"
              << "tail_bound " << format_double(sum.tail_bound) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic-derivative and Dirichlet-convolution toolkit"};
    app.require_subcommand(1);

    std::uint64_t sieve_limit = 1'000'000;
    app.add_option("--sieve-limit", sieve_limit,
                   "largest sieve/table the tool may build (env ARITHMO_SIEVE_LIMIT)")
        ->envname("ARITHMO_SIEVE_LIMIT");

    std::string eval_fn;
    std::uint64_t eval_n = 1;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a catalog function exactly");
    eval_cmd->add_option("fn", eval_fn, "function name")->required();
    eval_cmd->add_option("n", eval_n, "argument, n >= 1")->required();

    std::vector<std::string> table_fns;
    std::uint64_t table_max = 1;
    std::string table_format = "plain";
    CLI::App* table_cmd = app.add_subcommand("table", "tabulate functions over 1..max");
    table_cmd->add_option("fns", table_fns, "function names")->required()->expected(-1);
    table_cmd->add_option("--max", table_max, "largest argument")->required();
    table_cmd->add_option("--format", table_format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    std::string conv_f, conv_g;
    std::uint64_t conv_n = 1;
    bool conv_fast = false;
    CLI::App* conv_cmd = app.add_subcommand("convolve", "Dirichlet convolution (f*g)(n)");
    conv_cmd->add_option("f", conv_f, "left function")->required();
    conv_cmd->add_option("g", conv_g, "right function")->required();
    conv_cmd->add_option("n", conv_n, "argument, n >= 1")->required();
    conv_cmd->add_flag("--fast", conv_fast,
                       "use the multiplicative or Lemma-style fast path and cross-check the "
                       "oracle");

    std::string verify_identity, verify_fn = "id", verify_format = "plain";
    std::uint64_t verify_max = 1000, verify_terms = 10'000, verify_coeff_max = 10'000;
    double verify_s = 4.0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "sweep an identity over a range");
    verify_cmd->add_option("identity", verify_identity, "identity name")
        ->required()
        ->check(CLI::IsMember({"theorem1", "lemma2", "prop6", "series", "eq11", "leibniz"}));
    verify_cmd->add_option("--max", verify_max, "sweep bound (default 1000)");
    verify_cmd->add_option("--f", verify_fn, "function for theorem1/lemma2 (default id)");
    verify_cmd->add_option("--s", verify_s, "series exponent (series only, default 4)");
    verify_cmd->add_option("--terms", verify_terms, "series terms (series only, default 10000)");
    verify_cmd->add_option("--coeff-max", verify_coeff_max,
                           "exact coefficient sweep bound (series only, default 10000)");
    verify_cmd->add_option("--format", verify_format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));

    std::string series_fn;
    double series_s = 0;
    std::uint64_t series_terms = 1;
    CLI::App* series_cmd = app.add_subcommand("series", "Dirichlet series partial sum");
    series_cmd->add_option("fn", series_fn, "function name or delta_tau")->required();
    series_cmd->add_option("--s", series_s, "exponent")->required();
    series_cmd->add_option("--terms", series_terms, "number of terms")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return run_eval(eval_fn, eval_n);
        if (table_cmd->parsed()) return run_table(table_fns, table_max, table_format, sieve_limit);
        if (conv_cmd->parsed()) return run_convolve(conv_f, conv_g, conv_n, conv_fast);
        if (verify_cmd->parsed())
            return run_verify(verify_identity, verify_fn, verify_max, verify_s, verify_terms,
                              verify_coeff_max, verify_format, sieve_limit);
        if (series_cmd->parsed()) return run_series(series_fn, series_s, series_terms, sieve_limit);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
