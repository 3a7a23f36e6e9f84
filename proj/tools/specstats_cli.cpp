// Command-line surface over the spectral statistics library: compute
// statistics on a spectrum, draw spectral samples, run the Monte Carlo
// verification suites, and print coefficient tables.
//
// Exit codes: 0 success, 1 usage/config error, 2 FAIL verdict from verify.

#include "specstats/classical.hpp"
#include "specstats/errors.hpp"
#include "specstats/experiments.hpp"
#include "specstats/random_matrix.hpp"
#include "specstats/rng.hpp"
#include "specstats/set_partitions.hpp"
#include "specstats/spectral.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace specstats;
using nlohmann::json;

std::vector<double> to_doubles(const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_double(q));
    return out;
}

Population load_population(const std::string& input, const std::string& builtin) {
    if (!builtin.empty()) return Population{builtin_population(builtin), true};
    return read_population(input);
}

// ---------------------------------------------------------------- stats ----

struct StatsOptions {
    std::string input;
    int degree = 4;
    std::string kind = "all";
    std::string format = "table";
};

struct StatRow {
    std::string kind;
    IntegerPartition lambda;
    double value = 0.0;
    std::optional<std::string> value_rational;
};

template <class T>
std::optional<T> eval_stat(const std::string& kind, const IntegerPartition& lam,
                           const std::vector<T>& x) {
    if (kind == "spectral_k") return spectral_kstat(lam, x);
    if (kind == "spectral_l") return generalized_polykay_l(lam, x);
    if (lam.weight() > 4) return std::nullopt;  // classical rows stop at degree 4
    return k_statistic(lam, x);
}

int cmd_stats(const StatsOptions& opt) {
    const Population pop = read_population(opt.input);
    if (pop.values.empty()) {
        std::cerr << "specstats stats: empty population\n";
        return 1;
    }
    const int n = static_cast<int>(pop.values.size());
    if (opt.degree > n) {
        std::cerr << "specstats stats: degree exceeds sample size (" << opt.degree << " > "
                  << n << ")\n";
        return 1;
    }
    if (opt.degree > kSpectralDegreeCap) {
        std::cerr << "specstats stats: degree exceeds cap " << kSpectralDegreeCap << "\n";
        return 1;
    }
    std::vector<std::string> kinds;
    if (opt.kind == "all")
        kinds = {"spectral_k", "spectral_l", "classical_k"};
    else
        kinds = {opt.kind};

    const auto xd = to_doubles(pop.values);
    std::vector<StatRow> rows;
    for (const auto& kind : kinds) {
        if (kind == "classical_k" && opt.kind == "classical_k" && opt.degree > 4)
            throw CapacityError("classical statistics stop at degree 4");
        for (int i = 1; i <= opt.degree; ++i) {
            for (const auto& lam : enumerate_partitions(i)) {
                StatRow row;
                row.kind = kind;
                row.lambda = lam;
                if (pop.exact_form) {
                    auto v = eval_stat<Rational>(kind, lam, pop.values);
                    if (!v) continue;
                    row.value = to_double(*v);
                    row.value_rational = to_fraction_string(*v);
                } else {
                    auto v = eval_stat<double>(kind, lam, xd);
                    if (!v) continue;
                    row.value = *v;
                }
                rows.push_back(std::move(row));
            }
        }
    }

    if (opt.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows) {
            json j{{"kind", r.kind},
                   {"lambda", r.lambda.parts()},
                   {"degree", r.lambda.weight()},
                   {"value", r.value}};
            if (r.value_rational) j["value_rational"] = *r.value_rational;
            jrows.push_back(std::move(j));
        }
        const json out{{"input", json{{"n", n}, {"exact", pop.exact_form}}},
                       {"results", jrows}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("%-12s %-12s %s\n", "kind", "lambda", "value");
        for (const auto& r : rows) {
            if (r.value_rational)
                std::printf("%-12s %-12s %s\n", r.kind.c_str(), r.lambda.to_string().c_str(),
                            r.value_rational->c_str());
            else
                std::printf("%-12s %-12s %.12g\n", r.kind.c_str(),
                            r.lambda.to_string().c_str(), r.value);
        }
    }
    return 0;
}

// --------------------------------------------------------------- sample ----

struct SampleOptions {
    std::string input;
    int m = 0;
    long count = 1;
    std::uint64_t seed = 0;
    std::string output;
};

int cmd_sample(const SampleOptions& opt) {
    const Population pop = read_population(opt.input);
    const auto x = to_doubles(pop.values);
    if (opt.m < 1 || opt.m > static_cast<int>(x.size())) {
        std::cerr << "specstats sample: need 1 <= m <= n\n";
        return 1;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file) {
            std::cerr << "specstats sample: cannot open '" << opt.output << "'\n";
            return 1;
        }
        out = &file;
    }
    char buf[32];
    for (long row = 0; row < opt.count; ++row) {
        RngStream stream(opt.seed, static_cast<std::uint64_t>(row));
        const auto y = spectral_sample(x, opt.m, stream);  // ascending
        for (std::size_t k = 0; k < y.size(); ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", y[k]);
            *out << (k ? "," : "") << buf;
        }
        *out << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::string suite = "inheritance";
    std::string input;
    std::string builtin;
    int m = 4;
    long replicates = 20000;
    std::uint64_t seed = 0;
    std::string output;
    int threads = 0;
    double z_gate = 4.0;
};

std::vector<StatRequest> default_inheritance_stats() {
    return {{StatKind::spectral_k, IntegerPartition{1}},
            {StatKind::spectral_k, IntegerPartition{2}},
            {StatKind::spectral_k, IntegerPartition{1, 1}},
            {StatKind::spectral_k, IntegerPartition{3}},
            {StatKind::spectral_l, IntegerPartition{1, 1}},
            {StatKind::spectral_l, IntegerPartition{2, 1}}};
}

std::vector<StatRequest> default_limit_stats() {
    return {{StatKind::spectral_k, IntegerPartition{1}},
            {StatKind::spectral_k, IntegerPartition{2}},
            {StatKind::spectral_l, IntegerPartition{1, 1}},
            {StatKind::spectral_l, IntegerPartition{2, 1}}};
}

int cmd_verify(const VerifyOptions& opt) {
    ExperimentConfig cfg;
    if (opt.suite != "limit" || !opt.input.empty() || !opt.builtin.empty()) {
        const Population pop = load_population(opt.input, opt.builtin);
        cfg.population = pop.values;
        cfg.population_name = opt.builtin.empty() ? opt.input : opt.builtin;
    }
    cfg.m = opt.m;
    cfg.replicates = opt.replicates;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;

    SpectralExperimentReport combined;
    combined.suite = opt.suite;
    combined.rng_name = RngStream::algorithm_name();

    auto append = [&combined](const SpectralExperimentReport& r) {
        combined.config = r.config;
        combined.results.insert(combined.results.end(), r.results.begin(), r.results.end());
        combined.elapsed_s += r.elapsed_s;
    };

    if (opt.suite == "inheritance" || opt.suite == "all") {
        auto c = cfg;
        c.statistics = default_inheritance_stats();
        append(run_inheritance(c, opt.z_gate));
    }
    if (opt.suite == "variance" || opt.suite == "all") {
        append(run_variance_check(cfg, opt.z_gate));
    }
    if (opt.suite == "limit" || opt.suite == "all") {
        auto c = cfg;
        c.statistics = default_limit_stats();
        append(run_limit_demo(c));
    }
    if (combined.results.empty()) {
        std::cerr << "specstats verify: unknown suite '" << opt.suite << "'\n";
        return 1;
    }
    combined.config.statistics.clear();  // per-suite defaults, echoed per run above

    for (const auto& r : combined.results) {
        const char* verdict = r.gating ? (r.pass ? "PASS" : "FAIL") : "DEMONSTRATION";
        std::printf("[%s] %s %s %s: estimate=%.8g target=%.8g stderr=%.3g z=%+.2f\n",
                    verdict, r.moment.c_str(), r.kind.c_str(),
                    r.lambda.to_string().c_str(), r.estimate, r.target, r.stderr_, r.z);
        for (const auto& [msize, v] : r.trend)
            std::printf("    m=%-4d value=%.8g\n", msize, v);
    }
    if (!opt.output.empty()) write_report(combined, opt.output);
    return combined.all_gated_pass() ? 0 : 2;
}

// --------------------------------------------------------------- tables ----

struct TablesOptions {
    int degree = 4;
    int n = 8;
};

int cmd_tables(const TablesOptions& opt) {
    const int i = opt.degree;
    const auto classes = enumerate_partitions(i);

    std::printf("degree %d, sample size n = %d\n\n", i, opt.n);
    std::printf("%-12s %10s %10s %14s\n", "class", "d", "s", "moebius(pi,1)");
    const auto top = SetPartition::one_block(i);
    for (const auto& lam : classes) {
        const auto m = moebius(SetPartition::of_shape(lam), top);
        std::printf("%-12s %10s %10s %14s\n", lam.to_string().c_str(),
                    to_fraction_string(coeff_d(lam)).c_str(), coeff_s(lam).str().c_str(),
                    to_fraction_string(m).c_str());
    }

    std::printf("\nmu(I_%d)^(-1) class values:\n", opt.n);
    if (i > opt.n) {
        std::printf("  (none: degree %d exceeds n = %d, mu(I_n) is singular)\n", i, opt.n);
    } else {
        const auto& inv = inverse_mu_identity(opt.n, i);
        for (const auto& lam : classes)
            std::printf("  %-12s %s\n", lam.to_string().c_str(),
                        to_fraction_string(inv.at(lam)).c_str());
    }

    if (i <= 4 && i <= opt.n) {
        std::printf("\npower-sum coefficients of K_lambda at n = %d (algorithm vs closed form):\n",
                    opt.n);
        for (const auto& lam : classes) {
            const auto alg = kstat_powersum_coeffs(lam, opt.n);
            const auto closed = closed_form_coeffs(lam, opt.n);
            const auto printed = printed_variant_coeffs(lam, opt.n);
            std::printf("  K_%s:\n", lam.to_string().c_str());
            for (const auto& [mono, coef] : alg) {
                const auto cit = closed.find(mono);
                const auto pit = printed.find(mono);
                const bool closed_ok = cit != closed.end() && cit->second == coef;
                const bool printed_ok = pit != printed.end() && pit->second == coef;
                std::printf("    S%-10s %-24s closed:%s printed:%s\n",
                            mono.to_string().c_str(), to_fraction_string(coef).c_str(),
                            closed_ok ? "MATCH" : "MISMATCH",
                            printed_ok ? "MATCH" : "MISMATCH");
            }
        }
        std::printf("\nknown discrepancies in the commonly printed tables:\n");
        for (const auto& d : known_print_discrepancies())
            if (d.degree == i)
                std::printf("  [%s] %s\n", d.id.c_str(), d.note.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral k-statistics and polykays toolkit"};
    app.require_subcommand(1);

    StatsOptions stats;
    auto* cs = app.add_subcommand("stats", "compute statistics of a spectrum");
    cs->add_option("--input", stats.input, "population CSV")->required();
    cs->add_option("--degree", stats.degree, "maximum statistic degree (default 4)");
    cs->add_option("--kind", stats.kind, "spectral_k|spectral_l|classical_k|all")
        ->check(CLI::IsMember({"spectral_k", "spectral_l", "classical_k", "all"}));
    cs->add_option("--format", stats.format, "table|json")
        ->check(CLI::IsMember({"table", "json"}));

    SampleOptions sample;
    auto* cp = app.add_subcommand("sample", "draw spectral samples");
    cp->add_option("--input", sample.input, "population CSV")->required();
    cp->add_option("--m", sample.m, "sample size")->required();
    cp->add_option("--count", sample.count, "number of rows (default 1)");
    cp->add_option("--seed", sample.seed, "master seed")->required();
    cp->add_option("--output", sample.output, "output CSV (default stdout)");

    VerifyOptions verify;
    auto* cv = app.add_subcommand("verify", "run Monte Carlo verification suites");
    cv->add_option("--suite", verify.suite, "inheritance|variance|limit|all")
        ->check(CLI::IsMember({"inheritance", "variance", "limit", "all"}));
    cv->add_option("--input", verify.input, "population CSV");
    cv->add_option("--builtin", verify.builtin, "builtin population (arange8|symm3|skew6)");
    cv->add_option("--m", verify.m, "spectral sample size (default 4)");
    cv->add_option("--replicates", verify.replicates, "Monte Carlo replicates (default 20000)");
    cv->add_option("--seed", verify.seed, "master seed")->required();
    cv->add_option("--output", verify.output, "write the JSON report here");
    cv->add_option("--threads", verify.threads, "worker threads (0 = auto)");
    cv->add_option("--z-gate", verify.z_gate, "base |z| gate (default 4)");

    TablesOptions tables;
    auto* ct = app.add_subcommand("tables", "print coefficient tables");
    ct->add_option("--degree", tables.degree, "degree i (default 4)");
    ct->add_option("--n", tables.n, "sample size for mu(I_n) and the closed forms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cs->parsed()) return cmd_stats(stats);
        if (cp->parsed()) return cmd_sample(sample);
        if (cv->parsed()) return cmd_verify(verify);
        if (ct->parsed()) return cmd_tables(tables);
    } catch (const std::exception& e) {
        std::cerr << "specstats: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
