#pragma once

#include "specstats/partitions.hpp"
#include "specstats/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace specstats {

enum class StatKind { spectral_k, spectral_l, classical_k };
std::string to_string(StatKind kind);
StatKind stat_kind_from_string(std::string_view s);

struct StatRequest {
    StatKind kind;
    IntegerPartition lambda;
};

struct ExperimentConfig {
    std::vector<Rational> population;
    std::string population_name;  // builtin name or file path, echoed in reports
    int m = 0;
    long replicates = 0;
    std::uint64_t seed = 0;
    std::vector<StatRequest> statistics;
    int degree_cap = kSpectralDegreeCap;
    std::vector<int> limit_sizes = {8, 16, 32, 64};
    std::string limit_law = "semicircle";
    // execution detail, not part of the experiment identity; never serialized
    int threads = 0;  // 0 = auto
};

struct StatResult {
    std::string kind;
    IntegerPartition lambda;
    std::string moment = "mean";  // mean | var | cov | limit
    std::string target_rational;
    double target = 0.0;
    double estimate = 0.0;
    double stderr_ = 0.0;
    double z = 0.0;
    double z_gate = 4.0;
    bool gating = true;
    bool pass = true;
    std::vector<std::pair<int, double>> trend;  // limit demo: (m, value)
    bool monotone = false;                      // limit demo: |value - target| decreasing
};

struct SpectralExperimentReport {
    std::string suite;
    ExperimentConfig config;
    std::string rng_name;
    std::vector<StatResult> results;
    double elapsed_s = 0.0;

    bool all_gated_pass() const;
};

// Monte Carlo check of inheritance on the average: for each requested
// spectral statistic, the MC mean over spectral samples against the exact
// value on the population. |z| > z_gate is flagged FAIL.
SpectralExperimentReport run_inheritance(const ExperimentConfig& cfg, double z_gate = 4.0);

// Monte Carlo check of the closed-form conditional variances/covariance of
// (K_(1), K_(2)); standard errors by jackknife over replicates. The var(K_(2))
// gate is one unit wider (heavier-tailed estimator).
SpectralExperimentReport run_variance_check(const ExperimentConfig& cfg, double z_gate = 4.0);

// Non-gating demonstration: normalized spectral statistics on quantile
// spectra of cfg.limit_law at sizes cfg.limit_sizes, against free-cumulant
// product targets. Records the trend; never fails.
SpectralExperimentReport run_limit_demo(const ExperimentConfig& cfg);

std::string report_to_json(const SpectralExperimentReport& report);
void write_report(const SpectralExperimentReport& report, const std::string& path);

struct Population {
    std::vector<Rational> values;
    // false when any token was a decimal/scientific literal
    bool exact_form = true;
};

// CSV: one number per line or comma-separated, '#' comments, blank lines
// ignored, rationals accepted as "p/q". Throws ParseError with line/token.
Population read_population(const std::string& path);
Population parse_population_text(std::string_view text, std::string_view origin);

// "arange8" = 1..8, "symm3" = (1,2,3), "skew6" = (0,0,0,1,5,9)
std::vector<Rational> builtin_population(std::string_view name);
const std::vector<std::string>& builtin_population_names();

// j-th of m midpoint quantiles of the standard semicircle law on [-2, 2].
std::vector<double> semicircle_quantiles(int m);
// Moments m_1..m_d of the named law, exact. Laws: "semicircle".
std::vector<Rational> law_moments(std::string_view law, int d);

}  // namespace specstats
