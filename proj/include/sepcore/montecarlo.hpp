#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sepcore/generators.hpp"
#include "sepcore/stats.hpp"

namespace sepcore {

struct McConfig {
    int J = 1000;
    int n = 0;
    Shape shape;
    SamplerSpec sampler;
    double alpha = 0.05;
    std::uint64_t master_seed = 0;
    RootKind root_kind = RootKind::Cholesky;
    std::vector<StatKind> stats;
    int threads = 0;  // 0: SEPCORE_THREADS, then hardware concurrency
};

struct Calibration {
    int n = 0;
    Shape shape;
    SamplerSpec sampler;
    double alpha = 0.05;
    int J = 0;
    std::uint64_t master_seed = 0;
    std::vector<StatKind> stats;
    std::vector<double> critical_values;

    std::optional<double> critical_value(StatKind k) const;
};

struct McResult {
    McConfig config;
    std::vector<std::vector<double>> samples;  // per entry of config.stats, length J
    std::vector<double> critical_values;
    double wall_seconds = 0.0;

    const std::vector<double>& samples_of(StatKind k) const;
    Calibration calibration() const;
};

struct PowerResult {
    CoreModel core;
    std::vector<StatKind> stats;
    std::vector<double> rate;
    std::vector<double> se;
    int K = 0;

    double rate_of(StatKind k) const;
};

struct Reference {
    enum class Type { TracyWidom1, Normal, MonteCarlo };

    Type type = Type::TracyWidom1;
    double mean = 0.0;
    double sd = 1.0;
    double q = 0.0;

    static Reference tracy_widom() { return {}; }
    static Reference normal(double mean, double sd) { return {Type::Normal, mean, sd, 0.0}; }
    static Reference monte_carlo(double q) { return {Type::MonteCarlo, 0.0, 1.0, q}; }
    double quantile(double level) const;
};

namespace montecarlo {

std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t j);
int resolve_threads(int requested);

// Runs body(j) for j in [0, count) on a worker pool; rethrows the lowest-index failure.
void parallel_for(int count, int threads, const std::function<void(int)>& body);

// Order statistic ceil((1 - alpha) J), 1-based.
double mc_quantile(std::vector<double> samples, double alpha);
double rejection_rate(const std::vector<double>& values, double critical);

double normal_quantile(double p);

McResult simulate_null(const McConfig& cfg);
double empirical_size(const McConfig& cfg, StatKind kind, const Reference& ref);
double empirical_size(const McResult& null_run, StatKind kind, const Reference& ref);

struct PowerOptions {
    // Separable K applied to the data (rows become K^{1/2} C^{1/2} z).
    std::optional<SeparableFactor> premultiply;
};

// cfg.J is the number of alternative replicates; seeds follow cfg.master_seed.
PowerResult empirical_power(const CoreModel& core, const McConfig& cfg, const Calibration& calib,
                            const PowerOptions& opt = {});

struct BbpRow {
    double c = 0.0;
    double lambda = 1.0;
    std::vector<double> population_spikes;
    std::vector<double> limits;
    std::vector<double> mean_top;
};

std::vector<BbpRow> bbp_study(Construction construction, int r, const std::vector<double>& c_values,
                              int p1, int p2, int n, int reps, std::uint64_t seed, int threads = 0);

struct EsdDiagnostic {
    double ks = 0.0;
    std::vector<double> bin_edges;
    std::vector<int> counts;
    std::vector<int> retained;  // per replicate
};

// Pools the sample-core spectra of cfg.J null replicates.
EsdDiagnostic esd_diagnostic(const McConfig& cfg, int bins = 40);

double t3_limit_check(int n, const Shape& s, int reps, std::uint64_t seed, int threads = 0);

// Mean of |S|_F^2 / sigma_1(R(S))^2 - 1 with data drawn under a separable preset.
double contrast_check(int n, const Shape& s, const SeparableFactor& k, int reps, std::uint64_t seed,
                      int threads = 0);

}  // namespace montecarlo
}  // namespace sepcore
