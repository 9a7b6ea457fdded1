#include "sepcore/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace sepcore {

std::optional<double> Calibration::critical_value(StatKind k) const {
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (stats[i] == k) return critical_values[i];
    }
    return std::nullopt;
}

const std::vector<double>& McResult::samples_of(StatKind k) const {
    for (std::size_t i = 0; i < config.stats.size(); ++i) {
        if (config.stats[i] == k) return samples[i];
    }
    throw Error(ErrorCode::InvalidArgument, std::string("statistic not simulated: ") + stat_name(k));
}

Calibration McResult::calibration() const {
    Calibration c;
    c.n = config.n;
    c.shape = config.shape;
    c.sampler = config.sampler;
    c.alpha = config.alpha;
    c.J = config.J;
    c.master_seed = config.master_seed;
    c.stats = config.stats;
    c.critical_values = critical_values;
    return c;
}

double PowerResult::rate_of(StatKind k) const {
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (stats[i] == k) return rate[i];
    }
    throw Error(ErrorCode::InvalidArgument, std::string("statistic not in power run: ") + stat_name(k));
}

double Reference::quantile(double level) const {
    switch (type) {
        case Type::TracyWidom1: return stats::tw1_quantile(level);
        case Type::Normal: return mean + sd * montecarlo::normal_quantile(level);
        case Type::MonteCarlo: return q;
    }
    return q;
}

namespace montecarlo {

std::uint64_t replicate_seed(std::uint64_t master, std::uint64_t j) {
    std::uint64_t z = master + (j + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SEPCORE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    const int workers = std::max(1, std::min(resolve_threads(threads), count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(std::max(count, 0)));
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            const int j = next.fetch_add(1);
            if (j >= count || failed.load()) return;
            try {
                body(j);
            } catch (...) {
                errors[j] = std::current_exception();
                failed.store(true);
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (int j = 0; j < count; ++j) {
        if (!errors[j]) continue;
        try {
            std::rethrow_exception(errors[j]);
        } catch (const Error& e) {
            throw Error(ErrorCode::ReplicateFailure,
                        "replicate " + std::to_string(j) + " failed (" + error_name(e.code()) + "): " + e.what());
        } catch (const std::exception& e) {
            throw Error(ErrorCode::ReplicateFailure, "replicate " + std::to_string(j) + " failed: " + e.what());
        }
    }
}

double mc_quantile(std::vector<double> samples, double alpha) {
    if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "mc_quantile: no samples");
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");
    const long long J = static_cast<long long>(samples.size());
    // J - floor(alpha J) == ceil((1 - alpha) J)
    const long long idx = J - static_cast<long long>(std::floor(alpha * double(J) + 1e-9));
    std::sort(samples.begin(), samples.end());
    return samples[static_cast<std::size_t>(std::max(idx, 1LL) - 1)];
}

double rejection_rate(const std::vector<double>& values, double critical) {
    if (values.empty()) return 0.0;
    const auto hits = std::count_if(values.begin(), values.end(), [&](double v) { return v > critical; });
    return double(hits) / double(values.size());
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::InvalidArgument, "normal_quantile: p outside (0,1)");
    double lo = -40.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (0.5 * std::erfc(-mid / std::sqrt(2.0)) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

void validate(const McConfig& cfg) {
    if (cfg.J < 1) throw Error(ErrorCode::InvalidArgument, "J must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");
    if (cfg.stats.empty()) throw Error(ErrorCode::InvalidArgument, "no statistics requested");
    kcd::check_existence(cfg.n, cfg.shape);
    const bool lrt = std::find(cfg.stats.begin(), cfg.stats.end(), StatKind::LRT) != cfg.stats.end();
    if (lrt && cfg.n < cfg.shape.p()) {
        throw Error(ErrorCode::InvalidArgument, "LRT is undefined when n < p");
    }
}

std::vector<double> column(const std::vector<StatValues>& rows, StatKind k) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[stat_index(k)]);
    return out;
}

}  // namespace

McResult simulate_null(const McConfig& cfg) {
    validate(cfg);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<StatValues> rows(cfg.J);
    const Matrix identity_root;
    parallel_for(cfg.J, cfg.threads, [&](int j) {
        Rng rng(replicate_seed(cfg.master_seed, j));
        Matrix y = generators::sample_data(cfg.n, cfg.shape.p(), identity_root, cfg.sampler, rng);
        Matrix s = generators::covariance_of(y, cfg.sampler.centered);
        stats::EvalOptions opt;
        opt.root = cfg.root_kind;
        opt.ktilde_from_mle = true;
        rows[j] = stats::evaluate(s, cfg.n, cfg.shape, cfg.stats, opt).values;
    });
    McResult res;
    res.config = cfg;
    for (StatKind k : cfg.stats) {
        res.samples.push_back(column(rows, k));
        res.critical_values.push_back(mc_quantile(res.samples.back(), cfg.alpha));
    }
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

double empirical_size(const McResult& null_run, StatKind kind, const Reference& ref) {
    const double q = ref.quantile(1.0 - null_run.config.alpha);
    return rejection_rate(null_run.samples_of(kind), q);
}

double empirical_size(const McConfig& cfg, StatKind kind, const Reference& ref) {
    McConfig c = cfg;
    c.stats = {kind};
    return empirical_size(simulate_null(c), kind, ref);
}

PowerResult empirical_power(const CoreModel& core, const McConfig& cfg, const Calibration& calib,
                            const PowerOptions& opt) {
    validate(cfg);
    if (calib.n != cfg.n || !(calib.shape == cfg.shape) || calib.alpha != cfg.alpha ||
        !calib.sampler.same_distribution(cfg.sampler)) {
        throw Error(ErrorCode::ConfigMismatch,
                    "critical values were calibrated for a different (n, shape, sampler, alpha)");
    }
    std::vector<double> crit;
    for (StatKind k : cfg.stats) {
        auto q = calib.critical_value(k);
        if (!q) throw Error(ErrorCode::ConfigMismatch, std::string("no critical value for ") + stat_name(k));
        crit.push_back(*q);
    }
    if (!(core.shape == cfg.shape)) throw Error(ErrorCode::ConfigMismatch, "core shape differs from config");

    const Matrix c = core.materialize();
    Matrix root = matcore::sym_sqrt(c);
    Matrix hk_inv1, hk_inv2;
    if (opt.premultiply) {
        const Matrix h1 = matcore::cholesky(opt.premultiply->K1);
        const Matrix h2 = matcore::cholesky(opt.premultiply->K2);
        root = matcore::apply_kron(h2, h1, root);
        hk_inv1 = h1.triangularView<Eigen::Lower>().solve(Matrix::Identity(h1.rows(), h1.cols()));
        hk_inv2 = h2.triangularView<Eigen::Lower>().solve(Matrix::Identity(h2.rows(), h2.cols()));
    }
    const bool want_t1b = std::find(cfg.stats.begin(), cfg.stats.end(), StatKind::T1b) != cfg.stats.end();

    std::vector<StatValues> rows(cfg.J);
    parallel_for(cfg.J, cfg.threads, [&](int j) {
        Rng rng(replicate_seed(cfg.master_seed, j));
        Matrix y = generators::sample_data(cfg.n, cfg.shape.p(), root, cfg.sampler, rng);
        Matrix s = generators::covariance_of(y, cfg.sampler.centered);
        stats::EvalOptions eo;
        eo.root = cfg.root_kind;
        if (!opt.premultiply) {
            eo.ktilde_from_mle = true;
        } else if (want_t1b) {
            Matrix sw = matcore::apply_kron(hk_inv2, hk_inv1, s);
            Matrix swt = sw.transpose();
            sw = matcore::symmetrize(matcore::apply_kron(hk_inv2, hk_inv1, swt));
            eo.ktilde = kcd::kronecker_mle(sw, cfg.n, cfg.shape).K;
        }
        rows[j] = stats::evaluate(s, cfg.n, cfg.shape, cfg.stats, eo).values;
    });

    PowerResult pr;
    pr.core = core;
    pr.stats = cfg.stats;
    pr.K = cfg.J;
    for (std::size_t i = 0; i < cfg.stats.size(); ++i) {
        const double r = rejection_rate(column(rows, cfg.stats[i]), crit[i]);
        pr.rate.push_back(r);
        pr.se.push_back(std::sqrt(r * (1.0 - r) / cfg.J));
    }
    return pr;
}

std::vector<BbpRow> bbp_study(Construction construction, int r, const std::vector<double>& c_values,
                              int p1, int p2, int n, int reps, std::uint64_t seed, int threads) {
    const Shape s(p1, p2);
    const int p = s.p();
    const double gamma = double(p) / n;
    std::vector<BbpRow> out;
    for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
        BbpRow row;
        row.c = c_values[ci];
        row.lambda = 1.0 / (1.0 + r * row.c / p);
        Rng rng(replicate_seed(seed, 1000000 + ci));
        Matrix a = generators::make_rank_r_core(p1, p2, r, construction, rng);
        CoreModel model = CoreModel::partial_isotropy(s, a, row.lambda, construction);
        for (int i = 0; i < r; ++i) {
            const double spike = (*model.predicted_spikes)(i);
            row.population_spikes.push_back(spike);
            row.limits.push_back(stats::bbp_limit(spike / row.lambda, gamma, row.lambda));
        }
        const Matrix root = matcore::sym_sqrt(model.materialize());
        std::vector<std::vector<double>> tops(reps);
        parallel_for(reps, threads, [&](int j) {
            Rng rj(replicate_seed(seed, j));
            Matrix y = generators::sample_data(n, p, root, SamplerSpec{}, rj);
            Matrix sc = generators::covariance_of(y, false);
            MleResult mle = kcd::kronecker_mle(sc, n, s);
            if (!mle.converged) throw Error(ErrorCode::ConvergenceFailure, "flip-flop did not converge");
            Spectrum ev = matcore::eigvals_sym(kcd::core_matrix(sc, mle.K, RootKind::Cholesky));
            tops[j].assign(ev.data(), ev.data() + r);
        });
        row.mean_top.assign(r, 0.0);
        for (const auto& t : tops)
            for (int i = 0; i < r; ++i) row.mean_top[i] += t[i] / reps;
        out.push_back(std::move(row));
    }
    return out;
}

EsdDiagnostic esd_diagnostic(const McConfig& cfg, int bins) {
    kcd::check_existence(cfg.n, cfg.shape);
    const int p = cfg.shape.p();
    const double gamma = double(p) / cfg.n;
    std::vector<std::vector<double>> kept(cfg.J);
    const Matrix identity_root;
    parallel_for(cfg.J, cfg.threads, [&](int j) {
        Rng rng(replicate_seed(cfg.master_seed, j));
        Matrix y = generators::sample_data(cfg.n, p, identity_root, cfg.sampler, rng);
        Matrix s = generators::covariance_of(y, cfg.sampler.centered);
        MleResult mle = kcd::kronecker_mle(s, cfg.n, cfg.shape);
        if (!mle.converged) throw Error(ErrorCode::ConvergenceFailure, "flip-flop did not converge");
        Spectrum ev = matcore::eigvals_sym(kcd::core_matrix(s, mle.K, cfg.root_kind));
        const double cut = gamma > 1.0 ? matcore::kRankTol * ev(0) : -INFINITY;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (ev(i) > cut) kept[j].push_back(ev(i));
        }
    });
    EsdDiagnostic d;
    std::vector<double> pooled;
    for (const auto& k : kept) {
        d.retained.push_back(static_cast<int>(k.size()));
        pooled.insert(pooled.end(), k.begin(), k.end());
    }
    const double atom = gamma > 1.0 ? 1.0 - 1.0 / gamma : 0.0;
    auto ref = [&](double x) { return (stats::mp_cdf(x, gamma, 1.0) - atom) / (1.0 - atom); };
    d.ks = stats::ks_distance(pooled, ref);

    const stats::MpEdges e = stats::mp_edges(gamma, 1.0);
    const double hi = std::max(e.hi, pooled.empty() ? e.hi : *std::max_element(pooled.begin(), pooled.end()));
    const double lo = std::min(e.lo, pooled.empty() ? e.lo : *std::min_element(pooled.begin(), pooled.end()));
    d.counts.assign(bins, 0);
    for (int b = 0; b <= bins; ++b) d.bin_edges.push_back(lo + (hi - lo) * b / bins);
    for (double v : pooled) {
        int b = static_cast<int>((v - lo) / (hi - lo) * bins);
        d.counts[std::clamp(b, 0, bins - 1)]++;
    }
    return d;
}

double t3_limit_check(int n, const Shape& s, int reps, std::uint64_t seed, int threads) {
    McConfig cfg;
    cfg.J = reps;
    cfg.n = n;
    cfg.shape = s;
    cfg.master_seed = seed;
    cfg.stats = {StatKind::T3};
    cfg.threads = threads;
    McResult r = simulate_null(cfg);
    const auto& v = r.samples.front();
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

double contrast_check(int n, const Shape& s, const SeparableFactor& k, int reps, std::uint64_t seed,
                      int threads) {
    const Matrix root = matcore::kron(matcore::cholesky(k.K2), matcore::cholesky(k.K1));
    std::vector<double> vals(reps);
    parallel_for(reps, threads, [&](int j) {
        Rng rng(replicate_seed(seed, j));
        Matrix y = generators::sample_data(n, s.p(), root, SamplerSpec{}, rng);
        Matrix sc = generators::covariance_of(y, false);
        Spectrum sv = matcore::singular_values(matcore::rearrange(sc, s));
        vals[j] = sc.squaredNorm() / (sv(0) * sv(0)) - 1.0;
    });
    return std::accumulate(vals.begin(), vals.end(), 0.0) / reps;
}

}  // namespace montecarlo
}  // namespace sepcore
