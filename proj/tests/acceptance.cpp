// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sepcore/generators.hpp"
#include "sepcore/kcd.hpp"
#include "sepcore/matcore.hpp"
#include "sepcore/montecarlo.hpp"
#include "sepcore/stats.hpp"

using namespace sepcore;

namespace {

Matrix gaussian(int r, int c, Rng& rng) {
    std::normal_distribution<double> nd;
    Matrix g(r, c);
    for (Eigen::Index j = 0; j < c; ++j)
        for (Eigen::Index i = 0; i < r; ++i) g(i, j) = nd(rng);
    return g;
}

Matrix random_psd(int p, Rng& rng) {
    Matrix g = gaussian(p, p + 3, rng);
    return g * g.transpose() / double(p + 3);
}

Matrix invertible(int d, Rng& rng) {
    Matrix g = gaussian(d, d, rng);
    g.diagonal().array() += 3.0;
    return g;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
double rel(const Matrix& a, const Matrix& b) { return (a - b).norm() / b.norm(); }

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s %d %s: %s [%.1f s]\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string f(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

Outcome exact_algebra() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(101);
    const Shape shapes[] = {Shape(2, 3), Shape(4, 4), Shape(4, 2)};
    double tr_err = 0, ptr_err = 0, sv_err = 0, eq_err = 0;
    bool rearr = true;
    for (int t = 0; t < 50; ++t) {
        const Shape s = shapes[t % 3];
        const int p = s.p(), n = p + 3;
        Matrix S = random_psd(p, rng);
        for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
            Matrix C = kcd::decompose(S, n, s, rk).C;
            tr_err = std::max(tr_err, std::abs(C.trace() - p));
            ptr_err = std::max({ptr_err, max_abs(matcore::partial_trace_1(C, s) - s.p2 * Matrix::Identity(s.p1, s.p1)),
                                max_abs(matcore::partial_trace_2(C, s) - s.p1 * Matrix::Identity(s.p2, s.p2))});
            sv_err = std::max(sv_err, std::abs(matcore::singular_values(matcore::rearrange(C, s))(0) - std::sqrt(double(p))));
        }
        Matrix r = matcore::rearrange(S, s);
        std::vector<double> a(S.data(), S.data() + S.size()), b(r.data(), r.data() + r.size());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        rearr = rearr && a == b && matcore::rearrange_inverse(r, s) == S;

        Matrix g = matcore::kron(invertible(s.p2, rng), invertible(s.p1, rng));
        Matrix gs = g * S * g.transpose();
        gs = (gs + gs.transpose()) / 2;
        Matrix k0 = kcd::kronecker_mle(S, n, s).K.full();
        Matrix k1 = kcd::kronecker_mle(gs, n, s).K.full();
        eq_err = std::max(eq_err, rel(k1, g * k0 * g.transpose()));
    }

    Matrix S(4, 4), Cx(4, 4);
    S << .5, 0, 0, .5, 0, .5, -.5, 0, 0, -.5, .5, 0, .5, 0, 0, .5;
    Cx << 1, 0, 0, 1, 0, 1, -1, 0, 0, -1, 1, 0, 1, 0, 0, 1;
    KcdResult ce = kcd::decompose(S, 2, Shape(2, 2));
    const double ce_err = std::max(max_abs(ce.K.full() - 0.5 * Matrix::Identity(4, 4)), max_abs(ce.C - Cx));

    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = tr_err <= 1e-6 && ptr_err <= 1e-6 && sv_err <= 1e-7 && rearr && eq_err <= 1e-7 && ce_err <= 1e-8 &&
                    secs < 10.0;
    return {ok, "tr " + f(tr_err) + ", partial tr " + f(ptr_err) + ", sigma1 " + f(sv_err) + ", rearrangement " +
                    (rearr ? "exact" : "NOT exact") + ", equivariance " + f(eq_err) + ", counterexample " + f(ce_err)};
}

Outcome kronecker_invariance() {
    Rng rng(202);
    const Shape s(4, 4);
    const int n = 64;
    std::vector<StatKind> all(kAllStats.begin(), kAllStats.end());
    stats::EvalOptions opt;
    opt.ktilde = SeparableFactor{Matrix::Identity(4, 4), Matrix::Identity(4, 4), s};
    double worst = 0;
    for (int t = 0; t < 20; ++t) {
        Matrix z = gaussian(n, s.p(), rng);
        Matrix h = matcore::kron(matcore::cholesky(random_psd(4, rng)), matcore::cholesky(random_psd(4, rng)));
        Matrix y = z * h.transpose();
        for (RootKind rk : {RootKind::Cholesky, RootKind::Symmetric}) {
            opt.root = rk;
            opt.data = &z;
            stats::Evaluation a = stats::evaluate(z.transpose() * z / double(n), n, s, all, opt);
            opt.data = &y;
            stats::Evaluation b = stats::evaluate(y.transpose() * y / double(n), n, s, all, opt);
            for (StatKind k : all) {
                const double va = a.values[stat_index(k)], vb = b.values[stat_index(k)];
                if (!std::isfinite(va) || !std::isfinite(vb)) return {false, std::string(stat_name(k)) + " not finite"};
                worst = std::max(worst, std::abs(va - vb) / std::max(std::abs(va), 1e-300));
            }
        }
    }
    return {worst <= 1e-7, "max relative difference " + f(worst) + " over 20 pairs, all statistics, both roots"};
}

Outcome t3_limit() {
    const double m = montecarlo::t3_limit_check(1600, Shape(40, 20), 200, 303);
    return {m >= 0.48 && m <= 0.52, "mean T3 " + f(m) + " (target [0.48, 0.52])"};
}

Outcome bbp() {
    auto rows = montecarlo::bbp_study(Construction::OrthoBlock, 1, {0.2, 2.4}, 20, 20, 1600, 200, 404);
    bool ok = rows.size() == 2;
    std::string d;
    for (const auto& r : rows) {
        const double gap = std::abs(r.mean_top[0] - r.limits[0]);
        ok = ok && gap < 0.05;
        d += "c=" + f(r.c) + ": mean " + f(r.mean_top[0]) + " limit " + f(r.limits[0]) + "; ";
    }
    return {ok, d};
}

Outcome calibration() {
    McConfig cfg;
    cfg.J = 1000;
    cfg.n = 256;
    cfg.shape = Shape(8, 8);
    cfg.master_seed = 505;
    cfg.stats = {StatKind::T1a, StatKind::T2t, StatKind::T3t};
    McResult r = montecarlo::simulate_null(cfg);
    const double q1 = r.critical_values[0], q2 = r.critical_values[1], q3 = r.critical_values[2];
    const bool ok = q1 >= -0.25 && q1 <= 0.10 && q2 >= 0.044 && q2 <= 0.084 && q3 >= 0.87 && q3 <= 1.17;
    return {ok, "q(T1a) " + f(q1) + ", q(T2t) " + f(q2) + ", q(T3t) " + f(q3)};
}

Outcome size_vs_tw() {
    McConfig cfg;
    cfg.J = 500;
    cfg.n = 1600;
    cfg.shape = Shape(20, 20);
    cfg.master_seed = 606;
    cfg.stats = {StatKind::T1a, StatKind::T1b};
    McResult r = montecarlo::simulate_null(cfg);
    const double a = montecarlo::empirical_size(r, StatKind::T1a, Reference::tracy_widom());
    const double b = montecarlo::empirical_size(r, StatKind::T1b, Reference::tracy_widom());
    return {a >= 0.005 && a <= 0.05 && b <= a + 0.01, "size T1a " + f(a) + ", T1b " + f(b)};
}

Outcome power() {
    McConfig cal;
    cal.J = 1000;
    cal.n = 256;
    cal.shape = Shape(8, 8);
    cal.master_seed = 707;
    cal.sampler.dist = SamplerSpec::Dist::GammaStd;
    cal.sampler.alpha = 4.0;
    cal.sampler.beta = 2.0;
    cal.stats = {StatKind::T1a, StatKind::T2t, StatKind::T3t};
    Calibration c = montecarlo::simulate_null(cal).calibration();
    Rng core_rng(7);
    CoreModel c2 = CoreModel::explicit_core(
        cal.shape, generators::random_core(cal.shape, generators::preset_spectrum("paper-C2", 64), core_rng));
    McConfig alt = cal;
    alt.J = 1000;
    alt.master_seed = 708;
    PowerResult p = montecarlo::empirical_power(CoreModel::shrunk(c2, 0.8), alt, c);
    const double f1 = p.rate_of(StatKind::T1a), f2 = p.rate_of(StatKind::T2t), f3 = p.rate_of(StatKind::T3t);
    const bool ok = f2 >= 0.90 && f2 <= 0.99 && f3 >= 0.90 && f3 <= 0.99 && f1 < f2;
    return {ok, "power T1 " + f(f1) + ", T2 " + f(f2) + ", T3 " + f(f3)};
}

Outcome mp_diagnostic() {
    McConfig big, small;
    big.J = small.J = 5;
    big.shape = Shape(20, 20);
    big.n = 1600;
    small.shape = Shape(10, 10);
    small.n = 400;
    big.master_seed = small.master_seed = 808;
    const double kb = montecarlo::esd_diagnostic(big).ks;
    const double ks = montecarlo::esd_diagnostic(small).ks;
    return {kb < 0.08 && kb < ks, "KS (20,20,1600) " + f(kb) + ", (10,10,400) " + f(ks)};
}

}  // namespace

int main() {
    run(1, "exact algebra", exact_algebra);
    run(2, "Kronecker invariance", kronecker_invariance);
    run(3, "T3 first-order limit", t3_limit);
    run(4, "BBP spike", bbp);
    run(5, "critical values at (8,8,256)", calibration);
    run(6, "T1a/T1b size against TW1", size_vs_tw);
    run(7, "power under GammaStd(4,2)", power);
    run(8, "MP diagnostic", mp_diagnostic);
    std::printf("NOTE 9 full-scale tables and figures: not reproducible at desk scale, covered by 5-8\n");
    std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria failed");
    return failures == 0 ? 0 : 1;
}
