#include "sepcore/stats.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "sepcore/tw_table.hpp"

namespace sepcore {

const char* stat_name(StatKind k) {
    switch (k) {
        case StatKind::T1: return "T1";
        case StatKind::T1a: return "T1a";
        case StatKind::T1b: return "T1b";
        case StatKind::T2: return "T2";
        case StatKind::T2t: return "T2t";
        case StatKind::T3: return "T3";
        case StatKind::T3t: return "T3t";
        case StatKind::T3s: return "T3s";
        case StatKind::LRT: return "LRT";
    }
    return "?";
}

std::optional<StatKind> parse_stat(const std::string& s) {
    std::string lower;
    for (char c : s) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    for (StatKind k : kAllStats) {
        std::string name = stat_name(k);
        for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (name == lower) return k;
    }
    return std::nullopt;
}

namespace stats {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

double t1(const Spectrum& core_eigs) {
    if (core_eigs.size() == 0) throw Error(ErrorCode::InvalidArgument, "t1: empty spectrum");
    return core_eigs.maxCoeff();
}

double t2(const Spectrum& core_eigs, int p) {
    if (core_eigs.size() != p) throw Error(ErrorCode::DimensionMismatch, "t2: spectrum length != p");
    const double top = std::max(core_eigs.maxCoeff(), 0.0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < core_eigs.size(); ++i) {
        double u = core_eigs(i);
        if (u < -matcore::kPsdClampTol * top) {
            throw Error(ErrorCode::NegativeEigenvalue, "t2: negative core eigenvalue");
        }
        acc += std::log1p(std::max(u, 0.0));
    }
    return -acc + p * std::log(double(p));
}

double t3(const Matrix& C) { return C.squaredNorm() / double(C.rows()) - 1.0; }

double t3_singular_sum(const Matrix& C, const Shape& s) {
    Spectrum sv = matcore::singular_values(matcore::rearrange(C, s));
    return sv.sum() / std::sqrt(double(s.p())) - 1.0;
}

double lrt(const Matrix& S, const SeparableFactor& k, int n) {
    if (n < S.rows()) {
        throw Error(ErrorCode::SingularSample, "lrt: n < p, sample covariance is singular");
    }
    double ld_s = 0.0;
    try {
        ld_s = matcore::logdet_spd(S);
    } catch (const Error&) {
        throw Error(ErrorCode::SingularSample, "lrt: sample covariance is rank-deficient");
    }
    return n * (k.logdet() - ld_s);
}

namespace {

double xi_equation(const Spectrum& t, double x) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
        const double r = t(i) * x / (1.0 - t(i) * x);
        acc += r * r;
    }
    return acc / double(t.size());
}

}  // namespace

double xi_plus(const Spectrum& omega_eigs, double gamma_hat) {
    if (omega_eigs.size() == 0 || omega_eigs.minCoeff() <= 0.0 || !(gamma_hat > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "xi_plus: needs positive eigenvalues and gamma");
    }
    const double target = 1.0 / gamma_hat;
    double lo = 0.0, hi = 1.0 / omega_eigs.maxCoeff();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (xi_equation(omega_eigs, mid) < target ? lo : hi) = mid;
    }
    const double x = std::abs(xi_equation(omega_eigs, lo) - target) <=
                             std::abs(xi_equation(omega_eigs, hi) - target)
                         ? lo
                         : hi;
    if (!(std::abs(xi_equation(omega_eigs, x) - target) < 1e-12 * std::max(1.0, target))) {
        throw Error(ErrorCode::ConvergenceFailure, "xi_plus: bisection did not reach tolerance");
    }
    return x;
}

EdgeQuantities edge_quantities(const Spectrum& omega_eigs, int n, int p) {
    EdgeQuantities e;
    e.gamma_hat = double(p) / n;
    e.xi_plus = xi_plus(omega_eigs, e.gamma_hat);
    const double xi = e.xi_plus;
    double cube = 0.0, lin = 0.0;
    for (Eigen::Index i = 0; i < omega_eigs.size(); ++i) {
        const double t = omega_eigs(i);
        const double r = t / (1.0 - t * xi);
        cube += r * r * r;
        lin += t * xi / (1.0 - t * xi);
    }
    cube /= double(omega_eigs.size());
    lin /= double(omega_eigs.size());
    e.gamma0 = std::cbrt(1.0 / (e.gamma_hat * cube + 1.0 / (xi * xi * xi)));
    e.E_plus = (1.0 + e.gamma_hat * lin) / xi;
    return e;
}

EdgeQuantities edge_identity(int n, int p) {
    EdgeQuantities e;
    e.gamma_hat = double(p) / n;
    const double r = std::sqrt(e.gamma_hat);
    e.xi_plus = 1.0 / (1.0 + r);
    e.gamma0 = std::cbrt(r / std::pow(1.0 + r, 4));
    e.E_plus = (1.0 + r) * (1.0 + r);
    return e;
}

Spectrum inverse_kron_eigs(const SeparableFactor& k) {
    Spectrum a = matcore::eigvals_sym(k.K1);
    Spectrum b = matcore::eigvals_sym(k.K2);
    Spectrum out(a.size() * b.size());
    for (Eigen::Index j = 0; j < b.size(); ++j) {
        for (Eigen::Index i = 0; i < a.size(); ++i) out(j * a.size() + i) = 1.0 / (a(i) * b(j));
    }
    std::sort(out.data(), out.data() + out.size(), std::greater<>());
    return out;
}

T1Transforms t1_transforms(double t1_val, const EdgeQuantities& edge_I,
                           const std::optional<EdgeQuantities>& edge_hat, int n) {
    const double scale = edge_I.gamma0 * std::pow(double(n), 2.0 / 3.0);
    T1Transforms out;
    out.t1a = scale * (t1_val - edge_I.E_plus);
    if (edge_hat) out.t1b = scale * (t1_val - edge_hat->E_plus);
    return out;
}

double a1(double y) { return (y + 2.0 - std::sqrt(y * y + 4.0)) / (2.0 * std::sqrt(y)); }

double mp_log1p_mean(double y) {
    const double a = a1(y);
    const double sy = std::sqrt(y);
    double v = -0.5 * (2.0 * a / sy - (y + 1.0) / y * std::log(sy / a));
    if (y < 1.0) {
        v -= 0.5 * ((1.0 - y) / y * std::log(1.0 - a * sy) + (1.0 - y) / y * std::log(sy / a - y));
    } else {
        v -= 0.5 * ((y - 1.0) / y * std::log(1.0 - a / sy) + (y - 1.0) / y * std::log(sy / a - 1.0));
    }
    return v;
}

double t2_transform(double t2_val, int n, int p) {
    const double y = double(p) / n;
    return t2_val + p * mp_log1p_mean(y) - p * std::log(double(p));
}

double t3_transform(double t3_val, int n, int p) { return n * t3_val - p - 1.0; }

namespace {

// Piecewise cubic Hermite interpolant with Fritsch–Carlson slopes.
class MonotoneCubic {
public:
    explicit MonotoneCubic(std::span<const double> y) : y_(y.begin(), y.end()), m_(y.size()) {
        const std::size_t n = y_.size();
        std::vector<double> d(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / detail::kTw1Step;
        m_[0] = d[0];
        m_[n - 1] = d[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            m_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (d[i] == 0.0) {
                m_[i] = m_[i + 1] = 0.0;
                continue;
            }
            const double a = m_[i] / d[i], b = m_[i + 1] / d[i];
            const double s = a * a + b * b;
            if (s > 9.0) {
                const double t = 3.0 / std::sqrt(s);
                m_[i] = t * a * d[i];
                m_[i + 1] = t * b * d[i];
            }
        }
    }

    double operator()(double x) const {
        const double h = detail::kTw1Step;
        const double pos = (x - detail::kTw1Lo) / h;
        if (pos <= 0.0) return y_.front();
        if (pos >= double(y_.size() - 1)) return y_.back();
        const std::size_t i = static_cast<std::size_t>(pos);
        const double t = pos - double(i);
        const double t2 = t * t, t3 = t2 * t;
        return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] +
               (-2 * t3 + 3 * t2) * y_[i + 1] + (t3 - t2) * h * m_[i + 1];
    }

    double lo() const { return detail::kTw1Lo; }
    double hi() const { return detail::kTw1Lo + detail::kTw1Step * double(y_.size() - 1); }

    double inverse(double q, bool* saturated) const {
        if (saturated) *saturated = false;
        if (q <= y_.front()) {
            if (saturated) *saturated = true;
            return lo();
        }
        if (q >= y_.back()) {
            if (saturated) *saturated = true;
            return hi();
        }
        double a = lo(), b = hi();
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (a + b);
            ((*this)(mid) < q ? a : b) = mid;
        }
        return 0.5 * (a + b);
    }

private:
    std::vector<double> y_;
    std::vector<double> m_;
};

const MonotoneCubic& tw1_interp() {
    static const MonotoneCubic interp(std::span<const double>(detail::kTw1Cdf, detail::kTw1Count));
    return interp;
}

}  // namespace

std::span<const double> tw1_table() { return {detail::kTw1Cdf, detail::kTw1Count}; }

double tw1_cdf(double x) {
    if (x < detail::kTw1Lo) return 0.0;
    return tw1_interp()(x);
}

double tw1_quantile(double q, bool* saturated) {
    if (!(q > 0.0 && q < 1.0)) throw Error(ErrorCode::InvalidArgument, "tw1_quantile: q outside (0,1)");
    return tw1_interp().inverse(q, saturated);
}

std::string check_tw1_table(std::span<const double> table) {
    if (table.size() != static_cast<std::size_t>(detail::kTw1Count)) return "table has wrong length";
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!std::isfinite(table[i]) || table[i] < 0.0 || table[i] > 1.0) {
            return "entry " + std::to_string(i) + " outside [0,1]";
        }
        if (i > 0 && table[i] < table[i - 1]) return "not monotone at entry " + std::to_string(i);
    }
    MonotoneCubic f(table);
    const double q95 = f.inverse(0.95, nullptr);
    const double med = f.inverse(0.5, nullptr);
    if (std::abs(q95 - 0.979) > 0.02) return "0.95 quantile " + std::to_string(q95) + " off";
    if (std::abs(med + 1.27) > 0.02) return "median " + std::to_string(med) + " off";
    return {};
}

MpEdges mp_edges(double gamma, double sigma2) {
    const double r = std::sqrt(gamma);
    return {sigma2 * (1.0 - r) * (1.0 - r), sigma2 * (1.0 + r) * (1.0 + r)};
}

double mp_density(double x, double gamma, double sigma2) {
    const MpEdges e = mp_edges(gamma, sigma2);
    if (x <= e.lo || x >= e.hi || x <= 0.0) return 0.0;
    return std::sqrt((e.hi - x) * (x - e.lo)) / (2.0 * std::numbers::pi * sigma2 * gamma * x);
}

namespace {

template <class F>
double simpson_step(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
    if (b <= a) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

}  // namespace

double mp_cdf(double x, double gamma, double sigma2) {
    if (x < 0.0) return 0.0;
    const double atom = gamma > 1.0 ? 1.0 - 1.0 / gamma : 0.0;
    const MpEdges e = mp_edges(gamma, sigma2);
    if (x <= e.lo) return atom;
    const double cont = std::min(1.0, 1.0 / gamma);
    if (x >= e.hi) return atom + cont;
    // x = mid - half*cos(phi) removes the square-root edge behaviour.
    const double mid = 0.5 * (e.hi + e.lo), half = 0.5 * (e.hi - e.lo);
    const double norm = 2.0 * std::numbers::pi * sigma2 * gamma;
    auto f = [&](double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        const double xx = mid - half * c;
        if (xx <= 1e-300) return half * (1.0 + c) / norm;
        return half * half * s * s / (norm * xx);
    };
    const double phi = std::acos(std::clamp((mid - x) / half, -1.0, 1.0));
    const double v = adaptive_simpson(f, 0.0, phi, 1e-10);
    return atom + std::clamp(v, 0.0, cont);
}

double bbp_limit(double a, double gamma, double sigma2) {
    if (a > 1.0 + std::sqrt(gamma)) return sigma2 * (a + gamma * a / (a - 1.0));
    const double r = 1.0 + std::sqrt(gamma);
    return sigma2 * r * r;
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& ref_cdf) {
    if (xs.empty()) return 0.0;
    std::sort(xs.begin(), xs.end());
    const double n = double(xs.size());
    double d = 0.0;
    std::size_t i = 0;
    while (i < xs.size()) {
        std::size_t j = i;
        while (j < xs.size() && xs[j] == xs[i]) ++j;
        // lower side uses the left limit
        const double f_left = ref_cdf(std::nextafter(xs[i], -std::numeric_limits<double>::infinity()));
        const double f = ref_cdf(xs[i]);
        d = std::max({d, std::abs(double(i) / n - f_left), std::abs(double(j) / n - f)});
        i = j;
    }
    return d;
}

Evaluation evaluate(const Matrix& S, int n, const Shape& s, const std::vector<StatKind>& kinds,
                    const EvalOptions& opt) {
    Evaluation ev;
    ev.values.fill(kNaN);
    auto wants = [&](StatKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };

    ev.mle = opt.data ? kcd::kronecker_mle_data(*opt.data, s, opt.flip_flop)
                      : kcd::kronecker_mle(S, n, s, opt.flip_flop);
    if (!ev.mle.converged) {
        throw Error(ErrorCode::ConvergenceFailure,
                    "flip-flop did not converge in " + std::to_string(ev.mle.iterations) + " sweeps");
    }
    ev.core = kcd::core_matrix(S, ev.mle.K, opt.root);
    const int p = s.p();

    const bool need_eigs = wants(StatKind::T1) || wants(StatKind::T1a) || wants(StatKind::T1b) ||
                           wants(StatKind::T2) || wants(StatKind::T2t);
    if (need_eigs) {
        ev.core_eigs = matcore::eigvals_sym(ev.core);
        const double l1 = t1(ev.core_eigs);
        ev.values[stat_index(StatKind::T1)] = l1;
        if (wants(StatKind::T1a) || wants(StatKind::T1b)) {
            std::optional<EdgeQuantities> edge_hat;
            if (wants(StatKind::T1b)) {
                if (opt.ktilde) {
                    edge_hat = edge_quantities(inverse_kron_eigs(*opt.ktilde), n, p);
                } else if (opt.ktilde_from_mle) {
                    edge_hat = edge_quantities(inverse_kron_eigs(ev.mle.K), n, p);
                }
            }
            T1Transforms tt = t1_transforms(l1, edge_identity(n, p), edge_hat, n);
            ev.values[stat_index(StatKind::T1a)] = tt.t1a;
            if (tt.t1b) ev.values[stat_index(StatKind::T1b)] = *tt.t1b;
        }
        if (wants(StatKind::T2) || wants(StatKind::T2t)) {
            const double v = t2(ev.core_eigs, p);
            ev.values[stat_index(StatKind::T2)] = v;
            ev.values[stat_index(StatKind::T2t)] = t2_transform(v, n, p);
        }
    }
    if (wants(StatKind::T3) || wants(StatKind::T3t)) {
        const double v = t3(ev.core);
        ev.values[stat_index(StatKind::T3)] = v;
        ev.values[stat_index(StatKind::T3t)] = t3_transform(v, n, p);
    }
    if (wants(StatKind::T3s)) ev.values[stat_index(StatKind::T3s)] = t3_singular_sum(ev.core, s);
    if (wants(StatKind::LRT)) ev.values[stat_index(StatKind::LRT)] = lrt(S, ev.mle.K, n);
    return ev;
}

}  // namespace stats
}  // namespace sepcore
