#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sepcore/kcd.hpp"

namespace sepcore {

enum class StatKind { T1, T1a, T1b, T2, T2t, T3, T3t, T3s, LRT };
inline constexpr int kStatCount = 9;
inline constexpr std::array<StatKind, kStatCount> kAllStats = {
    StatKind::T1, StatKind::T1a, StatKind::T1b, StatKind::T2, StatKind::T2t,
    StatKind::T3, StatKind::T3t, StatKind::T3s, StatKind::LRT};

const char* stat_name(StatKind k);
std::optional<StatKind> parse_stat(const std::string& s);
inline int stat_index(StatKind k) { return static_cast<int>(k); }

// Values indexed by stat_index; NaN where not computed.
using StatValues = std::array<double, kStatCount>;

struct EdgeQuantities {
    double gamma_hat = 0.0;
    double xi_plus = 0.0;
    double gamma0 = 0.0;
    double E_plus = 0.0;
};

namespace stats {

double t1(const Spectrum& core_eigs);
double t2(const Spectrum& core_eigs, int p);
double t3(const Matrix& C);
double t3_singular_sum(const Matrix& C, const Shape& s);
double lrt(const Matrix& S, const SeparableFactor& k, int n);

double xi_plus(const Spectrum& omega_eigs, double gamma_hat);
EdgeQuantities edge_quantities(const Spectrum& omega_eigs, int n, int p);
// Closed form for Ω = I.
EdgeQuantities edge_identity(int n, int p);
// Eigenvalues of (K2 ⊗ K1)^{-1}.
Spectrum inverse_kron_eigs(const SeparableFactor& k);

struct T1Transforms {
    double t1a = 0.0;
    std::optional<double> t1b;
};
T1Transforms t1_transforms(double t1_val, const EdgeQuantities& edge_I,
                           const std::optional<EdgeQuantities>& edge_hat, int n);

double a1(double y);
// Integral of log(1+x) against the Marchenko–Pastur law with ratio y, unit scale.
double mp_log1p_mean(double y);
double t2_transform(double t2_val, int n, int p);
double t3_transform(double t3_val, int n, int p);

double tw1_cdf(double x);
double tw1_quantile(double q, bool* saturated = nullptr);
// Checks a candidate TW1 table on the standard grid; returns an empty string when sound.
std::string check_tw1_table(std::span<const double> table);
std::span<const double> tw1_table();

struct MpEdges {
    double lo;
    double hi;
};
MpEdges mp_edges(double gamma, double sigma2);
double mp_density(double x, double gamma, double sigma2);
double mp_cdf(double x, double gamma, double sigma2);

double bbp_limit(double a, double gamma, double sigma2);

double ks_distance(std::vector<double> empirical, const std::function<double(double)>& ref_cdf);

struct EvalOptions {
    RootKind root = RootKind::Cholesky;
    FlipFlopConfig flip_flop;
    // Separable matrix whose inverse spectrum centers T1b; absent means T1b is unavailable.
    std::optional<SeparableFactor> ktilde;
    // Use the fitted K as K-tilde (valid when data were drawn with identity K).
    bool ktilde_from_mle = false;
    // Raw rows vec(Y_i) (already centered if requested); when set the MLE uses the data form.
    const Matrix* data = nullptr;
};

struct Evaluation {
    StatValues values;
    MleResult mle;
    Matrix core;
    Spectrum core_eigs;  // empty unless an eigen-based statistic was requested
};

Evaluation evaluate(const Matrix& S, int n, const Shape& s, const std::vector<StatKind>& kinds,
                    const EvalOptions& opt = {});

}  // namespace stats
}  // namespace sepcore
