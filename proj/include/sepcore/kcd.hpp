#pragma once

#include <vector>

#include "sepcore/matcore.hpp"

namespace sepcore {

// K = K2 ⊗ K1 with |K1|^{1/p1} = |K2|^{1/p2}.
struct SeparableFactor {
    Matrix K1;
    Matrix K2;
    Shape shape;

    Matrix full() const;
    double logdet() const;
    void normalize();
};

enum class RootKind { Cholesky, Symmetric };

struct FlipFlopConfig {
    enum class Init { Identity, UserSupplied };

    int max_iter = 500;
    double rel_tol = 1e-11;
    double residual_tol = 1e-10;
    Init init = Init::Identity;
    Matrix init_K2;  // used when init == UserSupplied
    bool record_trace = false;
};

struct MleResult {
    SeparableFactor K;
    int iterations = 0;
    double objective = 0.0;
    double residual = 0.0;
    bool converged = false;
    std::vector<double> objective_trace;
};

struct CoreResult {
    Matrix H;
    Matrix C;
};

struct KcdResult {
    SeparableFactor K;
    Matrix H;
    Matrix C;
    int iterations = 0;
    double objective = 0.0;
    bool converged = false;
};

namespace kcd {

// Throws InsufficientSamples when n < p1/p2 + p2/p1.
void check_existence(int n, const Shape& s);

// S-based flip-flop; n only enters the existence check.
MleResult kronecker_mle(const Matrix& S, int n, const Shape& s, const FlipFlopConfig& cfg = {});

// Data-based flip-flop; rows of y are vec(Y_i), p1 fastest.
MleResult kronecker_mle_data(const Matrix& y, const Shape& s, const FlipFlopConfig& cfg = {});

// d(K; S) = tr(K^{-1} S) + log|K|.
double objective(const SeparableFactor& k, const Matrix& S);

// Relative fixed-point residuals (row factor, column factor) of k against S.
std::pair<double, double> fixed_point_residuals(const SeparableFactor& k, const Matrix& S);

Matrix factor_root(const Matrix& k, RootKind kind);

// C = H^{-1} S H^{-T}, evaluated factor-wise.
Matrix core_matrix(const Matrix& S, const SeparableFactor& k, RootKind kind);
CoreResult core(const Matrix& S, const SeparableFactor& k, RootKind kind);

KcdResult decompose(const Matrix& S, int n, const Shape& s, RootKind kind = RootKind::Cholesky,
                    const FlipFlopConfig& cfg = {});

}  // namespace kcd
}  // namespace sepcore
