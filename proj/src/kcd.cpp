#include "sepcore/kcd.hpp"

#include <cmath>
#include <string>

namespace sepcore {

Matrix SeparableFactor::full() const { return matcore::kron(K2, K1); }

double SeparableFactor::logdet() const {
    return shape.p2 * matcore::logdet_spd(K1) + shape.p1 * matcore::logdet_spd(K2);
}

void SeparableFactor::normalize() {
    const double a = matcore::logdet_spd(K1) / shape.p1;
    const double b = matcore::logdet_spd(K2) / shape.p2;
    const double c = std::exp(0.5 * (b - a));
    K1 *= c;
    K2 /= c;
}

namespace kcd {

namespace {

void require_square(const Matrix& m, const Shape& s) {
    if (m.rows() != s.p() || m.cols() != s.p()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix does not match shape");
    }
}

// Σ1 = (1/p2) Σ_ij Ω2(i,j) S[i,j]
Matrix update_row(const Matrix& S, const Matrix& omega2, const Shape& s) {
    const int p1 = s.p1;
    Matrix out = Matrix::Zero(p1, p1);
    for (int j = 0; j < s.p2; ++j) {
        for (int i = 0; i < s.p2; ++i) out += omega2(i, j) * S.block(i * p1, j * p1, p1, p1);
    }
    return matcore::symmetrize(out / s.p2);
}

// Σ2(i,j) = (1/p1) tr(Ω1 S[i,j])
Matrix update_col(const Matrix& S, const Matrix& omega1, const Shape& s) {
    const int p1 = s.p1;
    Matrix out(s.p2, s.p2);
    for (int j = 0; j < s.p2; ++j) {
        for (int i = 0; i < s.p2; ++i) {
            out(i, j) = S.block(i * p1, j * p1, p1, p1).cwiseProduct(omega1).sum();
        }
    }
    return matcore::symmetrize(out / p1);
}

Matrix update_row_data(const Matrix& y, const Matrix& omega2, const Shape& s) {
    Matrix out = Matrix::Zero(s.p1, s.p1);
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
        Matrix yi = y.row(i).transpose();
        Eigen::Map<const Matrix> z(yi.data(), s.p1, s.p2);
        out.noalias() += z * omega2 * z.transpose();
    }
    return matcore::symmetrize(out / (double(y.rows()) * s.p2));
}

Matrix update_col_data(const Matrix& y, const Matrix& omega1, const Shape& s) {
    Matrix out = Matrix::Zero(s.p2, s.p2);
    for (Eigen::Index i = 0; i < y.rows(); ++i) {
        Matrix yi = y.row(i).transpose();
        Eigen::Map<const Matrix> z(yi.data(), s.p1, s.p2);
        out.noalias() += z.transpose() * omega1 * z;
    }
    return matcore::symmetrize(out / (double(y.rows()) * s.p1));
}

Matrix spd_inverse(const Matrix& m, const char* which) {
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success || !(llt.matrixL().toDenseMatrix().diagonal().minCoeff() > 0.0)) {
        throw Error(ErrorCode::SingularIterate, std::string("flip-flop iterate ") + which +
                                                    " lost positive definiteness");
    }
    Matrix inv = llt.solve(Matrix::Identity(m.rows(), m.cols()));
    return matcore::symmetrize(inv);
}

double spd_logdet_iterate(const Matrix& m, const char* which) {
    try {
        return matcore::logdet_spd(m);
    } catch (const Error&) {
        throw Error(ErrorCode::SingularIterate, std::string("flip-flop iterate ") + which +
                                                    " lost positive definiteness");
    }
}

template <class Row, class Col>
MleResult flip_flop(const Shape& s, const FlipFlopConfig& cfg, Row row_update, Col col_update) {
    if (cfg.max_iter < 1 || !(cfg.rel_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "flip-flop config: max_iter >= 1, rel_tol > 0");
    }
    Matrix sigma2 = Matrix::Identity(s.p2, s.p2);
    if (cfg.init == FlipFlopConfig::Init::UserSupplied) {
        if (cfg.init_K2.rows() != s.p2 || cfg.init_K2.cols() != s.p2) {
            throw Error(ErrorCode::DimensionMismatch, "initial column factor has wrong size");
        }
        sigma2 = cfg.init_K2;
    }
    Matrix omega2 = spd_inverse(sigma2, "K2");
    Matrix sigma1 = row_update(omega2);

    MleResult res;
    res.K.shape = s;
    double prev = 0.0;
    for (int t = 1; t <= cfg.max_iter; ++t) {
        Matrix omega1 = spd_inverse(sigma1, "K1");
        sigma2 = col_update(omega1);
        omega2 = spd_inverse(sigma2, "K2");

        const double ld1 = spd_logdet_iterate(sigma1, "K1");
        const double ld2 = spd_logdet_iterate(sigma2, "K2");
        const double c = std::exp(0.5 * (ld2 / s.p2 - ld1 / s.p1));
        sigma1 *= c;
        sigma2 /= c;
        omega2 *= c;

        // After the exact column update tr(K^{-1}S) = p.
        const double d = double(s.p()) + s.p2 * ld1 + s.p1 * ld2;
        if (cfg.record_trace) res.objective_trace.push_back(d);

        Matrix next1 = row_update(omega2);
        const double resid = (next1 - sigma1).norm() / sigma1.norm();

        res.K.K1 = sigma1;
        res.K.K2 = sigma2;
        res.iterations = t;
        res.objective = d;
        res.residual = resid;
        const double change = t > 1 ? std::abs(d - prev) / std::max(std::abs(d), 1.0) : INFINITY;
        if (change < cfg.rel_tol && resid < cfg.residual_tol) {
            res.converged = true;
            break;
        }
        prev = d;
        sigma1 = std::move(next1);
    }
    return res;
}

}  // namespace

void check_existence(int n, const Shape& s) {
    // n < p1/p2 + p2/p1  <=>  n*p1*p2 < p1^2 + p2^2
    const long long lhs = static_cast<long long>(n) * s.p1 * s.p2;
    const long long rhs = static_cast<long long>(s.p1) * s.p1 + static_cast<long long>(s.p2) * s.p2;
    if (n < 1 || lhs < rhs) {
        throw Error(ErrorCode::InsufficientSamples,
                    "n = " + std::to_string(n) + " is below p1/p2 + p2/p1 for shape (" +
                        std::to_string(s.p1) + "," + std::to_string(s.p2) + ")");
    }
}

MleResult kronecker_mle(const Matrix& S, int n, const Shape& s, const FlipFlopConfig& cfg) {
    require_square(S, s);
    check_existence(n, s);
    if (!S.allFinite()) throw Error(ErrorCode::InvalidArgument, "sample covariance is not finite");
    return flip_flop(
        s, cfg, [&](const Matrix& o2) { return update_row(S, o2, s); },
        [&](const Matrix& o1) { return update_col(S, o1, s); });
}

MleResult kronecker_mle_data(const Matrix& y, const Shape& s, const FlipFlopConfig& cfg) {
    if (y.cols() != s.p()) throw Error(ErrorCode::DimensionMismatch, "data width != p1*p2");
    check_existence(static_cast<int>(y.rows()), s);
    if (!y.allFinite()) throw Error(ErrorCode::InvalidArgument, "data contain non-finite values");
    return flip_flop(
        s, cfg, [&](const Matrix& o2) { return update_row_data(y, o2, s); },
        [&](const Matrix& o1) { return update_col_data(y, o1, s); });
}

double objective(const SeparableFactor& k, const Matrix& S) {
    const Shape& s = k.shape;
    require_square(S, s);
    Matrix o1 = spd_inverse(k.K1, "K1");
    Matrix o2 = spd_inverse(k.K2, "K2");
    Matrix t = update_col(S, o1, s) * s.p1;
    return o2.cwiseProduct(t).sum() + k.logdet();
}

std::pair<double, double> fixed_point_residuals(const SeparableFactor& k, const Matrix& S) {
    const Shape& s = k.shape;
    Matrix o1 = spd_inverse(k.K1, "K1");
    Matrix o2 = spd_inverse(k.K2, "K2");
    const double r1 = (update_row(S, o2, s) - k.K1).norm() / k.K1.norm();
    const double r2 = (update_col(S, o1, s) - k.K2).norm() / k.K2.norm();
    return {r1, r2};
}

Matrix factor_root(const Matrix& k, RootKind kind) {
    return kind == RootKind::Cholesky ? matcore::cholesky(k) : matcore::sym_sqrt(k);
}

namespace {

Matrix root_inverse(const Matrix& h, RootKind kind) {
    const Matrix id = Matrix::Identity(h.rows(), h.cols());
    if (kind == RootKind::Cholesky) return h.triangularView<Eigen::Lower>().solve(id);
    return matcore::symmetrize(h.llt().solve(id));
}

}  // namespace

Matrix core_matrix(const Matrix& S, const SeparableFactor& k, RootKind kind) {
    require_square(S, k.shape);
    const Matrix g1 = root_inverse(factor_root(k.K1, kind), kind);
    const Matrix g2 = root_inverse(factor_root(k.K2, kind), kind);
    Matrix half = matcore::apply_kron(g2, g1, S);
    Matrix halfT = half.transpose();
    return matcore::symmetrize(matcore::apply_kron(g2, g1, halfT));
}

CoreResult core(const Matrix& S, const SeparableFactor& k, RootKind kind) {
    CoreResult out;
    out.H = matcore::kron(factor_root(k.K2, kind), factor_root(k.K1, kind));
    out.C = core_matrix(S, k, kind);
    return out;
}

KcdResult decompose(const Matrix& S, int n, const Shape& s, RootKind kind,
                    const FlipFlopConfig& cfg) {
    MleResult mle = kronecker_mle(S, n, s, cfg);
    CoreResult c = core(S, mle.K, kind);
    KcdResult out;
    out.K = mle.K;
    out.H = std::move(c.H);
    out.C = std::move(c.C);
    out.iterations = mle.iterations;
    out.objective = objective(mle.K, S);
    out.converged = mle.converged;
    return out;
}

}  // namespace kcd
}  // namespace sepcore
