#include "sepcore/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sepcore {

Shape::Shape(int a, int b) : p1(a), p2(b) {
    if (a < 1 || b < 1) {
        throw Error(ErrorCode::InvalidArgument, "shape dimensions must be positive");
    }
}

namespace matcore {

namespace {

void require_square(const Matrix& m, const Shape& s, const char* op) {
    if (m.rows() != s.p() || m.cols() != s.p()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", shape needs " + std::to_string(s.p()));
    }
}

}  // namespace

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix apply_kron(const Matrix& b, const Matrix& a, const Matrix& x) {
    const Eigen::Index q1 = a.cols(), q2 = b.cols();
    const Eigen::Index m1 = a.rows(), m2 = b.rows();
    if (x.rows() != q1 * q2) {
        throw Error(ErrorCode::DimensionMismatch, "apply_kron: row count mismatch");
    }
    const Eigen::Index ncol = x.cols();
    // (B ⊗ A) vec(X) = vec(A X Bᵀ) applied to every column.
    Matrix ax = a * Eigen::Map<const Matrix>(x.data(), q1, q2 * ncol);
    Matrix out(m1 * m2, ncol);
    for (Eigen::Index c = 0; c < ncol; ++c) {
        Eigen::Map<const Matrix> blk(ax.data() + c * m1 * q2, m1, q2);
        Eigen::Map<Matrix>(out.data() + c * m1 * m2, m1, m2).noalias() = blk * b.transpose();
    }
    return out;
}

Matrix partial_trace_1(const Matrix& m, const Shape& s) {
    require_square(m, s, "partial_trace_1");
    Matrix out = Matrix::Zero(s.p1, s.p1);
    for (int i = 0; i < s.p2; ++i) out += m.block(i * s.p1, i * s.p1, s.p1, s.p1);
    return out;
}

Matrix partial_trace_2(const Matrix& m, const Shape& s) {
    require_square(m, s, "partial_trace_2");
    Matrix out(s.p2, s.p2);
    for (int j = 0; j < s.p2; ++j) {
        for (int i = 0; i < s.p2; ++i) {
            out(i, j) = m.block(i * s.p1, j * s.p1, s.p1, s.p1).trace();
        }
    }
    return out;
}

Matrix rearrange(const Matrix& m, const Shape& s) {
    require_square(m, s, "rearrange");
    const int p1 = s.p1, p2 = s.p2;
    Matrix r(p2 * p2, p1 * p1);
    for (int j = 0; j < p2; ++j) {
        for (int i = 0; i < p2; ++i) {
            const int row = j * p2 + i;
            for (int b = 0; b < p1; ++b) {
                for (int a = 0; a < p1; ++a) r(row, b * p1 + a) = m(i * p1 + a, j * p1 + b);
            }
        }
    }
    return r;
}

Matrix rearrange_inverse(const Matrix& r, const Shape& s) {
    const int p1 = s.p1, p2 = s.p2;
    if (r.rows() != p2 * p2 || r.cols() != p1 * p1) {
        throw Error(ErrorCode::DimensionMismatch, "rearrange_inverse: shape mismatch");
    }
    Matrix m(s.p(), s.p());
    for (int j = 0; j < p2; ++j) {
        for (int i = 0; i < p2; ++i) {
            const int row = j * p2 + i;
            for (int b = 0; b < p1; ++b) {
                for (int a = 0; a < p1; ++a) m(i * p1 + a, j * p1 + b) = r(row, b * p1 + a);
            }
        }
    }
    return m;
}

Matrix cholesky(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "cholesky: not square");
    Eigen::LLT<Matrix> llt(m);
    const double scale = m.diagonal().cwiseAbs().maxCoeff();
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::NotPositiveDefinite, "cholesky: matrix is not positive definite");
    }
    Matrix l = llt.matrixL();
    const double min_pivot = l.diagonal().minCoeff();
    if (!(min_pivot * min_pivot > 1e-14 * scale)) {
        throw Error(ErrorCode::NotPositiveDefinite, "cholesky: pivot below tolerance");
    }
    return l;
}

EigenDecomposition eig_sym(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "eig_sym: not square");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "eig_sym: eigensolver did not converge");
    }
    EigenDecomposition out;
    out.values = es.eigenvalues().reverse();
    out.vectors = es.eigenvectors().rowwise().reverse();
    return out;
}

Spectrum eigvals_sym(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "eigvals_sym: not square");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "eigvals_sym: eigensolver did not converge");
    }
    return es.eigenvalues().reverse();
}

Matrix sym_sqrt(const Matrix& m) {
    EigenDecomposition ed = eig_sym(m);
    const double top = std::max(ed.values(0), 0.0);
    Vector root(ed.values.size());
    for (Eigen::Index i = 0; i < root.size(); ++i) {
        double v = ed.values(i);
        if (v < -kPsdClampTol * top) {
            throw Error(ErrorCode::NegativeEigenvalue, "sym_sqrt: eigenvalue " + std::to_string(v));
        }
        root(i) = std::sqrt(std::max(v, 0.0));
    }
    Matrix out = ed.vectors * root.asDiagonal() * ed.vectors.transpose();
    return symmetrize(out);
}

Spectrum singular_values(const Matrix& m) {
    Eigen::BDCSVD<Matrix> svd(m);
    if (svd.info() != Eigen::Success) {
        throw Error(ErrorCode::ConvergenceFailure, "singular_values: SVD did not converge");
    }
    return svd.singularValues();
}

double logdet_spd(const Matrix& m) {
    Matrix l = cholesky(m);
    return 2.0 * l.diagonal().array().log().sum();
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

int numerical_rank(const Spectrum& sv, double tol) {
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) >= tol * sv(0)) ++r;
    }
    return r;
}

}  // namespace matcore
}  // namespace sepcore
