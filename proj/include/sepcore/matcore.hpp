#pragma once

#include <Eigen/Dense>

#include "sepcore/error.hpp"

namespace sepcore {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Row factor is p1 x p1, column factor p2 x p2. A p x p matrix is viewed as a
// p2 x p2 grid of p1 x p1 blocks; vec() stacks columns so p1 varies fastest.
struct Shape {
    int p1 = 1;
    int p2 = 1;

    Shape() = default;
    Shape(int a, int b);
    int p() const { return p1 * p2; }
    bool operator==(const Shape&) const = default;
};

// Descending eigenvalues or singular values.
using Spectrum = Vector;

struct EigenDecomposition {
    Spectrum values;
    Matrix vectors;  // columns match values
};

namespace matcore {

inline constexpr double kPsdClampTol = 1e-10;
inline constexpr double kRankTol = 1e-8;

Matrix kron(const Matrix& a, const Matrix& b);

// (B ⊗ A) x without forming the Kronecker product; x has p = rows(A)*rows(B) rows.
Matrix apply_kron(const Matrix& b, const Matrix& a, const Matrix& x);

Matrix partial_trace_1(const Matrix& m, const Shape& s);
Matrix partial_trace_2(const Matrix& m, const Shape& s);

Matrix rearrange(const Matrix& m, const Shape& s);
Matrix rearrange_inverse(const Matrix& r, const Shape& s);

Matrix cholesky(const Matrix& m);
Matrix sym_sqrt(const Matrix& m);
EigenDecomposition eig_sym(const Matrix& m);
Spectrum eigvals_sym(const Matrix& m);
Spectrum singular_values(const Matrix& m);

// log-determinant from Cholesky pivots; throws NotPositiveDefinite.
double logdet_spd(const Matrix& m);

Matrix symmetrize(const Matrix& m);
int numerical_rank(const Spectrum& sv, double tol = kRankTol);

}  // namespace matcore
}  // namespace sepcore
