#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace pintana {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Above this size norm_two switches from a dense Hermitian eigensolve to
// power iteration on the Gram matrix.
inline constexpr std::ptrdiff_t kDenseSpectralLimit = 2048;

double norm_one(const CMatrix& a);  // max column sum
double norm_inf(const CMatrix& a);  // max row sum
double norm_two(const CMatrix& a);  // largest singular value
double one_inf_bound(const CMatrix& a);  // sqrt(||a||_1 ||a||_inf)

// Solves a x = b by LU with partial pivoting. A pivot below
// 1e-13 * ||a||_inf raises SingularMatrixError carrying its magnitude.
CMatrix solve(const CMatrix& a, const CMatrix& b);
CMatrix inverse(const CMatrix& a);

struct EigResult {
  CVector values;
  CMatrix vectors;  // unit 2-norm columns
  bool diagonalizable = true;
  double residual = 0.0;  // ||V diag(values) V^-1 - a||_2 / ||a||_2
  double vector_cond = 1.0;  // cond_2(V)
};

// eig flags a matrix as near-defective when cond_2(V) exceeds this.
inline constexpr double kNearDefectiveCond = 1e6;

EigResult eig(const CMatrix& a);

double cond_two(const CMatrix& a);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix matrix_power(const CMatrix& a, int k);

}  // namespace pintana
