#include "pintana/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pintana/errors.hpp"

namespace pintana {

double norm_one(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

double norm_inf(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

double one_inf_bound(const CMatrix& a) { return std::sqrt(norm_one(a) * norm_inf(a)); }

namespace {

double largest_gram_eigenvalue_dense(const CMatrix& g) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(g, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("norm_two: Hermitian eigensolver failed");
  return std::max(0.0, es.eigenvalues().maxCoeff());
}

double largest_gram_eigenvalue_power(const CMatrix& a) {
  const bool tall = a.rows() >= a.cols();
  const std::ptrdiff_t n = tall ? a.cols() : a.rows();
  CVector x(n);
  for (std::ptrdiff_t i = 0; i < n; ++i) x(i) = cplx(1.0 + 1e-3 * static_cast<double>(i % 7), 0.0);
  x.normalize();
  double lambda = 0.0;
  for (int it = 0; it < 5000; ++it) {
    CVector y = tall ? CVector(a.adjoint() * (a * x)) : CVector(a * (a.adjoint() * x));
    const double next = std::real(x.dot(y));
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    x = y / ny;
    if (it > 0 && std::abs(next - lambda) <= 1e-12 * std::abs(next)) return next;
    lambda = next;
  }
  throw NumericalError("norm_two: power iteration did not converge within 5000 iterations");
}

}  // namespace

double norm_two(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const double scale = a.cwiseAbs().maxCoeff();
  if (!std::isfinite(scale)) throw NumericalError("norm_two: non-finite entry");
  if (scale == 0.0) return 0.0;
  const CMatrix s = a / scale;
  const std::ptrdiff_t small = std::min(a.rows(), a.cols());
  double lam;
  if (small <= kDenseSpectralLimit) {
    CMatrix g = CMatrix::Zero(small, small);
    if (a.rows() >= a.cols())
      g.selfadjointView<Eigen::Lower>().rankUpdate(s.adjoint());
    else
      g.selfadjointView<Eigen::Lower>().rankUpdate(s);
    lam = largest_gram_eigenvalue_dense(g);
  } else {
    lam = largest_gram_eigenvalue_power(s);
  }
  return scale * std::sqrt(lam);
}

CMatrix solve(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw ConfigError("solve: shape mismatch");
  if (a.rows() == 0) return b;
  Eigen::PartialPivLU<CMatrix> lu(a);
  const double tol = 1e-13 * norm_inf(a);
  const auto diag = lu.matrixLU().diagonal();
  double smallest = std::numeric_limits<double>::infinity();
  for (std::ptrdiff_t i = 0; i < diag.size(); ++i) smallest = std::min(smallest, std::abs(diag(i)));
  if (!(smallest > tol))
    throw SingularMatrixError("solve: pivot " + std::to_string(smallest) + " below tolerance", smallest);
  return lu.solve(b);
}

CMatrix inverse(const CMatrix& a) { return solve(a, CMatrix::Identity(a.rows(), a.cols())); }

EigResult eig(const CMatrix& a) {
  if (a.rows() != a.cols()) throw ConfigError("eig: matrix must be square");
  EigResult r;
  Eigen::ComplexEigenSolver<CMatrix> es(a, true);
  if (es.info() != Eigen::Success) throw NumericalError("eig: eigensolver did not converge");
  r.values = es.eigenvalues();
  r.vectors = es.eigenvectors();
  for (std::ptrdiff_t j = 0; j < r.vectors.cols(); ++j) {
    const double n = r.vectors.col(j).norm();
    if (n > 0) r.vectors.col(j) /= n;
  }
  const double na = norm_two(a);
  try {
    const CMatrix rec = r.vectors * r.values.asDiagonal() * inverse(r.vectors);
    const double diff = norm_two(rec - a);
    r.residual = na > 0 ? diff / na : diff;
  } catch (const SingularMatrixError&) {
    r.residual = std::numeric_limits<double>::infinity();
  }
  // A Jordan block perturbed by rounding comes back with eigenvectors that are
  // only about sqrt(eps) apart, so the reconstruction looks fine but V is
  // nearly singular.
  try {
    r.vector_cond = cond_two(r.vectors);
  } catch (const SingularMatrixError&) {
    r.vector_cond = std::numeric_limits<double>::infinity();
  }
  r.diagonalizable = r.residual <= 1e-8 && r.vector_cond <= kNearDefectiveCond;
  return r;
}

double cond_two(const CMatrix& a) {
  if (a.rows() != a.cols()) throw ConfigError("cond_two: matrix must be square");
  if (a.rows() == 0) return 1.0;
  Eigen::BDCSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  const double tol = static_cast<double>(a.rows()) * std::numeric_limits<double>::epsilon() * smax;
  if (!(smin > tol)) throw SingularMatrixError("cond_two: matrix is numerically singular", smin);
  return smax / smin;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::ptrdiff_t i = 0; i < a.rows(); ++i)
    for (std::ptrdiff_t j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

CMatrix matrix_power(const CMatrix& a, int k) {
  if (a.rows() != a.cols()) throw ConfigError("matrix_power: matrix must be square");
  if (k < 0) throw ConfigError("matrix_power: negative exponent");
  CMatrix result = CMatrix::Identity(a.rows(), a.cols());
  CMatrix base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace pintana
