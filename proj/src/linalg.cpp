#include "qg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace qg {

void require_finite(const Mat& m, const std::string& what) {
  if (!m.allFinite())
    throw ContractViolationError(what + " contains NaN or Inf entries");
}

Subspace::Subspace(int ambient_dim, Mat onb) : ambient(ambient_dim), basis(std::move(onb)) {
  if (basis.size() == 0 && basis.rows() != ambient) basis.resize(ambient, 0);
  if (static_cast<int>(basis.rows()) != ambient)
    throw AmbientMismatchError("subspace basis rows do not match ambient dimension");
  require_finite(basis, "subspace basis");
  if (basis.cols() > basis.rows())
    throw ContractViolationError("subspace dimension exceeds ambient dimension");
}

Subspace Subspace::zero(int ambient_dim) {
  return Subspace(ambient_dim, Mat(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Mat::Identity(ambient_dim, ambient_dim));
}

Mat Subspace::projector() const {
  if (dim() == 0) return Mat::Zero(ambient, ambient);
  return basis * basis.adjoint();
}

namespace {

// A matrix whose largest singular value sits below the equality tolerance is
// numerically zero; without this floor, relative rank decisions on pure
// round-off (e.g. I - P for a full projector P) would report spurious rank.
bool numerically_zero(double top, const Tolerance& tol) {
  return top <= tol.equality_eps;
}

}  // namespace

Subspace span_of(const Mat& vectors, const Tolerance& tol) {
  require_finite(vectors, "span input");
  const int ambient = static_cast<int>(vectors.rows());
  if (vectors.cols() == 0) return Subspace::zero(ambient);
  Eigen::JacobiSVD<Mat> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  if (!numerically_zero(top, tol))
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > tol.rank_cutoff * top) ++r;
  return Subspace(ambient, svd.matrixU().leftCols(r));
}

Subspace kernel(const Mat& m, const Tolerance& tol) {
  require_finite(m, "kernel input");
  const int n = static_cast<int>(m.cols());
  if (m.rows() == 0) return Subspace::full(n);
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  if (!numerically_zero(top, tol))
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > tol.rank_cutoff * top) ++r;
  return Subspace(n, svd.matrixV().rightCols(n - r));
}

Subspace column_space(const Mat& m, const Tolerance& tol) { return span_of(m, tol); }

Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  if (a.ambient != b.ambient)
    throw AmbientMismatchError("intersect: ambient dimensions differ");
  const int n = a.ambient;
  // v in a iff (I - P_a) v = 0; stack both complement projectors.
  Mat stacked(2 * n, n);
  stacked.topRows(n) = Mat::Identity(n, n) - a.projector();
  stacked.bottomRows(n) = Mat::Identity(n, n) - b.projector();
  return kernel(stacked, tol);
}

Subspace orthogonal_complement(const Subspace& s, const Tolerance& tol) {
  if (s.dim() == 0) return Subspace::full(s.ambient);
  return kernel(s.basis.adjoint(), tol);
}

std::pair<RVec, Mat> eig_hermitian(const Mat& m, const Tolerance& tol) {
  require_finite(m, "eig_hermitian input");
  if (m.rows() != m.cols())
    throw ContractViolationError("eig_hermitian: matrix not square");
  const double scale = 1.0 + m.norm();
  if ((m - m.adjoint()).norm() > tol.equality_eps * scale)
    throw ContractViolationError("eig_hermitian: matrix not hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success)
    throw ContractViolationError("eig_hermitian: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

LeastSquares solve_linear(const Mat& a, const Mat& rhs, const Tolerance& tol) {
  require_finite(a, "solve_linear lhs");
  require_finite(rhs, "solve_linear rhs");
  if (a.rows() != rhs.rows())
    throw AmbientMismatchError("solve_linear: row counts differ");
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
  cod.setThreshold(tol.rank_cutoff);
  Mat x = cod.solve(rhs);
  const double residual = (a * x - rhs).norm();
  const double scale = 1.0 + a.norm() + rhs.norm();
  if (residual > tol.equality_eps * scale) throw NoSolutionError(residual);
  return {std::move(x), residual};
}

double containment_residual(const Subspace& s, const Vec& v) {
  if (static_cast<int>(v.size()) != s.ambient)
    throw AmbientMismatchError("containment_residual: vector size mismatch");
  Vec out = v;
  if (s.dim() > 0) out -= s.basis * (s.basis.adjoint() * v);
  return out.norm() / (1.0 + v.norm());
}

bool contains_vector(const Subspace& s, const Vec& v, const Tolerance& tol) {
  return containment_residual(s, v) <= tol.equality_eps;
}

double subspace_containment_residual(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient != inner.ambient)
    throw AmbientMismatchError("subspace containment: ambient mismatch");
  double worst = 0.0;
  for (int j = 0; j < inner.dim(); ++j)
    worst = std::max(worst, containment_residual(outer, inner.basis.col(j)));
  return worst;
}

bool subspace_contains(const Subspace& outer, const Subspace& inner,
                       const Tolerance& tol) {
  return subspace_containment_residual(outer, inner) <= tol.equality_eps;
}

bool subspace_equal(const Subspace& a, const Subspace& b, const Tolerance& tol) {
  return subspace_contains(a, b, tol) && subspace_contains(b, a, tol);
}

double subspace_distance(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw AmbientMismatchError("subspace_distance: ambient mismatch");
  return (a.projector() - b.projector()).norm();
}

int rank_of(const Mat& m, const Tolerance& tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  if (!numerically_zero(top, tol))
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > tol.rank_cutoff * top) ++r;
  return r;
}

}  // namespace qg
