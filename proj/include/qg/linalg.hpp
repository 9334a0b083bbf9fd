#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

// Tolerance-aware dense complex linear algebra: subspaces, kernels,
// hermitian eigendecomposition, least-squares solves. All rank decisions
// go through singular values.

namespace qg {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

struct AmbientMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ContractViolationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by solve_linear when the residual of the least-squares solution
/// exceeds the tolerance, i.e. the system is inconsistent.
struct NoSolutionError : std::runtime_error {
  double residual;
  explicit NoSolutionError(double r)
      : std::runtime_error("linear system inconsistent, residual " +
                           std::to_string(r)),
        residual(r) {}
};

struct Tolerance {
  double rank_cutoff = 1e-10;   // singular values below cutoff * largest are zero
  double equality_eps = 1e-8;   // residual threshold for equality checks

  Tolerance() = default;
  Tolerance(double cutoff, double eps) : rank_cutoff(cutoff), equality_eps(eps) {
    if (!(cutoff > 0.0 && cutoff < 1.0) || !(eps > 0.0 && eps < 1.0))
      throw ContractViolationError("Tolerance parameters must lie in (0,1)");
  }
};

/// Rejects NaN/Inf entries; `what` names the offending structure in the error.
void require_finite(const Mat& m, const std::string& what);

/// A linear subspace of C^ambient, stored as an orthonormal column basis.
struct Subspace {
  int ambient = 0;
  Mat basis;  // ambient x dim, orthonormal columns

  Subspace() = default;
  Subspace(int ambient_dim, Mat onb);

  int dim() const { return static_cast<int>(basis.cols()); }

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  /// Orthogonal projector basis * basis^H.
  Mat projector() const;
};

/// Orthonormalizes the column span of `vectors` (rank decided by SVD).
Subspace span_of(const Mat& vectors, const Tolerance& tol);

/// Orthonormal basis of {v : m v = 0}. A zero (or 0-row) matrix yields the
/// full space.
Subspace kernel(const Mat& m, const Tolerance& tol);

/// Column space of m.
Subspace column_space(const Mat& m, const Tolerance& tol);

/// a into b: computed as the kernel of the stacked complement projectors.
Subspace intersect(const Subspace& a, const Subspace& b, const Tolerance& tol);

/// Orthogonal complement with respect to the hermitian inner product.
Subspace orthogonal_complement(const Subspace& s, const Tolerance& tol);

/// Eigendecomposition of a hermitian matrix, eigenvalues ascending.
/// Throws ContractViolationError if m is not hermitian within tolerance.
std::pair<RVec, Mat> eig_hermitian(const Mat& m, const Tolerance& tol);

struct LeastSquares {
  Mat solution;
  double residual;
};

/// Least-squares solve a x = rhs. Throws NoSolutionError (carrying the
/// residual) when the residual exceeds equality_eps * scale.
LeastSquares solve_linear(const Mat& a, const Mat& rhs, const Tolerance& tol);

/// Norm of the component of v outside s, relative to (1 + |v|).
double containment_residual(const Subspace& s, const Vec& v);

bool contains_vector(const Subspace& s, const Vec& v, const Tolerance& tol);

/// max over an ONB of `inner` of the distance to `outer`.
double subspace_containment_residual(const Subspace& outer, const Subspace& inner);

bool subspace_contains(const Subspace& outer, const Subspace& inner,
                       const Tolerance& tol);

/// Mutual containment within tolerance (bases are non-canonical).
bool subspace_equal(const Subspace& a, const Subspace& b, const Tolerance& tol);

/// ||P_a - P_b||, a basis-independent distance between subspaces.
double subspace_distance(const Subspace& a, const Subspace& b);

int rank_of(const Mat& m, const Tolerance& tol);

/// Bilinear pairing sum_k f_k x_k (no conjugation; the duality pairing
/// between covectors and coefficient vectors).
inline cplx pairing(const Vec& f, const Vec& x) {
  return (f.array() * x.array()).sum();
}

}  // namespace qg
