#pragma once

#include "qg/group_table.hpp"
#include "qg/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qg {

struct MalformedDefinitionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AxiomCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
  double max_residual() const;
  const AxiomCheck* find(const std::string& name) const;
  std::string summary() const;
};

struct AxiomFailureError : std::runtime_error {
  AxiomReport report;
  explicit AxiomFailureError(AxiomReport r);
};

/// A finite quantum group: a finite-dimensional Hopf *-algebra together with
/// its Haar state, stored as dense structure tensors over an ordered basis.
/// Cheap-to-copy immutable handle; all member functions are const and
/// thread-safe.
class FiniteQuantumGroup {
 public:
  struct Tensors {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<cplx> mult;       // [(i*dim + j)*dim + k]: coeff of b_k in b_i b_j
    std::vector<cplx> coproduct;  // [(k*dim + i)*dim + j]: coeff of b_i (x) b_j in Delta b_k
    Mat star;                     // (b_i)^* = sum_k star(k,i) b_k  (antilinear extension)
    Mat antipode;                 // S(b_i) = sum_k antipode(k,i) b_k
    Vec counit;                   // counit(b_i)
    Vec haar;                     // haar(b_i)
  };

  /// Builds the object and derives the algebra unit from the multiplication
  /// tensor. Throws MalformedDefinitionError on dimension inconsistencies or
  /// when no two-sided unit exists. Does not check the Hopf axioms; run
  /// verify_axioms for that.
  static FiniteQuantumGroup from_tensors(Tensors t, const Tolerance& tol = {});

  int dim() const;
  const std::string& name() const;
  const std::vector<std::string>& labels() const;

  cplx mult(int i, int j, int k) const;
  cplx coproduct(int k, int i, int j) const;
  const Vec& unit() const;
  const Mat& star_matrix() const;
  const Mat& antipode_matrix() const;
  const Vec& counit() const;
  const Vec& haar() const;

  /// Left multiplication by b_i as a matrix on coefficient vectors.
  const Mat& left_mult(int i) const;
  /// Right multiplication by b_i.
  const Mat& right_mult(int i) const;

  Mat left_mult_op(const Vec& a) const;
  Mat right_mult_op(const Vec& a) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  Vec star(const Vec& x) const;
  Vec antipode(const Vec& x) const;
  /// Delta(x) as a dim x dim coefficient matrix; entry (i,j) is the
  /// coefficient of b_i (x) b_j.
  Mat coproduct_of(const Vec& x) const;
  cplx counit_of(const Vec& x) const;
  cplx haar_of(const Vec& x) const;

  /// Product in the tensor-square algebra on dim x dim coefficient matrices.
  Mat tensor_square_product(const Mat& x, const Mat& y) const;

  /// Gram matrix [haar(b_i^* b_j)] of the Haar inner product.
  const Mat& gram() const;

  /// f*x = (id (x) f) Delta(x) as a matrix on coefficient vectors, f a covector.
  Mat act_left(const Vec& f) const;
  /// x*f = (f (x) id) Delta(x).
  Mat act_right(const Vec& f) const;

  bool is_commutative(double eps = 1e-10) const;
  bool is_cocommutative(double eps = 1e-10) const;

  bool same_object(const FiniteQuantumGroup& other) const { return d_ == other.d_; }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// An element of L^infinity(G) over the basis of its owner.
struct Element {
  FiniteQuantumGroup owner;
  Vec coeffs;

  Element(FiniteQuantumGroup g, Vec c);
};

Element operator*(const Element& x, const Element& y);
Element operator+(const Element& x, const Element& y);
Element operator-(const Element& x, const Element& y);
Element operator*(cplx s, const Element& x);
Element star(const Element& x);
Element antipode(const Element& x);

/// Checks every defining invariant and reports one named residual per law.
AxiomReport verify_axioms(const FiniteQuantumGroup& G, const Tolerance& tol = {});

/// Function algebra C(G) of a finite group: commutative, with Delta from the
/// group law, counit = evaluation at e, and Haar = normalized counting measure.
FiniteQuantumGroup from_finite_group(const GroupTable& g);

/// Group algebra C[Gamma] viewed as a (cocommutative) quantum group:
/// Delta(s) = s (x) s, counit = 1, S(s) = s^-1, haar(s) = [s = e].
FiniteQuantumGroup from_group_algebra(const GroupTable& g);

/// Tensor-product Hopf *-algebra with haar = h1 (x) h2.
FiniteQuantumGroup tensor_product(const FiniteQuantumGroup& a,
                                  const FiniteQuantumGroup& b);

/// Solves (id (x) h) Delta = h(.) 1, h(1) = 1 for the Haar state; used when a
/// definition document omits the HAAR section. Throws NoSolutionError when no
/// bi-invariant state exists.
Vec solve_haar_state(const FiniteQuantumGroup::Tensors& t, const Vec& unit,
                     const Tolerance& tol);

}  // namespace qg
