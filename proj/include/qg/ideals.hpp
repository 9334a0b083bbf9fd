#pragma once

#include "qg/dual.hpp"

#include <string>
#include <vector>

namespace qg {

struct NotTwoSidedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A hull: one subspace E_pi <= C^{n_pi} per block of an IrrTable. Valid only
/// against the table it was computed from (H_pi bases are seed-dependent).
struct Hull {
  std::vector<Subspace> parts;

  std::vector<int> dims() const;
};

/// A closed left ideal of L^1(G), stored extensionally as a subspace of the
/// covector space. The left-closure invariant g*I <= I is verified on
/// construction through make_left_ideal.
struct IdealSubspace {
  FiniteQuantumGroup owner;
  Subspace space;
};

/// Residual of the left-closure invariant: max over dual basis functionals g
/// and ONB vectors v of dist(g*v, space).
double left_closure_residual(const FiniteQuantumGroup& g, const Subspace& space);
double right_closure_residual(const FiniteQuantumGroup& g, const Subspace& space);

/// Wraps a covector subspace as an IdealSubspace after verifying closure.
IdealSubspace make_left_ideal(const FiniteQuantumGroup& g, Subspace space,
                              const Tolerance& tol);

/// Smallest closed left ideal containing the generators: the closure of
/// span{g*f, f : f in gens, g in the dual basis}.
IdealSubspace left_ideal_from_generators(const FiniteQuantumGroup& g,
                                         const std::vector<Functional>& gens,
                                         const Tolerance& tol = {});

/// E_pi = the joint kernel of pi(f) over a basis of I.
Hull hull_of(const IrrTable& table, const IdealSubspace& ideal,
             const Tolerance& tol = {});

/// I(E) = {f : pi(f) E_pi = 0 for all pi}, computed as a joint kernel.
IdealSubspace ideal_I(const IrrTable& table, const Hull& hull,
                      const Tolerance& tol = {});

struct SynthesisReport {
  bool ok = false;
  int dim_ideal = 0;
  int dim_reconstructed = 0;
  double forward_residual = 0.0;   // I <= I(hull(I))
  double backward_residual = 0.0;  // I(hull(I)) <= I
};

/// The finite-dimensional synthesis round-trip I = I(hull(I)). In finite
/// dimension j(E) = I(E) (every Fourier transform has finite support), so
/// this is the full synthesis statement.
SynthesisReport verify_synthesis(const IrrTable& table, const IdealSubspace& ideal,
                                 const Tolerance& tol = {});

struct AnnihilatorReport {
  Subspace annihilator;          // I(E)^perp inside L^infinity
  Subspace coefficient_span;     // span{u^pi_{xi,eta} : eta in E_pi}
  Subspace kernel_intersection;  // cap_f ker((id (x) f) Delta)
  int expected_dim = 0;          // sum n_pi dim E_pi
  double resid_ab = 0.0;
  double resid_ac = 0.0;
  bool pass = false;
};

/// The three descriptions of the annihilator of I(E) in L^infinity, checked
/// pairwise equal with the dimension count sum n_pi dim E_pi.
AnnihilatorReport annihilator_dualities(const IrrTable& table, const Hull& hull,
                                        const Tolerance& tol = {});

/// For a two-sided ideal, every hull component is {0} or full. Throws
/// NotTwoSidedError when the input is not closed under right convolution.
bool two_sided_hull_check(const IrrTable& table, const IdealSubspace& ideal,
                          const Tolerance& tol = {});

/// Annihilator {x : f(x) = 0 for all f in the covector subspace} (bilinear).
Subspace annihilator_in_elements(const Subspace& covectors, const Tolerance& tol);

/// Preannihilator {f : f(y) = 0 for all y in the element subspace} (bilinear).
Subspace preannihilator_of_elements(const Subspace& elements, const Tolerance& tol);

/// Textual hull export: per block label, n_pi, dim E_pi, ONB matrix.
std::string hull_report(const IrrTable& table, const Hull& hull);

}  // namespace qg
