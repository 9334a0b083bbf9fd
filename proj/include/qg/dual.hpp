#pragma once

#include "qg/hopf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qg {

struct InternalConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element of the convolution algebra L^1(G) = dual of L^infinity(G),
/// stored as a covector over the owner's basis.
struct Functional {
  FiniteQuantumGroup owner;
  Vec covec;

  Functional(FiniteQuantumGroup g, Vec v);

  cplx operator()(const Vec& element_coeffs) const {
    return pairing(covec, element_coeffs);
  }
  cplx operator()(const Element& x) const;
};

/// (f*g)(x) = (f (x) g) Delta(x).
Functional convolve(const Functional& f, const Functional& g);

/// The L^1 involution f^#(x) = conj(f(S(x)^*)).
Functional sharp(const Functional& f);

/// hat(x)(y) = h(x y); injective by Haar faithfulness.
Functional hat(const Element& x);

/// The counit as a functional: the unit of convolution.
Functional counit_functional(const FiniteQuantumGroup& g);
Functional haar_functional(const FiniteQuantumGroup& g);
Functional dual_basis_functional(const FiniteQuantumGroup& g, int k);

/// Matrix of g -> f*g on covectors.
Mat convolution_left_op(const FiniteQuantumGroup& g, const Vec& f);
/// Matrix of g -> g*f.
Mat convolution_right_op(const FiniteQuantumGroup& g, const Vec& f);

/// One Wedderburn block of L^1(G): an explicit *-isomorphism onto M_n via a
/// matrix-unit system, the corresponding corepresentation coefficients u^pi,
/// and the fitted F matrix.
struct IrrBlock {
  int n = 0;
  Mat extract_tensor;      // (n*n) x dim; row (i*n+j) evaluates pi(.)_{ij}
  std::vector<Vec> coeff;  // coefficient vectors of u^pi_{ij}, index i*n+j
  std::vector<Vec> units;  // covectors of the matrix units e^pi_{ij} in L^1
  Vec central_idempotent;  // covector of the minimal central idempotent
  RVec F;                  // diagonal of the fitted F matrix
  Vec fingerprint;         // block character tr pi(e^k) over the dual basis

  Mat extract(const Vec& covec) const;
  Mat extract(const Functional& f) const;
};

struct IrrTable {
  FiniteQuantumGroup group;
  std::uint64_t seed = 0;
  std::vector<IrrBlock> blocks;

  int dim() const { return group.dim(); }
  std::vector<int> block_dims() const;
};

/// Computes the block decomposition of the convolution *-algebra: center,
/// minimal central idempotents via a seeded random self-adjoint central
/// element, matrix-unit systems inside each simple block, the pairing-derived
/// corepresentation coefficients, and the F fit. Every block invariant is
/// verified before returning; failures throw InternalConsistencyError.
/// Blocks are ordered by (n ascending, fingerprint lexicographic), so tables
/// computed with different seeds agree block-by-block up to the basis of H_pi.
IrrTable wedderburn(const FiniteQuantumGroup& g, const Tolerance& tol = {},
                    std::uint64_t seed = 0);

/// lambda(f) = (+) pi(f), the Fourier transform.
std::vector<Mat> fourier(const IrrTable& table, const Functional& f);

/// Covector of pi(f circ S): the functional y -> f(S(y)).
Vec compose_with_antipode(const FiniteQuantumGroup& g, const Vec& f);

/// Verifies e^pi_{ij} = tr(F) sum_k (F^-1)_{ik} hat((u^pi_{kj})^*) maps under
/// the Fourier transform to the (i,j) matrix unit of this block and to zero
/// elsewhere. (The prefactor convention is tr(F), fixed by the Haar-state
/// normalization of the hat map; see the IRRTABLE report header.)
AxiomReport matrix_unit_check(const IrrBlock& block, const IrrTable& table,
                              const Tolerance& tol = {});

/// Verifies pi(hat(f*x)) = pi(hat(x)) pi(f circ S) per block, where
/// f*x = (id (x) f) Delta(x).
AxiomReport convolution_formula_check(const IrrTable& table, const Functional& f,
                                      const Element& x, const Tolerance& tol = {});

/// Textual export of an IrrTable (stable ordering, documented grammar).
std::string irr_report(const IrrTable& table);

}  // namespace qg
