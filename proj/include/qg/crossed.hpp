#pragma once

#include "qg/dual.hpp"

#include <vector>

namespace qg {

/// An action of a finite group by Hopf *-automorphisms: each alpha(s) is a
/// *-automorphism of L^infinity(G) commuting with the coproduct and fixing
/// the Haar state.
struct HopfAction {
  GroupTable gamma;
  std::vector<Mat> maps;  // alpha(s) on coefficient vectors, indexed by s
};

HopfAction trivial_action(const FiniteQuantumGroup& g, const GroupTable& gamma);

/// Gamma permuting the basis of a group-algebra-presented factor through
/// automorphisms of the underlying group; perms[s][i] is the image of basis
/// index i under alpha(s).
HopfAction permutation_action(const FiniteQuantumGroup& g, const GroupTable& gamma,
                              const std::vector<std::vector<int>>& perms);

/// Named residuals for every HopfAction invariant.
AxiomReport verify_action(const FiniteQuantumGroup& g, const HopfAction& action,
                          const Tolerance& tol = {});

/// The group-leg convention for the crossed product multiplication
/// (a (.) s)(b (.) t) = a alpha_s(b) (.) <leg>.
enum class CrossedConvention {
  Standard,  // leg = s t
  Printed,   // leg = s^-1 t
};

struct CrossedProduct {
  FiniteQuantumGroup product;
  CrossedConvention convention;
};

/// Builds the crossed product on the basis {b_i (.) s} (index s*dim + i). The
/// multiplication convention is selected by the axiom verifier: the standard
/// rule is tried first and the alternative only if it fails. The returned
/// object always passes verify_axioms.
CrossedProduct build_crossed_product(const FiniteQuantumGroup& g,
                                     const HopfAction& action,
                                     const Tolerance& tol = {});

inline int crossed_index(int i, int s, int dim_g) { return s * dim_g + i; }

/// Verifies the product's block dimension multiset is |Gamma| copies of the
/// factor's, and that each product block's coefficient space is the group-like
/// twist of an embedded one (a perfect matching at the subspace level).
AxiomReport verify_crossed_irr(const IrrTable& factor_table,
                               const FiniteQuantumGroup& product,
                               const HopfAction& action, const Tolerance& tol = {},
                               std::uint64_t seed = 0);

}  // namespace qg
