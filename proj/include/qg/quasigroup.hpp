#pragma once

#include "qg/ideals.hpp"

#include <cstdint>
#include <vector>

namespace qg {

/// A verified idempotent state: unital, positive, omega*omega = omega.
struct IdempotentState {
  Functional omega;
};

struct IdempotentCheck {
  double unital_residual = 0.0;
  double idempotency_residual = 0.0;
  double positivity_min_eigenvalue = 0.0;  // of the Gram form [omega(b_i^* b_j)]
  bool pass = false;
};

IdempotentCheck check_idempotent_state(const FiniteQuantumGroup& g,
                                       const Functional& omega,
                                       const Tolerance& tol = {});

/// Wraps after checking; throws ContractViolationError on failure.
IdempotentState make_idempotent_state(const Functional& omega,
                                      const Tolerance& tol = {});

/// E = (id (x) omega) Delta as a matrix on coefficient vectors. Verified
/// idempotent, unital, positive on the Haar inner product, and a right-module
/// map (E(x*f) = E(x)*f); violations throw InternalConsistencyError.
Mat conditional_expectation(const FiniteQuantumGroup& g, const IdempotentState& st,
                            const Tolerance& tol = {});

/// A compact quasi-subgroup: the right coideal N = image of the conditional
/// expectation of an idempotent state.
struct Coideal {
  FiniteQuantumGroup owner;
  Subspace space;
  IdempotentState omega;
};

Coideal coideal_of(const FiniteQuantumGroup& g, const IdempotentState& st,
                   const Tolerance& tol = {});

/// Delta(N) <= N (x) L^infinity as well (two-sided invariance).
bool coideal_is_invariant(const Coideal& n, const Tolerance& tol = {});

/// Per block, pi(omega) is an orthogonal 0/1 projection; E_pi = its range in
/// the eigenbasis. Also verifies span{u^pi_{ij} : e_j in E_pi} equals the
/// coideal of omega.
Hull hull_of_quasi_subgroup(const IrrTable& table, const IdempotentState& st,
                            const Tolerance& tol = {});

/// J^1(N) = preannihilator of N, a closed left ideal with
/// dim = dim L^1 - dim N and the same hull as the quasi-subgroup.
IdealSubspace J1(const FiniteQuantumGroup& g, const Coideal& n,
                 const Tolerance& tol = {});

/// e = counit - omega annihilates N and is a right unit on J^1(N); two-sided
/// when N is invariant.
AxiomReport right_unit_check(const FiniteQuantumGroup& g, const IdempotentState& st,
                             const Tolerance& tol = {});

struct IdempotentSearchResult {
  std::vector<IdempotentState> states;
  /// True when the family enumeration is provably complete: subgroup
  /// indicators on cocommutative inputs, subgroup Haar states on commutative
  /// inputs. Otherwise the list is a verified sample only.
  bool exhaustive = false;
};

/// Candidates: counit and Haar always; exhaustive subgroup families in the
/// (co)commutative cases; Cesaro refinement of seeded random states
/// otherwise. Every returned state passes check_idempotent_state.
IdempotentSearchResult search_idempotent_states(const FiniteQuantumGroup& g,
                                                const IrrTable& table,
                                                int random_starts = 24,
                                                const Tolerance& tol = {},
                                                std::uint64_t seed = 0);

}  // namespace qg
