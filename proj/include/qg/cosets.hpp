#pragma once

#include "qg/quasigroup.hpp"

#include <vector>

namespace qg {

struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TheoremViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A group-like unitary: Delta(x) = x (x) x, counit(x) = 1, x^* x = 1 = x x^*.
struct GroupLike {
  Element element;
};

struct IntrinsicGroup {
  std::vector<GroupLike> elements;
  std::vector<std::vector<int>> table;

  GroupTable group() const { return GroupTable(table); }
  int size() const { return static_cast<int>(elements.size()); }
};

/// The group-like elements {u^pi : n_pi = 1} with their multiplication table;
/// each invariant is verified and the set is checked to close under product.
IntrinsicGroup intrinsic_group(const IrrTable& table, const Tolerance& tol = {});

/// A quantum coset x N: right invariant, a ternary ring of operators, and the
/// image of the idempotent contraction (id (x) omega . x^-1) Delta.
struct CosetSpace {
  Coideal base;
  GroupLike rep;
  Subspace space;
};

CosetSpace coset(const FiniteQuantumGroup& g, const GroupLike& x, const Coideal& n,
                 const Tolerance& tol = {});

enum class CosetRelation { EqualsN, Zero };

/// The coset dichotomy: intersect(xN, N) is N when omega(x) = 1 and {0}
/// when omega(x) = 0; any other outcome throws TheoremViolationError.
CosetRelation disjointness_check(const FiniteQuantumGroup& g, const GroupLike& x,
                                 const Coideal& n, const Tolerance& tol = {});

/// (f . x)(y) = f(x y). Verifies the input is a left ideal, that the result
/// equals the preannihilator (x^-1 X)_perp of the translated invariant
/// subspace X = I^perp (the action is the adjoint of left multiplication by
/// x), and that two-sidedness propagates when present.
IdealSubspace translate_ideal(const FiniteQuantumGroup& g, const IdealSubspace& ideal,
                              const GroupLike& x, const Tolerance& tol = {});

/// T_N(J^1(N) . x) = N_* : the restriction of the translated ideal to N has
/// full rank dim N. Requires x outside N (PreconditionError otherwise).
bool surjectivity_check(const FiniteQuantumGroup& g, const Coideal& n,
                        const GroupLike& x, const Tolerance& tol = {});

/// Order sequence of the intrinsic group, an isomorphism-class fingerprint.
std::vector<int> intrinsic_group_fingerprint(const IntrinsicGroup& gr);

}  // namespace qg
