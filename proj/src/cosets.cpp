#include "qg/cosets.hpp"

#include <cmath>

namespace qg {

IntrinsicGroup intrinsic_group(const IrrTable& table, const Tolerance& tol) {
  const auto& g = table.group;
  const int d = g.dim();
  IntrinsicGroup out;
  for (const auto& b : table.blocks) {
    if (b.n != 1) continue;
    const Vec x = b.coeff[0];
    const double corep = (g.coproduct_of(x) - x * x.transpose()).norm();
    const double counit = std::abs(g.counit_of(x) - 1.0);
    const double unitary =
        std::max((g.multiply(g.star(x), x) - g.unit()).norm(),
                 (g.multiply(x, g.star(x)) - g.unit()).norm());
    if (corep > tol.equality_eps * (1.0 + x.squaredNorm()) ||
        counit > tol.equality_eps || unitary > tol.equality_eps)
      throw InternalConsistencyError("1-dimensional block entry is not group-like");
    out.elements.push_back(GroupLike{Element(g, x)});
  }
  const int m = static_cast<int>(out.elements.size());
  auto match = [&](const Vec& z) {
    for (int s = 0; s < m; ++s)
      if ((z - out.elements[s].element.coeffs).norm() <= 1e-6 * (1.0 + z.norm()))
        return s;
    return -1;
  };
  out.table.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const int c = match(
          g.multiply(out.elements[a].element.coeffs, out.elements[b].element.coeffs));
      if (c < 0)
        throw InternalConsistencyError(
            "group-like elements are not closed under multiplication");
      out.table[a][b] = c;
    }
  GroupTable(out.table);  // validates the group axioms
  (void)d;
  return out;
}

CosetSpace coset(const FiniteQuantumGroup& g, const GroupLike& x, const Coideal& n,
                 const Tolerance& tol) {
  if (!x.element.owner.same_object(g) || !n.owner.same_object(g))
    throw AmbientMismatchError("coset: inputs belong to different groups");
  const Mat lx = g.left_mult_op(x.element.coeffs);
  Subspace space = span_of(lx * n.space.basis, tol);
  if (space.dim() != n.space.dim())
    throw InternalConsistencyError("translation by a unitary changed the dimension");

  // Right invariance: space * f <= space for all dual basis functionals.
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = Vec::Zero(g.dim());
    ei(i) = 1.0;
    const Mat rf = g.act_right(ei);
    for (int c = 0; c < space.dim(); ++c)
      if (containment_residual(space, rf * space.basis.col(c)) > tol.equality_eps)
        throw InternalConsistencyError("coset space is not right invariant");
  }

  // TRO property: y z^* w stays inside.
  for (int a = 0; a < space.dim(); ++a)
    for (int b = 0; b < space.dim(); ++b)
      for (int c = 0; c < space.dim(); ++c) {
        const Vec y = g.multiply(
            g.multiply(space.basis.col(a), g.star(space.basis.col(b))),
            space.basis.col(c));
        if (containment_residual(space, y) > tol.equality_eps)
          throw InternalConsistencyError("coset space is not a TRO");
      }

  // The contraction (id (x) omega . x^-1) Delta is idempotent with image xN;
  // x^-1 = x^* since group-likes are unitary.
  const Vec omega_shift =
      g.left_mult_op(g.star(x.element.coeffs)).transpose() * n.omega.omega.covec;
  const Mat proj = g.act_left(omega_shift);
  if ((proj * proj - proj).norm() > tol.equality_eps * (1.0 + proj.norm()))
    throw InternalConsistencyError("coset contraction is not idempotent");
  if (!subspace_equal(column_space(proj, tol), space, tol))
    throw InternalConsistencyError("coset contraction image differs from xN");

  return CosetSpace{n, x, std::move(space)};
}

CosetRelation disjointness_check(const FiniteQuantumGroup& g, const GroupLike& x,
                                 const Coideal& n, const Tolerance& tol) {
  const CosetSpace cs = coset(g, x, n, tol);
  const Subspace inter = intersect(cs.space, n.space, tol);
  const cplx val = pairing(n.omega.omega.covec, x.element.coeffs);
  const bool near_one = std::abs(val - cplx(1.0)) <= 10 * tol.equality_eps;
  const bool near_zero = std::abs(val) <= 10 * tol.equality_eps;
  if (!near_one && !near_zero)
    throw TheoremViolationError("omega_N(x) = " + std::to_string(val.real()) + "+" +
                                std::to_string(val.imag()) +
                                "i is neither 0 nor 1");
  if (near_one) {
    if (!subspace_equal(inter, n.space, tol))
      throw TheoremViolationError("omega_N(x) = 1 but xN cap N differs from N");
    return CosetRelation::EqualsN;
  }
  if (inter.dim() != 0)
    throw TheoremViolationError("omega_N(x) = 0 but xN cap N is nonzero");
  return CosetRelation::Zero;
}

IdealSubspace translate_ideal(const FiniteQuantumGroup& g, const IdealSubspace& ideal,
                              const GroupLike& x, const Tolerance& tol) {
  if (!ideal.owner.same_object(g) || !x.element.owner.same_object(g))
    throw AmbientMismatchError("translate_ideal: inputs belong to different groups");
  const double closure = left_closure_residual(g, ideal.space);
  if (closure > tol.equality_eps)
    throw ContractViolationError("translate_ideal input is not a left ideal");

  // (f . x) = L_x^T f.
  const Mat lx = g.left_mult_op(x.element.coeffs);
  Subspace translated = span_of(lx.transpose() * ideal.space.basis, tol);

  // X = I^perp is right invariant. The action f -> f.x is the adjoint of
  // left multiplication by x, so it carries X_perp onto (x^-1 X)_perp; with
  // x^-1 = x^* this is the coset-translation identity ranged over the whole
  // intrinsic group.
  const Subspace X = annihilator_in_elements(ideal.space, tol);
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = Vec::Zero(g.dim());
    ei(i) = 1.0;
    const Mat rf = g.act_right(ei);
    for (int c = 0; c < X.dim(); ++c)
      if (containment_residual(X, rf * X.basis.col(c)) > tol.equality_eps)
        throw InternalConsistencyError("annihilator of a left ideal is not right invariant");
  }
  const Mat lx_inv = g.left_mult_op(g.star(x.element.coeffs));
  const Subspace xinvX = span_of(lx_inv * X.basis, tol);
  const Subspace preann = preannihilator_of_elements(xinvX, tol);
  if (!subspace_equal(translated, preann, tol))
    throw InternalConsistencyError("translated ideal differs from (x^-1 X)_perp");

  IdealSubspace out = make_left_ideal(g, std::move(translated), tol);

  // Two-sidedness propagates when the input is two-sided.
  if (right_closure_residual(g, ideal.space) <= tol.equality_eps) {
    if (right_closure_residual(g, out.space) > tol.equality_eps)
      throw InternalConsistencyError(
          "translation of a two-sided ideal lost two-sidedness");
  }
  return out;
}

bool surjectivity_check(const FiniteQuantumGroup& g, const Coideal& n,
                        const GroupLike& x, const Tolerance& tol) {
  const cplx val = pairing(n.omega.omega.covec, x.element.coeffs);
  if (std::abs(val) > 10 * tol.equality_eps) {
    if (std::abs(val - cplx(1.0)) <= 10 * tol.equality_eps)
      throw PreconditionError("group-like lies inside N; surjectivity needs x outside N");
    throw TheoremViolationError("omega_N(x) is neither 0 nor 1");
  }
  const IdealSubspace j = J1(g, n, tol);
  const IdealSubspace translated = translate_ideal(g, j, x, tol);
  if (translated.space.dim() == 0) return n.space.dim() == 0;
  const Mat restricted = n.space.basis.transpose() * translated.space.basis;
  return rank_of(restricted, tol) == n.space.dim();
}

std::vector<int> intrinsic_group_fingerprint(const IntrinsicGroup& gr) {
  return gr.group().order_sequence();
}

}  // namespace qg
