#include "qg/crossed.hpp"

#include <algorithm>
#include <cmath>

namespace qg {

HopfAction trivial_action(const FiniteQuantumGroup& g, const GroupTable& gamma) {
  HopfAction a{gamma, {}};
  a.maps.assign(gamma.order(), Mat::Identity(g.dim(), g.dim()));
  return a;
}

HopfAction permutation_action(const FiniteQuantumGroup& g, const GroupTable& gamma,
                              const std::vector<std::vector<int>>& perms) {
  if (static_cast<int>(perms.size()) != gamma.order())
    throw ContractViolationError("need one permutation per group element");
  HopfAction a{gamma, {}};
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != g.dim())
      throw ContractViolationError("permutation length does not match dim");
    Mat m = Mat::Zero(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i) {
      if (p[i] < 0 || p[i] >= g.dim())
        throw ContractViolationError("permutation image out of range");
      m(p[i], i) = 1.0;
    }
    a.maps.push_back(std::move(m));
  }
  return a;
}

AxiomReport verify_action(const FiniteQuantumGroup& g, const HopfAction& action,
                          const Tolerance& tol) {
  AxiomReport rep;
  const int d = g.dim();
  const int m = action.gamma.order();
  auto push = [&](const std::string& name, double r) {
    rep.checks.push_back({name, r, r <= tol.equality_eps * (1.0 + d)});
  };
  if (static_cast<int>(action.maps.size()) != m)
    throw MalformedDefinitionError("action map count does not match the group order");
  for (const Mat& a : action.maps)
    if (a.rows() != d || a.cols() != d)
      throw MalformedDefinitionError("action map has wrong shape");

  double hom = (action.maps[action.gamma.identity()] - Mat::Identity(d, d)).norm();
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      hom = std::max(hom, (action.maps[s] * action.maps[t] -
                           action.maps[action.gamma.mul(s, t)])
                              .norm());
  push("action-homomorphism", hom);

  double star_auto = 0.0;
  for (int s = 0; s < m; ++s) {
    const Mat& a = action.maps[s];
    star_auto = std::max(star_auto, (a * g.unit() - g.unit()).norm());
    for (int i = 0; i < d; ++i) {
      star_auto = std::max(
          star_auto, (g.star(a.col(i)) - a * g.star_matrix().col(i)).norm());
      for (int j = 0; j < d; ++j) {
        const Vec lhs = g.multiply(a.col(i), a.col(j));
        const Vec rhs = a * g.left_mult(i).col(j);
        star_auto = std::max(star_auto, (lhs - rhs).norm());
      }
    }
  }
  push("action-star-automorphism", star_auto);

  double worowicz = 0.0;
  for (int s = 0; s < m; ++s) {
    const Mat& a = action.maps[s];
    for (int k = 0; k < d; ++k) {
      Vec ek = Vec::Zero(d);
      ek(k) = 1.0;
      const Mat lhs = a * g.coproduct_of(ek) * a.transpose();  // (alpha (x) alpha) Delta
      const Mat rhs = g.coproduct_of(a.col(k));
      worowicz = std::max(worowicz, (lhs - rhs).norm());
    }
  }
  push("action-coproduct-equivariance", worowicz);

  double haar = 0.0;
  for (int s = 0; s < m; ++s)
    haar = std::max(haar, (action.maps[s].transpose() * g.haar() - g.haar()).norm());
  push("action-haar-invariance", haar);

  return rep;
}

namespace {

FiniteQuantumGroup build_with_convention(const FiniteQuantumGroup& g,
                                         const HopfAction& action,
                                         CrossedConvention conv,
                                         const Tolerance& tol) {
  const int d = g.dim();
  const int m = action.gamma.order();
  const int n = d * m;
  FiniteQuantumGroup::Tensors t;
  t.name = g.name() + "x|G" + std::to_string(m) + "|";
  t.dim = n;
  t.labels.resize(n);
  for (int s = 0; s < m; ++s)
    for (int i = 0; i < d; ++i)
      t.labels[crossed_index(i, s, d)] = g.labels()[i] + "|" + std::to_string(s);
  t.mult.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  t.coproduct.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  auto M = [&](int i, int j, int k) -> cplx& {
    return t.mult[(static_cast<size_t>(i) * n + j) * n + k];
  };
  auto D = [&](int k, int i, int j) -> cplx& {
    return t.coproduct[(static_cast<size_t>(k) * n + i) * n + j];
  };

  // (b_i (.) s)(b_j (.) t) = b_i alpha_s(b_j) (.) <leg>.
  for (int s = 0; s < m; ++s)
    for (int tt = 0; tt < m; ++tt) {
      const int leg = (conv == CrossedConvention::Standard)
                          ? action.gamma.mul(s, tt)
                          : action.gamma.mul(action.gamma.inverse(s), tt);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const Vec prod = g.multiply(Vec(Vec::Unit(d, i)), action.maps[s].col(j));
          for (int k = 0; k < d; ++k)
            if (prod(k) != cplx(0.0))
              M(crossed_index(i, s, d), crossed_index(j, tt, d),
                crossed_index(k, leg, d)) = prod(k);
        }
    }

  // Delta(b_k (.) s) = sum (b_k(1) (.) s) (x) (b_k(2) (.) s).
  for (int s = 0; s < m; ++s)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const cplx v = g.coproduct(k, i, j);
          if (v != cplx(0.0))
            D(crossed_index(k, s, d), crossed_index(i, s, d),
              crossed_index(j, s, d)) = v;
        }

  // (a (.) s)^* = alpha_{s^-1}(a^*) (.) s^-1.
  t.star = Mat::Zero(n, n);
  t.antipode = Mat::Zero(n, n);
  for (int s = 0; s < m; ++s) {
    const int sinv = action.gamma.inverse(s);
    const Mat star_block = action.maps[sinv] * g.star_matrix();
    const Mat anti_block = action.maps[sinv] * g.antipode_matrix();
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        t.star(crossed_index(k, sinv, d), crossed_index(i, s, d)) = star_block(k, i);
        t.antipode(crossed_index(k, sinv, d), crossed_index(i, s, d)) =
            anti_block(k, i);
      }
  }

  t.counit = Vec::Zero(n);
  t.haar = Vec::Zero(n);
  for (int s = 0; s < m; ++s)
    for (int i = 0; i < d; ++i) {
      t.counit(crossed_index(i, s, d)) = g.counit()(i);
      if (s == action.gamma.identity()) t.haar(crossed_index(i, s, d)) = g.haar()(i);
    }
  return FiniteQuantumGroup::from_tensors(std::move(t), tol);
}

}  // namespace

CrossedProduct build_crossed_product(const FiniteQuantumGroup& g,
                                     const HopfAction& action, const Tolerance& tol) {
  const AxiomReport action_rep = verify_action(g, action, tol);
  if (!action_rep.all_pass())
    throw AxiomFailureError(action_rep);

  // The axiom verifier arbitrates the multiplication convention.
  try {
    FiniteQuantumGroup product =
        build_with_convention(g, action, CrossedConvention::Standard, tol);
    AxiomReport rep = verify_axioms(product, tol);
    if (rep.all_pass()) return {std::move(product), CrossedConvention::Standard};
  } catch (const MalformedDefinitionError&) {
  }
  FiniteQuantumGroup product =
      build_with_convention(g, action, CrossedConvention::Printed, tol);
  AxiomReport rep = verify_axioms(product, tol);
  if (!rep.all_pass()) throw AxiomFailureError(std::move(rep));
  return {std::move(product), CrossedConvention::Printed};
}

AxiomReport verify_crossed_irr(const IrrTable& factor_table,
                               const FiniteQuantumGroup& product,
                               const HopfAction& action, const Tolerance& tol,
                               std::uint64_t seed) {
  AxiomReport rep;
  const auto& g = factor_table.group;
  const int d = g.dim();
  const int m = action.gamma.order();
  const IrrTable ptable = wedderburn(product, tol, seed);

  std::vector<int> expected;
  for (const auto& b : factor_table.blocks)
    for (int s = 0; s < m; ++s) expected.push_back(b.n);
  std::sort(expected.begin(), expected.end());
  std::vector<int> got = ptable.block_dims();
  std::sort(got.begin(), got.end());
  rep.checks.push_back({"crossed-block-multiset",
                        got == expected ? 0.0 : 1.0, got == expected});

  // Each product block's coefficient space must equal span{s . u^pi_{ij}} for
  // exactly one pair (s, pi): a perfect matching of subspaces.
  std::vector<Subspace> twisted;
  std::vector<int> twisted_n;
  for (int s = 0; s < m; ++s)
    for (const auto& b : factor_table.blocks) {
      Mat span(product.dim(), b.n * b.n);
      for (int idx = 0; idx < b.n * b.n; ++idx) {
        const Vec w = action.maps[s] * b.coeff[idx];  // alpha_s(u_ij) in fiber s
        Vec full = Vec::Zero(product.dim());
        for (int k = 0; k < d; ++k) full(crossed_index(k, s, d)) = w(k);
        span.col(idx) = full;
      }
      twisted.push_back(span_of(span, tol));
      twisted_n.push_back(b.n);
    }

  std::vector<bool> used(twisted.size(), false);
  bool matched_all = true;
  for (const auto& pb : ptable.blocks) {
    Mat span(product.dim(), pb.n * pb.n);
    for (int idx = 0; idx < pb.n * pb.n; ++idx) span.col(idx) = pb.coeff[idx];
    const Subspace pspace = span_of(span, tol);
    bool matched = false;
    for (size_t c = 0; c < twisted.size(); ++c) {
      if (used[c] || twisted_n[c] != pb.n) continue;
      if (subspace_equal(pspace, twisted[c], tol)) {
        used[c] = true;
        matched = true;
        break;
      }
    }
    if (!matched) { matched_all = false; break; }
  }
  rep.checks.push_back({"crossed-coefficient-matching",
                        matched_all ? 0.0 : 1.0, matched_all});
  return rep;
}

}  // namespace qg
