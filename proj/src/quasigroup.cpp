#include "qg/quasigroup.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>

namespace qg {

namespace {

/// Gram form [omega(b_i^* b_j)] of a functional.
Mat functional_gram(const FiniteQuantumGroup& g, const Vec& omega) {
  const int d = g.dim();
  Mat q(d, d);
  for (int i = 0; i < d; ++i) {
    const Vec bi_star = g.star_matrix().col(i);
    for (int j = 0; j < d; ++j) {
      Vec prod = Vec::Zero(d);
      for (int p = 0; p < d; ++p)
        if (bi_star(p) != cplx(0.0)) prod += bi_star(p) * g.left_mult(p).col(j);
      q(i, j) = pairing(omega, prod);
    }
  }
  return q;
}

cplx parallel_scalar_or(const Vec& w, const Vec& q, double eps, bool& ok) {
  const double qq = q.squaredNorm();
  if (qq <= 0.0) { ok = false; return 0.0; }
  const cplx c = q.dot(w) / qq;
  ok = (w - c * q).norm() <= eps * (1.0 + w.norm());
  return c;
}

}  // namespace

IdempotentCheck check_idempotent_state(const FiniteQuantumGroup& g,
                                       const Functional& omega,
                                       const Tolerance& tol) {
  if (!omega.owner.same_object(g))
    throw AmbientMismatchError("functional belongs to another group");
  IdempotentCheck out;
  out.unital_residual = std::abs(pairing(omega.covec, g.unit()) - 1.0);
  out.idempotency_residual =
      (convolve(omega, omega).covec - omega.covec).norm();
  const Mat gram = functional_gram(g, omega.covec);
  const double herm = (gram - gram.adjoint()).norm();
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
  out.positivity_min_eigenvalue = es.eigenvalues().minCoeff();
  out.pass = out.unital_residual <= tol.equality_eps &&
             out.idempotency_residual <= tol.equality_eps &&
             herm <= tol.equality_eps &&
             out.positivity_min_eigenvalue >= -tol.equality_eps;
  return out;
}

IdempotentState make_idempotent_state(const Functional& omega, const Tolerance& tol) {
  const IdempotentCheck c = check_idempotent_state(omega.owner, omega, tol);
  if (!c.pass)
    throw ContractViolationError(
        "functional is not an idempotent state (unital " +
        std::to_string(c.unital_residual) + ", idempotency " +
        std::to_string(c.idempotency_residual) + ", min gram eigenvalue " +
        std::to_string(c.positivity_min_eigenvalue) + ")");
  return IdempotentState{omega};
}

Mat conditional_expectation(const FiniteQuantumGroup& g, const IdempotentState& st,
                            const Tolerance& tol) {
  if (!st.omega.owner.same_object(g))
    throw AmbientMismatchError("state belongs to another group");
  if (!check_idempotent_state(g, st.omega, tol).pass)
    throw ContractViolationError("functional is not an idempotent state");
  const Mat e = g.act_left(st.omega.covec);
  const double scale = 1.0 + e.norm();
  if ((e * e - e).norm() > tol.equality_eps * scale)
    throw InternalConsistencyError("conditional expectation is not idempotent");
  if ((e * g.unit() - g.unit()).norm() > tol.equality_eps * scale)
    throw InternalConsistencyError("conditional expectation is not unital");
  // Positivity on the Haar inner product: gram * E is a hermitian PSD form.
  const Mat form = g.gram() * e;
  if ((form - form.adjoint()).norm() > tol.equality_eps * (1.0 + form.norm()))
    throw InternalConsistencyError("conditional expectation is not GNS-symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (form + form.adjoint()));
  if (es.eigenvalues().minCoeff() < -tol.equality_eps * (1.0 + form.norm()))
    throw InternalConsistencyError("conditional expectation is not positive");
  // Right-module map: E(x*f) = E(x)*f for the dual basis.
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = Vec::Zero(g.dim());
    ei(i) = 1.0;
    const Mat rf = g.act_right(ei);
    if ((e * rf - rf * e).norm() > tol.equality_eps * scale * (1.0 + rf.norm()))
      throw InternalConsistencyError("conditional expectation is not a right-module map");
  }
  return e;
}

Coideal coideal_of(const FiniteQuantumGroup& g, const IdempotentState& st,
                   const Tolerance& tol) {
  const Mat e = conditional_expectation(g, st, tol);
  Subspace n = column_space(e, tol);
  if (!contains_vector(n, g.unit(), tol))
    throw InternalConsistencyError("coideal does not contain the unit");
  for (int a = 0; a < n.dim(); ++a) {
    if (containment_residual(n, g.star(n.basis.col(a))) > tol.equality_eps)
      throw InternalConsistencyError("coideal is not star-closed");
    for (int b = 0; b < n.dim(); ++b)
      if (containment_residual(n, g.multiply(n.basis.col(a), n.basis.col(b))) >
          tol.equality_eps)
        throw InternalConsistencyError("coideal is not multiplicatively closed");
  }
  for (int a = 0; a < n.dim(); ++a) {
    const Mat t = g.coproduct_of(n.basis.col(a));
    for (int i = 0; i < g.dim(); ++i)
      if (containment_residual(n, t.row(i).transpose()) > tol.equality_eps)
        throw InternalConsistencyError("coideal is not right invariant");
  }
  return Coideal{g, std::move(n), st};
}

bool coideal_is_invariant(const Coideal& n, const Tolerance& tol) {
  const auto& g = n.owner;
  for (int a = 0; a < n.space.dim(); ++a) {
    const Mat t = g.coproduct_of(n.space.basis.col(a));
    for (int j = 0; j < g.dim(); ++j)
      if (containment_residual(n.space, t.col(j)) > tol.equality_eps) return false;
  }
  return true;
}

Hull hull_of_quasi_subgroup(const IrrTable& table, const IdempotentState& st,
                            const Tolerance& tol) {
  const auto& g = table.group;
  if (!st.omega.owner.same_object(g))
    throw AmbientMismatchError("state belongs to another group");
  if (!check_idempotent_state(g, st.omega, tol).pass)
    throw ContractViolationError("functional is not an idempotent state");
  Hull hull;
  for (const auto& b : table.blocks) {
    const Mat p = b.extract(st.omega.covec);
    const double scale = 1.0 + p.norm();
    if ((p * p - p).norm() > tol.equality_eps * scale ||
        (p - p.adjoint()).norm() > tol.equality_eps * scale)
      throw ContractViolationError(
          "pi(omega) is not an orthogonal projection; not an idempotent state");
    auto [vals, vecs] = eig_hermitian(p, tol);
    int rank = 0;
    for (int i = 0; i < vals.size(); ++i) {
      if (std::min(std::abs(vals(i)), std::abs(vals(i) - 1.0)) > tol.equality_eps)
        throw ContractViolationError("pi(omega) has an eigenvalue off {0,1}");
      if (vals(i) > 0.5) ++rank;
    }
    // Ascending eigenvalues: the eigenvalue-one vectors are the last `rank`.
    hull.parts.push_back(Subspace(b.n, vecs.rightCols(rank)));
  }

  // Cross-check: span{u^pi_{ij} : e_j in E_pi} is exactly the coideal of omega.
  const int d = g.dim();
  int cols = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b)
    cols += table.blocks[b].n * hull.parts[b].dim();
  Subspace pol_n = Subspace::zero(d);
  if (cols > 0) {
    Mat span(d, cols);
    int col = 0;
    for (size_t b = 0; b < table.blocks.size(); ++b) {
      const auto& block = table.blocks[b];
      for (int c = 0; c < hull.parts[b].dim(); ++c) {
        const Vec eta = hull.parts[b].basis.col(c);
        for (int i = 0; i < block.n; ++i) {
          Vec w = Vec::Zero(d);
          for (int j = 0; j < block.n; ++j) w += eta(j) * block.coeff[i * block.n + j];
          span.col(col++) = w;
        }
      }
    }
    pol_n = span_of(span, tol);
  }
  const Coideal n = coideal_of(g, st, tol);
  if (!subspace_equal(pol_n, n.space, tol))
    throw InternalConsistencyError(
        "coefficient span of the quasi-subgroup hull does not match the coideal");
  return hull;
}

IdealSubspace J1(const FiniteQuantumGroup& g, const Coideal& n, const Tolerance& tol) {
  if (!n.owner.same_object(g))
    throw AmbientMismatchError("coideal belongs to another group");
  IdealSubspace ideal = make_left_ideal(g, preannihilator_of_elements(n.space, tol), tol);
  if (ideal.space.dim() != g.dim() - n.space.dim())
    throw InternalConsistencyError("preannihilator has unexpected dimension");
  return ideal;
}

AxiomReport right_unit_check(const FiniteQuantumGroup& g, const IdempotentState& st,
                             const Tolerance& tol) {
  AxiomReport rep;
  const Coideal n = coideal_of(g, st, tol);
  const Vec e = g.counit() - st.omega.covec;

  double ann = 0.0;
  for (int c = 0; c < n.space.dim(); ++c)
    ann = std::max(ann, std::abs(pairing(e, n.space.basis.col(c))));
  rep.checks.push_back({"unit-annihilates-N", ann, ann <= tol.equality_eps});

  const IdealSubspace j = J1(g, n, tol);
  const Mat right_by_e = convolution_right_op(g, e);
  double right_resid = 0.0;
  for (int c = 0; c < j.space.dim(); ++c) {
    const Vec mu = j.space.basis.col(c);
    right_resid = std::max(right_resid, (right_by_e * mu - mu).norm());
  }
  rep.checks.push_back(
      {"right-unit-on-J1", right_resid, right_resid <= tol.equality_eps});

  if (coideal_is_invariant(n, tol)) {
    const Mat left_by_e = convolution_left_op(g, e);
    double left_resid = 0.0;
    for (int c = 0; c < j.space.dim(); ++c) {
      const Vec mu = j.space.basis.col(c);
      left_resid = std::max(left_resid, (left_by_e * mu - mu).norm());
    }
    rep.checks.push_back(
        {"two-sided-unit-on-J1", left_resid, left_resid <= tol.equality_eps});
  }
  return rep;
}

namespace {

struct RecoveredGroup {
  std::vector<Vec> characters;  // covectors
  std::vector<std::vector<int>> table;
  int identity = -1;
};

/// For commutative L^infinity: the algebra characters (points) and the group
/// law they inherit from the coproduct.
RecoveredGroup recover_points(const FiniteQuantumGroup& g, const Tolerance& tol,
                              std::mt19937_64& rng) {
  const int d = g.dim();
  RecoveredGroup out;
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec a(d);
    for (int i = 0; i < d; ++i) a(i) = cplx(gauss(rng), gauss(rng));
    Eigen::ComplexEigenSolver<Mat> es(g.left_mult_op(a));
    if (es.info() != Eigen::Success) continue;
    // Need d simple eigenvalues.
    bool simple = true;
    for (int i = 0; i < d && simple; ++i)
      for (int j = 0; j < i && simple; ++j)
        if (std::abs(es.eigenvalues()(i) - es.eigenvalues()(j)) < 1e-6) simple = false;
    if (!simple) continue;

    std::vector<Vec> idems;
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      const Vec v = es.eigenvectors().col(i);
      const cplx c = parallel_scalar_or(g.multiply(v, v), v, tol.equality_eps, ok);
      if (!ok || std::abs(c) < 1e-8) { ok = false; break; }
      idems.push_back(v / c);
    }
    if (!ok) continue;

    // Characters: b_k delta_s = phi_s(b_k) delta_s.
    std::vector<Vec> chars;
    for (const Vec& delta : idems) {
      Vec phi(d);
      bool good = true;
      for (int k = 0; k < d && good; ++k)
        phi(k) = parallel_scalar_or(g.left_mult(k) * delta, delta, tol.equality_eps, good);
      if (!good) { ok = false; break; }
      chars.push_back(std::move(phi));
    }
    if (!ok) continue;

    // Group law: (phi_a (x) phi_b) Delta is again a character; match it.
    auto match = [&](const Vec& w) {
      for (size_t s = 0; s < chars.size(); ++s)
        if ((w - chars[s]).norm() <= 1e-6 * (1.0 + w.norm()))
          return static_cast<int>(s);
      return -1;
    };
    std::vector<std::vector<int>> table(d, std::vector<int>(d));
    for (int a1 = 0; a1 < d && ok; ++a1)
      for (int b1 = 0; b1 < d && ok; ++b1) {
        Vec w(d);
        for (int k = 0; k < d; ++k) {
          cplx acc = 0.0;
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              acc += g.coproduct(k, i, j) * chars[a1](i) * chars[b1](j);
          w(k) = acc;
        }
        const int c = match(w);
        if (c < 0) { ok = false; break; }
        table[a1][b1] = c;
      }
    if (!ok) continue;
    out.identity = match(g.counit());
    if (out.identity < 0)
      throw InternalConsistencyError("counit is not among the recovered characters");
    out.characters = std::move(chars);
    out.table = std::move(table);
    return out;
  }
  throw InternalConsistencyError("could not diagonalize the commutative algebra");
}

}  // namespace

IdempotentSearchResult search_idempotent_states(const FiniteQuantumGroup& g,
                                                const IrrTable& table,
                                                int random_starts,
                                                const Tolerance& tol,
                                                std::uint64_t seed) {
  const int d = g.dim();
  IdempotentSearchResult out;
  std::vector<Vec> found;
  auto offer = [&](const Vec& covec) {
    Functional f(g, covec);
    if (!check_idempotent_state(g, f, tol).pass) return false;
    for (const Vec& known : found)
      if ((known - covec).norm() <= 1e-6 * (1.0 + covec.norm())) return true;
    found.push_back(covec);
    return true;
  };

  offer(g.counit());
  offer(g.haar());

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);

  const bool cocomm = g.is_cocommutative();
  const bool comm = g.is_commutative();

  if (cocomm) {
    // Group-like elements (all blocks are 1-dimensional) form a basis; the
    // idempotent states are exactly the subgroup indicators.
    std::vector<Vec> glikes;
    for (const auto& b : table.blocks) {
      if (b.n != 1) throw InternalConsistencyError("cocommutative input has a block of dim > 1");
      glikes.push_back(b.coeff[0]);
    }
    Mat basis(d, d);
    for (int s = 0; s < d; ++s) basis.col(s) = glikes[s];
    auto match = [&](const Vec& z) {
      for (int s = 0; s < d; ++s)
        if ((z - glikes[s]).norm() <= 1e-6 * (1.0 + z.norm())) return s;
      return -1;
    };
    std::vector<std::vector<int>> mtable(d, std::vector<int>(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const int c = match(g.multiply(glikes[a], glikes[b]));
        if (c < 0)
          throw InternalConsistencyError("group-like elements are not closed under product");
        mtable[a][b] = c;
      }
    const GroupTable recovered(mtable);
    for (const auto& sub : recovered.subgroups()) {
      Vec ind = Vec::Zero(d);
      for (int s : sub) ind(s) = 1.0;
      const Vec omega = solve_linear(Mat(basis.transpose()), Mat(ind), tol).solution.col(0);
      if (!offer(omega))
        throw InternalConsistencyError("subgroup indicator failed the idempotent check");
    }
    out.exhaustive = true;
  } else if (comm) {
    const RecoveredGroup pts = recover_points(g, tol, rng);
    const GroupTable recovered(pts.table);
    for (const auto& sub : recovered.subgroups()) {
      Vec omega = Vec::Zero(d);
      for (int s : sub) omega += pts.characters[s];
      omega /= static_cast<double>(sub.size());
      if (!offer(omega))
        throw InternalConsistencyError("subgroup Haar state failed the idempotent check");
    }
    out.exhaustive = true;
  } else {
    // Cesaro refinement: the convolution-power averages of a state converge
    // to the eigenvalue-one spectral projection applied to it, which is an
    // idempotent state whenever the limit exists; verification filters the rest.
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < random_starts; ++trial) {
      Vec a(d);
      for (int i = 0; i < d; ++i) a(i) = cplx(gauss(rng), gauss(rng));
      // Vector state omega0(y) = h(a^* y a) / h(a^* a).
      Vec w(d);
      for (int k = 0; k < d; ++k) {
        Vec ek = Vec::Zero(d);
        ek(k) = 1.0;
        w(k) = g.haar_of(g.multiply(g.multiply(g.star(a), ek), a));
      }
      const cplx norm = pairing(w, g.unit());
      if (std::abs(norm) < 1e-10) continue;
      w /= norm;
      Eigen::ComplexEigenSolver<Mat> es(convolution_left_op(g, w));
      if (es.info() != Eigen::Success) continue;
      Vec sel = Vec::Zero(d);
      for (int i = 0; i < d; ++i)
        sel(i) = (std::abs(es.eigenvalues()(i) - 1.0) < 1e-6) ? 1.0 : 0.0;
      Eigen::FullPivLU<Mat> lu(es.eigenvectors());
      if (!lu.isInvertible()) continue;
      const Vec cand =
          es.eigenvectors() * sel.asDiagonal() * lu.solve(Mat::Identity(d, d)) * w;
      offer(cand);
    }
    out.exhaustive = false;
  }

  // Deterministic presentation order.
  auto snap = [](double x) { return std::llround(x * 1e6); };
  std::sort(found.begin(), found.end(), [&](const Vec& a, const Vec& b) {
    for (int k = 0; k < a.size(); ++k) {
      if (snap(a(k).real()) != snap(b(k).real()))
        return snap(a(k).real()) < snap(b(k).real());
      if (snap(a(k).imag()) != snap(b(k).imag()))
        return snap(a(k).imag()) < snap(b(k).imag());
    }
    return false;
  });
  for (Vec& v : found)
    out.states.push_back(IdempotentState{Functional(g, std::move(v))});
  return out;
}

}  // namespace qg
