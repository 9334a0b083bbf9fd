#include "qg/ideals.hpp"

#include <cmath>
#include <sstream>

namespace qg {

std::vector<int> Hull::dims() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(p.dim());
  return out;
}

double left_closure_residual(const FiniteQuantumGroup& g, const Subspace& space) {
  double worst = 0.0;
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = Vec::Zero(g.dim());
    ei(i) = 1.0;
    const Mat op = convolution_left_op(g, ei);
    for (int c = 0; c < space.dim(); ++c)
      worst = std::max(worst, containment_residual(space, op * space.basis.col(c)));
  }
  return worst;
}

double right_closure_residual(const FiniteQuantumGroup& g, const Subspace& space) {
  double worst = 0.0;
  for (int i = 0; i < g.dim(); ++i) {
    Vec ei = Vec::Zero(g.dim());
    ei(i) = 1.0;
    const Mat op = convolution_right_op(g, ei);
    for (int c = 0; c < space.dim(); ++c)
      worst = std::max(worst, containment_residual(space, op * space.basis.col(c)));
  }
  return worst;
}

IdealSubspace make_left_ideal(const FiniteQuantumGroup& g, Subspace space,
                              const Tolerance& tol) {
  const double resid = left_closure_residual(g, space);
  if (resid > tol.equality_eps)
    throw InternalConsistencyError("subspace is not a left ideal, closure residual " +
                                   std::to_string(resid));
  return IdealSubspace{g, std::move(space)};
}

IdealSubspace left_ideal_from_generators(const FiniteQuantumGroup& g,
                                         const std::vector<Functional>& gens,
                                         const Tolerance& tol) {
  if (gens.empty()) throw ContractViolationError("generator list must be non-empty");
  const int d = g.dim();
  Mat seed(d, static_cast<int>(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) {
    if (!gens[c].owner.same_object(g))
      throw AmbientMismatchError("generator belongs to another group");
    seed.col(static_cast<int>(c)) = gens[c].covec;
  }
  Subspace space = span_of(seed, tol);
  // Iterate span{space, e_i * space} until the dimension stabilizes. One pass
  // suffices in a unital algebra; the loop guards against tolerance effects.
  for (int round = 0; round < d + 1; ++round) {
    Mat grown(d, space.dim() * (d + 1));
    grown.leftCols(space.dim()) = space.basis;
    int col = space.dim();
    for (int i = 0; i < d; ++i) {
      Vec ei = Vec::Zero(d);
      ei(i) = 1.0;
      grown.middleCols(col, space.dim()) = convolution_left_op(g, ei) * space.basis;
      col += space.dim();
    }
    Subspace next = span_of(grown, tol);
    const bool stable = next.dim() == space.dim();
    space = std::move(next);
    if (stable) break;
  }
  return make_left_ideal(g, std::move(space), tol);
}

Hull hull_of(const IrrTable& table, const IdealSubspace& ideal, const Tolerance& tol) {
  if (!table.group.same_object(ideal.owner))
    throw AmbientMismatchError("hull_of: ideal belongs to another group");
  Hull hull;
  for (const auto& b : table.blocks) {
    if (ideal.space.dim() == 0) {
      hull.parts.push_back(Subspace::full(b.n));
      continue;
    }
    Mat stacked(b.n * ideal.space.dim(), b.n);
    for (int c = 0; c < ideal.space.dim(); ++c)
      stacked.middleRows(c * b.n, b.n) = b.extract(Vec(ideal.space.basis.col(c)));
    hull.parts.push_back(kernel(stacked, tol));
  }
  return hull;
}

IdealSubspace ideal_I(const IrrTable& table, const Hull& hull, const Tolerance& tol) {
  const auto& g = table.group;
  const int d = g.dim();
  if (hull.parts.size() != table.blocks.size())
    throw AmbientMismatchError("hull does not match the table's block count");
  int rows = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b) {
    if (hull.parts[b].ambient != table.blocks[b].n)
      throw AmbientMismatchError("hull part has wrong ambient dimension");
    rows += table.blocks[b].n * hull.parts[b].dim();
  }
  if (rows == 0) return make_left_ideal(g, Subspace::full(d), tol);
  Mat sys(rows, d);
  int row = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b) {
    const auto& block = table.blocks[b];
    const int n = block.n;
    for (int c = 0; c < hull.parts[b].dim(); ++c) {
      const Vec v = hull.parts[b].basis.col(c);
      // (pi(f) v)_i = sum_j v_j extract_tensor.row(i*n+j) . f
      for (int i = 0; i < n; ++i) {
        Eigen::RowVectorXcd r = Eigen::RowVectorXcd::Zero(d);
        for (int j = 0; j < n; ++j) r += v(j) * block.extract_tensor.row(i * n + j);
        sys.row(row++) = r;
      }
    }
  }
  return make_left_ideal(g, kernel(sys, tol), tol);
}

SynthesisReport verify_synthesis(const IrrTable& table, const IdealSubspace& ideal,
                                 const Tolerance& tol) {
  const Hull hull = hull_of(table, ideal, tol);
  const IdealSubspace back = ideal_I(table, hull, tol);
  SynthesisReport rep;
  rep.dim_ideal = ideal.space.dim();
  rep.dim_reconstructed = back.space.dim();
  rep.forward_residual = subspace_containment_residual(back.space, ideal.space);
  rep.backward_residual = subspace_containment_residual(ideal.space, back.space);
  rep.ok = rep.dim_ideal == rep.dim_reconstructed &&
           rep.forward_residual <= tol.equality_eps &&
           rep.backward_residual <= tol.equality_eps;
  return rep;
}

Subspace annihilator_in_elements(const Subspace& covectors, const Tolerance& tol) {
  if (covectors.dim() == 0) return Subspace::full(covectors.ambient);
  return kernel(Mat(covectors.basis.transpose()), tol);
}

Subspace preannihilator_of_elements(const Subspace& elements, const Tolerance& tol) {
  if (elements.dim() == 0) return Subspace::full(elements.ambient);
  return kernel(Mat(elements.basis.transpose()), tol);
}

AnnihilatorReport annihilator_dualities(const IrrTable& table, const Hull& hull,
                                        const Tolerance& tol) {
  const auto& g = table.group;
  const int d = g.dim();
  const IdealSubspace ideal = ideal_I(table, hull, tol);

  AnnihilatorReport rep;
  rep.annihilator = annihilator_in_elements(ideal.space, tol);

  // span{u^pi_{xi,eta}} = span{sum_j eta_j u^pi_{i j} : i, eta in ONB(E_pi)}.
  int cols = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b)
    cols += table.blocks[b].n * hull.parts[b].dim();
  Mat span = Mat::Zero(d, std::max(cols, 1));
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
  rep.coefficient_span = (cols == 0) ? Subspace::zero(d) : span_of(span, tol);

  if (ideal.space.dim() == 0) {
    rep.kernel_intersection = Subspace::full(d);
  } else {
    Mat stacked(d * ideal.space.dim(), d);
    for (int c = 0; c < ideal.space.dim(); ++c)
      stacked.middleRows(c * d, d) = g.act_left(Vec(ideal.space.basis.col(c)));
    rep.kernel_intersection = kernel(stacked, tol);
  }

  rep.expected_dim = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b)
    rep.expected_dim += table.blocks[b].n * hull.parts[b].dim();

  rep.resid_ab = subspace_distance(rep.annihilator, rep.coefficient_span);
  rep.resid_ac = subspace_distance(rep.annihilator, rep.kernel_intersection);
  rep.pass = rep.annihilator.dim() == rep.expected_dim &&
             rep.coefficient_span.dim() == rep.expected_dim &&
             rep.kernel_intersection.dim() == rep.expected_dim &&
             rep.resid_ab <= tol.equality_eps && rep.resid_ac <= tol.equality_eps;
  return rep;
}

bool two_sided_hull_check(const IrrTable& table, const IdealSubspace& ideal,
                          const Tolerance& tol) {
  const double rresid = right_closure_residual(table.group, ideal.space);
  if (rresid > tol.equality_eps)
    throw NotTwoSidedError("ideal is not closed under right convolution, residual " +
                           std::to_string(rresid));
  const Hull hull = hull_of(table, ideal, tol);
  for (size_t b = 0; b < hull.parts.size(); ++b) {
    const int dim = hull.parts[b].dim();
    if (dim != 0 && dim != table.blocks[b].n) return false;
  }
  return true;
}

std::string hull_report(const IrrTable& table, const Hull& hull) {
  std::ostringstream os;
  os.precision(12);
  os << "HULL blocks " << hull.parts.size() << "\n";
  for (size_t b = 0; b < hull.parts.size(); ++b) {
    os << "BLOCK " << b << " N " << table.blocks[b].n << " DIM "
       << hull.parts[b].dim() << "\n";
    const Mat& basis = hull.parts[b].basis;
    for (int c = 0; c < basis.cols(); ++c) {
      os << "  VEC";
      for (int r = 0; r < basis.rows(); ++r)
        os << " " << basis(r, c).real() << " " << basis(r, c).imag();
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace qg
