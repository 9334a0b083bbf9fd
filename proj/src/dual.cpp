#include "qg/dual.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace qg {

Functional::Functional(FiniteQuantumGroup g, Vec v)
    : owner(std::move(g)), covec(std::move(v)) {
  if (covec.size() != owner.dim())
    throw AmbientMismatchError("functional covector has wrong length");
}

cplx Functional::operator()(const Element& x) const {
  if (!owner.same_object(x.owner))
    throw AmbientMismatchError("functional applied to element of another group");
  return pairing(covec, x.coeffs);
}

Functional convolve(const Functional& f, const Functional& g) {
  if (!f.owner.same_object(g.owner))
    throw AmbientMismatchError("convolve: functionals belong to different groups");
  return Functional(f.owner, convolution_left_op(f.owner, f.covec) * g.covec);
}

Functional sharp(const Functional& f) {
  const auto& G = f.owner;
  const int n = G.dim();
  Vec out(n);
  for (int k = 0; k < n; ++k) {
    const Vec y = G.star(G.antipode_matrix().col(k));  // S(b_k)^*
    out(k) = std::conj(pairing(f.covec, y));
  }
  return Functional(G, std::move(out));
}

Functional hat(const Element& x) {
  const auto& G = x.owner;
  return Functional(G, G.left_mult_op(x.coeffs).transpose() * G.haar());
}

Functional counit_functional(const FiniteQuantumGroup& g) {
  return Functional(g, g.counit());
}

Functional haar_functional(const FiniteQuantumGroup& g) {
  return Functional(g, g.haar());
}

Functional dual_basis_functional(const FiniteQuantumGroup& g, int k) {
  Vec v = Vec::Zero(g.dim());
  v(k) = 1.0;
  return Functional(g, std::move(v));
}

Mat convolution_left_op(const FiniteQuantumGroup& g, const Vec& f) {
  const int n = g.dim();
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int i = 0; i < n; ++i) acc += f(i) * g.coproduct(k, i, j);
      out(k, j) = acc;
    }
  return out;
}

Mat convolution_right_op(const FiniteQuantumGroup& g, const Vec& f) {
  const int n = g.dim();
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) acc += g.coproduct(k, i, j) * f(j);
      out(k, i) = acc;
    }
  return out;
}

Vec compose_with_antipode(const FiniteQuantumGroup& g, const Vec& f) {
  // (f circ S)(b_k) = f(S b_k).
  return g.antipode_matrix().transpose() * f;
}

Mat IrrBlock::extract(const Vec& covec) const {
  Vec flat = extract_tensor * covec;
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = flat(i * n + j);
  return out;
}

Mat IrrBlock::extract(const Functional& f) const { return extract(f.covec); }

std::vector<int> IrrTable::block_dims() const {
  std::vector<int> dims;
  dims.reserve(blocks.size());
  for (const auto& b : blocks) dims.push_back(b.n);
  return dims;
}

namespace {

struct ConvAlgebra {
  const FiniteQuantumGroup& G;
  int dim;
  Vec eps;  // unit of convolution

  explicit ConvAlgebra(const FiniteQuantumGroup& g)
      : G(g), dim(g.dim()), eps(g.counit()) {}

  Vec conv(const Vec& f, const Vec& g) const {
    return convolution_left_op(G, f) * g;
  }
  Vec sharp(const Vec& f) const {
    return qg::sharp(Functional(G, f)).covec;
  }
};

Vec random_complex_vec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return v;
}

/// Distinct eigenvalue clusters of the (diagonalizable, real-spectrum)
/// operator, sorted ascending by real part. Returns cluster means.
std::vector<double> eigenvalue_clusters(const Mat& op, double gap) {
  Eigen::ComplexEigenSolver<Mat> es(op);
  if (es.info() != Eigen::Success)
    throw InternalConsistencyError("eigensolver failed on convolution operator");
  std::vector<double> vals(op.rows());
  for (int i = 0; i < op.rows(); ++i) vals[i] = es.eigenvalues()(i).real();
  std::sort(vals.begin(), vals.end());
  std::vector<double> clusters;
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i;
    double sum = 0.0;
    while (j < vals.size() && vals[j] - vals[i] <= gap) sum += vals[j++];
    clusters.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  return clusters;
}

/// c with w = c * q, via hermitian projection; throws if w is not parallel.
cplx parallel_scalar(const Vec& w, const Vec& q, double eps, const char* what) {
  const double qq = q.squaredNorm();
  if (qq <= 0.0) throw InternalConsistencyError(std::string(what) + ": zero reference");
  const cplx c = q.dot(w) / qq;
  const double resid = (w - c * q).norm() / (1.0 + w.norm());
  if (resid > eps)
    throw InternalConsistencyError(std::string(what) +
                                   ": vector not parallel to reference, residual " +
                                   std::to_string(resid));
  return c;
}

}  // namespace

IrrTable wedderburn(const FiniteQuantumGroup& g, const Tolerance& tol,
                    std::uint64_t seed) {
  const int d = g.dim();
  ConvAlgebra A(g);

  // Center of the convolution algebra: f with f*e_j = e_j*f for all j.
  Mat central_sys(d * d, d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        central_sys(k * d + j, i) = g.coproduct(k, i, j) - g.coproduct(k, j, i);
  const Subspace center = kernel(central_sys, tol);
  const int m = center.dim();
  if (m <= 0) throw InternalConsistencyError("convolution algebra has empty center");

  // Split the center with a seeded random self-adjoint central element.
  const int max_attempts = 16;
  std::vector<Vec> idempotents;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  for (int attempt = 0; attempt < max_attempts && idempotents.empty(); ++attempt) {
    Vec z0 = center.basis * random_complex_vec(rng, m);
    Vec z = z0 + A.sharp(z0);
    if (z.norm() < 1e-8) continue;
    z /= z.norm();
    const Mat op = convolution_left_op(g, z);
    const double gap = 1e-6 * (1.0 + op.norm());
    const std::vector<double> clusters = eigenvalue_clusters(op, gap);
    if (static_cast<int>(clusters.size()) != m) continue;  // collision; retry

    std::vector<Vec> ps;
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      Vec p = A.eps;
      for (int b = 0; b < m; ++b) {
        if (b == a) continue;
        p = A.conv(p, z - clusters[b] * A.eps) / (clusters[a] - clusters[b]);
      }
      if ((A.conv(p, p) - p).norm() > tol.equality_eps * (1.0 + p.squaredNorm()))
        ok = false;
      ps.push_back(std::move(p));
    }
    if (!ok) continue;
    Vec total = Vec::Zero(d);
    for (const Vec& p : ps) total += p;
    if ((total - A.eps).norm() > tol.equality_eps * (1.0 + total.norm())) continue;
    idempotents = std::move(ps);
  }
  if (idempotents.empty())
    throw InternalConsistencyError(
        "degenerate central element splitting persisted across retries");

  IrrTable table;
  table.group = g;
  table.seed = seed;

  for (const Vec& p : idempotents) {
    // Block subspace p * L^1.
    const Subspace block = column_space(convolution_left_op(g, p), tol);
    const int bdim = block.dim();
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(bdim))));
    if (n * n != bdim)
      throw InternalConsistencyError("block dimension " + std::to_string(bdim) +
                                     " is not a perfect square");

    IrrBlock ib;
    ib.n = n;
    ib.central_idempotent = p;

    // Matrix-unit system e_{ij} = v_i * v_j^# from a minimal projection.
    std::vector<Vec> units(static_cast<size_t>(n) * n);
    if (n == 1) {
      units[0] = p;
    } else {
      Vec q;  // minimal projection
      bool found = false;
      for (int attempt = 0; attempt < max_attempts && !found; ++attempt) {
        Vec y0 = block.basis * random_complex_vec(rng, bdim);
        Vec y = y0 + A.sharp(y0);
        y = A.conv(p, y);  // keep strictly inside the block
        if (y.norm() < 1e-8) continue;
        y /= y.norm();
        const Mat rest = block.basis.adjoint() * convolution_left_op(g, y) * block.basis;
        const double gap = 1e-6 * (1.0 + rest.norm());
        const std::vector<double> mus = eigenvalue_clusters(rest, gap);
        if (static_cast<int>(mus.size()) != n) continue;
        Vec cand = p;
        for (int b = 1; b < n; ++b)
          cand = A.conv(cand, y - mus[b] * p) / (mus[0] - mus[b]);
        if ((A.conv(cand, cand) - cand).norm() >
            tol.equality_eps * (1.0 + cand.squaredNorm()))
          continue;
        if ((A.sharp(cand) - cand).norm() > tol.equality_eps * (1.0 + cand.norm()))
          continue;
        q = std::move(cand);
        found = true;
      }
      if (!found)
        throw InternalConsistencyError(
            "could not isolate a minimal projection in a block");

      // Orthonormalize a basis of (block * q) under the q-valued inner
      // product <v,w> q = v^# * w.
      const Subspace colspace =
          column_space(convolution_right_op(g, q) * block.basis, tol);
      if (colspace.dim() != n)
        throw InternalConsistencyError("minimal projection has wrong rank");
      std::vector<Vec> v;
      v.push_back(q);
      for (int c = 0; c < colspace.dim() && static_cast<int>(v.size()) < n; ++c) {
        Vec w = colspace.basis.col(c);
        for (const Vec& vi : v) {
          const cplx inner =
              parallel_scalar(A.conv(A.sharp(vi), w), q, tol.equality_eps, "gram");
          w -= inner * vi;
        }
        const cplx norm2 =
            parallel_scalar(A.conv(A.sharp(w), w), q, tol.equality_eps, "gram");
        if (norm2.real() <= 1e-8 || std::abs(norm2.imag()) > tol.equality_eps) continue;
        v.push_back(w / std::sqrt(norm2.real()));
      }
      if (static_cast<int>(v.size()) != n)
        throw InternalConsistencyError("matrix-unit orthonormalization came up short");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) units[i * n + j] = A.conv(v[i], A.sharp(v[j]));
    }
    ib.units = std::move(units);

    // extract(f)_{ij} is the scalar with e_{1i} * f * e_{j1} = c e_{11}.
    ib.extract_tensor = Mat(n * n, d);
    const Vec& e11 = ib.units[0];
    for (int k = 0; k < d; ++k) {
      Vec ek = Vec::Zero(d);
      ek(k) = 1.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const Vec w = A.conv(A.conv(ib.units[i], ek), ib.units[j * n]);
          ib.extract_tensor(i * n + j, k) =
              parallel_scalar(w, e11, tol.equality_eps, "extract");
        }
    }

    // u^pi_{ij} from the perfect pairing <e_k, u_{ij}> = pi(e_k)_{ij}.
    ib.coeff.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        ib.coeff[i * n + j] = ib.extract_tensor.row(i * n + j).transpose();

    ib.fingerprint = Vec::Zero(d);
    for (int i = 0; i < n; ++i)
      ib.fingerprint += ib.extract_tensor.row(i * n + i).transpose();

    table.blocks.push_back(std::move(ib));
  }

  // Canonical order: n ascending, then snapped-lexicographic fingerprint.
  auto snap = [](double x) { return std::llround(x * 1e6); };
  std::sort(table.blocks.begin(), table.blocks.end(),
            [&](const IrrBlock& a, const IrrBlock& b) {
              if (a.n != b.n) return a.n < b.n;
              for (int k = 0; k < a.fingerprint.size(); ++k) {
                const auto ar = snap(a.fingerprint(k).real()),
                           br = snap(b.fingerprint(k).real());
                if (ar != br) return ar < br;
                const auto ai = snap(a.fingerprint(k).imag()),
                           bi = snap(b.fingerprint(k).imag());
                if (ai != bi) return ai < bi;
              }
              return false;
            });

  // --- Verification of the IrrBlock/IrrTable invariants. ---
  int total = 0;
  for (const auto& b : table.blocks) total += b.n * b.n;
  if (total != d)
    throw InternalConsistencyError("sum of squared block dimensions " +
                                   std::to_string(total) + " != dim " +
                                   std::to_string(d));

  // Joint Fourier map is a bijection.
  {
    Mat joint(d, d);
    int row = 0;
    for (const auto& b : table.blocks) {
      joint.middleRows(row, b.n * b.n) = b.extract_tensor;
      row += b.n * b.n;
    }
    if (rank_of(joint, tol) != d)
      throw InternalConsistencyError("joint block extraction is not a bijection");
  }

  auto check = [&](double resid, double scale, const char* what) {
    if (resid > tol.equality_eps * scale)
      throw InternalConsistencyError(std::string(what) + " residual " +
                                     std::to_string(resid));
  };

  // *-homomorphism property on random pairs, and the pairing identity.
  {
    std::mt19937_64 vrng(seed + 1);
    for (int trial = 0; trial < 16; ++trial) {
      const Vec f = random_complex_vec(vrng, d);
      const Vec h = random_complex_vec(vrng, d);
      const Vec fh = A.conv(f, h);
      const Vec fs = A.sharp(f);
      for (const auto& b : table.blocks) {
        const Mat pf = b.extract(f), ph = b.extract(h);
        check((b.extract(fh) - pf * ph).norm(), 1.0 + pf.norm() * ph.norm(),
              "extract multiplicativity");
        check((b.extract(fs) - pf.adjoint()).norm(), 1.0 + pf.norm(),
              "extract star-compatibility");
      }
    }
  }

  // Matrix-unit relations, corepresentation identity, and unitarity.
  for (const auto& b : table.blocks) {
    const int n = b.n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        check((A.sharp(b.units[i * n + j]) - b.units[j * n + i]).norm(), 1.0,
              "matrix-unit sharp symmetry");
        const Mat img = b.extract(b.units[i * n + j]);
        Mat target = Mat::Zero(n, n);
        target(i, j) = 1.0;
        check((img - target).norm(), 1.0, "matrix-unit extraction");

        // Corepresentation identity Delta(u_ij) = sum_t u_it (x) u_tj.
        Mat rhs = Mat::Zero(d, d);
        for (int t = 0; t < n; ++t)
          rhs += b.coeff[i * n + t] * b.coeff[t * n + j].transpose();
        check((g.coproduct_of(b.coeff[i * n + j]) - rhs).norm(), 1.0 + rhs.norm(),
              "corepresentation identity");
      }

    double unit_resid = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec acc = Vec::Zero(d);
        for (int t = 0; t < n; ++t)
          acc += g.multiply(g.star(b.coeff[t * n + i]), b.coeff[t * n + j]);
        const Vec target = (i == j) ? Vec(g.unit()) : Vec(Vec::Zero(d));
        unit_resid = std::max(unit_resid, (acc - target).norm());
      }
    check(unit_resid, 1.0 + std::sqrt(static_cast<double>(n)), "corepresentation unitarity");
  }

  // F fit from the matrix-unit formula (prefactor tr F; see irr_report).
  for (auto& b : table.blocks) {
    const int n = b.n;
    RVec wbar = RVec::Zero(n);
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const Vec hv =
            hat(Element(g, g.star(b.coeff[i * n + j]))).covec;
        acc += parallel_scalar(hv, b.units[i * n + j], tol.equality_eps,
                               "F fit parallelism");
      }
      const cplx mean = acc / static_cast<double>(n);
      if (std::abs(mean.imag()) > tol.equality_eps || mean.real() <= 0.0)
        throw InternalConsistencyError("F fit produced a non-positive weight");
      wbar(i) = mean.real();
    }
    check(std::abs(wbar.sum() - 1.0), 1.0, "F fit weight normalization");
    double inv_sum = 0.0;
    for (int i = 0; i < n; ++i) inv_sum += 1.0 / wbar(i);
    const double trF = std::sqrt(inv_sum);
    b.F = wbar * trF;
    double trFinv = 0.0;
    for (int i = 0; i < n; ++i) trFinv += 1.0 / b.F(i);
    check(std::abs(b.F.sum() - trFinv), 1.0 + b.F.sum(), "F normalization tr F = tr F^-1");
  }

  return table;
}

std::vector<Mat> fourier(const IrrTable& table, const Functional& f) {
  if (!table.group.same_object(f.owner))
    throw AmbientMismatchError("fourier: functional belongs to another group");
  std::vector<Mat> out;
  out.reserve(table.blocks.size());
  for (const auto& b : table.blocks) out.push_back(b.extract(f.covec));
  return out;
}

AxiomReport matrix_unit_check(const IrrBlock& block, const IrrTable& table,
                              const Tolerance& tol) {
  const auto& g = table.group;
  const int n = block.n;
  AxiomReport rep;
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec reconstructed = Vec::Zero(g.dim());
      const double trF = block.F.sum();
      for (int k = 0; k < n; ++k) {
        if (k != i) continue;  // F is diagonal
        const Vec hv = hat(Element(g, g.star(block.coeff[k * n + j]))).covec;
        reconstructed += trF * (1.0 / block.F(i)) * hv;
      }
      for (const auto& other : table.blocks) {
        const Mat img = other.extract(reconstructed);
        Mat target = Mat::Zero(other.n, other.n);
        if (&other == &block) target(i, j) = 1.0;
        worst = std::max(worst, (img - target).norm());
      }
    }
  rep.checks.push_back(
      {"matrix-unit-formula", worst, worst <= tol.equality_eps * (1.0 + n)});
  return rep;
}

AxiomReport convolution_formula_check(const IrrTable& table, const Functional& f,
                                      const Element& x, const Tolerance& tol) {
  const auto& g = table.group;
  if (!g.same_object(f.owner) || !g.same_object(x.owner))
    throw AmbientMismatchError("convolution_formula_check: owner mismatch");
  AxiomReport rep;
  const Vec fx = g.act_left(f.covec) * x.coeffs;  // f*x = (id (x) f) Delta(x)
  const Functional hat_fx = hat(Element(g, fx));
  const Functional hat_x = hat(x);
  const Vec f_S = compose_with_antipode(g, f.covec);
  int index = 0;
  for (const auto& b : table.blocks) {
    // pi(f circ S)_{ij} = f(S(u_ij)).
    Mat pfs(b.n, b.n);
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j)
        pfs(i, j) = pairing(f_S, b.coeff[i * b.n + j]);
    const Mat lhs = b.extract(hat_fx.covec);
    const Mat rhs = b.extract(hat_x.covec) * pfs;
    const double resid = (lhs - rhs).norm();
    rep.checks.push_back({"convolution-formula-block-" + std::to_string(index),
                          resid,
                          resid <= tol.equality_eps * (1.0 + rhs.norm() + lhs.norm())});
    ++index;
  }
  return rep;
}

std::string irr_report(const IrrTable& table) {
  std::ostringstream os;
  os.precision(12);
  os << "IRRTABLE " << table.group.name() << "\n";
  os << "DIM " << table.dim() << "\n";
  os << "SEED " << table.seed << "\n";
  os << "CONVENTION matrix-unit e_ij = tr(F) sum_k inv(F)_ik hat(star(u_kj))\n";
  os << "BLOCKS " << table.blocks.size() << "\n";
  int index = 0;
  for (const auto& b : table.blocks) {
    os << "BLOCK " << index++ << " N " << b.n << "\n";
    os << "  F";
    for (int i = 0; i < b.F.size(); ++i) os << " " << b.F(i);
    os << "\n  FINGERPRINT";
    for (int k = 0; k < b.fingerprint.size(); ++k)
      os << " " << b.fingerprint(k).real() << " " << b.fingerprint(k).imag();
    os << "\n";
    for (int k = 0; k < table.dim(); ++k) {
      Vec ek = Vec::Zero(table.dim());
      ek(k) = 1.0;
      const Mat img = b.extract(ek);
      for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
          if (std::abs(img(i, j)) > 1e-12)
            os << "  EXTRACT " << k << " " << i << " " << j << " " << img(i, j).real()
               << " " << img(i, j).imag() << "\n";
    }
  }
  return os.str();
}

}  // namespace qg
