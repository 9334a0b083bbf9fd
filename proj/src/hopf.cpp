#include "qg/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qg {

bool AxiomReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AxiomCheck& c) { return c.pass; });
}

double AxiomReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.pass ? "  ok  " : " FAIL ") << c.name << "  residual=" << c.residual
       << "\n";
  return os.str();
}

AxiomFailureError::AxiomFailureError(AxiomReport r)
    : std::runtime_error("Hopf axiom verification failed:\n" + r.summary()),
      report(std::move(r)) {}

struct FiniteQuantumGroup::Data {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<cplx> mult;
  std::vector<cplx> coproduct;
  Mat star;
  Mat antipode;
  Vec counit;
  Vec haar;
  Vec unit;
  std::vector<Mat> lmul;  // left multiplication by basis elements
  std::vector<Mat> rmul;  // right multiplication
  Mat gram;

  cplx m(int i, int j, int k) const { return mult[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  cplx d(int k, int i, int j) const { return coproduct[(static_cast<size_t>(k) * dim + i) * dim + j]; }
};

namespace {

void check_shape(const FiniteQuantumGroup::Tensors& t) {
  const size_t d = static_cast<size_t>(t.dim);
  if (t.dim <= 0) throw MalformedDefinitionError("dim must be positive");
  if (t.labels.size() != d)
    throw MalformedDefinitionError("basis label count does not match dim");
  if (t.mult.size() != d * d * d)
    throw MalformedDefinitionError("MULT tensor has wrong size");
  if (t.coproduct.size() != d * d * d)
    throw MalformedDefinitionError("COPRODUCT tensor has wrong size");
  if (t.star.rows() != t.dim || t.star.cols() != t.dim)
    throw MalformedDefinitionError("STAR matrix has wrong shape");
  if (t.antipode.rows() != t.dim || t.antipode.cols() != t.dim)
    throw MalformedDefinitionError("ANTIPODE matrix has wrong shape");
  if (t.counit.size() != t.dim)
    throw MalformedDefinitionError("COUNIT covector has wrong length");
  if (t.haar.size() != t.dim)
    throw MalformedDefinitionError("HAAR covector has wrong length");
  for (const cplx& z : t.mult)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw MalformedDefinitionError("MULT tensor contains NaN or Inf");
  for (const cplx& z : t.coproduct)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw MalformedDefinitionError("COPRODUCT tensor contains NaN or Inf");
  require_finite(t.star, "STAR matrix");
  require_finite(t.antipode, "ANTIPODE matrix");
  require_finite(t.counit, "COUNIT covector");
  require_finite(t.haar, "HAAR covector");
}

}  // namespace

FiniteQuantumGroup FiniteQuantumGroup::from_tensors(Tensors t, const Tolerance& tol) {
  check_shape(t);
  auto data = std::make_shared<Data>();
  data->name = t.name;
  data->dim = t.dim;
  data->labels = std::move(t.labels);
  data->mult = std::move(t.mult);
  data->coproduct = std::move(t.coproduct);
  data->star = std::move(t.star);
  data->antipode = std::move(t.antipode);
  data->counit = std::move(t.counit);
  data->haar = std::move(t.haar);

  const int n = data->dim;
  data->lmul.resize(n);
  data->rmul.resize(n);
  for (int i = 0; i < n; ++i) {
    Mat L = Mat::Zero(n, n), R = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        L(k, j) = data->m(i, j, k);  // b_i b_j
        R(k, j) = data->m(j, i, k);  // b_j b_i
      }
    data->lmul[i] = std::move(L);
    data->rmul[i] = std::move(R);
  }

  // Derive the two-sided unit: sum_i u_i b_i b_j = b_j = sum_i u_i b_j b_i.
  Mat sys(2 * n * n, n);
  Mat rhs = Mat::Zero(2 * n * n, 1);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        sys(j * n + k, i) = data->m(i, j, k);
        sys(n * n + j * n + k, i) = data->m(j, i, k);
      }
      rhs(j * n + k, 0) = (j == k) ? 1.0 : 0.0;
      rhs(n * n + j * n + k, 0) = (j == k) ? 1.0 : 0.0;
    }
  try {
    data->unit = solve_linear(sys, rhs, tol).solution.col(0);
  } catch (const NoSolutionError&) {
    throw MalformedDefinitionError("MULT tensor admits no two-sided unit");
  }

  // Haar Gram matrix [h(b_i^* b_j)].
  Mat gram(n, n);
  for (int i = 0; i < n; ++i) {
    const Vec bi_star = data->star.col(i);  // coefficients of (b_i)^*
    for (int j = 0; j < n; ++j) {
      Vec prod = Vec::Zero(n);
      for (int p = 0; p < n; ++p) {
        if (bi_star(p) == cplx(0.0)) continue;
        prod += bi_star(p) * data->lmul[p].col(j);
      }
      gram(i, j) = pairing(data->haar, prod);
    }
  }
  data->gram = std::move(gram);

  FiniteQuantumGroup g;
  g.d_ = std::move(data);
  return g;
}

int FiniteQuantumGroup::dim() const { return d_->dim; }
const std::string& FiniteQuantumGroup::name() const { return d_->name; }
const std::vector<std::string>& FiniteQuantumGroup::labels() const { return d_->labels; }
cplx FiniteQuantumGroup::mult(int i, int j, int k) const { return d_->m(i, j, k); }
cplx FiniteQuantumGroup::coproduct(int k, int i, int j) const { return d_->d(k, i, j); }
const Vec& FiniteQuantumGroup::unit() const { return d_->unit; }
const Mat& FiniteQuantumGroup::star_matrix() const { return d_->star; }
const Mat& FiniteQuantumGroup::antipode_matrix() const { return d_->antipode; }
const Vec& FiniteQuantumGroup::counit() const { return d_->counit; }
const Vec& FiniteQuantumGroup::haar() const { return d_->haar; }
const Mat& FiniteQuantumGroup::left_mult(int i) const { return d_->lmul[i]; }
const Mat& FiniteQuantumGroup::right_mult(int i) const { return d_->rmul[i]; }
const Mat& FiniteQuantumGroup::gram() const { return d_->gram; }

Mat FiniteQuantumGroup::left_mult_op(const Vec& a) const {
  Mat out = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a(i) != cplx(0.0)) out += a(i) * d_->lmul[i];
  return out;
}

Mat FiniteQuantumGroup::right_mult_op(const Vec& a) const {
  Mat out = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a(i) != cplx(0.0)) out += a(i) * d_->rmul[i];
  return out;
}

Vec FiniteQuantumGroup::multiply(const Vec& x, const Vec& y) const {
  return left_mult_op(x) * y;
}

Vec FiniteQuantumGroup::star(const Vec& x) const { return d_->star * x.conjugate(); }

Vec FiniteQuantumGroup::antipode(const Vec& x) const { return d_->antipode * x; }

Mat FiniteQuantumGroup::coproduct_of(const Vec& x) const {
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    if (x(k) == cplx(0.0)) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += x(k) * d_->d(k, i, j);
  }
  return out;
}

cplx FiniteQuantumGroup::counit_of(const Vec& x) const {
  return pairing(d_->counit, x);
}

cplx FiniteQuantumGroup::haar_of(const Vec& x) const {
  return pairing(d_->haar, x);
}

Mat FiniteQuantumGroup::tensor_square_product(const Mat& x, const Mat& y) const {
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const cplx c = x(p, q);
      if (c == cplx(0.0)) continue;
      out += c * (d_->lmul[p] * y * d_->lmul[q].transpose());
    }
  return out;
}

Mat FiniteQuantumGroup::act_left(const Vec& f) const {
  // f*x = (id (x) f) Delta(x): (K_f)_{i,k} = sum_j Delta(k,i,j) f_j.
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < n; ++j) acc += d_->d(k, i, j) * f(j);
      out(i, k) = acc;
    }
  return out;
}

Mat FiniteQuantumGroup::act_right(const Vec& f) const {
  // x*f = (f (x) id) Delta(x): (K_f)_{j,k} = sum_i Delta(k,i,j) f_i.
  const int n = dim();
  Mat out = Mat::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int i = 0; i < n; ++i) acc += d_->d(k, i, j) * f(i);
      out(j, k) = acc;
    }
  return out;
}

bool FiniteQuantumGroup::is_commutative(double eps) const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(d_->m(i, j, k) - d_->m(j, i, k)) > eps) return false;
  return true;
}

bool FiniteQuantumGroup::is_cocommutative(double eps) const {
  const int n = dim();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (std::abs(d_->d(k, i, j) - d_->d(k, j, i)) > eps) return false;
  return true;
}

Element::Element(FiniteQuantumGroup g, Vec c) : owner(std::move(g)), coeffs(std::move(c)) {
  if (coeffs.size() != owner.dim())
    throw AmbientMismatchError("element coefficient vector has wrong length");
}

namespace {
void require_same_owner(const Element& x, const Element& y) {
  if (!x.owner.same_object(y.owner))
    throw AmbientMismatchError("elements belong to different quantum groups");
}
}  // namespace

Element operator*(const Element& x, const Element& y) {
  require_same_owner(x, y);
  return Element(x.owner, x.owner.multiply(x.coeffs, y.coeffs));
}

Element operator+(const Element& x, const Element& y) {
  require_same_owner(x, y);
  return Element(x.owner, x.coeffs + y.coeffs);
}

Element operator-(const Element& x, const Element& y) {
  require_same_owner(x, y);
  return Element(x.owner, x.coeffs - y.coeffs);
}

Element operator*(cplx s, const Element& x) { return Element(x.owner, s * x.coeffs); }

Element star(const Element& x) { return Element(x.owner, x.owner.star(x.coeffs)); }

Element antipode(const Element& x) { return Element(x.owner, x.owner.antipode(x.coeffs)); }

AxiomReport verify_axioms(const FiniteQuantumGroup& G, const Tolerance& tol) {
  const int n = G.dim();
  AxiomReport rep;
  auto push = [&](const std::string& name, double residual, double scale = 1.0) {
    rep.checks.push_back({name, residual, residual <= tol.equality_eps * scale});
  };

  double tensor_scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        tensor_scale = std::max({tensor_scale, std::abs(G.mult(i, j, k)),
                                 std::abs(G.coproduct(k, i, j))});
  const double scale = tensor_scale * tensor_scale * n;

  // Associativity: (b_i b_j) b_k = b_i (b_j b_k).
  {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec pij = G.left_mult(i).col(j);
        for (int k = 0; k < n; ++k) {
          const Vec lhs = G.right_mult(k) * pij;
          const Vec rhs = G.left_mult(i) * G.left_mult(j).col(k);
          worst = std::max(worst, (lhs - rhs).norm());
        }
      }
    push("mult-associativity", worst, scale);
  }

  // Unit (derived from MULT, so this is a consistency residual).
  {
    const Mat L = G.left_mult_op(G.unit());
    const Mat R = G.right_mult_op(G.unit());
    const Mat id = Mat::Identity(n, n);
    push("unit-two-sided", std::max((L - id).norm(), (R - id).norm()), scale);
  }

  // Involution: star is antilinear with star^2 = id and (xy)^* = y^* x^*.
  {
    const Mat twice = G.star_matrix() * G.star_matrix().conjugate();
    push("star-involutive", (twice - Mat::Identity(n, n)).norm(), scale);

    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec lhs = G.star(G.left_mult(i).col(j));
        const Vec rhs = G.multiply(G.star_matrix().col(j), G.star_matrix().col(i));
        worst = std::max(worst, (lhs - rhs).norm());
      }
    push("star-antiautomorphism", worst, scale);
  }

  // Coproduct: unital *-homomorphism into the tensor square.
  {
    std::vector<Mat> D(n);
    for (int k = 0; k < n; ++k) {
      Vec ek = Vec::Zero(n);
      ek(k) = 1.0;
      D[k] = G.coproduct_of(ek);
    }
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Vec pij = G.left_mult(i).col(j);
        Mat lhs = Mat::Zero(n, n);
        for (int k = 0; k < n; ++k)
          if (pij(k) != cplx(0.0)) lhs += pij(k) * D[k];
        const Mat rhs = G.tensor_square_product(D[i], D[j]);
        worst = std::max(worst, (lhs - rhs).norm());
      }
    push("coproduct-homomorphism", worst, scale);

    push("coproduct-unital",
         (G.coproduct_of(G.unit()) - G.unit() * G.unit().transpose()).norm(), scale);

    double star_worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const Mat lhs = G.coproduct_of(G.star_matrix().col(k));
      const Mat rhs =
          G.star_matrix() * D[k].conjugate() * G.star_matrix().transpose();
      star_worst = std::max(star_worst, (lhs - rhs).norm());
    }
    push("coproduct-star", star_worst, scale);

    // Coassociativity: compare the two dim^3 expansions.
    double coassoc = 0.0;
    for (int k = 0; k < n; ++k) {
      double acc = 0.0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r) {
            cplx lhs = 0.0, rhs = 0.0;
            for (int i = 0; i < n; ++i) lhs += D[k](i, r) * D[i](p, q);
            for (int j = 0; j < n; ++j) rhs += D[k](p, j) * D[j](q, r);
            acc += std::norm(lhs - rhs);
          }
      coassoc = std::max(coassoc, std::sqrt(acc));
    }
    push("coproduct-coassociativity", coassoc, scale);

    // Counit laws.
    double counit_worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Vec ek = Vec::Zero(n);
      ek(k) = 1.0;
      counit_worst = std::max(counit_worst, (D[k] * G.counit() - ek).norm());
      counit_worst =
          std::max(counit_worst, (D[k].transpose() * G.counit() - ek).norm());
    }
    push("counit-law", counit_worst, scale);

    // Antipode laws.
    double antipode_worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Vec ek = Vec::Zero(n);
      ek(k) = 1.0;
      Vec lhs = Vec::Zero(n), rhs = Vec::Zero(n);
      for (int j = 0; j < n; ++j)
        lhs += G.right_mult(j) * (G.antipode_matrix() * D[k].col(j));
      for (int i = 0; i < n; ++i)
        rhs += G.left_mult(i) * (G.antipode_matrix() * D[k].row(i).transpose());
      const Vec target = G.counit_of(ek) * G.unit();
      antipode_worst = std::max(antipode_worst, (lhs - target).norm());
      antipode_worst = std::max(antipode_worst, (rhs - target).norm());
    }
    push("antipode-law", antipode_worst, scale);

    // Haar state: unital, faithful (positive-definite Gram), bi-invariant.
    push("haar-unital", std::abs(G.haar_of(G.unit()) - 1.0), scale);

    const Mat& gram = G.gram();
    push("haar-gram-hermitian", (gram - gram.adjoint()).norm(), scale);
    {
      Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (gram + gram.adjoint()));
      const double lo = es.eigenvalues().minCoeff();
      const double hi = es.eigenvalues().maxCoeff();
      const bool ok = hi > 0.0 && lo > tol.rank_cutoff * hi;
      rep.checks.push_back({"haar-faithful-positive", ok ? 0.0 : std::max(0.0, -lo) + tol.rank_cutoff, ok});
    }

    double inv_worst = 0.0;
    for (int k = 0; k < n; ++k) {
      Vec ek = Vec::Zero(n);
      ek(k) = 1.0;
      const cplx hk = G.haar_of(ek);
      inv_worst = std::max(inv_worst, (D[k] * G.haar() - hk * G.unit()).norm());
      inv_worst =
          std::max(inv_worst, (D[k].transpose() * G.haar() - hk * G.unit()).norm());
    }
    push("haar-bi-invariance", inv_worst, scale);
  }

  return rep;
}

FiniteQuantumGroup from_finite_group(const GroupTable& g) {
  const int n = g.order();
  FiniteQuantumGroup::Tensors t;
  t.name = "C(G)";
  t.dim = n;
  t.labels.resize(n);
  for (int s = 0; s < n; ++s) t.labels[s] = "d" + std::to_string(s);
  t.mult.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  t.coproduct.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  auto M = [&](int i, int j, int k) -> cplx& {
    return t.mult[(static_cast<size_t>(i) * n + j) * n + k];
  };
  auto D = [&](int k, int i, int j) -> cplx& {
    return t.coproduct[(static_cast<size_t>(k) * n + i) * n + j];
  };
  for (int s = 0; s < n; ++s) M(s, s, s) = 1.0;  // pointwise product of indicators
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) D(g.mul(u, v), u, v) = 1.0;
  t.star = Mat::Identity(n, n);
  t.antipode = Mat::Zero(n, n);
  for (int s = 0; s < n; ++s) t.antipode(g.inverse(s), s) = 1.0;
  t.counit = Vec::Zero(n);
  t.counit(g.identity()) = 1.0;
  t.haar = Vec::Constant(n, cplx(1.0 / n));
  return FiniteQuantumGroup::from_tensors(std::move(t));
}

FiniteQuantumGroup from_group_algebra(const GroupTable& g) {
  const int n = g.order();
  FiniteQuantumGroup::Tensors t;
  t.name = "C[G]";
  t.dim = n;
  t.labels.resize(n);
  for (int s = 0; s < n; ++s) t.labels[s] = "l" + std::to_string(s);
  t.mult.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  t.coproduct.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  auto M = [&](int i, int j, int k) -> cplx& {
    return t.mult[(static_cast<size_t>(i) * n + j) * n + k];
  };
  auto D = [&](int k, int i, int j) -> cplx& {
    return t.coproduct[(static_cast<size_t>(k) * n + i) * n + j];
  };
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) M(s, r, g.mul(s, r)) = 1.0;
  for (int s = 0; s < n; ++s) D(s, s, s) = 1.0;
  t.star = Mat::Zero(n, n);
  t.antipode = Mat::Zero(n, n);
  for (int s = 0; s < n; ++s) {
    t.star(g.inverse(s), s) = 1.0;
    t.antipode(g.inverse(s), s) = 1.0;
  }
  t.counit = Vec::Constant(n, cplx(1.0));
  t.haar = Vec::Zero(n);
  t.haar(g.identity()) = 1.0;
  return FiniteQuantumGroup::from_tensors(std::move(t));
}

FiniteQuantumGroup tensor_product(const FiniteQuantumGroup& a,
                                  const FiniteQuantumGroup& b) {
  const int na = a.dim(), nb = b.dim(), n = na * nb;
  auto idx = [nb](int i, int j) { return i * nb + j; };
  FiniteQuantumGroup::Tensors t;
  t.name = a.name() + "(x)" + b.name();
  t.dim = n;
  t.labels.resize(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      t.labels[idx(i, j)] = a.labels()[i] + "(x)" + b.labels()[j];
  t.mult.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  t.coproduct.assign(static_cast<size_t>(n) * n * n, cplx(0.0));
  auto M = [&](int i, int j, int k) -> cplx& {
    return t.mult[(static_cast<size_t>(i) * n + j) * n + k];
  };
  auto D = [&](int k, int i, int j) -> cplx& {
    return t.coproduct[(static_cast<size_t>(k) * n + i) * n + j];
  };
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          for (int k1 = 0; k1 < na; ++k1)
            for (int k2 = 0; k2 < nb; ++k2) {
              const cplx v = a.mult(i1, i2, k1) * b.mult(j1, j2, k2);
              if (v != cplx(0.0)) M(idx(i1, j1), idx(i2, j2), idx(k1, k2)) += v;
            }
  for (int k1 = 0; k1 < na; ++k1)
    for (int k2 = 0; k2 < nb; ++k2)
      for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < na; ++j1)
          for (int i2 = 0; i2 < nb; ++i2)
            for (int j2 = 0; j2 < nb; ++j2) {
              const cplx v = a.coproduct(k1, i1, j1) * b.coproduct(k2, i2, j2);
              if (v != cplx(0.0)) D(idx(k1, k2), idx(i1, i2), idx(j1, j2)) += v;
            }
  t.star = Mat::Zero(n, n);
  t.antipode = Mat::Zero(n, n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      for (int p = 0; p < na; ++p)
        for (int q = 0; q < nb; ++q) {
          t.star(idx(p, q), idx(i, j)) = a.star_matrix()(p, i) * b.star_matrix()(q, j);
          t.antipode(idx(p, q), idx(i, j)) =
              a.antipode_matrix()(p, i) * b.antipode_matrix()(q, j);
        }
  t.counit = Vec(n);
  t.haar = Vec(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      t.counit(idx(i, j)) = a.counit()(i) * b.counit()(j);
      t.haar(idx(i, j)) = a.haar()(i) * b.haar()(j);
    }
  return FiniteQuantumGroup::from_tensors(std::move(t));
}

Vec solve_haar_state(const FiniteQuantumGroup::Tensors& t, const Vec& unit,
                     const Tolerance& tol) {
  const int n = t.dim;
  auto D = [&](int k, int i, int j) {
    return t.coproduct[(static_cast<size_t>(k) * n + i) * n + j];
  };
  // Rows: (id (x) h) Delta(b_k) - h(b_k) unit = 0 componentwise, plus h(1) = 1.
  Mat sys(n * n + 1, n);
  Mat rhs = Mat::Zero(n * n + 1, 1);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sys(k * n + i, j) = D(k, i, j);
      sys(k * n + i, k) -= unit(i);
    }
  for (int j = 0; j < n; ++j) sys(n * n, j) = unit(j);
  rhs(n * n, 0) = 1.0;
  return solve_linear(sys, rhs, tol).solution.col(0);
}

}  // namespace qg
