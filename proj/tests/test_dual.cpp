#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qg/dual.hpp"
#include "qg/io.hpp"

#include <random>

using namespace qg;

namespace {

const std::string kDataDir = QG_DATA_DIR;

Functional random_functional(const FiniteQuantumGroup& g, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(g.dim());
  for (int i = 0; i < g.dim(); ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return Functional(g, std::move(v));
}

std::vector<FiniteQuantumGroup> shipped_examples() {
  std::vector<FiniteQuantumGroup> out;
  for (const char* name :
       {"c_z2.qg", "c_z4.qg", "c_s3.qg", "group_z2.qg", "group_s3.qg",
        "kac_paljutkin.qg", "tensor_cz2_gz2.qg", "tensor_gz2_gz2.qg"})
    out.push_back(load_definition(kDataDir + "/" + name));
  return out;
}

}  // namespace

TEST_CASE("convolution: counit is the unit; hand-computed products") {
  std::mt19937_64 rng(3);
  for (const auto& g : shipped_examples()) {
    const Functional eps = counit_functional(g);
    const Functional f = random_functional(g, rng);
    CHECK((convolve(eps, f).covec - f.covec).norm() <= 1e-10);
    CHECK((convolve(f, eps).covec - f.covec).norm() <= 1e-10);
  }

  // On C[Z2] covectors multiply pointwise per group element.
  const FiniteQuantumGroup gz2 = from_group_algebra(GroupTable::cyclic(2));
  Vec u(2), v(2);
  u << 1.0, 2.0;
  v << 3.0, 5.0;
  const Vec w = convolve(Functional(gz2, u), Functional(gz2, v)).covec;
  CHECK(w(0) == cplx(3.0));
  CHECK(w(1) == cplx(10.0));

  // On C(Z2) point masses convolve along the group law.
  const FiniteQuantumGroup cz2 = from_finite_group(GroupTable::cyclic(2));
  const Functional dg = dual_basis_functional(cz2, 1);
  const Vec gg = convolve(dg, dg).covec;
  CHECK(gg(0) == cplx(1.0));  // g*g = e
  CHECK(gg(1) == cplx(0.0));

  const Functional other(cz2, Vec::Zero(2));
  CHECK_THROWS_AS(convolve(Functional(gz2, u), other), AmbientMismatchError);
}

TEST_CASE("sharp: involution, counit fixed, hand value on C[Z2]") {
  const FiniteQuantumGroup gz2 = from_group_algebra(GroupTable::cyclic(2));
  const Functional eps = counit_functional(gz2);
  CHECK((sharp(eps).covec - eps.covec).norm() <= 1e-12);

  Vec v(2);
  v << cplx(1.0, 2.0), cplx(-0.5, 3.0);
  const Vec s = sharp(Functional(gz2, v)).covec;
  CHECK(s(0) == std::conj(v(0)));  // S(l_g) = l_g and l_g^* = l_g
  CHECK(s(1) == std::conj(v(1)));

  std::mt19937_64 rng(5);
  for (const auto& g : shipped_examples()) {
    const Functional f = random_functional(g, rng);
    const Functional h = random_functional(g, rng);
    CHECK((sharp(sharp(f)).covec - f.covec).norm() <= 1e-9);
    // Anti-multiplicative for convolution.
    CHECK((sharp(convolve(f, h)).covec - convolve(sharp(h), sharp(f)).covec).norm() <=
          1e-8);
  }
}

TEST_CASE("wedderburn of C(S3) reproduces the S3 character table") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::symmetric3());
  const IrrTable table = wedderburn(g);
  REQUIRE(table.block_dims() == std::vector<int>{1, 1, 2});

  // Oracle: characters of S3 on the point-mass basis; element order in
  // GroupTable::symmetric3 is {e, two 3-cycles, three transpositions}.
  Vec chi_trivial(6), chi_sign(6), chi_std(6);
  chi_trivial << 1, 1, 1, 1, 1, 1;
  chi_sign << 1, 1, 1, -1, -1, -1;
  chi_std << 2, -1, -1, 0, 0, 0;
  const std::vector<Vec> expected = {chi_sign, chi_trivial, chi_std};
  bool matched_all = true;
  for (const Vec& chi : expected) {
    bool found = false;
    for (const auto& b : table.blocks)
      if ((b.fingerprint - chi).norm() <= 1e-8) found = true;
    matched_all = matched_all && found;
  }
  CHECK(matched_all);
}

TEST_CASE("wedderburn of group algebras: evaluations, u = group elements") {
  for (const GroupTable& gt : {GroupTable::cyclic(2), GroupTable::cyclic(4),
                               GroupTable::symmetric3()}) {
    const FiniteQuantumGroup g = from_group_algebra(gt);
    const IrrTable table = wedderburn(g);
    REQUIRE(static_cast<int>(table.blocks.size()) == g.dim());
    // Each block is evaluation at some lambda_s: the coefficient element is a
    // standard basis vector, and each basis vector appears exactly once.
    std::vector<bool> seen(g.dim(), false);
    for (const auto& b : table.blocks) {
      REQUIRE(b.n == 1);
      int hits = 0, which = -1;
      for (int s = 0; s < g.dim(); ++s)
        if ((b.coeff[0] - Vec(Vec::Unit(g.dim(), s))).norm() <= 1e-8) {
          ++hits;
          which = s;
        }
      CHECK(hits == 1);
      if (which >= 0) seen[which] = true;
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("sum of squared block dimensions matches dim on every example") {
  for (const auto& g : shipped_examples()) {
    const IrrTable table = wedderburn(g);
    int total = 0;
    for (int n : table.block_dims()) total += n * n;
    CHECK(total == g.dim());
  }
}

TEST_CASE("kac-paljutkin block pattern") {
  const FiniteQuantumGroup kp = load_definition(kDataDir + "/kac_paljutkin.qg");
  const IrrTable table = wedderburn(kp);
  CHECK(table.block_dims() == std::vector<int>{1, 1, 1, 1, 2});
}

TEST_CASE("fourier: unit, multiplicativity, injectivity") {
  std::mt19937_64 rng(11);
  for (const auto& g : shipped_examples()) {
    const IrrTable table = wedderburn(g);
    const auto eps_blocks = fourier(table, counit_functional(g));
    for (size_t b = 0; b < table.blocks.size(); ++b)
      CHECK((eps_blocks[b] - Mat::Identity(table.blocks[b].n, table.blocks[b].n))
                .norm() <= 1e-9);

    for (int trial = 0; trial < 100; ++trial) {
      const Functional f = random_functional(g, rng);
      const Functional h = random_functional(g, rng);
      const auto fb = fourier(table, f);
      const auto hb = fourier(table, h);
      const auto fhb = fourier(table, convolve(f, h));
      double joint = 0.0;
      for (size_t b = 0; b < table.blocks.size(); ++b) {
        CHECK((fhb[b] - fb[b] * hb[b]).norm() <=
              1e-8 * (1.0 + fb[b].norm() * hb[b].norm()));
        joint += fb[b].norm();
      }
      CHECK(joint > 1e-6);  // joint kernel is trivial
    }
  }
}

TEST_CASE("hat: unit goes to haar, C[Z2] value, injectivity") {
  const FiniteQuantumGroup gz2 = from_group_algebra(GroupTable::cyclic(2));
  CHECK((hat(Element(gz2, gz2.unit())).covec - gz2.haar()).norm() <= 1e-12);
  const Vec hg = hat(Element(gz2, Vec::Unit(2, 1))).covec;
  CHECK(hg(0) == cplx(0.0));  // h(l_g l_e) = 0
  CHECK(hg(1) == cplx(1.0));  // h(l_g l_g) = h(l_e) = 1

  for (const auto& g : shipped_examples()) {
    Mat hat_matrix(g.dim(), g.dim());
    for (int k = 0; k < g.dim(); ++k)
      hat_matrix.col(k) = hat(Element(g, Vec::Unit(g.dim(), k))).covec;
    CHECK(rank_of(hat_matrix, Tolerance{}) == g.dim());
  }
}

TEST_CASE("matrix-unit formula: C[Z2] sign block by hand, all examples pass") {
  const FiniteQuantumGroup gz2 = from_group_algebra(GroupTable::cyclic(2));
  const IrrTable tz2 = wedderburn(gz2);
  // The sign block is the evaluation at lambda_g; its matrix unit must be the
  // covector (0,1), which is exactly hat(lambda_g^*).
  for (const auto& b : tz2.blocks) {
    if ((b.coeff[0] - Vec(Vec::Unit(2, 1))).norm() > 1e-8) continue;
    CHECK((b.units[0] - Vec(Vec::Unit(2, 1))).norm() <= 1e-9);
    const Vec reconstructed = hat(Element(gz2, gz2.star(b.coeff[0]))).covec;
    CHECK((reconstructed - b.units[0]).norm() <= 1e-9);
  }

  for (const auto& g : shipped_examples()) {
    const IrrTable table = wedderburn(g);
    for (const auto& b : table.blocks) {
      const AxiomReport rep = matrix_unit_check(b, table);
      CHECK(rep.all_pass());
      CHECK(rep.max_residual() <= 1e-8);
      // Finite quantum groups are Kac type: the fitted F is the identity.
      CHECK((b.F - RVec::Ones(b.n)).norm() <= 1e-6);
    }
  }
}

TEST_CASE("convolution formula") {
  std::mt19937_64 rng(17);
  for (const auto& g : shipped_examples()) {
    const IrrTable table = wedderburn(g);
    // f = eps: eps*x = x and pi(eps o S) = I, so the residual is zero.
    const Element x0(g, Vec::Random(g.dim()));
    CHECK(convolution_formula_check(table, counit_functional(g), x0).max_residual() <=
          1e-9);
    for (int trial = 0; trial < 10; ++trial) {
      const Functional f = random_functional(g, rng);
      Vec xv(g.dim());
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (int i = 0; i < g.dim(); ++i) xv(i) = cplx(gauss(rng), gauss(rng));
      const AxiomReport rep = convolution_formula_check(table, f, Element(g, xv));
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("corepresentation unitarity and coproduct identity, spot checks") {
  const FiniteQuantumGroup kp = load_definition(kDataDir + "/kac_paljutkin.qg");
  const IrrTable table = wedderburn(kp);
  for (const auto& b : table.blocks) {
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) {
        Vec acc = Vec::Zero(kp.dim());
        for (int t = 0; t < b.n; ++t)
          acc += kp.multiply(kp.star(b.coeff[t * b.n + i]), b.coeff[t * b.n + j]);
        const Vec target = (i == j) ? Vec(kp.unit()) : Vec(Vec::Zero(kp.dim()));
        CHECK((acc - target).norm() <= 1e-8);

        Mat rhs = Mat::Zero(kp.dim(), kp.dim());
        for (int t = 0; t < b.n; ++t)
          rhs += b.coeff[i * b.n + t] * b.coeff[t * b.n + j].transpose();
        CHECK((kp.coproduct_of(b.coeff[i * b.n + j]) - rhs).norm() <= 1e-8);
      }
  }
}

TEST_CASE("different seeds give the same canonical block data") {
  for (const auto& g : shipped_examples()) {
    const IrrTable t0 = wedderburn(g, Tolerance{}, 0);
    const IrrTable t1 = wedderburn(g, Tolerance{}, 12345);
    REQUIRE(t0.block_dims() == t1.block_dims());
    for (size_t b = 0; b < t0.blocks.size(); ++b)
      CHECK((t0.blocks[b].fingerprint - t1.blocks[b].fingerprint).norm() <= 1e-6);
  }
}

TEST_CASE("irr report lists blocks in stable order") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::symmetric3());
  const IrrTable table = wedderburn(g);
  const std::string rep = irr_report(table);
  CHECK(rep.find("BLOCKS 3") != std::string::npos);
  CHECK(rep == irr_report(wedderburn(g)));
}
