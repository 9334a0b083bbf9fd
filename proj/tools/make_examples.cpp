// Regenerates the definition documents under data/ together with the
// manifest of expected report fingerprints. Every file is written from a
// verified object: constructors for the classical families, and the
// 8-dimensional Kac-Paljutkin quantum group built from its standard
// generators-and-relations presentation by exact normal-form reduction. The
// axiom verifier gates every file before it is written.

#include "qg/dual.hpp"
#include "qg/io.hpp"

#include "json.hpp"

#include <fstream>
#include <iostream>
#include <string>

using namespace qg;
using nlohmann::ordered_json;

namespace {

FiniteQuantumGroup rename(const FiniteQuantumGroup& g, const std::string& name) {
  FiniteQuantumGroup::Tensors t;
  t.name = name;
  t.dim = g.dim();
  t.labels = g.labels();
  t.mult.resize(static_cast<size_t>(t.dim) * t.dim * t.dim);
  t.coproduct.resize(t.mult.size());
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      for (int k = 0; k < t.dim; ++k) {
        t.mult[(static_cast<size_t>(i) * t.dim + j) * t.dim + k] = g.mult(i, j, k);
        t.coproduct[(static_cast<size_t>(i) * t.dim + j) * t.dim + k] =
            g.coproduct(i, j, k);
      }
  t.star = g.star_matrix();
  t.antipode = g.antipode_matrix();
  t.counit = g.counit();
  t.haar = g.haar();
  return FiniteQuantumGroup::from_tensors(std::move(t));
}

// The unique 8-dimensional Hopf *-algebra with Haar state that is neither
// commutative nor cocommutative, on generators x, y, z with
//   x^2 = y^2 = 1,  xy = yx,  zx = yz,  zy = xz,
//   z^2 = (1 + x + y - xy) / 2,
//   Delta(x) = x(x)x,  Delta(y) = y(x)y,
//   Delta(z) = (1(x)1 + 1(x)x + y(x)1 - y(x)x)(z(x)z) / 2,
//   eps = 1 on generators,  S(x) = x, S(y) = y, S(z) = z,
// over the monomial basis x^a y^b z^c (index a + 2b + 4c). The Haar state is
// recovered from the invariance equations rather than entered by hand.
FiniteQuantumGroup kac_paljutkin() {
  const int d = 8;
  auto idx = [](int a, int b, int c) { return a + 2 * b + 4 * c; };

  std::vector<cplx> mult(static_cast<size_t>(d) * d * d, cplx(0.0));
  auto M = [&](int i, int j) -> cplx* {
    return &mult[(static_cast<size_t>(i) * d + j) * d];
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int b2 = 0; b2 < 2; ++b2)
            for (int c2 = 0; c2 < 2; ++c2) {
              // Move x^a2 y^b2 through z^c: z x = y z swaps the exponents.
              const int pa = c ? b2 : a2;
              const int pb = c ? a2 : b2;
              const int A = a ^ pa, B = b ^ pb;
              cplx* row = M(idx(a, b, c), idx(a2, b2, c2));
              if (c + c2 <= 1) {
                row[idx(A, B, c + c2)] += 1.0;
              } else {
                // z^2 = (1 + x + y - xy)/2 multiplied onto x^A y^B.
                row[idx(A, B, 0)] += 0.5;
                row[idx(A ^ 1, B, 0)] += 0.5;
                row[idx(A, B ^ 1, 0)] += 0.5;
                row[idx(A ^ 1, B ^ 1, 0)] += -0.5;
              }
            }

  // Tensor-square product against the multiplication tensor above.
  auto tsp = [&](const Mat& xm, const Mat& ym) {
    Mat out = Mat::Zero(d, d);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        if (xm(p, q) == cplx(0.0)) continue;
        for (int r = 0; r < d; ++r)
          for (int s = 0; s < d; ++s) {
            if (ym(r, s) == cplx(0.0)) continue;
            const cplx* rowL = M(p, r);
            const cplx* rowR = M(q, s);
            for (int k = 0; k < d; ++k) {
              if (rowL[k] == cplx(0.0)) continue;
              for (int l = 0; l < d; ++l)
                out(k, l) += xm(p, q) * ym(r, s) * rowL[k] * rowR[l];
            }
          }
      }
    return out;
  };

  Mat dx = Mat::Zero(d, d), dy = Mat::Zero(d, d), dz = Mat::Zero(d, d);
  dx(idx(1, 0, 0), idx(1, 0, 0)) = 1.0;
  dy(idx(0, 1, 0), idx(0, 1, 0)) = 1.0;
  {
    const int z = idx(0, 0, 1), xz = idx(1, 0, 1), yz = idx(0, 1, 1);
    dz(z, z) = 0.5;
    dz(z, xz) = 0.5;
    dz(yz, z) = 0.5;
    dz(yz, xz) = -0.5;
  }
  Mat unit_sq = Mat::Zero(d, d);
  unit_sq(0, 0) = 1.0;

  std::vector<cplx> coproduct(static_cast<size_t>(d) * d * d, cplx(0.0));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        Mat delta = unit_sq;
        if (a) delta = tsp(delta, dx);
        if (b) delta = tsp(delta, dy);
        if (c) delta = tsp(delta, dz);
        const int k = idx(a, b, c);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            coproduct[(static_cast<size_t>(k) * d + i) * d + j] = delta(i, j);
      }

  // S fixes the generators; on monomials it reverses the word, which swaps
  // the x and y exponents exactly when z is present.
  Mat reverse = Mat::Zero(d, d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        reverse(c ? idx(b, a, c) : idx(a, b, c), idx(a, b, c)) = 1.0;

  // x and y are self-adjoint but z is a unitary of order four:
  // z^* = z^-1 = z^2 z = w z, so (x^a y^b z)^* = w x^b y^a z with
  // w = (1 + x + y - xy)/2 central in the x,y-subalgebra.
  Mat star = Mat::Zero(d, d);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      star(idx(a, b, 0), idx(a, b, 0)) = 1.0;
      const int A = b, B = a;  // reversed word before the w factor
      star(idx(A, B, 1), idx(a, b, 1)) += 0.5;
      star(idx(A ^ 1, B, 1), idx(a, b, 1)) += 0.5;
      star(idx(A, B ^ 1, 1), idx(a, b, 1)) += 0.5;
      star(idx(A ^ 1, B ^ 1, 1), idx(a, b, 1)) += -0.5;
    }

  FiniteQuantumGroup::Tensors t;
  t.name = "kac_paljutkin";
  t.dim = d;
  t.labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
  t.mult = std::move(mult);
  t.coproduct = std::move(coproduct);
  t.star = star;
  t.antipode = reverse;
  t.counit = Vec::Constant(d, cplx(1.0));
  t.haar = Vec::Zero(d);  // placeholder; recovered below

  FiniteQuantumGroup probe = FiniteQuantumGroup::from_tensors(t);
  t.haar = solve_haar_state(t, probe.unit(), Tolerance{});
  FiniteQuantumGroup kp = FiniteQuantumGroup::from_tensors(std::move(t));

  const AxiomReport rep = verify_axioms(kp);
  if (!rep.all_pass()) throw AxiomFailureError(rep);
  if (kp.is_commutative() || kp.is_cocommutative())
    throw std::runtime_error("presentation produced a (co)commutative algebra");
  return kp;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string dir = (argc > 1) ? argv[1] : "data";
  ordered_json manifest;

  auto emit = [&](const std::string& file, const FiniteQuantumGroup& g) {
    const AxiomReport rep = verify_axioms(g);
    if (!rep.all_pass()) throw AxiomFailureError(rep);
    save_definition(g, dir + "/" + file);
    const IrrTable table = wedderburn(g);
    ordered_json entry;
    entry["name"] = g.name();
    entry["dim"] = g.dim();
    entry["blocks"] = table.block_dims();
    entry["commutative"] = g.is_commutative();
    entry["cocommutative"] = g.is_cocommutative();
    manifest[file] = entry;
    std::cout << file << ": dim " << g.dim() << ", blocks";
    for (int n : table.block_dims()) std::cout << " " << n;
    std::cout << "\n";
  };

  emit("c_z2.qg", rename(from_finite_group(GroupTable::cyclic(2)), "C(Z2)"));
  emit("c_z4.qg", rename(from_finite_group(GroupTable::cyclic(4)), "C(Z4)"));
  emit("c_s3.qg", rename(from_finite_group(GroupTable::symmetric3()), "C(S3)"));
  emit("group_z2.qg", rename(from_group_algebra(GroupTable::cyclic(2)), "C[Z2]"));
  emit("group_s3.qg", rename(from_group_algebra(GroupTable::symmetric3()), "C[S3]"));
  emit("kac_paljutkin.qg", kac_paljutkin());
  emit("tensor_cz2_gz2.qg",
       rename(tensor_product(from_finite_group(GroupTable::cyclic(2)),
                             from_group_algebra(GroupTable::cyclic(2))),
              "C(Z2)xC[Z2]"));
  emit("tensor_gz2_gz2.qg",
       rename(tensor_product(from_group_algebra(GroupTable::cyclic(2)),
                             from_group_algebra(GroupTable::cyclic(2))),
              "C[Z2]xC[Z2]"));

  std::ofstream mf(dir + "/manifest.json");
  mf << manifest.dump(2) << "\n";
  std::cout << "wrote " << dir << "/manifest.json\n";
  return 0;
}
