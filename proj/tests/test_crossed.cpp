#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qg/cosets.hpp"
#include "qg/crossed.hpp"
#include "qg/io.hpp"

using namespace qg;

namespace {

const std::string kDataDir = QG_DATA_DIR;

std::vector<int> sorted_dims(const IrrTable& t) {
  auto dims = t.block_dims();
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace

TEST_CASE("trivial actions validate; non-automorphisms are refused") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::cyclic(3));
  const GroupTable z2 = GroupTable::cyclic(2);
  CHECK(verify_action(g, trivial_action(g, z2)).all_pass());

  // Inversion of Z3 is a group automorphism: a valid non-trivial action.
  const HopfAction inv = permutation_action(g, z2, {{0, 1, 2}, {0, 2, 1}});
  CHECK(verify_action(g, inv).all_pass());

  // Swapping the identity with a generator is not an automorphism.
  const HopfAction bad = permutation_action(g, z2, {{0, 1, 2}, {1, 0, 2}});
  CHECK_FALSE(verify_action(g, bad).all_pass());
  CHECK_THROWS_AS(build_crossed_product(g, bad), AxiomFailureError);
}

TEST_CASE("C[Z2] x| Z2 with the trivial action matches C[Z2 x Z2]") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::cyclic(2));
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(g, trivial_action(g, z2));
  CHECK(cp.convention == CrossedConvention::Standard);
  CHECK(cp.product.dim() == 4);
  CHECK(verify_axioms(cp.product).max_residual() <= 1e-8);

  const IrrTable ptable = wedderburn(cp.product);
  CHECK(sorted_dims(ptable) == std::vector<int>{1, 1, 1, 1});

  // Same block data as the group algebra of the Klein four group: four
  // characters and intrinsic group of order sequence {1,2,2,2}.
  const FiniteQuantumGroup klein = from_group_algebra(GroupTable::klein_four());
  const IrrTable ktable = wedderburn(klein);
  CHECK(sorted_dims(ptable) == sorted_dims(ktable));
  CHECK(intrinsic_group_fingerprint(intrinsic_group(ptable)) ==
        intrinsic_group_fingerprint(intrinsic_group(ktable)));

  CHECK(verify_crossed_irr(wedderburn(g), cp.product, trivial_action(g, z2))
            .all_pass());
}

TEST_CASE("C(S3) x| Z2 trivial: duplicated block dimensions") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::symmetric3());
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(g, trivial_action(g, z2));
  CHECK(verify_axioms(cp.product).max_residual() <= 1e-8);
  CHECK(sorted_dims(wedderburn(cp.product)) == std::vector<int>{1, 1, 1, 1, 2, 2});
  CHECK(verify_crossed_irr(wedderburn(g), cp.product, trivial_action(g, z2))
            .all_pass());
}

TEST_CASE("trivial action is the tensor product in disguise") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::cyclic(4));
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(g, trivial_action(g, z2));
  const FiniteQuantumGroup tens =
      tensor_product(g, from_group_algebra(z2));
  CHECK(sorted_dims(wedderburn(cp.product)) == sorted_dims(wedderburn(tens)));
}

TEST_CASE("a non-trivial permutation action: C[Z3] x| Z2 becomes C[S3]") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::cyclic(3));
  const GroupTable z2 = GroupTable::cyclic(2);
  const HopfAction inv = permutation_action(g, z2, {{0, 1, 2}, {0, 2, 1}});
  const CrossedProduct cp = build_crossed_product(g, inv);
  CHECK(cp.product.dim() == 6);
  CHECK(verify_axioms(cp.product).max_residual() <= 1e-8);
  CHECK(verify_crossed_irr(wedderburn(g), cp.product, inv).all_pass());

  // The result is the group algebra of Z3 x| Z2 = S3: cocommutative with
  // intrinsic group S3.
  CHECK(cp.product.is_cocommutative());
  const IntrinsicGroup gr = intrinsic_group(wedderburn(cp.product));
  CHECK(intrinsic_group_fingerprint(gr) == GroupTable::symmetric3().order_sequence());
}

TEST_CASE("kac-paljutkin x| Z2 trivial: dim 16 with duplicated blocks") {
  const FiniteQuantumGroup kp = load_definition(kDataDir + "/kac_paljutkin.qg");
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(kp, trivial_action(kp, z2));
  CHECK(cp.product.dim() == 16);
  CHECK(verify_axioms(cp.product).max_residual() <= 1e-8);
  const IrrTable ptable = wedderburn(cp.product);
  CHECK(sorted_dims(ptable) == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2, 2});
  int total = 0;
  for (int n : ptable.block_dims()) total += n * n;
  CHECK(total == 16);
  CHECK(verify_crossed_irr(wedderburn(kp), cp.product, trivial_action(kp, z2))
            .all_pass());
}

TEST_CASE("haar concentrates on the identity fiber") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(g, trivial_action(g, z2));
  const int d = g.dim();
  for (int s = 0; s < z2.order(); ++s)
    for (int i = 0; i < d; ++i) {
      const cplx expected = (s == z2.identity()) ? g.haar()(i) : cplx(0.0);
      CHECK(cp.product.haar()(crossed_index(i, s, d)) == expected);
    }
}

TEST_CASE("embedded factors are coideals and feed the ideal/coset machinery") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::cyclic(2));
  const GroupTable z2 = GroupTable::cyclic(2);
  const CrossedProduct cp = build_crossed_product(g, trivial_action(g, z2));
  const FiniteQuantumGroup& p = cp.product;
  const IrrTable ptable = wedderburn(p);
  const int d = g.dim();

  // omega(b_i (.) s) = [b_i = unit fiber coefficient] picks out the embedded
  // copy of the group algebra of Gamma.
  Vec omega = Vec::Zero(p.dim());
  for (int s = 0; s < z2.order(); ++s)
    for (int i = 0; i < d; ++i)
      omega(crossed_index(i, s, d)) = g.haar()(i);
  const auto st = make_idempotent_state(Functional(p, omega));
  const Coideal vn_gamma = coideal_of(p, st);
  CHECK(vn_gamma.space.dim() == z2.order());
  for (int s = 0; s < z2.order(); ++s) {
    Vec embedded = Vec::Zero(p.dim());
    for (int i = 0; i < d; ++i) embedded(crossed_index(i, s, d)) = g.unit()(i);
    CHECK(contains_vector(vn_gamma.space, embedded, Tolerance{}));
  }

  // The embedded copy of L^infinity(G) is a coideal via eps (x) omega-style
  // state: omega'(b_i (.) s) = eps_G(b_i)[s = e].
  Vec omega2 = Vec::Zero(p.dim());
  for (int i = 0; i < d; ++i)
    omega2(crossed_index(i, z2.identity(), d)) = g.counit()(i);
  const auto st2 = make_idempotent_state(Functional(p, omega2));
  const Coideal embedded_g = coideal_of(p, st2);
  CHECK(embedded_g.space.dim() == d);

  // Quantum coset machinery on the product: translate J1(VN(Gamma)) by the
  // nontrivial group-like of the embedded factor.
  const IntrinsicGroup gr = intrinsic_group(ptable);
  Vec xg = Vec::Zero(p.dim());
  xg(crossed_index(1, z2.identity(), d)) = 1.0;  // lambda_g (.) e
  bool ran = false;
  for (const auto& x : gr.elements) {
    if ((x.element.coeffs - xg).norm() > 1e-8) continue;
    ran = true;
    CHECK(disjointness_check(p, x, vn_gamma) == CosetRelation::Zero);
    const IdealSubspace j = J1(p, vn_gamma);
    const IdealSubspace moved = translate_ideal(p, j, x);
    CHECK(moved.space.dim() == j.space.dim());
    CHECK(surjectivity_check(p, vn_gamma, x));
  }
  CHECK(ran);
}

TEST_CASE("the printed multiplication rule is rejected for odd-order groups") {
  // For Gamma = Z3 the rule (a s)(b t) = a alpha_s(b) s^-1 t breaks the unit
  // law, so the axiom gate must select the standard convention.
  const FiniteQuantumGroup g = from_finite_group(GroupTable::cyclic(2));
  const CrossedProduct cp =
      build_crossed_product(g, trivial_action(g, GroupTable::cyclic(3)));
  CHECK(cp.convention == CrossedConvention::Standard);
  CHECK(verify_axioms(cp.product).all_pass());
}
