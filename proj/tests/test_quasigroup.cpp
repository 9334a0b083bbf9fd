#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qg/io.hpp"
#include "qg/quasigroup.hpp"

using namespace qg;

namespace {

const std::string kDataDir = QG_DATA_DIR;

std::vector<FiniteQuantumGroup> shipped_examples() {
  std::vector<FiniteQuantumGroup> out;
  for (const char* name :
       {"c_z2.qg", "c_z4.qg", "c_s3.qg", "group_z2.qg", "group_s3.qg",
        "kac_paljutkin.qg", "tensor_cz2_gz2.qg", "tensor_gz2_gz2.qg"})
    out.push_back(load_definition(kDataDir + "/" + name));
  return out;
}

// Indicator functional of a subset of group elements on C[Gamma].
Functional subset_indicator(const FiniteQuantumGroup& g, const std::vector<int>& s) {
  Vec v = Vec::Zero(g.dim());
  for (int i : s) v(i) = 1.0;
  return Functional(g, std::move(v));
}

}  // namespace

TEST_CASE("counit and haar are idempotent states everywhere") {
  for (const auto& g : shipped_examples()) {
    CHECK(check_idempotent_state(g, counit_functional(g)).pass);
    CHECK(check_idempotent_state(g, haar_functional(g)).pass);
  }
}

TEST_CASE("subgroup indicators on C[S3]; non-subgroups fail") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  // A3 = {0,1,2} in the symmetric3 element order.
  CHECK(check_idempotent_state(g, subset_indicator(g, {0, 1, 2})).pass);
  CHECK(check_idempotent_state(g, subset_indicator(g, {0, 3})).pass);  // <t>
  CHECK_FALSE(check_idempotent_state(g, subset_indicator(g, {0, 1})).pass);
  CHECK_FALSE(check_idempotent_state(g, subset_indicator(g, {0, 3, 4})).pass);
  CHECK_FALSE(check_idempotent_state(g, subset_indicator(g, {1, 2})).pass);
}

TEST_CASE("conditional expectations of the extreme states") {
  for (const auto& g : shipped_examples()) {
    const auto eps = make_idempotent_state(counit_functional(g));
    CHECK((conditional_expectation(g, eps) - Mat::Identity(g.dim(), g.dim())).norm() <=
          1e-10);
    const auto h = make_idempotent_state(haar_functional(g));
    const Mat expected = g.unit() * g.haar().transpose();
    CHECK((conditional_expectation(g, h) - expected).norm() <= 1e-10);
  }
}

TEST_CASE("conditional expectation of the A3 indicator is the fiber projection") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  const auto st = make_idempotent_state(subset_indicator(g, {0, 1, 2}));
  const Mat e = conditional_expectation(g, st);
  Mat expected = Mat::Zero(6, 6);
  for (int s = 0; s < 3; ++s) expected(s, s) = 1.0;
  CHECK((e - expected).norm() <= 1e-10);

  const Coideal n = coideal_of(g, st);
  CHECK(n.space.dim() == 3);
  Mat span = Mat::Zero(6, 3);
  for (int s = 0; s < 3; ++s) span(s, s) = 1.0;
  CHECK(subspace_equal(n.space, span_of(span, Tolerance{}), Tolerance{}));
  CHECK(coideal_is_invariant(n));  // A3 is normal
}

TEST_CASE("coideals of the extreme states") {
  for (const auto& g : shipped_examples()) {
    CHECK(coideal_of(g, make_idempotent_state(counit_functional(g))).space.dim() ==
          g.dim());
    const Coideal trivial = coideal_of(g, make_idempotent_state(haar_functional(g)));
    CHECK(trivial.space.dim() == 1);
    CHECK(contains_vector(trivial.space, g.unit(), Tolerance{}));
  }
}

TEST_CASE("quasi-subgroup hulls: projections, reconstruction, dimension count") {
  for (const auto& g : shipped_examples()) {
    const IrrTable table = wedderburn(g);

    const Hull he =
        hull_of_quasi_subgroup(table, make_idempotent_state(counit_functional(g)));
    for (size_t b = 0; b < table.blocks.size(); ++b)
      CHECK(he.parts[b].dim() == table.blocks[b].n);

    const Hull hh =
        hull_of_quasi_subgroup(table, make_idempotent_state(haar_functional(g)));
    int total = 0;
    for (size_t b = 0; b < table.blocks.size(); ++b)
      total += table.blocks[b].n * hh.parts[b].dim();
    CHECK(total == 1);  // only the trivial corepresentation survives
  }

  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  const IrrTable table = wedderburn(g);
  const auto st = make_idempotent_state(subset_indicator(g, {0, 1, 2}));
  const Hull hull = hull_of_quasi_subgroup(table, st);
  int weighted = 0;
  for (size_t b = 0; b < table.blocks.size(); ++b)
    weighted += table.blocks[b].n * hull.parts[b].dim();
  CHECK(weighted == 3);
}

TEST_CASE("invalid omega is rejected by the hull computation") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  const IrrTable table = wedderburn(g);
  Vec bad = Vec::Zero(6);
  bad(0) = 1.0;
  bad(1) = 1.0;  // {e, 3-cycle} is not closed
  CHECK_THROWS_AS(hull_of_quasi_subgroup(table, IdempotentState{Functional(g, bad)}),
                  ContractViolationError);
}

TEST_CASE("J1: dimensions and hull agreement") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());
  const IrrTable table = wedderburn(g);

  const Coideal full = coideal_of(g, make_idempotent_state(counit_functional(g)));
  CHECK(J1(g, full).space.dim() == 0);

  const Coideal trivial = coideal_of(g, make_idempotent_state(haar_functional(g)));
  const IdealSubspace j_trivial = J1(g, trivial);
  CHECK(j_trivial.space.dim() == 5);
  for (int c = 0; c < j_trivial.space.dim(); ++c)
    CHECK(std::abs(pairing(j_trivial.space.basis.col(c), g.unit())) <= 1e-10);

  const auto st = make_idempotent_state(subset_indicator(g, {0, 1, 2}));
  const Coideal n = coideal_of(g, st);
  const IdealSubspace j = J1(g, n);
  CHECK(j.space.dim() == 3);
  const Hull via_ideal = hull_of(table, j);
  const Hull via_projection = hull_of_quasi_subgroup(table, st);
  for (size_t b = 0; b < via_ideal.parts.size(); ++b)
    CHECK(via_ideal.parts[b].dim() == via_projection.parts[b].dim());
}

TEST_CASE("right units, two-sided for invariant quasi-subgroups") {
  const FiniteQuantumGroup g = from_group_algebra(GroupTable::symmetric3());

  // epsilon: J = {0}, vacuous pass.
  CHECK(right_unit_check(g, make_idempotent_state(counit_functional(g))).all_pass());

  // haar: epsilon - h is a right (and two-sided) unit on {f : f(1) = 0}.
  const AxiomReport hrep =
      right_unit_check(g, make_idempotent_state(haar_functional(g)));
  CHECK(hrep.all_pass());
  CHECK(hrep.find("two-sided-unit-on-J1") != nullptr);

  // A3 is normal, so the check includes the two-sided identity.
  const AxiomReport arep =
      right_unit_check(g, make_idempotent_state(subset_indicator(g, {0, 1, 2})));
  CHECK(arep.all_pass());
  CHECK(arep.find("two-sided-unit-on-J1") != nullptr);

  // On the cocommutative side L^1 is commutative, so even the non-normal
  // transposition subgroup gives an invariant coideal.
  const AxiomReport trep =
      right_unit_check(g, make_idempotent_state(subset_indicator(g, {0, 3})));
  CHECK(trep.all_pass());
  CHECK(trep.find("two-sided-unit-on-J1") != nullptr);

  // For a genuinely one-sided case take the Haar state of the non-normal
  // subgroup {e, t} inside C(S3): the coideal is right but not left invariant.
  const FiniteQuantumGroup cs3 = from_finite_group(GroupTable::symmetric3());
  Vec w = Vec::Zero(6);
  w(0) = 0.5;
  w(3) = 0.5;
  const auto st = make_idempotent_state(Functional(cs3, w));
  CHECK_FALSE(coideal_is_invariant(coideal_of(cs3, st)));
  const AxiomReport srep = right_unit_check(cs3, st);
  CHECK(srep.all_pass());
  CHECK(srep.find("two-sided-unit-on-J1") == nullptr);
}

TEST_CASE("search: exhaustive families on (co)commutative inputs") {
  const FiniteQuantumGroup gz2 = from_group_algebra(GroupTable::cyclic(2));
  const auto rz2 = search_idempotent_states(gz2, wedderburn(gz2));
  CHECK(rz2.exhaustive);
  CHECK(rz2.states.size() == 2);

  const FiniteQuantumGroup gs3 = from_group_algebra(GroupTable::symmetric3());
  const auto rs3 = search_idempotent_states(gs3, wedderburn(gs3));
  CHECK(rs3.exhaustive);
  CHECK(rs3.states.size() == 6);  // subgroup lattice of S3

  const FiniteQuantumGroup cz4 = from_finite_group(GroupTable::cyclic(4));
  const auto rz4 = search_idempotent_states(cz4, wedderburn(cz4));
  CHECK(rz4.exhaustive);
  CHECK(rz4.states.size() == 3);  // subgroups {e}, Z2, Z4

  const FiniteQuantumGroup cs3 = from_finite_group(GroupTable::symmetric3());
  const auto rcs3 = search_idempotent_states(cs3, wedderburn(cs3));
  CHECK(rcs3.exhaustive);
  CHECK(rcs3.states.size() == 6);  // Kawada-Ito: subgroup Haar measures
}

TEST_CASE("search on the genuinely quantum example is verified, not assumed") {
  const FiniteQuantumGroup kp = load_definition(kDataDir + "/kac_paljutkin.qg");
  const auto r = search_idempotent_states(kp, wedderburn(kp));
  CHECK_FALSE(r.exhaustive);
  CHECK(r.states.size() >= 2);  // at least counit and haar
  for (const auto& st : r.states)
    CHECK(check_idempotent_state(kp, st.omega).pass);
}

TEST_CASE("Kawada-Ito consistency: only subgroup measures pass on C(G)") {
  for (const GroupTable& gt : {GroupTable::cyclic(4), GroupTable::symmetric3()}) {
    const FiniteQuantumGroup g = from_finite_group(gt);
    const auto subgroups = gt.subgroups();
    auto is_subgroup = [&](const std::vector<int>& set) {
      return std::find(subgroups.begin(), subgroups.end(), set) != subgroups.end();
    };
    const int n = gt.order();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (!(mask & 1u)) continue;  // must contain the identity (element 0)
      std::vector<int> set;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) set.push_back(i);
      // Uniform measure on the subset, as a functional on C(G).
      Vec v = Vec::Zero(n);
      for (int i : set) v(i) = 1.0 / static_cast<double>(set.size());
      const bool pass = check_idempotent_state(g, Functional(g, v)).pass;
      CHECK(pass == is_subgroup(set));
    }
  }
}
