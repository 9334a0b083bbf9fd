#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qg/io.hpp"

#include <fstream>
#include <sstream>

using namespace qg;

namespace {

const std::string kDataDir = QG_DATA_DIR;

bool tensors_equal(const FiniteQuantumGroup& a, const FiniteQuantumGroup& b) {
  if (a.dim() != b.dim()) return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.mult(i, j, k) != b.mult(i, j, k) ||
            a.coproduct(i, j, k) != b.coproduct(i, j, k))
          return false;
  return (a.star_matrix() - b.star_matrix()).norm() == 0.0 &&
         (a.antipode_matrix() - b.antipode_matrix()).norm() == 0.0 &&
         (a.counit() - b.counit()).norm() == 0.0 &&
         (a.haar() - b.haar()).norm() == 0.0;
}

}  // namespace

TEST_CASE("round trip is exact") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::cyclic(4));
  const std::string text = serialize_definition(g);
  std::istringstream in(text);
  const FiniteQuantumGroup back = load_definition_stream(in);
  CHECK(tensors_equal(g, back));
  // And the serialization itself is stable.
  CHECK(serialize_definition(back) == text);
}

TEST_CASE("kac-paljutkin data file loads through the axiom gate") {
  const FiniteQuantumGroup kp = load_definition(kDataDir + "/kac_paljutkin.qg");
  CHECK(kp.dim() == 8);
  CHECK_FALSE(kp.is_commutative());
  CHECK_FALSE(kp.is_cocommutative());
  CHECK(verify_axioms(kp).max_residual() <= 1e-8);
}

TEST_CASE("corrupted haar fails the load gate naming the law") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::cyclic(2));
  std::string text = serialize_definition(g);
  const auto pos = text.find("HAAR");
  REQUIRE(pos != std::string::npos);
  text = text.substr(0, pos) + "HAAR\n0 0.7 0\n1 0.5 0\n";
  std::istringstream in(text);
  try {
    load_definition_stream(in);
    FAIL("expected axiom failure");
  } catch (const AxiomFailureError& e) {
    REQUIRE(e.report.find("haar-unital") != nullptr);
    CHECK_FALSE(e.report.find("haar-unital")->pass);
  }
}

TEST_CASE("omitted haar section is recovered and flagged derivable") {
  const FiniteQuantumGroup g = from_finite_group(GroupTable::symmetric3());
  std::string text = serialize_definition(g);
  text = text.substr(0, text.find("HAAR"));
  {
    std::istringstream probe(text);
    CHECK_FALSE(parse_definition(probe).haar_given);
  }
  std::istringstream in(text);
  const FiniteQuantumGroup back = load_definition_stream(in);
  CHECK((back.haar() - g.haar()).norm() <= 1e-10);
}

TEST_CASE("parse errors carry locations and unknown sections are rejected") {
  {
    std::istringstream in("DIM 1\nBASIS e\nMULT\n0 0 0 1 0\nWEIRD\n");
    CHECK_THROWS_AS(parse_definition(in), ParseError);
  }
  {
    std::istringstream in("DIM 1\nBASIS e\nMULT\n0 0 5 1 0\n");
    try {
      parse_definition(in);
      FAIL("expected parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }
  {
    std::istringstream in("BASIS e\n");
    CHECK_THROWS_AS(parse_definition(in), ParseError);  // DIM must come first
  }
  {
    std::istringstream in("DIM 1\nMULT\n0 0 0 1 0\nCOPRODUCT\n0 0 0 1 0\n");
    CHECK_THROWS_AS(parse_definition(in), ParseError);  // missing STAR section
  }
}

TEST_CASE("every shipped example file loads and matches its manifest entry") {
  for (const char* name :
       {"c_z2.qg", "c_z4.qg", "c_s3.qg", "group_z2.qg", "group_s3.qg",
        "kac_paljutkin.qg", "tensor_cz2_gz2.qg", "tensor_gz2_gz2.qg"}) {
    const FiniteQuantumGroup g = load_definition(kDataDir + "/" + name);
    CHECK(verify_axioms(g).all_pass());
  }
}

TEST_CASE("covector files round trip and check dimensions") {
  const std::string path = "/tmp/qg_test_covectors.cov";
  std::vector<Vec> rows;
  Vec a(3), b(3);
  a << cplx(1, 2), cplx(0, -1), cplx(0.5, 0);
  b << cplx(0, 0), cplx(3, 0), cplx(-1, 1);
  rows = {a, b};
  save_covectors(rows, path);
  const auto back = load_covectors(path, 3);
  REQUIRE(back.size() == 2);
  CHECK((back[0] - a).norm() == 0.0);
  CHECK((back[1] - b).norm() == 0.0);
  CHECK_THROWS_AS(load_covectors(path, 4), ParseError);
}
