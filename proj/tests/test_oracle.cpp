#include <doctest.h>

#include "gps/matrix_rep.hpp"
#include "gps/lie_algebra.hpp"
#include "test_support.hpp"

using namespace gps;
using gps::test::epsilon3;
using gps::test::rat;
using gps::test::sqrt3;

TEST_SUITE("oracle") {

TEST_CASE("catalog representations validate") {
  for (const char* name : {"su2", "su3", "so3", "so4", "so5"}) {
    MatrixRep rep = load_rep(name);
    CHECK(rep.trace_norm == rat(1, 2));
    for (const auto& e : rep.e) CHECK(e.trace().is_zero());
  }
  CHECK_THROWS_AS(load_rep("g2"), OracleError);
}

TEST_CASE("su2 generators") {
  MatrixRep rep = load_rep("su2");
  CHECK(rep.n == 2);
  CHECK(rep.dim == 3);
  // T_3 = sigma_3 / 2
  ExactMatrix t3 = rep.T(2);
  CHECK(t3.at(0, 0) == ExactComplex(rat(1, 2)));
  CHECK(t3.at(1, 1) == ExactComplex(rat(-1, 2)));
}

TEST_CASE("su3 T8 is diagonal with the radical entries") {
  MatrixRep rep = load_rep("su3");
  ExactMatrix t8 = rep.T(7);
  CHECK(t8.at(0, 0) == ExactComplex(sqrt3(1, 6)));  // 1/(2 sqrt 3)
  CHECK(t8.at(1, 1) == ExactComplex(sqrt3(1, 6)));
  CHECK(t8.at(2, 2) == ExactComplex(sqrt3(-1, 3)));  // -1/sqrt 3
  CHECK(t8.at(0, 1).is_zero());
}

TEST_CASE("su2 structure constants are the epsilon pattern") {
  ExactTensor c = structure_constants_from_rep(load_rep("su2"));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) CHECK(c.at({i, j, k}) == rat(epsilon3(i, j, k)));
    }
  }
}

TEST_CASE("su3 f constants from commutators") {
  ExactTensor c = structure_constants_from_rep(load_rep("su3"));
  CHECK(c.at({0, 1, 2}) == rat(1));        // f_123
  CHECK(c.at({0, 3, 6}) == rat(1, 2));     // f_147
  CHECK(c.at({0, 4, 5}) == rat(-1, 2));    // f_156
  CHECK(c.at({1, 3, 5}) == rat(1, 2));     // f_246
  CHECK(c.at({1, 4, 6}) == rat(1, 2));     // f_257
  CHECK(c.at({2, 3, 4}) == rat(1, 2));     // f_345
  CHECK(c.at({2, 5, 6}) == rat(-1, 2));    // f_367
  CHECK(c.at({3, 4, 7}) == sqrt3(1, 2));   // f_458
  CHECK(c.at({5, 6, 7}) == sqrt3(1, 2));   // f_678
  CHECK(c.at({0, 1, 3}).is_zero());
  CHECK(c.check_antisymmetric({0, 1}));
  CHECK(jacobi_residual_of(c).is_zero());
}

TEST_CASE("closure certificate rejects a padded non-closed set") {
  MatrixRep rep = load_rep("su2");
  // drop one generator: [e1, e2] leaves the remaining span
  rep.e.pop_back();
  rep.dim = 2;
  CHECK_THROWS_AS(structure_constants_from_rep(rep), OracleError);
}

TEST_CASE("d tensor from traces") {
  MatrixRep rep = load_rep("su3");
  ExactTensor d = d_tensor_from_traces(rep);
  CHECK(d.at({0, 0, 7}) == sqrt3(1, 3));   // d_118 = 1/sqrt(3)
  CHECK(d.at({0, 3, 5}) == rat(1, 2));     // d_146
  CHECK(d.at({7, 7, 7}) == sqrt3(-1, 3));  // d_888
  CHECK(d.at({3, 3, 7}) == sqrt3(-1, 6));  // d_448 = -1/(2 sqrt 3)
  CHECK(d.check_fully_symmetric());
  CHECK_THROWS_AS(d_tensor_from_traces(load_rep("su2")), OracleError);
}

TEST_CASE("four commutator with a repeated index vanishes") {
  MatrixRep rep = load_rep("su3");
  FourCommutator fc = four_commutator(rep, {0, 0, 1, 2});
  CHECK(fc.offspan.is_zero());
  for (const auto& c : fc.components) CHECK(c.is_zero());
}

TEST_CASE("four commutator lands in the algebra") {
  MatrixRep rep = load_rep("su3");
  FourCommutator fc = four_commutator(rep, {0, 1, 2, 3});
  CHECK(fc.offspan_norm2.is_zero());
  CHECK(fc.components[4] == rat(-3, 4));
  for (int s : {0, 1, 2, 3, 5, 6, 7}) CHECK(fc.components[static_cast<std::size_t>(s)].is_zero());
}

TEST_CASE("ad invariance of the oracle tensors") {
  const LieAlgebra& su3 = catalog_load("su3");
  auto k2 = invariant_symmetric_tensor(su3, 2);
  CHECK(ad_invariance_residual(k2).is_zero());
  auto k3 = invariant_symmetric_tensor(su3, 3);
  CHECK(ad_invariance_residual(k3).is_zero());
  auto k2su2 = invariant_symmetric_tensor(catalog_load("su2"), 2);
  CHECK(ad_invariance_residual(k2su2).is_zero());
}

}  // TEST_SUITE
