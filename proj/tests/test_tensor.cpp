#include <doctest.h>

#include <random>

#include "gps/json_io.hpp"
#include "gps/tensor.hpp"
#include "test_support.hpp"

using namespace gps;
using gps::test::epsilon3;
using gps::test::rat;

namespace {

ExactTensor random_tensor(std::mt19937_64& rng, int rank, int dim) {
  ExactTensor t(rank, dim);
  for (std::size_t k = 0; k < t.size(); ++k) t.flat(k) = gps::test::random_rational(rng, 3);
  return t;
}

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("alternation kills symmetric input") {
  ExactTensor s(2, 4, Symmetry::fully_symmetric);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      ExactScalar v = gps::test::random_rational(rng);
      s.at({i, j}) = v;
      s.at({j, i}) = v;
    }
  }
  CHECK(antisymmetrize_all(s, false).is_zero());
}

TEST_CASE("normalized alternation is a projector") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    ExactTensor t = random_tensor(rng, 3, 3);
    ExactTensor once = antisymmetrize_all(t, true);
    CHECK(antisymmetrize_all(once, true) == once);
    CHECK(once.check_fully_antisymmetric());
  }
}

TEST_CASE("unnormalized alternation scatters one entry into signed images") {
  ExactTensor t(3, 4);
  t.at({0, 1, 2}) = rat(1);
  ExactTensor alt = antisymmetrize_all(t, false);
  CHECK(alt.at({0, 1, 2}) == rat(1));
  CHECK(alt.at({1, 0, 2}) == rat(-1));
  CHECK(alt.at({2, 0, 1}) == rat(1));
  CHECK(alt.at({0, 2, 1}) == rat(-1));
  CHECK(alt.at({1, 2, 0}) == rat(1));
  CHECK(alt.at({2, 1, 0}) == rat(-1));
  CHECK(alt.nonzero_count() == 6);
}

TEST_CASE("partial alternation over a subset of positions") {
  std::mt19937_64 rng(17);
  ExactTensor t = random_tensor(rng, 3, 3);
  ExactTensor alt = antisymmetrize(t, {0, 2}, true);
  CHECK(alt.check_antisymmetric({0, 2}));
  CHECK(antisymmetrize(alt, {0, 2}, true) == alt);
}

TEST_CASE("contract reproduces the su2 Killing pattern against a brute-force oracle") {
  const ExactTensor& c = catalog_load("su2").structure;
  // oracle: k_ij = sum_{m,l} eps_{ilm} eps_{jml} over the literal epsilon
  ExactTensor expected(2, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      long long sum = 0;
      for (int m = 0; m < 3; ++m) {
        for (int l = 0; l < 3; ++l) sum += epsilon3(i, l, m) * epsilon3(j, m, l);
      }
      expected.at({i, j}) = rat(sum);
    }
  }
  ExactTensor killing = contract(c, c, {{1, 2}, {2, 1}});
  CHECK(killing == expected);
  for (int i = 0; i < 3; ++i) CHECK(expected.at({i, i}) == rat(-2));
}

TEST_CASE("lowering the su2 upper index gives a fully antisymmetric tensor") {
  const LieAlgebra& su2 = catalog_load("su2");
  // C^l_{ij} k_{lk} with the metric contraction on the upper slot
  ExactTensor lowered = contract(su2.structure, su2.killing, {{2, 0}});
  CHECK(lowered.check_fully_antisymmetric());
}

TEST_CASE("identity metric acts as identity") {
  ExactTensor delta = ExactTensor::identity(5);
  ExactTensor v(1, 5);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 5; ++k) v.at({k}) = gps::test::random_rational(rng);
  CHECK(contract(delta, v, {{1, 0}}) == v);
}

TEST_CASE("generalized kronecker") {
  SUBCASE("n = 1 is the identity") {
    CHECK(generalized_kronecker(1, 4) == ExactTensor::identity(4));
  }
  SUBCASE("n = 2 determinant expansion") {
    ExactTensor d2 = generalized_kronecker(2, 4);
    ExactTensor delta = ExactTensor::identity(4);
    for (int j1 = 0; j1 < 4; ++j1) {
      for (int j2 = 0; j2 < 4; ++j2) {
        for (int l1 = 0; l1 < 4; ++l1) {
          for (int l2 = 0; l2 < 4; ++l2) {
            ExactScalar expected = delta.at({j1, l1}) * delta.at({j2, l2}) -
                                   delta.at({j2, l1}) * delta.at({j1, l2});
            CHECK(d2.at({j1, j2, l1, l2}) == expected);
          }
        }
      }
    }
  }
  SUBCASE("n = 3 over range 2 vanishes") {
    CHECK(generalized_kronecker(3, 2).is_zero());
  }
  SUBCASE("contraction with an antisymmetric tensor yields n! times it") {
    std::mt19937_64 rng(29);
    for (int n : {2, 3}) {
      ExactTensor t = antisymmetrize_all(random_tensor(rng, n, 4), false);
      ExactTensor d = generalized_kronecker(n, 4);
      std::vector<std::pair<int, int>> pairs;
      for (int k = 0; k < n; ++k) pairs.emplace_back(n + k, k);
      ExactTensor out = contract(d, t, pairs);
      ExactScalar nf = rat(n == 2 ? 2 : 6);
      CHECK(out == t * nf);
    }
  }
}

TEST_CASE("antisymmetric against symmetric contraction vanishes") {
  std::mt19937_64 rng(31);
  for (int dim : {3, 5, 8}) {
    ExactTensor anti = antisymmetrize_all(random_tensor(rng, 3, dim), false);
    ExactTensor sym(2, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) {
        ExactScalar v = gps::test::random_rational(rng);
        sym.at({i, j}) = v;
        sym.at({j, i}) = v;
      }
    }
    CHECK(contract(anti, sym, {{0, 0}, {1, 1}}).is_zero());
    CHECK(contract(anti, sym, {{1, 0}, {2, 1}}).is_zero());
  }
}

TEST_CASE("contraction shape errors") {
  ExactTensor a(2, 3), b(2, 4);
  CHECK_THROWS_AS(contract(a, b, {{0, 0}}), TensorError);
  CHECK_THROWS_AS(contract(a, a, {{0, 0}, {0, 1}}), TensorError);
  CHECK_THROWS_AS(antisymmetrize(a, {0, 5}, true), TensorError);
}

TEST_CASE("json dump round-trips exactly") {
  std::mt19937_64 rng(37);
  ExactTensor t = random_tensor(rng, 3, 4);
  t.at({1, 2, 3}) = gps::test::sqrt3(5, 7);
  ExactTensor back = tensor_from_json(tensor_to_json(t));
  CHECK(back == t);
  CHECK(tensor_from_json(tensor_to_json(ExactTensor(2, 3))) == ExactTensor(2, 3));
}

}  // TEST_SUITE
