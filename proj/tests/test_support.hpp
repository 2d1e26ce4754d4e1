#ifndef GPS_TEST_SUPPORT_HPP
#define GPS_TEST_SUPPORT_HPP

#include <random>

#include "gps/lie_algebra.hpp"
#include "gps/multivector.hpp"
#include "gps/poisson.hpp"

namespace gps::test {

inline ExactScalar rat(long long num, long long den = 1) {
  return ExactScalar(make_rat(num, den));
}

inline ExactScalar sqrt3(long long num, long long den = 1) {
  return ExactScalar(BigRat(0), make_rat(num, den));
}

// Literal epsilon_{ijk} on three indices; the independent pattern the su2
// catalog is compared against.
inline int epsilon3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

inline ExactScalar random_rational(std::mt19937_64& rng, int max_abs = 5) {
  std::uniform_int_distribution<long long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long long> den(1, 4);
  return rat(num(rng), den(rng));
}

// Random order-0 multivector (polynomial) of total degree <= max_degree.
inline PolyMultivector random_polynomial(std::mt19937_64& rng, int dim, int max_degree,
                                         int terms = 4) {
  PolyMultivector f(dim, 0);
  std::uniform_int_distribution<int> var(0, dim - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Monomial mono(static_cast<std::size_t>(dim), 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++mono[static_cast<std::size_t>(var(rng))];
    f += PolyMultivector::monomial(dim, mono, random_rational(rng));
  }
  return f;
}

// Random multivector of the given order with monomial coefficients.
inline PolyMultivector random_multivector(std::mt19937_64& rng, int dim, int order,
                                          int max_degree, int terms = 4) {
  PolyMultivector m(dim, order);
  std::uniform_int_distribution<int> var(0, dim - 1);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    Monomial mono(static_cast<std::size_t>(dim), 0);
    int d = deg(rng);
    for (int k = 0; k < d; ++k) ++mono[static_cast<std::size_t>(var(rng))];
    std::vector<int> idx;
    for (int k = 0; k < order; ++k) idx.push_back(var(rng));
    m.add_term(mono, std::span<const int>(idx.data(), idx.size()), random_rational(rng));
  }
  return m;
}

// Shared certified structures; building them is exact and deterministic, so
// tests reuse one instance.
inline const GeneralizedPoissonStructure& su2_structure() {
  static const GeneralizedPoissonStructure s =
      from_cocycle(build_cocycle(invariant_symmetric_tensor(catalog_load("su2"), 2)));
  return s;
}

inline const GeneralizedPoissonStructure& su3_lie_poisson() {
  static const GeneralizedPoissonStructure s =
      from_cocycle(build_cocycle(invariant_symmetric_tensor(catalog_load("su3"), 2)));
  return s;
}

inline const CocycleTensor& su3_order5_cocycle() {
  static const CocycleTensor c =
      build_cocycle(invariant_symmetric_tensor(catalog_load("su3"), 3));
  return c;
}

inline const GeneralizedPoissonStructure& su3_order5_structure() {
  static const GeneralizedPoissonStructure s = from_cocycle(su3_order5_cocycle());
  return s;
}

// Adds delta to the signed permutation orbit of the 2p bracket slots at a
// fixed coefficient index; the minimal mutation that respects the bracket's
// alternation requirement.
inline void perturb_block_orbit(ExactTensor& omega, std::vector<int> block, int sigma,
                                const ExactScalar& delta) {
  std::sort(block.begin(), block.end());
  std::vector<int> idx(block.size() + 1);
  do {
    int sign = permutation_sign(std::span<const int>(block.data(), block.size()));
    std::copy(block.begin(), block.end(), idx.begin());
    idx.back() = sigma;
    omega.at(idx) += sign > 0 ? delta : -delta;
  } while (std::next_permutation(block.begin(), block.end()));
}

}  // namespace gps::test

#endif
