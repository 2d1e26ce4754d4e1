#ifndef GPS_POISSON_HPP
#define GPS_POISSON_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gps/lie_algebra.hpp"
#include "gps/multivector.hpp"
#include "gps/tensor.hpp"

namespace gps {

struct PoissonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Result of the generalized Jacobi identity check for a linear structure.
/// Stored sparsely on canonical increasing tuples; the dense tensor at p = 2
/// would have rank 8 over dim 8 and is never materialized.
struct GjiResidual {
  int p = 0;
  int dim = 0;
  long long term_groups = 0;  // C(4p-1, 2p-1) grouped alternation terms

  struct Entry {
    std::vector<int> tuple;  // strictly increasing, length 4p-1
    int sigma = 0;
    ExactScalar value;
  };
  std::vector<Entry> nonzero;

  bool is_zero() const { return nonzero.empty(); }
  std::size_t nonzero_count() const { return nonzero.size(); }
};

/// Grouped alternation residual
///   R_{j1..j_{4p-1}}^sigma = Alt(omega_{j1..j_{2p-1} k}^sigma
///                                omega_{j_{2p}..j_{4p-1}}^k),
/// computed as the signed sum over (2p-1 | 2p) shuffles; the full
/// unnormalized alternation is (2p-1)!(2p)! times this and has the same
/// zero set. omega must be fully antisymmetric of odd rank 2p+1 with the
/// coefficient index last.
GjiResidual gji_residual_of(const ExactTensor& omega);

/// The residual as a linear multivector sum_N R_N^sigma x_sigma d^N, the
/// object the Schouten bracket certificate is compared against.
PolyMultivector residual_multivector(const GjiResidual& r);

struct GjiViolation : PoissonError {
  GjiViolation(std::string msg, GjiResidual r)
      : PoissonError(std::move(msg)), residual(std::move(r)) {}
  GjiResidual residual;
};

/// Certified linear generalized Poisson structure of bracket arity 2p.
struct GeneralizedPoissonStructure {
  int p = 0;
  CocycleTensor cocycle;   // order 2p+1
  PolyMultivector lambda;  // (1/(2p)!) omega_{l1..l2p}^sigma x_sigma d^{l1..l2p}
  const LieAlgebra* algebra = nullptr;
  long long term_groups = 0;
  /// schouten_nijenhuis(lambda, lambda) = snb_residual_ratio * residual
  /// multivector, verified at construction (both sides zero for certified
  /// structures; the ratio is pinned by the bracket convention).
  ExactScalar snb_residual_ratio;
};

/// Builds lambda from the cocycle and certifies the structure twice: the
/// grouped alternation residual must vanish exactly AND the Schouten
/// bracket of lambda with itself must vanish exactly. Refuses non-odd or
/// non-antisymmetric input; throws GjiViolation carrying the residual when
/// the generalized Jacobi identity fails.
GeneralizedPoissonStructure from_cocycle(const CocycleTensor& w);

/// lambda = sum over increasing tuples of omega_L^sigma x_sigma d^L.
PolyMultivector lambda_from_omega(const ExactTensor& omega);

/// { f_1, .., f_{2p} } = omega_{j1..j2p}^sigma x_sigma d_{j1} f_1 ... ;
/// exact, multilinear, alternating, Leibniz.
PolyMultivector gpb_eval(const GeneralizedPoissonStructure& s,
                         std::span<const PolyMultivector> fs);
PolyMultivector gpb_eval(const GeneralizedPoissonStructure& s,
                         std::initializer_list<PolyMultivector> fs);

/// [lambda_1, lambda_2]; zero means the structures are compatible.
PolyMultivector compatibility_residual(const GeneralizedPoissonStructure& a,
                                       const GeneralizedPoissonStructure& b);

struct CheckWitness {
  std::vector<int> args;     // 0-based coordinate indices involved
  PolyMultivector bracket;   // the offending nonzero bracket
};

struct CheckResult {
  bool ok = true;
  std::string note;
  std::optional<CheckWitness> witness;
  explicit operator bool() const { return ok; }
};

/// c is Casimir iff {x_{k1}, .., x_{k_{2p-1}}, c} = 0 for every coordinate
/// choice; coordinates suffice for all smooth arguments by multilinearity
/// and the Leibniz rule, which the certificate note records.
CheckResult casimir_check(const GeneralizedPoissonStructure& s, const PolyMultivector& c);

/// A family of k >= 2p functions is in involution iff every 2p-subset
/// brackets to zero (any argument order, by alternation).
CheckResult involution_check(const GeneralizedPoissonStructure& s,
                             std::span<const PolyMultivector> fs);

}  // namespace gps

#endif
