#ifndef GPS_MULTIVECTOR_HPP
#define GPS_MULTIVECTOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gps/exact.hpp"

namespace gps {

struct MultivectorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vector of a monomial in x_1..x_r (0-based storage).
using Monomial = std::vector<std::uint8_t>;
/// Strictly increasing 0-based derivation indices of a wedge of partials.
using IndexTuple = std::vector<std::uint8_t>;

/// Total degree cap; deep polynomial products are bugs, not use cases.
inline constexpr unsigned kMaxMonomialDegree = 16;

/// Multivector field on R^r with polynomial coefficients, stored as a
/// canonical term map (monomial, increasing derivation tuple) -> coefficient.
/// Order n is uniform across terms; n = 0 is a plain polynomial. Immutable
/// in spirit: operations return new values.
class PolyMultivector {
 public:
  PolyMultivector() = default;
  PolyMultivector(int dim, int order);

  static PolyMultivector constant(int dim, ExactScalar c);
  static PolyMultivector coordinate(int dim, int i);  // x_{i+1}, 0-based i
  static PolyMultivector monomial(int dim, const Monomial& mono, ExactScalar c);

  int dim() const { return dim_; }
  int order() const { return order_; }
  /// Multivector degree in the graded-algebra sense (order - 1).
  int degree() const { return order_ - 1; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  using TermMap = std::map<std::pair<Monomial, IndexTuple>, ExactScalar>;
  const TermMap& terms() const { return terms_; }

  /// Adds coeff * x^mono * d^{indices}; indices may arrive unsorted and are
  /// canonicalized with the permutation sign (terms with repeats vanish).
  void add_term(const Monomial& mono, std::span<const int> indices, const ExactScalar& coeff);
  void add_term(const Monomial& mono, const IndexTuple& sorted_indices, const ExactScalar& coeff);

  PolyMultivector operator-() const;
  PolyMultivector& operator+=(const PolyMultivector& o);
  PolyMultivector& operator-=(const PolyMultivector& o);
  PolyMultivector& operator*=(const ExactScalar& s);
  friend PolyMultivector operator+(PolyMultivector a, const PolyMultivector& b) { return a += b; }
  friend PolyMultivector operator-(PolyMultivector a, const PolyMultivector& b) { return a -= b; }
  friend PolyMultivector operator*(PolyMultivector a, const ExactScalar& s) { return a *= s; }

  friend bool operator==(const PolyMultivector& a, const PolyMultivector& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolyMultivector& a, const PolyMultivector& b) { return !(a == b); }

  /// Largest total monomial degree over the stored terms (0 when empty).
  unsigned max_poly_degree() const;

  /// Order-0 only: exact evaluation at a rational point.
  ExactScalar eval(std::span<const ExactScalar> point) const;

  /// Canonical text form; polynomials print like "x1^2*x2-1/2*x3",
  /// higher orders append d1^d2... wedge factors.
  std::string str() const;

 private:
  int dim_ = 0;
  int order_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyMultivector& m);

/// Exterior product; graded-commutative, A^B = (-1)^{ab} B^A.
PolyMultivector wedge(const PolyMultivector& a, const PolyMultivector& b);

/// Schouten-Nijenhuis bracket of multivector fields, order a+b-1. Extends the
/// Lie bracket of vector fields; graded antisymmetry
/// [A,B] = -(-1)^{(a-1)(b-1)} [B,A] and the graded Leibniz rule
/// [A, B^C] = [A,B]^C + (-1)^{(a-1)b} B^[A,C] hold exactly. The overall sign
/// is anchored so that for a linear 2p-vector built from a structure tensor,
/// [L,L] is +2 times the grouped alternation residual of that tensor.
PolyMultivector schouten_nijenhuis(const PolyMultivector& a, const PolyMultivector& b);

/// X_f = i_{df} L for a bivector L: in components sum_{j<k} c_{jk}
/// (df_j d^k - df_k d^j).
PolyMultivector hamiltonian_vector_field(const PolyMultivector& l, const PolyMultivector& f);

/// Partial derivative of an order-0 multivector.
PolyMultivector poly_partial(const PolyMultivector& f, int var);

/// Exact gradient of an order-0 multivector, one polynomial per coordinate.
std::vector<PolyMultivector> gradient(const PolyMultivector& f);

/// Product of order-0 multivectors (wedge specialization, kept for clarity).
PolyMultivector poly_mul(const PolyMultivector& a, const PolyMultivector& b);

/// Parses the CLI polynomial grammar: rational coefficients, variables
/// x1..xr, operators + - * ^ and parentheses. Throws MultivectorError.
PolyMultivector parse_polynomial(const std::string& text, int dim);

/// Merged wedge of two increasing tuples: sign and combined tuple, or
/// nullopt when an index repeats.
std::optional<std::pair<int, IndexTuple>> wedge_merge(const IndexTuple& a, const IndexTuple& b);

}  // namespace gps

#endif
