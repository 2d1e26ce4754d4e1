#ifndef GPS_MATRIX_REP_HPP
#define GPS_MATRIX_REP_HPP

#include <array>
#include <string>
#include <vector>

#include "gps/exact.hpp"
#include "gps/tensor.hpp"

namespace gps {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Small dense matrix over the exact complex field, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  static ExactMatrix identity(int n);

  int size() const { return n_; }
  const ExactComplex& at(int r, int c) const { return a_[idx(r, c)]; }
  ExactComplex& at(int r, int c) { return a_[idx(r, c)]; }

  bool is_zero() const;
  ExactComplex trace() const;
  ExactMatrix dagger() const;  // conjugate transpose
  /// Sum of squared entry moduli; exact, zero iff the matrix is zero.
  ExactScalar norm2() const;

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactComplex& s);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactComplex& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_ = 0;
  std::vector<ExactComplex> a_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b);

/// Defining representation of a catalog algebra. Generators are the
/// anti-Hermitian basis e_a = -i T_a with real structure constants; the
/// Hermitian partners T_a satisfy Tr(T_a T_b) = trace_norm * delta_ab
/// exactly (trace_norm = 1/2 across the catalog).
struct MatrixRep {
  std::string name;
  int n = 0;    // representation size
  int dim = 0;  // algebra dimension
  std::vector<ExactMatrix> e;
  ExactScalar trace_norm;

  ExactMatrix T(int a) const;  // i * e_a
};

/// Catalog: su2, su3, so3, so4, so5. Validates anti-Hermiticity,
/// tracelessness and the trace normalization before returning.
MatrixRep load_rep(const std::string& name);

/// C^k_{ij} from commutators, projected with the trace form; the projection
/// remainder must vanish exactly (closure certificate) and the components
/// must be real. Result layout: (i, j, k) for C^k_{ij}.
ExactTensor structure_constants_from_rep(const MatrixRep& rep);

/// d_ijk = Tr(lambda_i {lambda_j, lambda_k}) / 4 for su3, exact and fully
/// symmetric. Also certifies the anticommutator identity
/// {T_i, T_j} = 1/3 delta_ij 1 + d_ijk T_k on the matrix side.
ExactTensor d_tensor_from_traces(const MatrixRep& rep);

struct FourCommutator {
  std::vector<ExactScalar> components;  // expansion over the T basis
  ExactMatrix offspan;                  // exact remainder after projection
  ExactScalar offspan_norm2;            // zero iff the sum lies in the algebra
};

/// Signed sum over the 24 permutations of T_{j1} T_{j2} T_{j3} T_{j4},
/// decomposed on the T basis. Indices are 0-based and may repeat (the sum
/// then vanishes).
FourCommutator four_commutator(const MatrixRep& rep, const std::array<int, 4>& j);

}  // namespace gps

#endif
