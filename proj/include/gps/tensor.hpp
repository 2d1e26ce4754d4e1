#ifndef GPS_TENSOR_HPP
#define GPS_TENSOR_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gps/exact.hpp"

namespace gps {

struct TensorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Symmetry : std::uint8_t { none, fully_antisymmetric, fully_symmetric };

/// Parity sign (+1/-1) of the permutation sorting `perm` ascending.
/// Entries must be distinct.
int permutation_sign(std::span<const int> perm);

/// Dense tensor over ExactScalar with a common index range per position.
/// Values are indexed with 0-based multi-indices; entries are stored
/// row-major. Instances are cheap to copy relative to catalog sizes
/// (dim <= 10, rank <= 5) and treated as immutable once built.
class ExactTensor {
 public:
  ExactTensor() = default;
  ExactTensor(int rank, int dim, Symmetry tag = Symmetry::none);

  static ExactTensor identity(int dim);  // rank-2 Kronecker delta

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  Symmetry symmetry_tag() const { return tag_; }
  void set_symmetry_tag(Symmetry tag) { tag_ = tag; }
  std::size_t size() const { return data_.size(); }

  const ExactScalar& at(std::span<const int> idx) const { return data_[offset(idx)]; }
  ExactScalar& at(std::span<const int> idx) { return data_[offset(idx)]; }
  const ExactScalar& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  ExactScalar& at(std::initializer_list<int> idx) {
    return data_[offset(std::span<const int>(idx.begin(), idx.size()))];
  }

  const ExactScalar& flat(std::size_t i) const { return data_[i]; }
  ExactScalar& flat(std::size_t i) { return data_[i]; }

  std::size_t offset(std::span<const int> idx) const;
  std::vector<int> unflatten(std::size_t offset) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;

  ExactTensor& operator+=(const ExactTensor& o);
  ExactTensor& operator-=(const ExactTensor& o);
  ExactTensor& operator*=(const ExactScalar& s);
  friend ExactTensor operator+(ExactTensor a, const ExactTensor& b) { return a += b; }
  friend ExactTensor operator-(ExactTensor a, const ExactTensor& b) { return a -= b; }
  friend ExactTensor operator*(ExactTensor a, const ExactScalar& s) { return a *= s; }

  friend bool operator==(const ExactTensor& a, const ExactTensor& b) {
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  /// Exhaustive scans; used to certify theorem claims rather than assume tags.
  bool check_antisymmetric(std::span<const int> positions) const;
  bool check_antisymmetric(std::initializer_list<int> positions) const {
    return check_antisymmetric(std::span<const int>(positions.begin(), positions.size()));
  }
  bool check_fully_antisymmetric() const;
  bool check_fully_symmetric() const;

 private:
  int rank_ = 0;
  int dim_ = 0;
  Symmetry tag_ = Symmetry::none;
  std::vector<ExactScalar> data_;
};

/// Signed sum over permutations of the selected index positions; divided by
/// n! when `normalized`. Tagged fully_antisymmetric when every position is
/// selected.
ExactTensor antisymmetrize(const ExactTensor& t, std::span<const int> positions, bool normalized);
ExactTensor antisymmetrize(const ExactTensor& t, std::initializer_list<int> positions,
                           bool normalized);
ExactTensor antisymmetrize_all(const ExactTensor& t, bool normalized);

/// Unsigned counterpart (symmetrization projector when normalized).
ExactTensor symmetrize_all(const ExactTensor& t, bool normalized);

/// Exact contraction of A and B over the given (position-in-A, position-in-B)
/// pairs; result carries A's free indices followed by B's.
ExactTensor contract(const ExactTensor& a, const ExactTensor& b,
                     std::span<const std::pair<int, int>> pairs);
ExactTensor contract(const ExactTensor& a, const ExactTensor& b,
                     std::initializer_list<std::pair<int, int>> pairs);

/// Generalized Kronecker delta of n index pairs: rank-2n tensor
/// delta^{j_1..j_n}_{l_1..l_n} = det(delta^{j_a}_{l_b}), laid out with the
/// n upper indices first. Zero tensor when dim < n.
ExactTensor generalized_kronecker(int n, int dim);

/// Iterates all multi-indices of the given rank over [0, dim); `body` may
/// return normally for each visited index.
void for_each_index(int rank, int dim, const std::function<void(std::span<const int>)>& body);

/// Visits strictly increasing index tuples of the given length over [0, dim).
void for_each_increasing(int length, int dim,
                         const std::function<void(std::span<const int>)>& body);

}  // namespace gps

#endif
