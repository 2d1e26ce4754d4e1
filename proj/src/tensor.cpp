#include "gps/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gps {

int permutation_sign(std::span<const int> perm) {
  // Counting inversions is fine at these sizes.
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ExactTensor::ExactTensor(int rank, int dim, Symmetry tag) : rank_(rank), dim_(dim), tag_(tag) {
  if (rank < 0 || dim < 0) throw TensorError("negative rank or dim");
  std::size_t n = 1;
  for (int k = 0; k < rank; ++k) n *= static_cast<std::size_t>(dim);
  data_.assign(n, ExactScalar());
}

ExactTensor ExactTensor::identity(int dim) {
  ExactTensor t(2, dim, Symmetry::fully_symmetric);
  for (int i = 0; i < dim; ++i) t.at({i, i}) = ExactScalar(1);
  return t;
}

std::size_t ExactTensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_) {
    throw TensorError("multi-index length " + std::to_string(idx.size()) +
                      " does not match rank " + std::to_string(rank_));
  }
  std::size_t off = 0;
  for (int k = 0; k < rank_; ++k) {
    if (idx[k] < 0 || idx[k] >= dim_) throw TensorError("index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[k]);
  }
  return off;
}

std::vector<int> ExactTensor::unflatten(std::size_t offset) const {
  std::vector<int> idx(static_cast<std::size_t>(rank_));
  for (int k = rank_ - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(offset % static_cast<std::size_t>(dim_));
    offset /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool ExactTensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

std::size_t ExactTensor::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const ExactScalar& x) { return !x.is_zero(); }));
}

ExactTensor& ExactTensor::operator+=(const ExactTensor& o) {
  if (rank_ != o.rank_ || dim_ != o.dim_) throw TensorError("tensor shape mismatch in +=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  tag_ = Symmetry::none;
  return *this;
}

ExactTensor& ExactTensor::operator-=(const ExactTensor& o) {
  if (rank_ != o.rank_ || dim_ != o.dim_) throw TensorError("tensor shape mismatch in -=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  tag_ = Symmetry::none;
  return *this;
}

ExactTensor& ExactTensor::operator*=(const ExactScalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

void for_each_index(int rank, int dim, const std::function<void(std::span<const int>)>& body) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  if (rank == 0) {
    body(idx);
    return;
  }
  if (dim == 0) return;
  while (true) {
    body(idx);
    int k = rank - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == dim) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

void for_each_increasing(int length, int dim,
                         const std::function<void(std::span<const int>)>& body) {
  if (length > dim) return;
  std::vector<int> idx(static_cast<std::size_t>(length));
  std::iota(idx.begin(), idx.end(), 0);
  if (length == 0) {
    body(idx);
    return;
  }
  while (true) {
    body(idx);
    int k = length - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == dim - length + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < length; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

namespace {

void check_positions(const ExactTensor& t, std::span<const int> positions) {
  for (int p : positions) {
    if (p < 0 || p >= t.rank()) throw TensorError("index position out of range");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      if (positions[i] == positions[j]) throw TensorError("repeated index position");
    }
  }
}

ExactScalar factorial_scalar(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return ExactScalar(BigRat(f));
}

}  // namespace

ExactTensor antisymmetrize(const ExactTensor& t, std::span<const int> positions, bool normalized) {
  check_positions(t, positions);
  const int n = static_cast<int>(positions.size());
  ExactTensor out(t.rank(), t.dim());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  // Signed sum over permutations of the selected positions.
  do {
    int sign = permutation_sign(perm);
    for_each_index(t.rank(), t.dim(), [&](std::span<const int> idx) {
      std::copy(idx.begin(), idx.end(), src.begin());
      for (int a = 0; a < n; ++a) {
        src[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)])] =
            idx[static_cast<std::size_t>(positions[static_cast<std::size_t>(perm[a])])];
      }
      const ExactScalar& v = t.at(src);
      if (v.is_zero()) return;
      if (sign > 0) {
        out.at(idx) += v;
      } else {
        out.at(idx) -= v;
      }
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (normalized) {
    ExactScalar inv = ExactScalar(1) / factorial_scalar(n);
    out *= inv;
  }
  if (n == t.rank()) out.set_symmetry_tag(Symmetry::fully_antisymmetric);
  return out;
}

ExactTensor antisymmetrize(const ExactTensor& t, std::initializer_list<int> positions,
                           bool normalized) {
  return antisymmetrize(t, std::span<const int>(positions.begin(), positions.size()), normalized);
}

ExactTensor antisymmetrize_all(const ExactTensor& t, bool normalized) {
  std::vector<int> all(static_cast<std::size_t>(t.rank()));
  std::iota(all.begin(), all.end(), 0);
  return antisymmetrize(t, all, normalized);
}

ExactTensor symmetrize_all(const ExactTensor& t, bool normalized) {
  const int n = t.rank();
  ExactTensor out(n, t.dim());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> src(static_cast<std::size_t>(n));
  do {
    for_each_index(n, t.dim(), [&](std::span<const int> idx) {
      for (int a = 0; a < n; ++a) {
        src[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(perm[a])];
      }
      const ExactScalar& v = t.at(src);
      if (!v.is_zero()) out.at(idx) += v;
    });
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (normalized) {
    ExactScalar inv = ExactScalar(1) / factorial_scalar(n);
    out *= inv;
  }
  out.set_symmetry_tag(Symmetry::fully_symmetric);
  return out;
}

ExactTensor contract(const ExactTensor& a, const ExactTensor& b,
                     std::span<const std::pair<int, int>> pairs) {
  std::vector<bool> bound_a(static_cast<std::size_t>(a.rank()), false);
  std::vector<bool> bound_b(static_cast<std::size_t>(b.rank()), false);
  for (auto [pa, pb] : pairs) {
    if (pa < 0 || pa >= a.rank() || pb < 0 || pb >= b.rank()) {
      throw TensorError("contraction position out of range");
    }
    if (bound_a[static_cast<std::size_t>(pa)] || bound_b[static_cast<std::size_t>(pb)]) {
      throw TensorError("repeated contraction position");
    }
    bound_a[static_cast<std::size_t>(pa)] = bound_b[static_cast<std::size_t>(pb)] = true;
  }
  if (a.rank() > 0 && b.rank() > 0 && a.dim() != b.dim()) {
    throw TensorError("contraction over mismatched index ranges");
  }
  std::vector<int> free_a, free_b;
  for (int k = 0; k < a.rank(); ++k) {
    if (!bound_a[static_cast<std::size_t>(k)]) free_a.push_back(k);
  }
  for (int k = 0; k < b.rank(); ++k) {
    if (!bound_b[static_cast<std::size_t>(k)]) free_b.push_back(k);
  }
  const int out_rank = static_cast<int>(free_a.size() + free_b.size());
  const int dim = a.rank() > 0 ? a.dim() : b.dim();
  ExactTensor out(out_rank, dim);

  std::vector<int> ia(static_cast<std::size_t>(a.rank()));
  std::vector<int> ib(static_cast<std::size_t>(b.rank()));
  const int n_sum = static_cast<int>(pairs.size());
  for_each_index(out_rank, dim, [&](std::span<const int> idx) {
    for (std::size_t k = 0; k < free_a.size(); ++k) {
      ia[static_cast<std::size_t>(free_a[k])] = idx[k];
    }
    for (std::size_t k = 0; k < free_b.size(); ++k) {
      ib[static_cast<std::size_t>(free_b[k])] = idx[free_a.size() + k];
    }
    ExactScalar sum;
    for_each_index(n_sum, dim, [&](std::span<const int> s) {
      for (int k = 0; k < n_sum; ++k) {
        ia[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].first)] = s[k];
        ib[static_cast<std::size_t>(pairs[static_cast<std::size_t>(k)].second)] = s[k];
      }
      const ExactScalar& va = a.at(ia);
      if (va.is_zero()) return;
      const ExactScalar& vb = b.at(ib);
      if (vb.is_zero()) return;
      sum += va * vb;
    });
    out.at(idx) = std::move(sum);
  });
  return out;
}

ExactTensor contract(const ExactTensor& a, const ExactTensor& b,
                     std::initializer_list<std::pair<int, int>> pairs) {
  return contract(a, b, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

ExactTensor generalized_kronecker(int n, int dim) {
  if (n < 1) throw TensorError("generalized_kronecker requires n >= 1");
  ExactTensor out(2 * n, dim);
  if (dim < n) return out;  // no injective assignment exists
  // Entry (j_1..j_n, l_1..l_n) is the sign of the permutation taking l to j
  // when the two tuples are permutations of the same distinct index set,
  // else 0. With j = pj(S) and l = pl(S) for an increasing set S, that sign
  // is sign(pj) * sign(pl).
  std::vector<int> full(static_cast<std::size_t>(2 * n));
  std::vector<int> perm_j(static_cast<std::size_t>(n));
  std::vector<int> perm_l(static_cast<std::size_t>(n));
  for_each_increasing(n, dim, [&](std::span<const int> base) {
    std::iota(perm_j.begin(), perm_j.end(), 0);
    do {
      int sign_j = permutation_sign(perm_j);
      for (int k = 0; k < n; ++k) {
        full[static_cast<std::size_t>(k)] = base[static_cast<std::size_t>(perm_j[k])];
      }
      std::iota(perm_l.begin(), perm_l.end(), 0);
      do {
        int sign_l = permutation_sign(perm_l);
        for (int k = 0; k < n; ++k) {
          full[static_cast<std::size_t>(n + k)] = base[static_cast<std::size_t>(perm_l[k])];
        }
        out.at(full) = ExactScalar(sign_j * sign_l);
      } while (std::next_permutation(perm_l.begin(), perm_l.end()));
    } while (std::next_permutation(perm_j.begin(), perm_j.end()));
  });
  return out;
}

bool ExactTensor::check_antisymmetric(std::span<const int> positions) const {
  check_positions(*this, positions);
  const int n = static_cast<int>(positions.size());
  bool ok = true;
  std::vector<int> swapped(static_cast<std::size_t>(rank_));
  for_each_index(rank_, dim_, [&](std::span<const int> idx) {
    if (!ok) return;
    // repeated selected index => entry must vanish
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (idx[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)])] ==
            idx[static_cast<std::size_t>(positions[static_cast<std::size_t>(b)])]) {
          if (!at(idx).is_zero()) ok = false;
        }
      }
    }
    if (!ok) return;
    // adjacent transpositions of selected positions flip the sign
    for (int a = 0; a + 1 < n && ok; ++a) {
      std::copy(idx.begin(), idx.end(), swapped.begin());
      std::swap(swapped[static_cast<std::size_t>(positions[static_cast<std::size_t>(a)])],
                swapped[static_cast<std::size_t>(positions[static_cast<std::size_t>(a + 1)])]);
      if (at(swapped) != -at(idx)) ok = false;
    }
  });
  return ok;
}

bool ExactTensor::check_fully_antisymmetric() const {
  std::vector<int> all(static_cast<std::size_t>(rank_));
  std::iota(all.begin(), all.end(), 0);
  return check_antisymmetric(all);
}

bool ExactTensor::check_fully_symmetric() const {
  bool ok = true;
  std::vector<int> swapped(static_cast<std::size_t>(rank_));
  for_each_index(rank_, dim_, [&](std::span<const int> idx) {
    if (!ok) return;
    for (int a = 0; a + 1 < rank_ && ok; ++a) {
      std::copy(idx.begin(), idx.end(), swapped.begin());
      std::swap(swapped[static_cast<std::size_t>(a)], swapped[static_cast<std::size_t>(a + 1)]);
      if (at(swapped) != at(idx)) ok = false;
    }
  });
  return ok;
}

}  // namespace gps
