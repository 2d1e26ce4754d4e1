#include "gps/matrix_rep.hpp"

#include <algorithm>
#include <numeric>

namespace gps {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int k = 0; k < n; ++k) m.at(k, k) = ExactComplex(1);
  return m;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const ExactComplex& z) { return z.is_zero(); });
}

ExactComplex ExactMatrix::trace() const {
  ExactComplex t;
  for (int k = 0; k < n_; ++k) t += at(k, k);
  return t;
}

ExactMatrix ExactMatrix::dagger() const {
  ExactMatrix m(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) m.at(c, r) = at(r, c).conj();
  }
  return m;
}

ExactScalar ExactMatrix::norm2() const {
  ExactScalar s;
  for (const auto& z : a_) s += z.norm2();
  return s;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (n_ != o.n_) throw OracleError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (n_ != o.n_) throw OracleError("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactComplex& s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) throw OracleError("matrix size mismatch");
  const int n = a.n_;
  ExactMatrix out(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < n; ++k) {
      const ExactComplex& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        const ExactComplex& bkc = b.at(k, c);
        if (bkc.is_zero()) continue;
        out.at(r, c) += ark * bkc;
      }
    }
  }
  return out;
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

ExactMatrix anticommutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b + b * a; }

ExactMatrix MatrixRep::T(int a) const { return e[static_cast<std::size_t>(a)] * ExactComplex::i(); }

namespace {

const ExactScalar kHalf{make_rat(1, 2)};

ExactComplex c_num(long long re_num, long long re_den, long long im_num = 0, long long im_den = 1) {
  return {ExactScalar(make_rat(re_num, re_den)), ExactScalar(make_rat(im_num, im_den))};
}

// e_a = -i * (sigma_a / 2)
std::vector<ExactMatrix> su2_generators() {
  std::vector<ExactMatrix> e(3, ExactMatrix(2));
  // sigma_1
  e[0].at(0, 1) = c_num(0, 1, -1, 2);
  e[0].at(1, 0) = c_num(0, 1, -1, 2);
  // sigma_2: entries -i and i; times -i/2 gives -1/2 and 1/2
  e[1].at(0, 1) = c_num(-1, 2);
  e[1].at(1, 0) = c_num(1, 2);
  // sigma_3
  e[2].at(0, 0) = c_num(0, 1, -1, 2);
  e[2].at(1, 1) = c_num(0, 1, 1, 2);
  return e;
}

// e_a = -i * (lambda_a / 2), Gell-Mann basis
std::vector<ExactMatrix> su3_generators() {
  std::vector<ExactMatrix> lam(8, ExactMatrix(3));
  lam[0].at(0, 1) = 1;
  lam[0].at(1, 0) = 1;
  lam[1].at(0, 1) = c_num(0, 1, -1, 1);
  lam[1].at(1, 0) = c_num(0, 1, 1, 1);
  lam[2].at(0, 0) = 1;
  lam[2].at(1, 1) = -1;
  lam[3].at(0, 2) = 1;
  lam[3].at(2, 0) = 1;
  lam[4].at(0, 2) = c_num(0, 1, -1, 1);
  lam[4].at(2, 0) = c_num(0, 1, 1, 1);
  lam[5].at(1, 2) = 1;
  lam[5].at(2, 1) = 1;
  lam[6].at(1, 2) = c_num(0, 1, -1, 1);
  lam[6].at(2, 1) = c_num(0, 1, 1, 1);
  // lambda_8 = diag(1, 1, -2) / sqrt(3); 1/sqrt(3) = (1/3) sqrt(3)
  const ExactScalar inv_sqrt3{BigRat(0), make_rat(1, 3)};
  lam[7].at(0, 0) = inv_sqrt3;
  lam[7].at(1, 1) = inv_sqrt3;
  lam[7].at(2, 2) = ExactScalar(-2) * inv_sqrt3;

  const ExactComplex minus_i_half{ExactScalar(0), ExactScalar(make_rat(-1, 2))};
  std::vector<ExactMatrix> e;
  e.reserve(8);
  for (auto& l : lam) e.push_back(l * minus_i_half);
  return e;
}

// e_(ab) = (E_ab - E_ba) / 2 for a < b in lexicographic order; these are
// already anti-Hermitian (real antisymmetric).
std::vector<ExactMatrix> so_generators(int n) {
  std::vector<ExactMatrix> e;
  e.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      ExactMatrix m(n);
      m.at(a, b) = c_num(1, 2);
      m.at(b, a) = c_num(-1, 2);
      e.push_back(std::move(m));
    }
  }
  return e;
}

void validate_rep(const MatrixRep& rep) {
  for (int a = 0; a < rep.dim; ++a) {
    const ExactMatrix& ea = rep.e[static_cast<std::size_t>(a)];
    if (!(ea.dagger() + ea).is_zero()) {
      throw OracleError(rep.name + ": generator " + std::to_string(a + 1) + " not anti-Hermitian");
    }
    if (!ea.trace().is_zero()) {
      throw OracleError(rep.name + ": generator " + std::to_string(a + 1) + " not traceless");
    }
  }
  for (int a = 0; a < rep.dim; ++a) {
    ExactMatrix ta = rep.T(a);
    for (int b = a; b < rep.dim; ++b) {
      ExactComplex tr = (ta * rep.T(b)).trace();
      ExactComplex expected = a == b ? ExactComplex(rep.trace_norm) : ExactComplex();
      if (tr != expected) {
        throw OracleError(rep.name + ": trace form is not trace_norm * identity at (" +
                          std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
      }
    }
  }
}

}  // namespace

MatrixRep load_rep(const std::string& name) {
  MatrixRep rep;
  rep.name = name;
  rep.trace_norm = kHalf;
  if (name == "su2") {
    rep.n = 2;
    rep.e = su2_generators();
  } else if (name == "su3") {
    rep.n = 3;
    rep.e = su3_generators();
  } else if (name == "so3" || name == "so4" || name == "so5") {
    rep.n = name.back() - '0';
    rep.e = so_generators(rep.n);
  } else {
    throw OracleError("unknown algebra '" + name + "'");
  }
  rep.dim = static_cast<int>(rep.e.size());
  validate_rep(rep);
  return rep;
}

ExactTensor structure_constants_from_rep(const MatrixRep& rep) {
  const int r = rep.dim;
  ExactTensor c(3, r);
  // Tr(e_a e_b) = -trace_norm * delta_ab for the anti-Hermitian basis.
  const ExactScalar proj_den = -rep.trace_norm;
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      ExactMatrix bracket = commutator(rep.e[static_cast<std::size_t>(i)],
                                       rep.e[static_cast<std::size_t>(j)]);
      ExactMatrix remainder = bracket;
      for (int k = 0; k < r; ++k) {
        ExactComplex comp = (bracket * rep.e[static_cast<std::size_t>(k)]).trace();
        if (comp.is_zero()) continue;
        if (!comp.is_real()) {
          throw OracleError(rep.name + ": complex structure constant component");
        }
        ExactScalar ck = comp.real() / proj_den;
        c.at({i, j, k}) = ck;
        c.at({j, i, k}) = -ck;
        remainder -= rep.e[static_cast<std::size_t>(k)] * ExactComplex(ck);
      }
      if (!remainder.is_zero()) {
        throw OracleError(rep.name + ": commutator [" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + "] leaves the span (closure violated)");
      }
    }
  }
  return c;
}

ExactTensor d_tensor_from_traces(const MatrixRep& rep) {
  if (rep.name != "su3") throw OracleError("d tensor is defined for the su3 oracle only");
  const int r = rep.dim;
  std::vector<ExactMatrix> t;
  t.reserve(static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) t.push_back(rep.T(a));

  ExactTensor d(3, r, Symmetry::fully_symmetric);
  // d_ijk = Tr(lambda_i {lambda_j, lambda_k}) / 4 = 2 Tr(T_i {T_j, T_k})
  for (int j = 0; j < r; ++j) {
    for (int k = j; k < r; ++k) {
      ExactMatrix anti = anticommutator(t[static_cast<std::size_t>(j)],
                                        t[static_cast<std::size_t>(k)]);
      for (int i = 0; i < r; ++i) {
        ExactComplex tr = (t[static_cast<std::size_t>(i)] * anti).trace();
        if (tr.is_zero()) continue;
        if (!tr.is_real()) throw OracleError("su3: complex d component");
        ExactScalar dijk = ExactScalar(2) * tr.real();
        d.at({i, j, k}) = dijk;
        d.at({i, k, j}) = dijk;
      }
      // matrix-side certificate: {T_j, T_k} = 1/3 delta_jk 1 + d_jkl T_l
      ExactMatrix residual = anti;
      if (j == k) {
        ExactMatrix third = ExactMatrix::identity(rep.n) * ExactComplex(ExactScalar(make_rat(1, 3)));
        residual -= third;
      }
      for (int l = 0; l < r; ++l) {
        const ExactScalar& djkl = d.at({l, j, k});
        if (!djkl.is_zero()) residual -= t[static_cast<std::size_t>(l)] * ExactComplex(djkl);
      }
      if (!residual.is_zero()) {
        throw OracleError("su3: anticommutator identity violated at (" + std::to_string(j + 1) +
                          "," + std::to_string(k + 1) + ")");
      }
    }
  }
  // fill remaining symmetric images (i vs (j,k) blocks already symmetric)
  ExactTensor sym = symmetrize_all(d, true);
  if (!(sym == d)) {
    // the trace definition is symmetric; any mismatch is an implementation fault
    throw OracleError("su3: d tensor failed the symmetry certificate");
  }
  return d;
}

FourCommutator four_commutator(const MatrixRep& rep, const std::array<int, 4>& j) {
  for (int idx : j) {
    if (idx < 0 || idx >= rep.dim) throw OracleError("four_commutator index out of range");
  }
  std::array<ExactMatrix, 4> t{rep.T(j[0]), rep.T(j[1]), rep.T(j[2]), rep.T(j[3])};
  std::array<int, 4> perm{0, 1, 2, 3};
  ExactMatrix sum(rep.n);
  do {
    int sign = permutation_sign(std::span<const int>(perm.data(), 4));
    ExactMatrix prod = t[static_cast<std::size_t>(perm[0])] * t[static_cast<std::size_t>(perm[1])] *
                       t[static_cast<std::size_t>(perm[2])] * t[static_cast<std::size_t>(perm[3])];
    if (sign > 0) {
      sum += prod;
    } else {
      sum -= prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  FourCommutator out;
  out.components.assign(static_cast<std::size_t>(rep.dim), ExactScalar());
  ExactMatrix remainder = sum;
  for (int s = 0; s < rep.dim; ++s) {
    ExactComplex tr = (sum * rep.T(s)).trace();
    if (tr.is_zero()) continue;
    if (!tr.is_real()) throw OracleError("four_commutator: complex component");
    ExactScalar comp = tr.real() / rep.trace_norm;
    out.components[static_cast<std::size_t>(s)] = comp;
    remainder -= rep.T(s) * ExactComplex(comp);
  }
  out.offspan = remainder;
  out.offspan_norm2 = remainder.norm2();
  return out;
}

}  // namespace gps
