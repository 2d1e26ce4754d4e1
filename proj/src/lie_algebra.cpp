#include "gps/lie_algebra.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

namespace gps {

namespace {

void certify_killing(LieAlgebra& g) {
  // diagonal, all entries equal and negative
  std::optional<ExactScalar> diag;
  for (int i = 0; i < g.dim; ++i) {
    for (int j = 0; j < g.dim; ++j) {
      const ExactScalar& v = g.killing.at({i, j});
      if (i != j) {
        if (!v.is_zero()) throw LieAlgebraError(g.name + ": Killing form not diagonal");
      } else {
        if (v.sign() >= 0) throw LieAlgebraError(g.name + ": Killing form not negative definite");
        if (!diag) {
          diag = v;
        } else if (!(*diag == v)) {
          throw LieAlgebraError(g.name + ": Killing form not a multiple of the identity");
        }
      }
    }
  }
  g.killing_scale = -(*diag);
}

std::unique_ptr<LieAlgebra> build_algebra(const std::string& name) {
  auto g = std::make_unique<LieAlgebra>();
  g->rep = load_rep(name);
  g->name = name;
  g->dim = g->rep.dim;
  g->rep_dim = g->rep.n;
  g->structure = structure_constants_from_rep(g->rep);
  if (!g->structure.check_antisymmetric({0, 1})) {
    throw LieAlgebraError(name + ": structure constants not antisymmetric in the lower pair");
  }
  if (!jacobi_residual_of(g->structure).is_zero()) {
    throw LieAlgebraError(name + ": Jacobi identity violated");
  }
  // k_ij = C^m_{il} C^l_{jm}: contract (l<->l at positions 1,2) and (m<->m).
  g->killing = contract(g->structure, g->structure, {{1, 2}, {2, 1}});
  certify_killing(*g);
  return g;
}

}  // namespace

const LieAlgebra& catalog_load(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<LieAlgebra>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_algebra(name)).first;
  return *it->second;
}

ExactTensor jacobi_residual_of(const ExactTensor& c) {
  // T_{i1 i2 i3}^sigma = C^rho_{i1 i2} C^sigma_{rho i3}, then Alt over the
  // first three positions (unnormalized).
  ExactTensor t = contract(c, c, {{2, 0}});
  return antisymmetrize(t, {0, 1, 2}, false);
}

ExactTensor jacobi_residual(const LieAlgebra& g) { return jacobi_residual_of(g.structure); }

InvariantSymmetricTensor invariant_symmetric_tensor(const LieAlgebra& g, int order) {
  if (order < 2) throw LieAlgebraError("invariant tensor order must be >= 2");
  InvariantSymmetricTensor out;
  out.order = order;
  out.algebra = &g;
  if (order == 2) {
    out.tensor = ExactTensor::identity(g.dim);
    out.scale = g.killing_scale;
    out.scale_note = "killing = -scale * metric";
    return out;
  }
  if (order == 3) {
    // Sym Tr(T_i T_j T_k) over the Hermitian partners of the basis.
    const int r = g.dim;
    std::vector<ExactMatrix> t;
    t.reserve(static_cast<std::size_t>(r));
    for (int a = 0; a < r; ++a) t.push_back(g.rep.T(a));
    ExactTensor raw(3, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        ExactMatrix tij = t[static_cast<std::size_t>(i)] * t[static_cast<std::size_t>(j)];
        for (int k = 0; k < r; ++k) {
          ExactComplex tr = (tij * t[static_cast<std::size_t>(k)]).trace();
          if (!tr.is_zero()) raw.at({i, j, k}) = tr.real();  // imaginary part cancels under Sym
        }
      }
    }
    ExactTensor sym = symmetrize_all(raw, true);
    if (sym.is_zero()) {
      throw LieAlgebraError(g.name +
                            ": symmetrized cubic trace vanishes; no primitive order-3 invariant");
    }
    out.tensor = std::move(sym);
    if (g.name == "su3") {
      ExactTensor d = d_tensor_from_traces(g.rep);
      auto ratio = proportionality_constant(out.tensor, d);
      if (!ratio) throw LieAlgebraError("su3: symmetrized trace not proportional to d");
      out.scale = *ratio;
      out.scale_note = "tensor = scale * d_ijk";
    } else {
      out.scale = ExactScalar(1);
      out.scale_note = "symmetrized defining-rep trace";
    }
    return out;
  }
  throw LieAlgebraError("invariant tensor order " + std::to_string(order) +
                        " not supported for " + g.name);
}

ExactTensor ad_invariance_residual(const InvariantSymmetricTensor& k) {
  const LieAlgebra& g = *k.algebra;
  const int m = k.order;
  const int r = g.dim;
  ExactTensor res(m + 1, r);
  std::vector<int> inner(static_cast<std::size_t>(m));
  for_each_index(m + 1, r, [&](std::span<const int> idx) {
    const int l = idx[0];
    ExactScalar sum;
    for (int a = 0; a < m; ++a) {
      std::copy(idx.begin() + 1, idx.end(), inner.begin());
      for (int rho = 0; rho < r; ++rho) {
        const ExactScalar& c = g.structure.at({l, idx[static_cast<std::size_t>(a + 1)], rho});
        if (c.is_zero()) continue;
        inner[static_cast<std::size_t>(a)] = rho;
        const ExactScalar& kv = k.tensor.at(inner);
        if (!kv.is_zero()) sum += c * kv;
      }
      inner[static_cast<std::size_t>(a)] = idx[static_cast<std::size_t>(a + 1)];
    }
    if (!sum.is_zero()) res.at(idx) = std::move(sum);
  });
  return res;
}

namespace {

// omega~ of the cocycle construction: rank 2m-1, layout (j1..j_{2m-2}, sigma),
// omega~ = k_{i1..i_{m-1} sigma} C^{i1}_{j1 j2} ... C^{i_{m-1}}_{j_{2m-3} j_{2m-2}}.
ExactTensor omega_tilde(const InvariantSymmetricTensor& k) {
  const LieAlgebra& g = *k.algebra;
  const int m = k.order;
  const int r = g.dim;
  const int nc = m - 1;  // number of structure-constant factors
  ExactTensor out(2 * m - 1, r);

  // nonzero upper components per lower pair, for sparse chaining
  std::vector<std::vector<std::pair<int, ExactScalar>>> rows(
      static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      auto& row = rows[static_cast<std::size_t>(a) * static_cast<std::size_t>(r) +
                       static_cast<std::size_t>(b)];
      for (int up = 0; up < r; ++up) {
        const ExactScalar& v = g.structure.at({a, b, up});
        if (!v.is_zero()) row.emplace_back(up, v);
      }
    }
  }

  std::vector<int> kidx(static_cast<std::size_t>(m));
  const std::function<void(std::span<const int>, int, ExactScalar, ExactScalar&)> chain =
      [&](std::span<const int> js, int a, ExactScalar prefix, ExactScalar& sum) {
        if (a == nc) {
          const ExactScalar& kv = k.tensor.at(kidx);
          if (!kv.is_zero()) sum += prefix * kv;
          return;
        }
        const auto& row = rows[static_cast<std::size_t>(js[static_cast<std::size_t>(2 * a)]) *
                                   static_cast<std::size_t>(r) +
                               static_cast<std::size_t>(js[static_cast<std::size_t>(2 * a + 1)])];
        for (const auto& [up, v] : row) {
          kidx[static_cast<std::size_t>(a)] = up;
          chain(js, a + 1, prefix * v, sum);
        }
      };

  for_each_index(2 * m - 1, r, [&](std::span<const int> idx) {
    kidx[static_cast<std::size_t>(m - 1)] = idx[static_cast<std::size_t>(2 * m - 2)];  // sigma
    ExactScalar sum;
    chain(idx.subspan(0, static_cast<std::size_t>(2 * m - 2)), 0, ExactScalar(1), sum);
    if (!sum.is_zero()) out.at(idx) = std::move(sum);
  });
  return out;
}

}  // namespace

CocycleTensor build_cocycle(const InvariantSymmetricTensor& k) {
  const int m = k.order;
  ExactTensor tilde = omega_tilde(k);
  // middle block j2..j_{2m-2} = positions 1..2m-3; a single position at m = 2
  std::vector<int> middle;
  for (int p = 1; p <= 2 * m - 3; ++p) middle.push_back(p);
  ExactTensor omega =
      m == 2 ? std::move(tilde) : antisymmetrize(tilde, middle, /*normalized=*/true);
  if (!omega.check_fully_antisymmetric()) {
    throw LieAlgebraError(k.algebra->name +
                          ": cocycle candidate failed the full-antisymmetry certificate "
                          "(input invariant tensor is not ad-invariant?)");
  }
  omega.set_symmetry_tag(Symmetry::fully_antisymmetric);
  CocycleTensor out;
  out.order = 2 * m - 1;
  out.invariant_order = m;
  out.omega = std::move(omega);
  out.algebra = k.algebra;
  out.scale_note = "normalized middle-block alternation of (" + k.scale_note + ") chained with C";
  return out;
}

CocycleTensor build_cocycle_permsum(const InvariantSymmetricTensor& k) {
  const int m = k.order;
  ExactTensor tilde = omega_tilde(k);
  ExactTensor omega = antisymmetrize_all(tilde, /*normalized=*/false);
  omega.set_symmetry_tag(Symmetry::fully_antisymmetric);
  CocycleTensor out;
  out.order = 2 * m - 1;
  out.invariant_order = m;
  out.omega = std::move(omega);
  out.algebra = k.algebra;
  out.scale_note = "unnormalized signed permutation sum over all 2m-1 arguments";
  return out;
}

CocycleTensor scaled(const CocycleTensor& c, const ExactScalar& factor, std::string note) {
  if (factor.is_zero()) throw LieAlgebraError("cocycle scale factor must be nonzero");
  CocycleTensor out = c;
  out.omega *= factor;
  out.omega.set_symmetry_tag(Symmetry::fully_antisymmetric);
  out.scale_note = note.empty() ? c.scale_note + " * " + factor.str() : std::move(note);
  return out;
}

std::optional<ExactScalar> proportionality_constant(const ExactTensor& a, const ExactTensor& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim()) return std::nullopt;
  std::optional<ExactScalar> c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const ExactScalar& av = a.flat(i);
    const ExactScalar& bv = b.flat(i);
    if (bv.is_zero()) {
      if (!av.is_zero()) return std::nullopt;
      continue;
    }
    ExactScalar ratio = av / bv;
    if (!c) {
      c = ratio;
    } else if (!(*c == ratio)) {
      return std::nullopt;
    }
  }
  return c;
}

}  // namespace gps
