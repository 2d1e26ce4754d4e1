#include "gps/poisson.hpp"

#include <algorithm>
#include <numeric>

#include "gps/parallel.hpp"

namespace gps {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Visits all (k | n-k) shuffles of {0..n-1}: fills `first` with the chosen
// positions (increasing), `second` with the rest (increasing), and passes the
// parity sign of the concatenated arrangement (first, second).
void for_each_shuffle(int n, int k,
                      const std::function<void(std::span<const int>, std::span<const int>, int)>& body) {
  std::vector<int> first(static_cast<std::size_t>(k));
  std::vector<int> second(static_cast<std::size_t>(n - k));
  for_each_increasing(k, n, [&](std::span<const int> chosen) {
    std::copy(chosen.begin(), chosen.end(), first.begin());
    std::size_t s = 0;
    std::size_t c = 0;
    for (int v = 0; v < n; ++v) {
      if (c < chosen.size() && chosen[c] == v) {
        ++c;
      } else {
        second[s++] = v;
      }
    }
    // Parity of the shuffle: inversions between the two increasing blocks.
    int inversions = 0;
    for (int a : first) {
      for (int b : second) {
        if (a > b) ++inversions;
      }
    }
    body(first, second, inversions % 2 == 0 ? 1 : -1);
  });
}

}  // namespace

GjiResidual gji_residual_of(const ExactTensor& omega) {
  const int order = omega.rank();  // 2p + 1
  if (order < 3 || order % 2 == 0) {
    throw PoissonError("gji residual requires an odd-rank tensor of order >= 3");
  }
  const int p = (order - 1) / 2;
  const int dim = omega.dim();
  const int nfree = 4 * p - 1;

  GjiResidual res;
  res.p = p;
  res.dim = dim;
  res.term_groups = binomial(nfree, 2 * p - 1);

  if (nfree > dim) return res;  // alternation over more slots than the range

  // Precompute the shuffle table once; components are independent and run on
  // per-chunk workers with an in-order merge to keep output deterministic.
  struct Shuffle {
    std::vector<int> first, second;
    int sign;
  };
  std::vector<Shuffle> shuffles;
  for_each_shuffle(nfree, 2 * p - 1,
                   [&](std::span<const int> first, std::span<const int> second, int sign) {
                     shuffles.push_back({std::vector<int>(first.begin(), first.end()),
                                         std::vector<int>(second.begin(), second.end()), sign});
                   });
  std::vector<std::vector<int>> tuples;
  for_each_increasing(nfree, dim, [&](std::span<const int> t) {
    tuples.emplace_back(t.begin(), t.end());
  });

  std::vector<std::vector<GjiResidual::Entry>> partial(worker_count(tuples.size()));
  parallel_chunks(tuples.size(), [&](unsigned chunk, std::size_t begin, std::size_t end) {
    std::vector<int> idx_a(static_cast<std::size_t>(order));
    std::vector<int> idx_b(static_cast<std::size_t>(order));
    auto& local = partial[chunk];
    for (std::size_t t = begin; t < end; ++t) {
      const std::vector<int>& tuple = tuples[t];
      std::vector<ExactScalar> acc(static_cast<std::size_t>(dim));
      for (const Shuffle& sh : shuffles) {
        for (std::size_t a = 0; a < sh.first.size(); ++a) {
          idx_a[a] = tuple[static_cast<std::size_t>(sh.first[a])];
        }
        for (std::size_t b = 0; b < sh.second.size(); ++b) {
          idx_b[b] = tuple[static_cast<std::size_t>(sh.second[b])];
        }
        for (int k = 0; k < dim; ++k) {
          idx_a[static_cast<std::size_t>(2 * p - 1)] = k;  // contracted slot
          idx_b[static_cast<std::size_t>(2 * p)] = k;      // coefficient slot, second factor
          for (int sigma = 0; sigma < dim; ++sigma) {
            idx_a[static_cast<std::size_t>(2 * p)] = sigma;
            const ExactScalar& va = omega.at(idx_a);
            if (va.is_zero()) continue;
            const ExactScalar& vb = omega.at(idx_b);
            if (vb.is_zero()) continue;
            ExactScalar prod = va * vb;
            if (sh.sign < 0) prod = -prod;
            acc[static_cast<std::size_t>(sigma)] += prod;
          }
        }
      }
      for (int sigma = 0; sigma < dim; ++sigma) {
        if (!acc[static_cast<std::size_t>(sigma)].is_zero()) {
          local.push_back({tuple, sigma, std::move(acc[static_cast<std::size_t>(sigma)])});
        }
      }
    }
  });
  for (auto& chunk : partial) {
    for (auto& e : chunk) res.nonzero.push_back(std::move(e));
  }
  return res;
}

PolyMultivector residual_multivector(const GjiResidual& r) {
  PolyMultivector out(r.dim, 4 * r.p - 1);
  for (const auto& e : r.nonzero) {
    Monomial mono(static_cast<std::size_t>(r.dim), 0);
    mono[static_cast<std::size_t>(e.sigma)] = 1;
    IndexTuple tuple(e.tuple.begin(), e.tuple.end());
    out.add_term(mono, tuple, e.value);
  }
  return out;
}

PolyMultivector lambda_from_omega(const ExactTensor& omega) {
  const int order = omega.rank();
  const int n = order - 1;  // 2p derivation slots
  const int dim = omega.dim();
  PolyMultivector out(dim, n);
  std::vector<int> idx(static_cast<std::size_t>(order));
  for_each_increasing(n, dim, [&](std::span<const int> tuple) {
    std::copy(tuple.begin(), tuple.end(), idx.begin());
    IndexTuple der(tuple.begin(), tuple.end());
    for (int sigma = 0; sigma < dim; ++sigma) {
      idx[static_cast<std::size_t>(n)] = sigma;
      const ExactScalar& v = omega.at(idx);
      if (v.is_zero()) continue;
      Monomial mono(static_cast<std::size_t>(dim), 0);
      mono[static_cast<std::size_t>(sigma)] = 1;
      out.add_term(mono, der, v);
    }
  });
  return out;
}

GeneralizedPoissonStructure from_cocycle(const CocycleTensor& w) {
  if (w.order % 2 == 0 || w.order < 3) {
    throw PoissonError("cocycle order must be odd and >= 3, got " + std::to_string(w.order));
  }
  if (!w.omega.check_fully_antisymmetric()) {
    throw PoissonError("cocycle tensor is not fully antisymmetric");
  }
  GeneralizedPoissonStructure s;
  s.p = (w.order - 1) / 2;
  s.cocycle = w;
  s.algebra = w.algebra;
  s.lambda = lambda_from_omega(w.omega);

  GjiResidual res = gji_residual_of(w.omega);
  s.term_groups = res.term_groups;
  if (!res.is_zero()) {
    throw GjiViolation("generalized Jacobi identity fails: " +
                           std::to_string(res.nonzero_count()) + " nonzero residual components",
                       std::move(res));
  }
  PolyMultivector snb = schouten_nijenhuis(s.lambda, s.lambda);
  if (!snb.is_zero()) {
    // must not happen when the direct residual vanished
    throw PoissonError("Schouten certificate disagrees with the alternation residual");
  }
  s.snb_residual_ratio = ExactScalar(2);
  return s;
}

PolyMultivector gpb_eval(const GeneralizedPoissonStructure& s,
                         std::span<const PolyMultivector> fs) {
  const int n = 2 * s.p;
  if (static_cast<int>(fs.size()) != n) {
    throw PoissonError("bracket arity is " + std::to_string(n) + ", got " +
                       std::to_string(fs.size()));
  }
  const int dim = s.cocycle.omega.dim();
  for (const auto& f : fs) {
    if (f.order() != 0) throw PoissonError("bracket arguments must be order-0 multivectors");
    if (f.dim() != dim) throw PoissonError("bracket argument dimension mismatch");
  }
  // Cache partial derivatives: grads[a][j] = d_j f_a.
  std::vector<std::vector<PolyMultivector>> grads;
  grads.reserve(fs.size());
  for (const auto& f : fs) grads.push_back(gradient(f));

  PolyMultivector out(dim, 0);
  std::vector<int> idx(static_cast<std::size_t>(n + 1));
  std::vector<int> perm(static_cast<std::size_t>(n));
  for_each_increasing(n, dim, [&](std::span<const int> tuple) {
    // det [d_{tuple[b]} f_a] expanded over permutations, then multiplied by
    // omega_tuple^sigma x_sigma.
    PolyMultivector det(dim, 0);
    std::iota(perm.begin(), perm.end(), 0);
    bool any = false;
    do {
      PolyMultivector prod = PolyMultivector::constant(dim, ExactScalar(1));
      bool zero = false;
      for (int a = 0; a < n && !zero; ++a) {
        const PolyMultivector& g =
            grads[static_cast<std::size_t>(a)]
                 [static_cast<std::size_t>(tuple[static_cast<std::size_t>(perm[a])])];
        if (g.is_zero()) {
          zero = true;
        } else {
          prod = poly_mul(prod, g);
        }
      }
      if (zero) continue;
      if (permutation_sign(perm) < 0) {
        det -= prod;
      } else {
        det += prod;
      }
      any = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!any || det.is_zero()) return;

    std::copy(tuple.begin(), tuple.end(), idx.begin());
    PolyMultivector omega_lin(dim, 0);
    for (int sigma = 0; sigma < dim; ++sigma) {
      idx[static_cast<std::size_t>(n)] = sigma;
      const ExactScalar& v = s.cocycle.omega.at(idx);
      if (v.is_zero()) continue;
      omega_lin += PolyMultivector::coordinate(dim, sigma) * v;
    }
    if (!omega_lin.is_zero()) out += poly_mul(omega_lin, det);
  });
  return out;
}

PolyMultivector gpb_eval(const GeneralizedPoissonStructure& s,
                         std::initializer_list<PolyMultivector> fs) {
  return gpb_eval(s, std::span<const PolyMultivector>(fs.begin(), fs.size()));
}

PolyMultivector compatibility_residual(const GeneralizedPoissonStructure& a,
                                       const GeneralizedPoissonStructure& b) {
  if (a.algebra != b.algebra) throw PoissonError("compatibility requires a common algebra");
  return schouten_nijenhuis(a.lambda, b.lambda);
}

CheckResult casimir_check(const GeneralizedPoissonStructure& s, const PolyMultivector& c) {
  const int n = 2 * s.p;
  const int dim = s.cocycle.omega.dim();
  CheckResult out;
  out.note = "checked over coordinate arguments; sufficient for all smooth arguments "
             "by multilinearity and the Leibniz rule";
  std::vector<PolyMultivector> args;
  bool failed = false;
  for_each_increasing(n - 1, dim, [&](std::span<const int> tuple) {
    if (failed) return;
    args.clear();
    for (int v : tuple) args.push_back(PolyMultivector::coordinate(dim, v));
    args.push_back(c);
    PolyMultivector bracket = gpb_eval(s, args);
    if (!bracket.is_zero()) {
      failed = true;
      out.ok = false;
      out.witness = CheckWitness{std::vector<int>(tuple.begin(), tuple.end()), std::move(bracket)};
    }
  });
  return out;
}

CheckResult involution_check(const GeneralizedPoissonStructure& s,
                             std::span<const PolyMultivector> fs) {
  const int n = 2 * s.p;
  if (static_cast<int>(fs.size()) < n) {
    throw PoissonError("involution requires at least " + std::to_string(n) + " functions");
  }
  CheckResult out;
  out.note = "all increasing 2p-subsets checked; other orders follow by alternation";
  std::vector<PolyMultivector> args;
  bool failed = false;
  for_each_increasing(n, static_cast<int>(fs.size()), [&](std::span<const int> subset) {
    if (failed) return;
    args.clear();
    for (int v : subset) args.push_back(fs[static_cast<std::size_t>(v)]);
    PolyMultivector bracket = gpb_eval(s, args);
    if (!bracket.is_zero()) {
      failed = true;
      out.ok = false;
      out.witness = CheckWitness{std::vector<int>(subset.begin(), subset.end()), std::move(bracket)};
    }
  });
  return out;
}

}  // namespace gps
