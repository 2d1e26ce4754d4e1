#ifndef GPS_LIE_ALGEBRA_HPP
#define GPS_LIE_ALGEBRA_HPP

#include <optional>
#include <string>

#include "gps/exact.hpp"
#include "gps/matrix_rep.hpp"
#include "gps/tensor.hpp"

namespace gps {

struct LieAlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Compact algebra with exact structure constants derived from its defining
/// representation (never transcribed from tables). The basis is normalized
/// so the defining-rep trace form is (1/2) identity, which makes the metric
/// a negative multiple of the identity and lets upper and lower indices be
/// identified after sign normalization.
struct LieAlgebra {
  std::string name;
  int dim = 0;
  int rep_dim = 0;
  ExactTensor structure;  // (i, j, k) -> C^k_{ij}, antisymmetric in i, j
  ExactTensor killing;    // k_ij = C^m_{il} C^l_{jm}
  ExactScalar killing_scale;  // killing = -killing_scale * identity, scale > 0
  MatrixRep rep;
};

/// Loads and caches a catalog algebra: su2, su3, so3, so4, so5. Construction
/// certifies closure, the Jacobi identity and negative definiteness of the
/// Killing form. The returned reference is stable for the process lifetime.
const LieAlgebra& catalog_load(const std::string& name);

/// Alt_{i1 i2 i3} C^rho_{i1 i2} C^sigma_{rho i3}; identically zero exactly
/// when the constants satisfy the Jacobi identity. Rank 4, layout
/// (i1, i2, i3, sigma).
ExactTensor jacobi_residual(const LieAlgebra& g);
ExactTensor jacobi_residual_of(const ExactTensor& structure);

/// Ad-invariant fully symmetric tensor of the given order.
struct InvariantSymmetricTensor {
  int order = 0;
  ExactTensor tensor;
  const LieAlgebra* algebra = nullptr;
  /// Recorded normalization: for order 2, killing = -scale * tensor; for
  /// order 3 on su3, tensor = scale * d with d from the trace oracle.
  ExactScalar scale;
  std::string scale_note;
};

/// order 2: the sign-normalized metric (exact identity in this basis) with
/// the Killing magnitude recorded. order 3: the fully symmetrized
/// defining-rep trace Sym Tr(T_i T_j T_k), rejected when it vanishes
/// identically (non-primitive, e.g. su2 or so(n)). Other orders are
/// unsupported in the catalog.
InvariantSymmetricTensor invariant_symmetric_tensor(const LieAlgebra& g, int order);

/// Rank-(m+1) residual sum_a C^rho_{l i_a} k_{i1..rho..im}, layout
/// (l, i1..im); zero iff k is ad-invariant.
ExactTensor ad_invariance_residual(const InvariantSymmetricTensor& k);

/// Fully antisymmetric odd-order tensor housing the structure constants of a
/// generalized bracket; last index is the coefficient slot of the linear
/// structure (identified with an upper index by the unit metric).
struct CocycleTensor {
  int order = 0;  // 2m - 1
  int invariant_order = 0;  // m
  ExactTensor omega;
  const LieAlgebra* algebra = nullptr;
  std::string scale_note;
};

/// omega~_{j1..j_{2m-2} sigma} = k_{i1..i_{m-1} sigma} C^{i1}_{j1 j2} ...
/// C^{i_{m-1}}_{j_{2m-3} j_{2m-2}}, then the normalized alternation of the
/// middle block j2..j_{2m-2}. Full antisymmetry over all 2m-1 indices is the
/// theorem's claim and is validated exhaustively, not assumed; failure
/// signals a non-invariant input.
CocycleTensor build_cocycle(const InvariantSymmetricTensor& k);

/// Independent route: the full signed permutation sum
/// sum_{s} pi(s) k([e_{s(i1)}, e_{s(i2)}], .., e_{s(i_{2m-1})}), which is
/// antisymmetric by construction. Proportional to build_cocycle output by a
/// single constant ((2m-1)! under these conventions; measured, not assumed).
CocycleTensor build_cocycle_permsum(const InvariantSymmetricTensor& k);

/// Same cocycle with every component multiplied by a nonzero constant;
/// rescaling never affects validity of the induced structure.
CocycleTensor scaled(const CocycleTensor& c, const ExactScalar& factor, std::string note = {});

/// Single constant with a = c * b over all components (zero patterns must
/// match); nullopt when no such constant exists or b is zero.
std::optional<ExactScalar> proportionality_constant(const ExactTensor& a, const ExactTensor& b);

}  // namespace gps

#endif
