#ifndef BCINV_SPECIAL_HPP
#define BCINV_SPECIAL_HPP

#include "bcinv/inverse.hpp"

namespace bcinv {

/// Nonsingular Hermitian positive definite weights: M acts on the codomain
/// of A (n x n for A n x m) and N on its domain (m x m).
struct WeightPair {
  CMatrix M;
  CMatrix N;
};

/// A# = F (GF)^{-2} G for A = FG a full-rank factorization. Exists iff GF is
/// nonsingular (index <= 1). The zero matrix has group inverse zero.
CMatrix group_inverse(const CMatrix& a, const Tolerance& tol = {});

/// A^+ = G^* (F^* A G^*)^{-1} F^*; an SVD-free route cross-validating
/// mp_inverse.
CMatrix moore_penrose_frf(const CMatrix& a, const Tolerance& tol = {});

/// F (GF)^{-1} F^+ ; exists iff A is group invertible.
CMatrix core_inverse(const CMatrix& a, const Tolerance& tol = {});

/// G^+ (GF)^{-1} G ; exists iff A is group invertible.
CMatrix dual_core_inverse(const CMatrix& a, const Tolerance& tol = {});

/// A^+_{M,N} = N^{-1} G^* (F^* M A N^{-1} G^*)^{-1} F^* M.
CMatrix weighted_mp(const CMatrix& a, const WeightPair& weights,
                    const Tolerance& tol = {});

/// Smallest k with rank(A^{k+1}) = rank(A^k), capped at the dimension.
Index matrix_index(const CMatrix& a, const Tolerance& tol = {});

/// Drazin inverse: the inverse along A^k with k the matrix index. Always
/// exists for square A (the zero matrix for nilpotent A).
CMatrix drazin_inverse(const CMatrix& a, const Tolerance& tol = {});

/// True iff R(A) = R(A^*) as measured by the principal-angle gap.
bool is_ep(const CMatrix& a, const Tolerance& tol = {},
           double gap_tol = kSubspaceGapTol);

}  // namespace bcinv

#endif
