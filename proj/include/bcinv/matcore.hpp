#ifndef BCINV_MATCORE_HPP
#define BCINV_MATCORE_HPP

#include "bcinv/types.hpp"

namespace bcinv {

/// Full singular value decomposition A = U * diag(S) * V^*,
/// U rows x rows unitary, V cols x cols unitary, S nonincreasing.
struct SvdTriple {
  CMatrix U;
  RealVector S;
  CMatrix V;

  /// U * diag(S) * V^* as a dense matrix (S padded to rectangular shape).
  CMatrix reconstruct() const;
};

/// H = F * G with F of full column rank r and G of full row rank r.
/// The canonical choice here is F = U_r (orthonormal columns) and
/// G = diag(sigma_1..r) * V_r^*.
struct FullRankFactorization {
  CMatrix F;
  CMatrix G;
  Index r = 0;
};

SvdTriple svd(const CMatrix& a);

Index rank_from_singular_values(const RealVector& s, Index rows, Index cols,
                                const Tolerance& tol,
                                double* margin = nullptr);

Index rank_tol(const CMatrix& a, const Tolerance& tol = {});

/// Largest singular value (0 for empty matrices).
double sigma_max(const CMatrix& a);

CMatrix mp_inverse(const CMatrix& a, const Tolerance& tol = {});

FullRankFactorization full_rank_factorization(const CMatrix& a,
                                              const Tolerance& tol = {});

/// Orthonormal basis of the column space (rows x rank).
CMatrix range_basis(const CMatrix& a, const Tolerance& tol = {});

/// Orthonormal basis of the null space (cols x (cols - rank)).
CMatrix null_basis(const CMatrix& a, const Tolerance& tol = {});

/// Idempotent with range span(m_basis) and kernel span(n_basis).
/// The two bases must jointly number the ambient dimension and the stacked
/// matrix [m_basis n_basis] must be nonsingular at tol.
CMatrix oblique_projector(const CMatrix& m_basis, const CMatrix& n_basis,
                          const Tolerance& tol = {});

/// Orthonormal basis of the orthogonal complement of span(basis) in C^dim.
CMatrix orthogonal_complement(const CMatrix& basis, Index dim,
                              const Tolerance& tol = {});

/// sin of the largest principal angle between the spans of two orthonormal
/// bases, computed as the spectral norm of the projector difference.
/// Zero iff the subspaces coincide.
double subspace_gap(const CMatrix& basis1, const CMatrix& basis2);

/// Gap below which two subspaces are treated as equal.
inline constexpr double kSubspaceGapTol = 1e-8;

}  // namespace bcinv

#endif
