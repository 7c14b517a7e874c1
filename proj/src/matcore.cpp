#include "bcinv/matcore.hpp"

#include <Eigen/Dense>

namespace bcinv {

CMatrix SvdTriple::reconstruct() const {
  CMatrix sigma = CMatrix::Zero(U.rows(), V.rows());
  for (Index i = 0; i < S.size(); ++i) sigma(i, i) = S(i);
  return U * sigma * V.adjoint();
}

SvdTriple svd(const CMatrix& a) {
  require_finite(a, "svd input");
  const Index m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) {
    return {CMatrix::Identity(m, m), RealVector::Zero(0),
            CMatrix::Identity(n, n)};
  }
  Eigen::JacobiSVD<CMatrix> dec(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Index rank_from_singular_values(const RealVector& s, Index rows, Index cols,
                                const Tolerance& tol, double* margin) {
  const double smax = s.size() > 0 ? s(0) : 0.0;
  const double thr = tol.threshold(smax, rows, cols);
  Index r = 0;
  while (r < s.size() && s(r) > thr) ++r;
  if (margin) {
    *margin = r > 0 ? s(r - 1) - thr : std::numeric_limits<double>::infinity();
  }
  return r;
}

Index rank_tol(const CMatrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  return rank_from_singular_values(svd(a).S, a.rows(), a.cols(), tol);
}

double sigma_max(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  const auto s = svd(a).S;
  return s.size() > 0 ? s(0) : 0.0;
}

CMatrix mp_inverse(const CMatrix& a, const Tolerance& tol) {
  const SvdTriple dec = svd(a);
  const Index r = rank_from_singular_values(dec.S, a.rows(), a.cols(), tol);
  CMatrix pinv = CMatrix::Zero(a.cols(), a.rows());
  if (r > 0) {
    pinv = dec.V.leftCols(r) *
           dec.S.head(r).cwiseInverse().cast<Complex>().asDiagonal() *
           dec.U.leftCols(r).adjoint();
  }
  return pinv;
}

FullRankFactorization full_rank_factorization(const CMatrix& a,
                                              const Tolerance& tol) {
  const SvdTriple dec = svd(a);
  const Index r = rank_from_singular_values(dec.S, a.rows(), a.cols(), tol);
  if (r == 0)
    throw Error(Errc::rank_zero,
                "full-rank factorization requires rank >= 1");
  FullRankFactorization frf;
  frf.r = r;
  frf.F = dec.U.leftCols(r);
  frf.G = dec.S.head(r).cast<Complex>().asDiagonal() *
          dec.V.leftCols(r).adjoint();
  return frf;
}

CMatrix range_basis(const CMatrix& a, const Tolerance& tol) {
  const SvdTriple dec = svd(a);
  const Index r = rank_from_singular_values(dec.S, a.rows(), a.cols(), tol);
  return dec.U.leftCols(r);
}

CMatrix null_basis(const CMatrix& a, const Tolerance& tol) {
  const SvdTriple dec = svd(a);
  const Index r = rank_from_singular_values(dec.S, a.rows(), a.cols(), tol);
  return dec.V.rightCols(a.cols() - r);
}

CMatrix oblique_projector(const CMatrix& m_basis, const CMatrix& n_basis,
                          const Tolerance& tol) {
  if (m_basis.rows() != n_basis.rows())
    throw Error(Errc::shape_mismatch,
                "projector bases live in different ambient spaces");
  const Index dim = m_basis.rows();
  if (m_basis.cols() + n_basis.cols() != dim)
    throw Error(Errc::shape_mismatch,
                "projector bases must jointly number the ambient dimension");
  CMatrix stacked(dim, dim);
  stacked << m_basis, n_basis;
  if (rank_tol(stacked, tol) < dim)
    throw Error(Errc::not_complementary,
                "subspaces are not complementary at the given tolerance");
  // Solve [M N] Y = I instead of inverting ill-scaled blocks.
  const CMatrix y =
      stacked.colPivHouseholderQr().solve(CMatrix::Identity(dim, dim));
  return m_basis * y.topRows(m_basis.cols());
}

CMatrix orthogonal_complement(const CMatrix& basis, Index dim,
                              const Tolerance& tol) {
  if (basis.cols() == 0) return CMatrix::Identity(dim, dim);
  if (basis.rows() != dim)
    throw Error(Errc::shape_mismatch, "basis rows do not match ambient dim");
  return null_basis(basis.adjoint(), tol);
}

double subspace_gap(const CMatrix& basis1, const CMatrix& basis2) {
  if (basis1.rows() != basis2.rows())
    throw Error(Errc::shape_mismatch, "bases live in different spaces");
  const Index dim = basis1.rows();
  const CMatrix p1 = basis1 * basis1.adjoint();
  const CMatrix p2 = basis2 * basis2.adjoint();
  CMatrix diff = p1 - p2;
  if (dim == 0) return 0.0;
  return sigma_max(diff);
}

}  // namespace bcinv
