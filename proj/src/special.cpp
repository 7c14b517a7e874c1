#include "bcinv/special.hpp"

#include <Eigen/Dense>

namespace bcinv {

namespace {

void require_square(const CMatrix& a, const char* where) {
  if (a.rows() != a.cols())
    throw Error(Errc::shape_mismatch, std::string(where) + ": matrix must be square");
  require_finite(a, where);
}

/// FRF plus the invertibility check on GF shared by the group-family
/// inverses.
struct GroupData {
  FullRankFactorization fac;
  CMatrix gf_inv;
};

GroupData group_data(const CMatrix& a, const Tolerance& tol,
                     const char* where) {
  GroupData data;
  data.fac = full_rank_factorization(a, tol);
  const CMatrix gf = data.fac.G * data.fac.F;
  if (rank_tol(gf, tol) < data.fac.r)
    throw Error(Errc::no_group_inverse,
                std::string(where) + ": GF is singular (index exceeds 1)");
  data.gf_inv = gf.inverse();
  return data;
}

void check_weight(const CMatrix& w, Index dim, const Tolerance& tol,
                  const char* name) {
  if (w.rows() != dim || w.cols() != dim)
    throw Error(Errc::invalid_weights,
                std::string(name) + " has the wrong shape");
  require_finite(w, name);
  const double smax = sigma_max(w);
  if ((w - w.adjoint()).norm() > 1e-10 * std::max(1.0, smax))
    throw Error(Errc::invalid_weights,
                std::string(name) + " is not Hermitian");
  const CMatrix herm = 0.5 * (w + w.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
  if (eig.eigenvalues().minCoeff() <= tol.threshold(smax, dim, dim))
    throw Error(Errc::invalid_weights,
                std::string(name) + " is not positive definite");
}

}  // namespace

CMatrix group_inverse(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "group inverse");
  if (rank_tol(a, tol) == 0) return CMatrix::Zero(a.rows(), a.cols());
  const GroupData data = group_data(a, tol, "group inverse");
  return data.fac.F * data.gf_inv * data.gf_inv * data.fac.G;
}

CMatrix moore_penrose_frf(const CMatrix& a, const Tolerance& tol) {
  require_finite(a, "moore_penrose_frf");
  const FullRankFactorization fac = full_rank_factorization(a, tol);
  const CMatrix inner = fac.F.adjoint() * a * fac.G.adjoint();
  return fac.G.adjoint() * inner.inverse() * fac.F.adjoint();
}

CMatrix core_inverse(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "core inverse");
  if (rank_tol(a, tol) == 0) return CMatrix::Zero(a.rows(), a.cols());
  const GroupData data = group_data(a, tol, "core inverse");
  return data.fac.F * data.gf_inv * mp_inverse(data.fac.F, tol);
}

CMatrix dual_core_inverse(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "dual core inverse");
  if (rank_tol(a, tol) == 0) return CMatrix::Zero(a.rows(), a.cols());
  const GroupData data = group_data(a, tol, "dual core inverse");
  return mp_inverse(data.fac.G, tol) * data.gf_inv * data.fac.G;
}

CMatrix weighted_mp(const CMatrix& a, const WeightPair& weights,
                    const Tolerance& tol) {
  require_finite(a, "weighted_mp");
  check_weight(weights.M, a.rows(), tol, "weight M");
  check_weight(weights.N, a.cols(), tol, "weight N");
  const FullRankFactorization fac = full_rank_factorization(a, tol);
  const CMatrix n_inv_gstar =
      weights.N.llt().solve(fac.G.adjoint());
  const CMatrix inner = fac.F.adjoint() * weights.M * a * n_inv_gstar;
  if (rank_tol(inner, tol) < fac.r)
    throw Error(Errc::not_invertible,
                "weighted mp: compressed core is singular at tolerance");
  return n_inv_gstar * inner.inverse() * fac.F.adjoint() * weights.M;
}

Index matrix_index(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "matrix index");
  const Index n = a.rows();
  CMatrix power = CMatrix::Identity(n, n);
  Index rank_prev = n;
  for (Index k = 0; k < n; ++k) {
    const CMatrix next = power * a;
    const Index rank_next = rank_tol(next, tol);
    if (rank_next == rank_prev) return k;
    power = next;
    rank_prev = rank_next;
  }
  return n;
}

CMatrix drazin_inverse(const CMatrix& a, const Tolerance& tol) {
  require_square(a, "drazin inverse");
  const Index k = matrix_index(a, tol);
  CMatrix power = CMatrix::Identity(a.rows(), a.cols());
  for (Index i = 0; i < k; ++i) power = power * a;
  return inverse_along(a, power, tol).X;
}

bool is_ep(const CMatrix& a, const Tolerance& tol, double gap_tol) {
  require_square(a, "is_ep");
  const CMatrix col_space = range_basis(a, tol);
  const CMatrix row_space = range_basis(a.adjoint(), tol);
  return subspace_gap(col_space, row_space) <= gap_tol;
}

}  // namespace bcinv
