#include "bcinv/inverse.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <vector>

namespace bcinv {

std::string method_name(Method m) {
  switch (m) {
    case Method::MpFormula: return "mp";
    case Method::FrfFormula: return "frf";
    case Method::BasisMethod: return "basis";
    case Method::SvdPQ: return "svdpq";
    case Method::Elimination: return "elim";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "mp") return Method::MpFormula;
  if (name == "frf") return Method::FrfFormula;
  if (name == "basis") return Method::BasisMethod;
  if (name == "svdpq") return Method::SvdPQ;
  if (name == "elim") return Method::Elimination;
  return std::nullopt;
}

double result_scale(const CMatrix& a, const CMatrix& d, const CMatrix& e) {
  return std::max({1.0, sigma_max(a) * sigma_max(d), sigma_max(e)});
}

Residuals compute_residuals(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const CMatrix& x,
                            const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  if (x.rows() != d.rows() || x.cols() != d.cols())
    throw Error(Errc::shape_mismatch, "candidate X must be cols(A) x rows(A)");
  require_finite(x, "X");
  Residuals res;
  res.xad_d = (x * a * d - d).norm();
  res.eax_e = (e * a * x - e).norm();
  const CMatrix d_range = range_basis(d, tol);
  res.range_gap = (x - d_range * (d_range.adjoint() * x)).norm();
  res.kernel_gap = (x * null_basis(e, tol)).norm();
  return res;
}

namespace {

ExistenceReport require_two_sided(const CMatrix& a, const CMatrix& d,
                                  const CMatrix& e, const Tolerance& tol,
                                  const char* where) {
  ExistenceReport rep = existence_report(a, d, e, tol);
  if (!rep.two_sided) {
    std::ostringstream msg;
    msg << where << ": inverse does not exist (rk(D)=" << rep.rk_D
        << ", rk(E)=" << rep.rk_E << ", rk(EAD)=" << rep.rk_EAD << ")";
    throw NotInvertibleError(rep, msg.str());
  }
  return rep;
}

InverseResult finish(const CMatrix& a, const CMatrix& d, const CMatrix& e,
                     CMatrix x, Method method, Index r, const Tolerance& tol,
                     double accept_factor) {
  InverseResult result;
  result.X = std::move(x);
  result.method = method;
  result.r = r;
  result.residuals = compute_residuals(a, d, e, result.X, tol);
  const double bound = accept_factor * result_scale(a, d, e);
  if (result.residuals.max() > bound) {
    std::ostringstream msg;
    msg << method_name(method) << ": defining-equation residual "
        << result.residuals.max() << " exceeds acceptance bound " << bound;
    throw Error(Errc::verification_failed, msg.str());
  }
  return result;
}

}  // namespace

InverseResult bc_inverse_mp(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const Tolerance& tol,
                            double accept_factor) {
  const ExistenceReport rep = require_two_sided(a, d, e, tol, "mp formula");
  const CMatrix x = d * mp_inverse(e * a * d, tol) * e;
  return finish(a, d, e, x, Method::MpFormula, rep.rk_EAD, tol, accept_factor);
}

InverseResult bc_inverse_frf(const CMatrix& a, const CMatrix& d,
                             const CMatrix& e, const Tolerance& tol,
                             double accept_factor) {
  check_triple_shapes(a, d, e);
  const FullRankFactorization dfac = full_rank_factorization(d, tol);
  const FullRankFactorization efac = full_rank_factorization(e, tol);
  const CMatrix core = efac.G * a * dfac.F;
  if (dfac.r != efac.r || rank_tol(core, tol) != dfac.r) {
    ExistenceReport rep = existence_report(a, d, e, tol);
    throw NotInvertibleError(
        rep, "frf formula: rank of the compressed core does not match");
  }
  const CMatrix x = dfac.F * core.inverse() * efac.G;
  return finish(a, d, e, x, Method::FrfFormula, dfac.r, tol, accept_factor);
}

InverseResult bc_inverse_basis(const CMatrix& a, const CMatrix& d,
                               const CMatrix& e, const Tolerance& tol,
                               double accept_factor) {
  check_triple_shapes(a, d, e);
  const Index n = a.rows(), m = a.cols();
  const CMatrix v = range_basis(d, tol);
  const CMatrix w = null_basis(e, tol);
  const Index r = v.cols();
  if (r + w.cols() != n) {
    ExistenceReport rep = existence_report(a, d, e, tol);
    throw NotInvertibleError(rep,
                             "basis method: rk(D) and rk(E) do not match");
  }
  CMatrix assembled(n, n);
  assembled << a * v, w;
  // Nonsingularity of this matrix is exactly the existence condition.
  if (rank_tol(assembled, tol) < n) {
    ExistenceReport rep = existence_report(a, d, e, tol);
    throw NotInvertibleError(
        rep, "basis method: assembled matrix is singular at tolerance");
  }
  CMatrix target = CMatrix::Zero(m, n);
  target.leftCols(r) = v;
  const CMatrix x = target * assembled.inverse();
  return finish(a, d, e, x, Method::BasisMethod, r, tol, accept_factor);
}

InverseResult bc_inverse_svd_pq(const CMatrix& a, const CMatrix& d,
                                const CMatrix& e, const Tolerance& tol,
                                PQDecomposition* pq_out,
                                double accept_factor) {
  const ExistenceReport rep = require_two_sided(a, d, e, tol, "svd route");
  const Index m = a.cols(), n = a.rows();
  const CMatrix ead = e * a * d;
  const SvdTriple dec = svd(ead);
  const Index r = rank_from_singular_values(dec.S, m, n, tol);
  CVector left_scale = CVector::Ones(m);
  CVector right_scale = CVector::Ones(n);
  for (Index i = 0; i < r; ++i) {
    const double root = std::sqrt(dec.S(i));
    left_scale(i) = Complex(1.0 / root, 0.0);
    right_scale(i) = Complex(1.0 / root, 0.0);
  }
  const CMatrix p = left_scale.asDiagonal() * dec.U.adjoint();
  const CMatrix q = dec.V * right_scale.asDiagonal();
  if (pq_out) *pq_out = {p, q, r};
  const CMatrix x = (d * q).leftCols(r) * (p * e).topRows(r);
  return finish(a, d, e, x, Method::SvdPQ, rep.rk_EAD, tol, accept_factor);
}

InverseResult bc_inverse_elim(const CMatrix& a, const CMatrix& d,
                              const CMatrix& e, const Tolerance& tol,
                              double accept_factor) {
  const ExistenceReport rep = require_two_sided(a, d, e, tol, "elimination");
  const Index m = a.cols(), n = a.rows();
  const Index r = rep.rk_EAD;
  CMatrix reduced = e * a * d;
  CMatrix carried_e = e;
  const double pivot_thr = tol.threshold(reduced.norm(), m, n);

  // Row phase with partial pivoting: Gauss-Jordan on the EAD block, the same
  // operations applied to the E block. The rank is part of the input
  // contract, so exactly r pivots are consumed; whatever trails below them
  // is elimination roundoff and stays unread.
  std::vector<Index> pivot_cols;
  Index piv = 0;
  for (Index c = 0; c < n && piv < r; ++c) {
    Index best = piv;
    for (Index i = piv + 1; i < m; ++i)
      if (std::abs(reduced(i, c)) > std::abs(reduced(best, c))) best = i;
    if (std::abs(reduced(best, c)) <= pivot_thr) continue;
    reduced.row(piv).swap(reduced.row(best));
    carried_e.row(piv).swap(carried_e.row(best));
    const Complex scale = reduced(piv, c);
    reduced.row(piv) /= scale;
    carried_e.row(piv) /= scale;
    for (Index i = 0; i < m; ++i) {
      if (i == piv) continue;
      const Complex f = reduced(i, c);
      if (f == Complex(0.0, 0.0)) continue;
      reduced.row(i) -= f * reduced.row(piv);
      carried_e.row(i) -= f * carried_e.row(piv);
    }
    pivot_cols.push_back(c);
    ++piv;
  }
  if (piv != r)
    throw NotInvertibleError(
        rep, "elimination: pivot collapse before reaching the identity block");

  // Column phase: permute the pivot columns to the front and clear the rest
  // of their rows, mirroring the operations on the D block.
  CMatrix carried_d = d;
  for (Index k = 0; k < r; ++k) {
    if (pivot_cols[k] != k) {
      reduced.col(k).swap(reduced.col(pivot_cols[k]));
      carried_d.col(k).swap(carried_d.col(pivot_cols[k]));
    }
    for (Index j = 0; j < n; ++j) {
      if (j == k) continue;
      const Complex f = reduced(k, j);
      if (f == Complex(0.0, 0.0)) continue;
      reduced.col(j) -= f * reduced.col(k);
      carried_d.col(j) -= f * carried_d.col(k);
    }
  }

  const CMatrix x = carried_d.leftCols(r) * carried_e.topRows(r);
  return finish(a, d, e, x, Method::Elimination, r, tol, accept_factor);
}

InverseResult bc_inverse(const CMatrix& a, const CMatrix& d, const CMatrix& e,
                         const Tolerance& tol, std::optional<Method> method,
                         double accept_factor, double cross_factor) {
  if (method) {
    switch (*method) {
      case Method::MpFormula: return bc_inverse_mp(a, d, e, tol, accept_factor);
      case Method::FrfFormula:
        return bc_inverse_frf(a, d, e, tol, accept_factor);
      case Method::BasisMethod:
        return bc_inverse_basis(a, d, e, tol, accept_factor);
      case Method::SvdPQ:
        return bc_inverse_svd_pq(a, d, e, tol, nullptr, accept_factor);
      case Method::Elimination:
        return bc_inverse_elim(a, d, e, tol,
                               std::max(accept_factor, kElimResidualFactor));
    }
  }
  InverseResult primary = bc_inverse_svd_pq(a, d, e, tol, nullptr,
                                            accept_factor);
  const InverseResult check = bc_inverse_mp(a, d, e, tol, accept_factor);
  const double diff = (primary.X - check.X).norm();
  const double bound = cross_factor * result_scale(a, d, e);
  if (diff > bound) {
    std::ostringstream msg;
    msg << "independent routes disagree by " << diff << " (bound " << bound
        << ")";
    throw Error(Errc::cross_check_failed, msg.str());
  }
  return primary;
}

InverseResult inverse_along(const CMatrix& a, const CMatrix& d,
                            const Tolerance& tol,
                            std::optional<Method> method) {
  return bc_inverse(a, d, d, tol, method);
}

CMatrix OneSidedFamily::member(const CMatrix& z) const {
  const Index dim = parameter_dim();
  if (z.rows() != dim || z.cols() != dim)
    throw Error(Errc::shape_mismatch, "free parameter has the wrong shape");
  if (side == Side::Right) return base + anchor * (projector * z);
  return base + (z * projector) * anchor;
}

OneSidedFamily onesided_family(const CMatrix& a, const CMatrix& d,
                               const CMatrix& e, const Tolerance& tol,
                               Side side) {
  const ExistenceReport rep = existence_report(a, d, e, tol);
  if (side == Side::Right && !rep.right)
    throw Error(Errc::not_one_sided, "no right inverse exists for this pair");
  if (side == Side::Left && !rep.left)
    throw Error(Errc::not_one_sided, "no left inverse exists for this pair");
  const CMatrix ead = e * a * d;
  const CMatrix ead_pinv = mp_inverse(ead, tol);
  OneSidedFamily fam;
  fam.side = side;
  fam.base = d * ead_pinv * e;
  if (side == Side::Right) {
    fam.projector =
        CMatrix::Identity(a.rows(), a.rows()) - ead_pinv * ead;
    fam.anchor = d;
  } else {
    fam.projector =
        CMatrix::Identity(a.cols(), a.cols()) - ead * ead_pinv;
    fam.anchor = e;
  }
  return fam;
}

InverseResult unique_onesided_frf(const CMatrix& a, const CMatrix& d,
                                  const CMatrix& e, const Tolerance& tol) {
  return bc_inverse_frf(a, d, e, tol);
}

}  // namespace bcinv
