#include "bcinv/analysis.hpp"

#include <Eigen/Dense>
#include <random>

#include "bcinv/special.hpp"

namespace bcinv {

Residuals verify_definition(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const CMatrix& x,
                            const Tolerance& tol) {
  return compute_residuals(a, d, e, x, tol);
}

ProjectorReport outer_inner_report(const CMatrix& a, const CMatrix& d,
                                   const CMatrix& e, const Tolerance& tol) {
  const CMatrix x = bc_inverse_svd_pq(a, d, e, tol).X;
  const double scale = result_scale(a, d, e);
  const CMatrix xa = x * a;
  const CMatrix ax = a * x;
  ProjectorReport rep;
  rep.xa_idempotent = (xa * xa - xa).norm();
  rep.ax_idempotent = (ax * ax - ax).norm();
  rep.range_xa_eq_RD = subspace_gap(range_basis(xa, tol), range_basis(d, tol));
  rep.kernel_ax_eq_KE = subspace_gap(null_basis(ax, tol), null_basis(e, tol));
  rep.kernel_xa_eq_KEA =
      subspace_gap(null_basis(xa, tol), null_basis(e * a, tol));
  rep.range_ax_eq_RAD =
      subspace_gap(range_basis(ax, tol), range_basis(a * d, tol));
  rep.ax_orthogonal = (ax - ax.adjoint()).norm() <= 1e-8 * scale;
  rep.xa_orthogonal = (xa - xa.adjoint()).norm() <= 1e-8 * scale;
  rep.outer_residual = (x * a * x - x).norm();
  rep.inner_residual = (a * x * a - a).norm();
  rep.inner = rep.inner_residual <= 1e-8 * scale;
  return rep;
}

RankIdentity rank_defect_identity(const CMatrix& a, const CMatrix& d,
                                  const CMatrix& e, const Tolerance& tol) {
  const CMatrix x = bc_inverse_svd_pq(a, d, e, tol).X;
  RankIdentity identity;
  identity.rk_A = rank_tol(a, tol);
  identity.rk_D = rank_tol(d, tol);
  // The defect is a residual of A: its rank decision is anchored at the
  // instance scale (the same floor the inner flag uses), or pure roundoff
  // would count.
  Tolerance defect_tol = tol;
  defect_tol.abs =
      std::max(defect_tol.abs, 1e-8 * result_scale(a, d, e));
  identity.rk_defect = rank_tol(a * x * a - a, defect_tol);
  return identity;
}

CMatrix prescribed_outer(const CMatrix& a, const CMatrix& t_basis,
                         const CMatrix& s_basis, const Tolerance& tol) {
  require_finite(a, "A");
  require_finite(t_basis, "T basis");
  require_finite(s_basis, "S basis");
  const Index n = a.rows(), m = a.cols();
  if (t_basis.rows() != m)
    throw Error(Errc::shape_mismatch, "T basis must live in the domain of A");
  if (s_basis.rows() != n)
    throw Error(Errc::shape_mismatch, "S basis must live in the codomain of A");
  if (t_basis.cols() + s_basis.cols() != n)
    throw Error(Errc::shape_mismatch,
                "dim T + dim S must equal the codomain dimension");
  const Index t = t_basis.cols();
  CMatrix d_anchor = CMatrix::Zero(m, n);
  d_anchor.leftCols(t) = t_basis;
  const CMatrix s_perp = orthogonal_complement(s_basis, n, tol);
  CMatrix e_anchor = CMatrix::Zero(m, n);
  e_anchor.topRows(s_perp.cols()) = s_perp.adjoint();
  try {
    return bc_inverse(a, d_anchor, e_anchor, tol).X;
  } catch (const NotInvertibleError&) {
    throw Error(Errc::not_complementary,
                "A(T) and S are not complementary in the codomain");
  }
}

std::pair<double, double> projector_identities(const CMatrix& a,
                                               const CMatrix& d,
                                               const CMatrix& e,
                                               const Tolerance& tol) {
  const CMatrix x = bc_inverse_svd_pq(a, d, e, tol).X;
  const CMatrix p_ax =
      oblique_projector(range_basis(a * d, tol), null_basis(e, tol), tol);
  const CMatrix p_xa =
      oblique_projector(range_basis(d, tol), null_basis(e * a, tol), tol);
  return {(a * x - p_ax).norm(), (x * a - p_xa).norm()};
}

CMatrix canonical_intermediate(const CMatrix& d, const CMatrix& e,
                               const Tolerance& tol) {
  const CMatrix d_range = range_basis(d, tol);
  const CMatrix e_rows = range_basis(e.adjoint(), tol);
  if (d_range.cols() != e_rows.cols())
    throw Error(Errc::subspace_mismatch,
                "rk(D) and rk(E) differ; no intermediate matrix exists");
  return d_range * e_rows.adjoint();
}

namespace {

void require_matching_subspaces(const CMatrix& d, const CMatrix& e,
                                const CMatrix& g, const Tolerance& tol) {
  if (g.rows() != d.rows() || g.cols() != d.cols())
    throw Error(Errc::shape_mismatch, "G must have the shape of D");
  require_finite(g, "G");
  if (subspace_gap(range_basis(g, tol), range_basis(d, tol)) >
      kSubspaceGapTol)
    throw Error(Errc::subspace_mismatch, "R(G) does not match R(D)");
  if (subspace_gap(null_basis(g, tol), null_basis(e, tol)) > kSubspaceGapTol)
    throw Error(Errc::subspace_mismatch, "K(G) does not match K(E)");
}

}  // namespace

CMatrix along_via_group(const CMatrix& a, const CMatrix& d, const CMatrix& e,
                        const CMatrix& g, const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  require_matching_subspaces(d, e, g, tol);
  const CMatrix via_ag = g * group_inverse(a * g, tol);
  const CMatrix via_ga = group_inverse(g * a, tol) * g;
  const double bound = 1e-8 * result_scale(a, d, e);
  if ((via_ag - via_ga).norm() > bound)
    throw Error(Errc::cross_check_failed,
                "the two group-inverse routes disagree");
  return via_ag;
}

std::vector<double> default_epsilon_schedule() {
  return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
}

std::vector<LimitRow> limit_representation(const CMatrix& a, const CMatrix& d,
                                           const CMatrix& e, const CMatrix& g,
                                           const std::vector<double>& schedule,
                                           const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  require_matching_subspaces(d, e, g, tol);
  const CMatrix x = bc_inverse(a, d, e, tol).X;
  const CMatrix ga = g * a;
  const Index m = ga.rows();
  std::vector<LimitRow> rows;
  rows.reserve(schedule.size());
  for (double eps : schedule) {
    LimitRow row;
    row.eps = eps;
    const CMatrix shifted = ga - eps * CMatrix::Identity(m, m);
    Eigen::FullPivLU<CMatrix> lu(shifted);
    if (!lu.isInvertible()) {
      row.ok = false;  // shift hit an eigenvalue; point skipped
    } else {
      row.error = (lu.solve(g) - x).norm();
    }
    rows.push_back(row);
  }
  return rows;
}

CMatrix difference_decomposition(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const CMatrix& xa,
                                 const CMatrix& b, const CMatrix& f,
                                 const CMatrix& g, const CMatrix& xb,
                                 const Tolerance& tol) {
  const Index n = a.rows(), m = a.cols();
  const CMatrix term1 = xb * (mp_inverse(g, tol) * g - mp_inverse(e, tol) * e) *
                        (CMatrix::Identity(n, n) - a * xa);
  const CMatrix term2 = xb * (a - b) * xa;
  const CMatrix term3 = (CMatrix::Identity(m, m) - xb * b) *
                        (f * mp_inverse(f, tol) - d * mp_inverse(d, tol)) * xa;
  return term1 + term2 + term3;
}

namespace {

CMatrix unit_frobenius_random(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix r(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) r(i, j) = Complex(gauss(rng), gauss(rng));
  return r / r.norm();
}

}  // namespace

std::vector<PerturbRow> perturbation_experiment(
    const CMatrix& a, const CMatrix& d, const CMatrix& e,
    const std::vector<double>& deltas, std::uint64_t seed,
    const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  std::mt19937_64 rng(seed);
  const CMatrix dir_a = unit_frobenius_random(a.rows(), a.cols(), rng);
  const CMatrix dir_d = unit_frobenius_random(d.cols(), d.cols(), rng);
  const CMatrix dir_e = unit_frobenius_random(e.rows(), e.rows(), rng);
  const CMatrix x = bc_inverse(a, d, e, tol).X;
  std::vector<PerturbRow> rows;
  rows.reserve(deltas.size());
  for (double delta : deltas) {
    PerturbRow row;
    row.delta = delta;
    const CMatrix a_k = a + delta * dir_a;
    const CMatrix d_k =
        d * (CMatrix::Identity(d.cols(), d.cols()) + delta * dir_d);
    const CMatrix e_k =
        (CMatrix::Identity(e.rows(), e.rows()) + delta * dir_e) * e;
    try {
      const CMatrix x_k = bc_inverse(a_k, d_k, e_k, tol).X;
      row.error = (x_k - x).norm();
      const CMatrix reconstructed =
          difference_decomposition(a, d, e, x, a_k, d_k, e_k, x_k, tol);
      row.decomposition_residual = ((x_k - x) - reconstructed).norm();
    } catch (const Error&) {
      row.existed = false;  // legal outcome, reported not raised
    }
    rows.push_back(row);
  }
  return rows;
}

DerivativeCheck derivative_along_curve(const CurveSpec& curve,
                                       const Tolerance& tol) {
  const double t0 = curve.t0, h = curve.h;
  const double samples[3] = {t0 - h, t0, t0 + h};
  CMatrix a_s[3], d_s[3], e_s[3], x_s[3];
  Index rank_d[3], rank_e[3];
  for (int i = 0; i < 3; ++i) {
    a_s[i] = curve.A(samples[i]);
    d_s[i] = curve.D(samples[i]);
    e_s[i] = curve.E(samples[i]);
    rank_d[i] = rank_tol(d_s[i], tol);
    rank_e[i] = rank_tol(e_s[i], tol);
  }
  if (rank_d[0] != rank_d[1] || rank_d[1] != rank_d[2] ||
      rank_e[0] != rank_e[1] || rank_e[1] != rank_e[2])
    throw Error(Errc::rank_drift,
                "rank of D or E changes inside the sampled window");
  for (int i = 0; i < 3; ++i)
    x_s[i] = bc_inverse(a_s[i], d_s[i], e_s[i], tol).X;

  const double inv2h = 1.0 / (2.0 * h);
  const CMatrix a_dot = (a_s[2] - a_s[0]) * inv2h;
  const CMatrix d_dot = (d_s[2] - d_s[0]) * inv2h;
  const CMatrix e_dot = (e_s[2] - e_s[0]) * inv2h;
  const CMatrix f0 = mp_inverse(d_s[1], tol);
  const CMatrix g0 = mp_inverse(e_s[1], tol);
  const CMatrix f_dot = (mp_inverse(d_s[2], tol) - mp_inverse(d_s[0], tol)) * inv2h;
  const CMatrix g_dot = (mp_inverse(e_s[2], tol) - mp_inverse(e_s[0], tol)) * inv2h;

  const CMatrix& x = x_s[1];
  const CMatrix& a0 = a_s[1];
  const Index n = a0.rows(), m = a0.cols();
  DerivativeCheck check;
  check.analytic = x * (g_dot * e_s[1] + g0 * e_dot) *
                       (CMatrix::Identity(n, n) - a0 * x) +
                   (CMatrix::Identity(m, m) - x * a0) *
                       (d_dot * f0 + d_s[1] * f_dot) * x -
                   x * a_dot * x;
  check.numeric = (x_s[2] - x_s[0]) * inv2h;
  check.gap = (check.analytic - check.numeric).norm();
  return check;
}

}  // namespace bcinv
