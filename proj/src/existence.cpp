#include "bcinv/existence.hpp"

#include <algorithm>

namespace bcinv {

void check_triple_shapes(const CMatrix& a, const CMatrix& d,
                         const CMatrix& e) {
  if (d.rows() != a.cols() || d.cols() != a.rows())
    throw Error(Errc::shape_mismatch, "D must be cols(A) x rows(A)");
  if (e.rows() != a.cols() || e.cols() != a.rows())
    throw Error(Errc::shape_mismatch, "E must be cols(A) x rows(A)");
  require_finite(a, "A");
  require_finite(d, "D");
  require_finite(e, "E");
}

namespace {

Index ranked(const CMatrix& m, const Tolerance& tol, double& margin) {
  if (m.size() == 0) return 0;
  double local = std::numeric_limits<double>::infinity();
  const Index r =
      rank_from_singular_values(svd(m).S, m.rows(), m.cols(), tol, &local);
  margin = std::min(margin, local);
  return r;
}

}  // namespace

ExistenceReport existence_report(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  ExistenceReport rep;
  rep.rk_D = ranked(d, tol, rep.margin);
  rep.rk_E = ranked(e, tol, rep.margin);
  rep.rk_EAD = ranked(e * a * d, tol, rep.margin);
  rep.rk_AD = ranked(a * d, tol, rep.margin);
  rep.rk_EA = ranked(e * a, tol, rep.margin);
  rep.left = rep.rk_D == rep.rk_EAD;
  rep.right = rep.rk_E == rep.rk_EAD;
  rep.two_sided = rep.left && rep.right;
  rep.unique_onesided = rep.two_sided;
  return rep;
}

ExistenceReport along_report(const CMatrix& a, const CMatrix& d,
                             const Tolerance& tol) {
  return existence_report(a, d, d, tol);
}

std::pair<bool, bool> phi_oracle(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const Tolerance& tol) {
  check_triple_shapes(a, d, e);
  const CMatrix d_range = range_basis(d, tol);
  const CMatrix e_kernel = null_basis(e, tol);
  // The canonical complement of K(E): its orthogonal complement, i.e. the
  // row space of E.
  const CMatrix x_basis = orthogonal_complement(e_kernel, e.cols(), tol);
  const CMatrix proj = oblique_projector(x_basis, e_kernel, tol);
  const CMatrix phi = x_basis.adjoint() * (proj * (a * d_range));
  const Index rk_phi = rank_tol(phi, tol);
  return {rk_phi == d_range.cols(), rk_phi == x_basis.cols()};
}

std::pair<bool, bool> family_nonempty(const CMatrix& d, const CMatrix& e,
                                      const Tolerance& tol) {
  if (d.rows() != e.rows() || d.cols() != e.cols())
    throw Error(Errc::shape_mismatch, "D and E must have equal shapes");
  require_finite(d, "D");
  require_finite(e, "E");
  const Index rk_d = rank_tol(d, tol);
  const Index rk_e = rank_tol(e, tol);
  return {rk_d <= rk_e, rk_e <= rk_d};
}

}  // namespace bcinv
