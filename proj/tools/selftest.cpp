#include "selftest.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iostream>
#include <string>

#include "bcinv/analysis.hpp"
#include "bcinv/special.hpp"

namespace bcinv_cli {

using namespace bcinv;

namespace {

struct Harness {
  int failures = 0;

  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "ok  " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

CMatrix swap2() {
  CMatrix a(2, 2);
  a << 0, 1, 1, 0;
  return a;
}

CMatrix corner2() {
  CMatrix d(2, 2);
  d << 1, 0, 0, 0;
  return d;
}

}  // namespace

int run_selftest() {
  Harness h;
  const CMatrix eye2 = CMatrix::Identity(2, 2);
  const CMatrix swp = swap2();
  const CMatrix corner = corner2();

  h.check("rank of the corner projector is 1", rank_tol(corner) == 1);

  {
    const auto rep = existence_report(swp, corner, corner);
    h.check("swap instance: no two-sided inverse",
            !rep.two_sided && rep.rk_EAD == 0 && rep.rk_D == 1 &&
                rep.rk_E == 1);
    h.check("swap instance: rk(AD) = rk(EA) = 1 despite nonexistence",
            rep.rk_AD == 1 && rep.rk_EA == 1);
  }
  {
    const auto rep = existence_report(eye2, corner, corner);
    h.check("identity instance: two-sided inverse exists", rep.two_sided);
  }
  {
    const auto rep = along_report(swp, corner);
    h.check("swap instance: not invertible along the corner projector",
            !rep.two_sided);
  }
  {
    const auto [inj, sur] = phi_oracle(eye2, corner, corner);
    h.check("compression map bijective on the identity instance", inj && sur);
  }
  {
    const auto [inj, sur] = phi_oracle(swp, corner, corner);
    h.check("compression map degenerate on the swap instance", !inj && !sur);
  }
  {
    CMatrix rank2(2, 2);
    rank2 << 1, 0, 0, 1;
    const auto eq = family_nonempty(corner, corner);
    h.check("equal ranks: both one-sided families nonempty",
            eq.first && eq.second);
    const auto lt = family_nonempty(corner, rank2);
    h.check("rk(D) < rk(E): only the left family is nonempty",
            lt.first && !lt.second);
  }

  const double tight = 1e-14;
  auto matches_corner = [&](const CMatrix& x) {
    return (x - corner).norm() <= tight;
  };
  h.check("mp-formula route returns the corner projector",
          matches_corner(bc_inverse_mp(eye2, corner, corner).X));
  h.check("frf route returns the corner projector",
          matches_corner(bc_inverse_frf(eye2, corner, corner).X));
  h.check("basis route returns the corner projector",
          matches_corner(bc_inverse_basis(eye2, corner, corner).X));
  h.check("svd route returns the corner projector",
          matches_corner(bc_inverse_svd_pq(eye2, corner, corner).X));
  h.check("elimination route returns the corner projector",
          matches_corner(bc_inverse_elim(eye2, corner, corner).X));
  h.check("dispatcher returns the corner projector",
          matches_corner(bc_inverse(eye2, corner, corner).X));

  {
    bool refused = false;
    try {
      bc_inverse_basis(swp, corner, corner);
    } catch (const NotInvertibleError&) {
      refused = true;
    }
    h.check("basis route refuses the swap instance (singular assembly)",
            refused);
  }

  {
    // Rank-one anchors: X = d1 e2^* / (e2^* A d1).
    CMatrix a(2, 2);
    a << Complex(1, 0), Complex(2, 0), Complex(0, 0), Complex(1, 0);
    CVector d1(2), d2(2), e1(2), e2(2);
    d1 << Complex(1, 0), Complex(0, 1);
    d2 << Complex(2, 0), Complex(1, 0);
    e1 << Complex(1, 0), Complex(1, 1);
    e2 << Complex(1, 0), Complex(1, 0);
    const CMatrix d = d1 * d2.adjoint();
    const CMatrix e = e1 * e2.adjoint();
    const Complex denom = (e2.adjoint() * a * d1)(0, 0);
    const CMatrix expected = (d1 * e2.adjoint()) / denom;
    const CMatrix x = bc_inverse(a, d, e).X;
    h.check("rank-one anchors give the scaled outer product",
            (x - expected).norm() <= 1e-12 * expected.norm());
  }
  {
    // rk(D) = 1: inverse along D is D / tr(AD).
    CMatrix a(2, 3);
    a << 1, 2, 0, 0, 1, 1;
    CVector u(3), v(2);
    u << 1, 2, -1;
    v << 1, 1;
    const CMatrix d = u * v.adjoint();
    const Complex trace = (a * d).trace();
    const CMatrix x = inverse_along(a, d).X;
    h.check("rank-one anchor: inverse along D is D / tr(AD)",
            (x - d / trace).norm() <= 1e-12 * d.norm());
  }
  {
    // Full column rank D: inverse along D is D (AD)^{-1}.
    CMatrix a(2, 3);
    a << 1, 0, 1, 1, 0, 2;
    CMatrix d(3, 2);
    d << 1, 2, 0, 1, Complex(0, 1), 1;
    const CMatrix ad = a * d;
    const CMatrix expected = d * ad.inverse();
    const CMatrix x = inverse_along(a, d).X;
    h.check("full-column-rank anchor: inverse along D is D (AD)^{-1}",
            (x - expected).norm() <= 1e-10 * expected.norm());
  }
  {
    // Equal-rank anchors: family members do not depend on the parameter.
    const auto fam = onesided_family(eye2, corner, corner, {}, Side::Right);
    CMatrix z1(2, 2), z2(2, 2);
    z1 << Complex(0.3, 1.0), 2, -1, Complex(0, 0.5);
    z2 << 5, Complex(-2, 1), 0.25, 1;
    h.check("unique one-sided inverse: members coincide for distinct Z",
            (fam.member(z1) - fam.member(z2)).norm() <= 1e-12);
  }
  {
    const auto rep = outer_inner_report(eye2, corner, corner);
    h.check("identity instance: outer but not inner",
            rep.outer_residual <= 1e-12 && !rep.inner);
    const auto identity = rank_defect_identity(eye2, corner, corner);
    h.check("rank splits as rk(A) = rk(D) + rk(AXA - A)",
            identity.rk_A == 2 && identity.rk_D == 1 &&
                identity.rk_defect == 1);
  }
  {
    const CMatrix z = prescribed_outer(eye2, range_basis(corner),
                                       null_basis(corner));
    h.check("prescribed range/kernel outer inverse matches the direct route",
            matches_corner(z));
  }
  {
    const auto [gap_ax, gap_xa] = projector_identities(eye2, corner, corner);
    h.check("AX and XA match their oblique projectors",
            gap_ax <= 1e-12 && gap_xa <= 1e-12);
  }
  {
    const CMatrix via = along_via_group(eye2, corner, corner, corner);
    h.check("group-inverse route matches on the identity instance",
            matches_corner(via));
  }
  {
    const auto rows = limit_representation(eye2, corner, corner, corner);
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      decreasing = decreasing && rows[i].ok &&
                   rows[i].error < rows[i - 1].error;
    h.check("resolvent-limit errors decrease along the schedule", decreasing);
  }
  {
    CVector u(3), v(2);
    u << Complex(1, 1), 2, 0;
    v << 1, Complex(0, -2);
    const CMatrix outer = u * v.adjoint();
    const auto fac = full_rank_factorization(outer);
    const double col_gap = subspace_gap(fac.F, u / u.norm());
    const double row_gap =
        subspace_gap(fac.G.adjoint() / fac.G.norm(), v / v.norm());
    h.check("full-rank factorization of an outer product keeps its factors",
            fac.r == 1 && col_gap <= 1e-12 && row_gap <= 1e-12);
  }
  {
    CMatrix a(3, 2);
    a << Complex(1, 0), 2, Complex(0, 1), 1, 0, Complex(2, -1);
    const CMatrix mp = mp_inverse(a);
    const CMatrix via_pair = bc_inverse(a, a.adjoint(), a.adjoint()).X;
    h.check("adjoint anchors reproduce the Moore-Penrose inverse",
            (mp - via_pair).norm() <= 1e-12 * std::max(1.0, mp.norm()));
  }

  return h.failures;
}

}  // namespace bcinv_cli
