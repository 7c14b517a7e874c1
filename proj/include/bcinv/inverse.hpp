#ifndef BCINV_INVERSE_HPP
#define BCINV_INVERSE_HPP

#include <optional>
#include <string>

#include "bcinv/existence.hpp"

namespace bcinv {

enum class Method { MpFormula, FrfFormula, BasisMethod, SvdPQ, Elimination };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// Residuals of the defining equations for a candidate inverse X:
///   xad_d     = ||X A D - D||_F
///   eax_e     = ||E A X - E||_F
///   range_gap = ||(I - P_{R(D)}) X||_F   (violation of R(X) <= R(D))
///   kernel_gap= ||X * null_basis(E)||_F  (violation of K(E) <= K(X))
struct Residuals {
  double xad_d = 0.0;
  double eax_e = 0.0;
  double range_gap = 0.0;
  double kernel_gap = 0.0;

  double max() const {
    return std::max(std::max(xad_d, eax_e), std::max(range_gap, kernel_gap));
  }
};

struct InverseResult {
  CMatrix X;
  Method method = Method::SvdPQ;
  Index r = 0;
  Residuals residuals;
};

/// Nonsingular P (m x m) and Q (n x n) with P * EAD * Q = [[I_r,0],[0,0]].
struct PQDecomposition {
  CMatrix P;
  CMatrix Q;
  Index r = 0;
};

enum class Side { Left, Right };

/// Parameterization of all one-sided (D,E)-inverses.
///   Right: member(Z) = base + anchor * projector * Z,  Z in C_{n x n},
///          anchor = D, projector = I_n - (EAD)^+ EAD.
///   Left:  member(Z) = base + Z * projector * anchor,  Z in C_{m x m},
///          anchor = E, projector = I_m - EAD (EAD)^+.
/// base = D (EAD)^+ E is the member at Z = 0. When
/// rk(D) = rk(E) = rk(EAD) every member collapses to base.
struct OneSidedFamily {
  Side side = Side::Right;
  CMatrix base;
  CMatrix projector;
  CMatrix anchor;

  CMatrix member(const CMatrix& z) const;
  Index parameter_dim() const {
    return side == Side::Right ? anchor.cols() : anchor.rows();
  }
};

// Residual acceptance policy: a result is accepted when every defining
// residual is below factor * scale with scale = max(1, smax(A)*smax(D),
// smax(E)). Elimination gets a looser factor, cross checking its own.
inline constexpr double kResidualFactor = 1e-9;
inline constexpr double kElimResidualFactor = 1e-8;
inline constexpr double kCrossCheckFactor = 1e-7;

double result_scale(const CMatrix& a, const CMatrix& d, const CMatrix& e);

Residuals compute_residuals(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const CMatrix& x,
                            const Tolerance& tol = {});

/// X = D (EAD)^+ E.
InverseResult bc_inverse_mp(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const Tolerance& tol = {},
                            double accept_factor = kResidualFactor);

/// X = D1 (E2 A D1)^{-1} E2 with D = D1 D2 and E = E1 E2 full-rank
/// factorizations.
InverseResult bc_inverse_frf(const CMatrix& a, const CMatrix& d,
                             const CMatrix& e, const Tolerance& tol = {},
                             double accept_factor = kResidualFactor);

/// X = [v_1..v_r 0..0] [A v_1..A v_r w_1..w_{n-s}]^{-1} with {v_i} an
/// orthonormal basis of R(D) and {w_j} of K(E). Nonsingularity of the
/// assembled matrix is itself the existence test.
InverseResult bc_inverse_basis(const CMatrix& a, const CMatrix& d,
                               const CMatrix& e, const Tolerance& tol = {},
                               double accept_factor = kResidualFactor);

/// SVD route: EAD = U S V^*, P = (S_r^{-1/2} (+) I) U^*,
/// Q = V (S_r^{-1/2} (+) I), X = (DQ)[:,1..r] (PE)[1..r,:].
InverseResult bc_inverse_svd_pq(const CMatrix& a, const CMatrix& d,
                                const CMatrix& e, const Tolerance& tol = {},
                                PQDecomposition* pq_out = nullptr,
                                double accept_factor = kResidualFactor);

/// Gauss-Jordan route on the block matrix [[EAD, E],[D, 0]]: row operations
/// reduce EAD and carry E, column operations finish the identity block and
/// carry D; the result is the product of the carried blocks.
InverseResult bc_inverse_elim(const CMatrix& a, const CMatrix& d,
                              const CMatrix& e, const Tolerance& tol = {},
                              double accept_factor = kElimResidualFactor);

/// Dispatcher. Default method is SvdPQ. When no method is requested the
/// MP-formula route is computed as well and a disagreement above
/// cross_factor * scale raises cross_check_failed.
InverseResult bc_inverse(const CMatrix& a, const CMatrix& d, const CMatrix& e,
                         const Tolerance& tol = {},
                         std::optional<Method> method = {},
                         double accept_factor = kResidualFactor,
                         double cross_factor = kCrossCheckFactor);

/// Inverse along d: the (d, d) case.
InverseResult inverse_along(const CMatrix& a, const CMatrix& d,
                            const Tolerance& tol = {},
                            std::optional<Method> method = {});

OneSidedFamily onesided_family(const CMatrix& a, const CMatrix& d,
                               const CMatrix& e, const Tolerance& tol,
                               Side side);

/// The singleton member D1 (E2 A D1)^{-1} E2 that both one-sided families
/// reduce to when rk(D) = rk(E) = rk(EAD).
InverseResult unique_onesided_frf(const CMatrix& a, const CMatrix& d,
                                  const CMatrix& e, const Tolerance& tol = {});

}  // namespace bcinv

#endif
