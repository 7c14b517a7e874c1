#ifndef BCINV_ANALYSIS_HPP
#define BCINV_ANALYSIS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "bcinv/inverse.hpp"

namespace bcinv {

/// Residuals of the defining equations for an arbitrary candidate X.
Residuals verify_definition(const CMatrix& a, const CMatrix& d,
                            const CMatrix& e, const CMatrix& x,
                            const Tolerance& tol = {});

/// Properties of the idempotents XA and AX for X the (D,E)-inverse.
struct ProjectorReport {
  double xa_idempotent = 0.0;       // ||(XA)^2 - XA||_F
  double ax_idempotent = 0.0;       // ||(AX)^2 - AX||_F
  double range_xa_eq_RD = 0.0;      // gap(R(XA), R(D))
  double kernel_ax_eq_KE = 0.0;     // gap(K(AX), K(E))
  double kernel_xa_eq_KEA = 0.0;    // gap(K(XA), K(EA))
  double range_ax_eq_RAD = 0.0;     // gap(R(AX), R(AD))
  bool ax_orthogonal = false;       // AX Hermitian
  bool xa_orthogonal = false;       // XA Hermitian
  bool inner = false;               // ||AXA - A|| small <=> rk(A) = rk(D)
  double outer_residual = 0.0;      // ||XAX - X||_F
  double inner_residual = 0.0;      // ||AXA - A||_F
};

ProjectorReport outer_inner_report(const CMatrix& a, const CMatrix& d,
                                   const CMatrix& e, const Tolerance& tol = {});

struct RankIdentity {
  Index rk_A = 0;
  Index rk_D = 0;
  Index rk_defect = 0;  // rank of A X A - A; rk_A = rk_D + rk_defect
};

RankIdentity rank_defect_identity(const CMatrix& a, const CMatrix& d,
                                  const CMatrix& e, const Tolerance& tol = {});

/// The unique outer inverse with range span(t_basis) and null space
/// span(s_basis), computed through the (D,E) machinery with anchors built
/// from the bases. Requires A(T) (+) S to fill the codomain.
CMatrix prescribed_outer(const CMatrix& a, const CMatrix& t_basis,
                         const CMatrix& s_basis, const Tolerance& tol = {});

/// || AX - P_{R(AD),K(E)} ||_F and || XA - P_{R(D),K(EA)} ||_F.
std::pair<double, double> projector_identities(const CMatrix& a,
                                               const CMatrix& d,
                                               const CMatrix& e,
                                               const Tolerance& tol = {});

/// A canonical intermediate matrix with R(G) = R(D) and K(G) = K(E);
/// requires rk(D) = rk(E).
CMatrix canonical_intermediate(const CMatrix& d, const CMatrix& e,
                               const Tolerance& tol = {});

/// X through the group inverse of AG (must also match the group route
/// through GA); requires R(G) = R(D) and K(G) = K(E).
CMatrix along_via_group(const CMatrix& a, const CMatrix& d, const CMatrix& e,
                        const CMatrix& g, const Tolerance& tol = {});

struct LimitRow {
  double eps = 0.0;
  double error = 0.0;
  bool ok = true;  // false when the shift made GA - eps I singular
};

std::vector<double> default_epsilon_schedule();

/// errors_k = || (GA - eps_k I)^{-1} G  -  X ||_F.
std::vector<LimitRow> limit_representation(
    const CMatrix& a, const CMatrix& d, const CMatrix& e, const CMatrix& g,
    const std::vector<double>& schedule = default_epsilon_schedule(),
    const Tolerance& tol = {});

/// Reconstructs XB - XA from the three-term splitting
///   XB (G^+G - E^+E)(I - A XA) + XB (A - B) XA + (I - XB B)(F F^+ - D D^+) XA
/// valid whenever both inverses exist.
CMatrix difference_decomposition(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const CMatrix& xa,
                                 const CMatrix& b, const CMatrix& f,
                                 const CMatrix& g, const CMatrix& xb,
                                 const Tolerance& tol = {});

struct PerturbRow {
  double delta = 0.0;
  double error = 0.0;              // ||X_k - X||_F
  bool existed = true;
  double decomposition_residual = 0.0;
};

/// Multiplicative, rank-preserving perturbations D(I + delta R) and
/// (I + delta R') E plus an additive A + delta R_A, one row per delta.
/// Rows where existence is lost are flagged, not raised.
std::vector<PerturbRow> perturbation_experiment(
    const CMatrix& a, const CMatrix& d, const CMatrix& e,
    const std::vector<double>& deltas, std::uint64_t seed,
    const Tolerance& tol = {});

/// Smooth curve t -> (A(t), D(t), E(t)) with evaluation point and step.
struct CurveSpec {
  std::function<CMatrix(double)> A;
  std::function<CMatrix(double)> D;
  std::function<CMatrix(double)> E;
  double t0 = 0.0;
  double h = 1e-5;
};

struct DerivativeCheck {
  CMatrix analytic;
  CMatrix numeric;
  double gap = 0.0;
};

/// Analytic derivative of t -> A(t)^{||(D(t),E(t))} via the three-term
/// formula (primitively differentiated by central differences) against the
/// central difference of the map itself. Rank of D and E must be locally
/// constant across the sampled window.
DerivativeCheck derivative_along_curve(const CurveSpec& curve,
                                       const Tolerance& tol = {});

}  // namespace bcinv

#endif
