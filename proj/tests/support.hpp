#ifndef BCINV_TESTS_SUPPORT_HPP
#define BCINV_TESTS_SUPPORT_HPP

#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "bcinv/inverse.hpp"

namespace testsupport {

using namespace bcinv;

inline CMatrix random_complex(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
  return m;
}

inline CMatrix random_rank(Index rows, Index cols, Index r,
                           std::mt19937_64& rng) {
  if (r == 0) return CMatrix::Zero(rows, cols);
  return random_complex(rows, r, rng) * random_complex(r, cols, rng);
}

inline CMatrix random_unitary(Index dim, std::mt19937_64& rng) {
  Eigen::HouseholderQR<CMatrix> qr(random_complex(dim, dim, rng));
  return qr.householderQ() * CMatrix::Identity(dim, dim);
}

inline CMatrix random_nonsingular(Index dim, std::mt19937_64& rng,
                                  double max_cond = 1e3) {
  for (int tries = 0; tries < 200; ++tries) {
    CMatrix m = random_complex(dim, dim, rng);
    const auto s = svd(m).S;
    if (s(dim - 1) > 0 && s(0) / s(dim - 1) <= max_cond) return m;
  }
  throw std::runtime_error("could not draw a well-conditioned square matrix");
}

inline CMatrix hermitian_spd(Index dim, std::mt19937_64& rng) {
  const CMatrix b = random_complex(dim, dim, rng);
  CMatrix w = b * b.adjoint() + CMatrix::Identity(dim, dim);
  return 0.5 * (w + w.adjoint());
}

struct Instance {
  CMatrix A, D, E;
  Index r = 0;
};

/// Existing instance (two-sided) with cond(EAD) bounded over the counted
/// singular values; resamples until the bound holds.
inline Instance random_existing_instance(Index n, Index m, Index r,
                                         std::mt19937_64& rng,
                                         double max_cond = 1e3) {
  for (int tries = 0; tries < 2000; ++tries) {
    Instance inst;
    inst.A = random_complex(n, m, rng);
    inst.D = random_rank(m, n, r, rng);
    inst.E = random_rank(m, n, r, rng);
    inst.r = r;
    const auto s = svd(inst.E * inst.A * inst.D).S;
    if (rank_from_singular_values(s, m, n, {}) != r) continue;
    if (r > 0 && s(0) / s(r - 1) > max_cond) continue;
    if (rank_tol(inst.D) != r || rank_tol(inst.E) != r) continue;
    return inst;
  }
  throw std::runtime_error("no well-conditioned existing instance found");
}

/// Existing instance whose A has rank r + extra while D and E keep rank r,
/// built from orthonormal frames so the extra directions do not disturb the
/// defining equations.
inline Instance instance_with_rank_gap(Index n, Index m, Index r, Index extra,
                                       std::mt19937_64& rng) {
  if (r + extra > std::min(n, m))
    throw std::runtime_error("requested rank exceeds the shape");
  const CMatrix un = random_unitary(n, rng);
  const CMatrix um = random_unitary(m, rng);
  const CMatrix x_b = un.leftCols(r);        // image frame of the core
  const CMatrix x_perp = un.rightCols(n - r);
  const CMatrix v_d = um.leftCols(r);        // range frame of D
  const CMatrix v_perp = um.rightCols(m - r);
  const CMatrix core = random_nonsingular(std::max<Index>(r, 1), rng, 100.0)
                           .topLeftCorner(r, r);
  Instance inst;
  inst.r = r;
  inst.A = x_b * core * v_d.adjoint();
  if (extra > 0) {
    const CMatrix bump = random_nonsingular(extra, rng);
    inst.A += x_perp.leftCols(extra) * bump * v_perp.leftCols(extra).adjoint();
  }
  // Unitary outer frames with bounded square mixers keep cond(EAD) under
  // control by construction.
  inst.D = v_d * random_nonsingular(r, rng, 10.0) *
           random_unitary(n, rng).topRows(r);
  inst.E = random_unitary(m, rng).leftCols(r) *
           random_nonsingular(r, rng, 10.0) * x_b.adjoint();
  return inst;
}

/// Index-1 matrix similar to blkdiag(core, 0); EP iff the similarity is
/// unitary.
inline CMatrix index_one_matrix(Index n, Index r, std::mt19937_64& rng,
                                bool ep) {
  const CMatrix core = random_nonsingular(r, rng);
  CMatrix block = CMatrix::Zero(n, n);
  block.topLeftCorner(r, r) = core;
  if (ep) {
    const CMatrix u = random_unitary(n, rng);
    return u * block * u.adjoint();
  }
  const CMatrix s = random_nonsingular(n, rng, 20.0);
  return s * block * s.inverse();
}

/// Brute-force construction: X is pinned down by X(A v_i) = v_i on a basis
/// of R(D) and X w_j = 0 on a basis of K(E); solved column by column through
/// an LU factorization, independent of the library's inversion routes.
inline CMatrix action_oracle(const CMatrix& a, const CMatrix& d,
                             const CMatrix& e, const Tolerance& tol = {}) {
  const CMatrix v = range_basis(d, tol);
  const CMatrix w = null_basis(e, tol);
  const Index n = a.rows(), m = a.cols();
  if (v.cols() + w.cols() != n)
    throw std::runtime_error("oracle: rank mismatch between D and E");
  CMatrix constraints(n, n);
  constraints << a * v, w;
  Eigen::FullPivLU<CMatrix> lu(constraints.transpose());
  if (!lu.isInvertible())
    throw std::runtime_error("oracle: prescribed action is inconsistent");
  CMatrix target = CMatrix::Zero(m, n);
  target.leftCols(v.cols()) = v;
  return lu.solve(target.transpose()).transpose();
}

}  // namespace testsupport

#endif
