#include <doctest.h>

#include <Eigen/Dense>

#include "support.hpp"

using namespace bcinv;
using testsupport::random_complex;
using testsupport::random_rank;
using testsupport::random_unitary;

TEST_CASE("svd of the identity") {
  const auto dec = svd(CMatrix::Identity(3, 3));
  CHECK(dec.S.size() == 3);
  for (int i = 0; i < 3; ++i)
    CHECK(dec.S(i) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((dec.reconstruct() - CMatrix::Identity(3, 3)).norm() < 1e-14);
}

TEST_CASE("svd of a diagonal matrix keeps its entries") {
  CMatrix a(2, 2);
  a << 3, 0, 0, 0;
  const auto dec = svd(a);
  CHECK(dec.S(0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(dec.S(1) == doctest::Approx(0.0));
}

TEST_CASE("svd reconstructs random matrices") {
  std::mt19937_64 rng(11);
  const CMatrix a = random_complex(4, 6, rng);
  const auto dec = svd(a);
  CHECK((dec.reconstruct() - a).norm() <= 1e-12 * dec.S(0));
  CHECK((dec.U.adjoint() * dec.U - CMatrix::Identity(4, 4)).norm() < 1e-13);
  CHECK((dec.V.adjoint() * dec.V - CMatrix::Identity(6, 6)).norm() < 1e-13);
}

TEST_CASE("svd reconstruction over random shapes") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> dim(1, 16);
  for (int trial = 0; trial < 25; ++trial) {
    const CMatrix a = random_complex(dim(rng), dim(rng), rng);
    const auto dec = svd(a);
    const double smax = dec.S.size() ? dec.S(0) : 0.0;
    CHECK((dec.reconstruct() - a).norm() <= 1e-12 * std::max(1.0, smax));
    for (Index i = 1; i < dec.S.size(); ++i) CHECK(dec.S(i - 1) >= dec.S(i));
  }
}

TEST_CASE("svd rejects non-finite entries") {
  CMatrix a = CMatrix::Zero(2, 2);
  a(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  CHECK_THROWS_AS(svd(a), Error);
}

TEST_CASE("rank of the zero matrix is zero") {
  CHECK(rank_tol(CMatrix::Zero(3, 2)) == 0);
}

TEST_CASE("rank counts only singular values above the threshold") {
  CMatrix corner(2, 2);
  corner << 1, 0, 0, 0;
  CHECK(rank_tol(corner) == 1);

  CMatrix nearly(2, 2);
  nearly << 1, 0, 0, 1e-18;
  CHECK(rank_tol(nearly) == 1);

  Tolerance loose;
  loose.abs = 0.5;
  CMatrix spread(2, 2);
  spread << 1, 0, 0, 0.25;
  CHECK(rank_tol(spread, loose) == 1);
  CHECK(rank_tol(spread) == 2);
}

TEST_CASE("mp inverse on identity and zero") {
  CHECK((mp_inverse(CMatrix::Identity(4, 4)) - CMatrix::Identity(4, 4))
            .norm() < 1e-14);
  const CMatrix z = mp_inverse(CMatrix::Zero(3, 2));
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  CHECK(z.norm() == 0.0);
}

TEST_CASE("mp inverse of a diagonal matrix") {
  CMatrix a(2, 2);
  a << 2, 0, 0, 0;
  CMatrix expected(2, 2);
  expected << 0.5, 0, 0, 0;
  CHECK((mp_inverse(a) - expected).norm() < 1e-15);
}

TEST_CASE("mp inverse satisfies the four defining equations") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<Index> dim(1, 10);
    const Index rows = dim(rng), cols = dim(rng);
    std::uniform_int_distribution<Index> rank_pick(0, std::min(rows, cols));
    const CMatrix a = random_rank(rows, cols, rank_pick(rng), rng);
    const CMatrix p = mp_inverse(a);
    const double bound = 1e-10 * std::max(1.0, sigma_max(a));
    CHECK((a * p * a - a).norm() <= bound);
    CHECK((p * a * p - p).norm() <= bound);
    CHECK(((a * p) - (a * p).adjoint()).norm() <= bound);
    CHECK(((p * a) - (p * a).adjoint()).norm() <= bound);
    CHECK(rank_tol(p) == rank_tol(a));
  }
}

TEST_CASE("mp inverse is an involution on well-conditioned matrices") {
  std::mt19937_64 rng(14);
  const CMatrix a = random_complex(5, 3, rng);
  CHECK((mp_inverse(mp_inverse(a)) - a).norm() <= 1e-9 * sigma_max(a));
}

TEST_CASE("full-rank factorization on the canonical rank-one matrix") {
  CMatrix a(2, 2);
  a << 1, 0, 0, 0;
  const auto fac = full_rank_factorization(a);
  CHECK(fac.r == 1);
  CMatrix f_expect(2, 1), g_expect(1, 2);
  f_expect << 1, 0;
  g_expect << 1, 0;
  CHECK((fac.F - f_expect).norm() < 1e-14);
  CHECK((fac.G - g_expect).norm() < 1e-14);
}

TEST_CASE("full-rank factorization of an outer product keeps directions") {
  std::mt19937_64 rng(15);
  const CVector d1 = random_complex(4, 1, rng);
  const CVector d2 = random_complex(3, 1, rng);
  const auto fac = full_rank_factorization(d1 * d2.adjoint());
  CHECK(fac.r == 1);
  CHECK(subspace_gap(fac.F, d1 / d1.norm()) < 1e-12);
  CHECK(subspace_gap(fac.G.adjoint() / fac.G.norm(), d2 / d2.norm()) < 1e-12);
}

TEST_CASE("full-rank factorization reconstructs, orthonormal left factor") {
  std::mt19937_64 rng(16);
  const CMatrix a = random_rank(4, 5, 2, rng);
  const auto fac = full_rank_factorization(a);
  CHECK(fac.r == 2);
  CHECK((fac.F * fac.G - a).norm() <= 1e-12 * sigma_max(a));
  CHECK((fac.F.adjoint() * fac.F - CMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK(rank_tol(fac.F) == 2);
  CHECK(rank_tol(fac.G) == 2);
}

TEST_CASE("full-rank factorization refuses the zero matrix") {
  CHECK_THROWS_AS(full_rank_factorization(CMatrix::Zero(2, 3)), Error);
}

TEST_CASE("range and null bases") {
  CHECK(null_basis(CMatrix::Identity(2, 2)).cols() == 0);

  CMatrix corner(2, 2);
  corner << 1, 0, 0, 0;
  const CMatrix rb = range_basis(corner);
  CHECK(rb.cols() == 1);
  CHECK(std::abs(std::abs(rb(0, 0)) - 1.0) < 1e-14);
  CHECK(std::abs(rb(1, 0)) < 1e-14);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix a = random_rank(5, 7, 3, rng);
    const CMatrix nb = null_basis(a);
    CHECK(nb.cols() == 7 - 3);
    CHECK((a * nb).norm() <= 1e-12 * sigma_max(a));
    CHECK(range_basis(a).cols() == 3);
  }
}

TEST_CASE("oblique projector onto orthogonal axes") {
  CMatrix m(2, 1), n(2, 1);
  m << 1, 0;
  n << 0, 1;
  CMatrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK((oblique_projector(m, n) - expected).norm() < 1e-14);
}

TEST_CASE("oblique projector onto a slanted direction") {
  CMatrix m(2, 1), n(2, 1);
  m << 1, 1;
  n << 0, 1;
  CMatrix expected(2, 2);
  expected << 1, 0, 1, 0;
  CHECK((oblique_projector(m, n) - expected).norm() < 1e-12);
}

TEST_CASE("oblique projector properties on random complements") {
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    const Index dim = 6;
    const CMatrix u = random_unitary(dim, rng);
    std::uniform_int_distribution<Index> split(1, dim - 1);
    const Index k = split(rng);
    // Mix the two halves a little so the pair is genuinely oblique.
    const CMatrix mix = random_unitary(dim, rng);
    const CMatrix m_basis = u.leftCols(k) + 0.25 * mix.leftCols(k);
    const CMatrix n_basis = u.rightCols(dim - k);
    const CMatrix p = oblique_projector(m_basis, n_basis);
    CHECK((p * p - p).norm() <= 1e-10);
    CHECK((p * m_basis - m_basis).norm() <= 1e-10);
    CHECK((p * n_basis).norm() <= 1e-10);
    CHECK(rank_tol(p) == k);
  }
}

TEST_CASE("oblique projector rejects bad inputs") {
  CMatrix m(2, 1), n(2, 1);
  m << 1, 0;
  n << 1, 1e-17;  // far below the rank threshold: effectively the same line
  CHECK_THROWS_AS(oblique_projector(m, n), Error);

  CMatrix tall(3, 1);
  tall << 1, 0, 0;
  CHECK_THROWS_AS(oblique_projector(tall, tall), Error);
}

TEST_CASE("subspace gap separates equal and transverse spans") {
  std::mt19937_64 rng(19);
  const CMatrix u = random_unitary(5, rng);
  const CMatrix b1 = u.leftCols(2);
  // Same span, different orthonormal basis.
  const CMatrix b2 = b1 * random_unitary(2, rng);
  CHECK(subspace_gap(b1, b2) <= 1e-13);
  CHECK(subspace_gap(b1, u.rightCols(2)) ==
        doctest::Approx(1.0).epsilon(1e-10));
}
