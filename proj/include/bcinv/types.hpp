#ifndef BCINV_TYPES_HPP
#define BCINV_TYPES_HPP

#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace bcinv {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Rank-decision policy: a singular value counts iff
/// sigma > max(rel * sigma_max, abs). When `rel` is not set it defaults to
/// max(rows, cols) * machine epsilon for the matrix at hand.
struct Tolerance {
  std::optional<double> rel{};
  double abs = 0.0;

  double effective_rel(Index rows, Index cols) const {
    if (rel) return *rel;
    return static_cast<double>(std::max(rows, cols)) *
           std::numeric_limits<double>::epsilon();
  }

  double threshold(double sigma_max, Index rows, Index cols) const {
    return std::max(effective_rel(rows, cols) * sigma_max, abs);
  }
};

enum class Errc {
  invalid_input,
  shape_mismatch,
  rank_zero,
  not_complementary,
  not_invertible,
  not_one_sided,
  cross_check_failed,
  verification_failed,
  no_group_inverse,
  invalid_weights,
  subspace_mismatch,
  singular_shift,
  rank_drift,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require_finite(const CMatrix& a, const char* name) {
  if (!a.allFinite())
    throw Error(Errc::invalid_input,
                std::string(name) + " contains NaN or Inf entries");
}

}  // namespace bcinv

#endif
