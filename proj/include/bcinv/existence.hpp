#ifndef BCINV_EXISTENCE_HPP
#define BCINV_EXISTENCE_HPP

#include <utility>

#include "bcinv/matcore.hpp"

namespace bcinv {

/// Verdicts and rank evidence for one- and two-sided (D,E)-invertibility
/// of A (shapes: A n x m, D and E m x n).
///
///   left      <=>  rk(D) = rk(EAD)
///   right     <=>  rk(E) = rk(EAD)
///   two_sided <=>  rk(D) = rk(E) = rk(EAD)
///
/// `margin` is the smallest slack (counted singular value minus threshold)
/// over all rank decisions; a tiny margin flags a borderline verdict.
struct ExistenceReport {
  bool left = false;
  bool right = false;
  bool two_sided = false;
  bool unique_onesided = false;
  Index rk_D = 0;
  Index rk_E = 0;
  Index rk_EAD = 0;
  Index rk_AD = 0;
  Index rk_EA = 0;
  double margin = std::numeric_limits<double>::infinity();
};

/// Raised when a computation requires an inverse that does not exist;
/// carries the rank evidence for the failure.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(ExistenceReport report, const std::string& what)
      : Error(Errc::not_invertible, what), report_(std::move(report)) {}
  const ExistenceReport& report() const noexcept { return report_; }

 private:
  ExistenceReport report_;
};

void check_triple_shapes(const CMatrix& a, const CMatrix& d, const CMatrix& e);

ExistenceReport existence_report(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const Tolerance& tol = {});

/// Existence of the inverse along d (the d = e case). The left and right
/// verdicts always agree for this case.
ExistenceReport along_report(const CMatrix& a, const CMatrix& d,
                             const Tolerance& tol = {});

/// Independent oracle: represents x -> P(Ax) on bases of R(D) and of the
/// orthogonal complement of K(E), where P projects onto that complement
/// along K(E). Returns (injective, surjective); injectivity must match the
/// left verdict and surjectivity the right one.
std::pair<bool, bool> phi_oracle(const CMatrix& a, const CMatrix& d,
                                 const CMatrix& e, const Tolerance& tol = {});

/// Nonemptiness of the sets of left/right (D,E)-invertible matrices:
/// some left (D,E)-invertible A exists iff rk(D) <= rk(E), and some right
/// one iff rk(E) <= rk(D).
std::pair<bool, bool> family_nonempty(const CMatrix& d, const CMatrix& e,
                                      const Tolerance& tol = {});

}  // namespace bcinv

#endif
