#pragma once

// Interpolation knot systems: Chebyshev knots of both kinds, Gauss-Jacobi
// knots (zeros of P_n^{(alpha,beta)}), and equispaced control knots.

#include <string>
#include <string_view>
#include <vector>

#include "hfejer/apfloat.hpp"
#include "hfejer/ratpoly.hpp"

namespace hfejer {

enum class KnotFamily { chebyshev1, chebyshev2, equispaced, gauss_jacobi };

std::string_view to_string(KnotFamily family);
/// Accepts the names produced by to_string. Throws std::invalid_argument.
KnotFamily parse_knot_family(std::string_view name);

/// A family together with its parameters. alpha/beta apply to gauss_jacobi,
/// [a, b] to equispaced; the other families live on (-1, 1).
struct FamilySpec {
  KnotFamily kind = KnotFamily::chebyshev1;
  ExactRational alpha = 0;
  ExactRational beta = 0;
  ExactRational a = -1;
  ExactRational b = 1;

  static FamilySpec chebyshev1() { return {KnotFamily::chebyshev1}; }
  static FamilySpec chebyshev2() { return {KnotFamily::chebyshev2}; }
  static FamilySpec gauss_jacobi(ExactRational alpha, ExactRational beta) {
    return {KnotFamily::gauss_jacobi, std::move(alpha), std::move(beta)};
  }
  static FamilySpec equispaced(ExactRational a = -1, ExactRational b = 1) {
    return {KnotFamily::equispaced, 0, 0, std::move(a), std::move(b)};
  }
  bool operator==(const FamilySpec&) const = default;
};

/// Strictly increasing knots. Construction rejects any consecutive gap at or
/// below 2^{16 - precision} with KnotSpacingError, and points outside the
/// family's interval with DomainError.
class KnotSet {
 public:
  KnotSet(std::vector<ApFloat> points, FamilySpec family, Precision bits);

  std::size_t n() const noexcept { return points_.size(); }
  const std::vector<ApFloat>& points() const noexcept { return points_; }
  const ApFloat& operator[](std::size_t i) const { return points_[i]; }
  const FamilySpec& family() const noexcept { return family_; }
  Precision precision() const noexcept { return precision_; }

 private:
  std::vector<ApFloat> points_;
  FamilySpec family_;
  Precision precision_;
};

/// cos((2i-1)pi/(2n)), i = 1..n, ascending. The middle knot of odd n is 0.
KnotSet chebyshev1_knots(unsigned n, Precision bits = kDefaultPrecision);

/// Zeros of U_n: cos(k pi/(n+1)), k = 1..n, ascending.
KnotSet chebyshev2_knots(unsigned n, Precision bits = kDefaultPrecision);

/// a + (i-1)(b-a)/(n-1), i = 1..n. Requires n >= 2 and a < b.
KnotSet equispaced_knots(unsigned n, const ExactRational& a, const ExactRational& b,
                         Precision bits = kDefaultPrecision);

/// Zeros of P_n^{(alpha,beta)}, Newton-refined inside sign-verified brackets.
/// Requires alpha, beta > -1. Throws ConvergenceFailure when a root needs
/// more than kJacobiNewtonCap iterations.
KnotSet gauss_jacobi_knots(unsigned n, const ExactRational& alpha, const ExactRational& beta,
                           Precision bits = kDefaultPrecision);

inline constexpr int kJacobiNewtonCap = 200;

KnotSet make_knots(const FamilySpec& family, unsigned n, Precision bits = kDefaultPrecision);

struct JacobiValue {
  ApFloat value;
  ApFloat derivative;
};

/// P_n^{(alpha,beta)}(x) and its derivative by the three-term recurrence and
/// the recurrence obtained by differentiating it. Evaluated at x's precision.
JacobiValue jacobi_eval(unsigned n, const ExactRational& alpha, const ExactRational& beta, const ApFloat& x);

namespace detail {

/// The fallback path of gauss_jacobi_knots on its own: zeros of P_m built up
/// from P_1 by bracketing between the zeros of P_{m-1}. O(n^2) refinements.
std::vector<ApFloat> jacobi_roots_by_interlacing(unsigned n, const ExactRational& alpha,
                                                 const ExactRational& beta, Precision bits);

}  // namespace detail

}  // namespace hfejer
