#pragma once

// Exact proofs, with no tolerance anywhere, of
//   sum_{k=1}^{(n-1)/2} 2 / sin^2(k pi / n) = (n^2 - 1) / 3   (n odd >= 3)
// and of the second-derivative balance at the origin on Chebyshev knots.
//
// For odd n, T_n(x) = x W(x^2) and the roots of W are sin^2(k pi / n),
// k = 1..(n-1)/2. Sums of inverse powers of sin^2 are therefore power sums of
// the roots of the reversed polynomial, which Newton's identities produce
// from the coefficients alone.

#include "hfejer/ratpoly.hpp"

namespace hfejer {

struct IdentityReport {
  unsigned n;
  ExactRational lhs;
  ExactRational rhs;
  bool holds;
  RatPoly witness;
};

struct BalanceReport {
  ExactRational offcenter;  // sum over i != mid of h_i''(0) = 2 / x_i^2
  ExactRational midpoint;   // h_mid''(0)
};

/// W = odd_part(T_n); its roots are sin^2(k pi / n). Throws NotOdd for even n
/// and std::invalid_argument for n < 3.
RatPoly sin2_charpoly(unsigned n);

/// sum_{k=1}^{(n-1)/2} 1 / sin^{2m}(k pi / n), exactly.
ExactRational inverse_power_sum(unsigned n, unsigned m);

/// All of inverse_power_sum(n, 1..m_max) from one Newton pass.
std::vector<ExactRational> inverse_power_sums(unsigned n, unsigned m_max);

/// lhs = 2 * inverse_power_sum(n, 1), rhs = (n^2 - 1) / 3.
IdentityReport verify_identity_2(unsigned n);

/// h_mid''(0) where h_mid = (T_n(x) / x)^2 / n^2 is the fundamental
/// polynomial at the zero knot. Equals (2/3)(1 - n^2).
ExactRational midpoint_second_derivative(unsigned n);

/// offcenter = 4 * inverse_power_sum(n, 1) (each sin^2 value is x_i^2 for a
/// +/- pair of knots); midpoint as above. Their sum is 0.
BalanceReport eq1_exact_balance(unsigned n);

}  // namespace hfejer
