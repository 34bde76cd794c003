#include "hfejer/exact_identities.hpp"

#include <stdexcept>
#include <string>

#include "hfejer/errors.hpp"

namespace hfejer {

namespace {

void require_odd(unsigned n) {
  if (n % 2 == 0) throw NotOdd("n = " + std::to_string(n) + " is even; the identity needs odd n >= 3");
  if (n < 3) throw std::invalid_argument("n must be at least 3");
}

}  // namespace

RatPoly sin2_charpoly(unsigned n) {
  require_odd(n);
  return odd_part(chebyshev_t(n));
}

std::vector<ExactRational> inverse_power_sums(unsigned n, unsigned m_max) {
  if (m_max == 0) throw std::invalid_argument("power index must be positive");
  return newton_power_sums(reverse(sin2_charpoly(n)), m_max);
}

ExactRational inverse_power_sum(unsigned n, unsigned m) { return inverse_power_sums(n, m).back(); }

IdentityReport verify_identity_2(unsigned n) {
  RatPoly w = sin2_charpoly(n);
  ExactRational lhs = 2 * newton_power_sums(reverse(w), 1).front();
  const ExactRational nn(static_cast<unsigned long>(n));
  ExactRational rhs = (nn * nn - 1) / 3;
  bool holds = lhs == rhs;
  return IdentityReport{n, std::move(lhs), std::move(rhs), holds, std::move(w)};
}

ExactRational midpoint_second_derivative(unsigned n) {
  require_odd(n);
  const RatPoly q = divide_exact(chebyshev_t(n), RatPoly::x());
  const ExactRational nn(static_cast<unsigned long>(n));
  const RatPoly h_mid = (q * q) * ExactRational(1 / (nn * nn));
  return evaluate(derivative(h_mid, 2), 0);
}

BalanceReport eq1_exact_balance(unsigned n) {
  return BalanceReport{4 * inverse_power_sum(n, 1), midpoint_second_derivative(n)};
}

}  // namespace hfejer
