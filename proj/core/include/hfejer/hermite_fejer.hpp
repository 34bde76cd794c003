#pragma once

// Hermite-Fejer fundamental polynomials h_1..h_n on a knot set: the unique
// polynomials of degree <= 2n-1 with h_i(x_j) = delta_ij and h_i'(x_j) = 0.
// Their sum is identically 1, so every derivative of the sum vanishes.

#include <span>
#include <vector>

#include "hfejer/apfloat.hpp"
#include "hfejer/knots.hpp"
#include "hfejer/numpoly.hpp"

namespace hfejer {

enum class Construction { general, chebyshev_closed_form };

/// Immutable after construction. Coefficients are held at a working
/// precision above the knots' precision (see basis_guard_bits); reported
/// quantities are rounded back to the knots' precision.
class FundamentalBasis {
 public:
  const KnotSet& knots() const noexcept { return knots_; }
  std::size_t n() const noexcept { return h_.size(); }
  const std::vector<NumPoly>& h() const noexcept { return h_; }
  const std::vector<NumPoly>& lagrange() const noexcept { return lagrange_; }
  Construction construction() const noexcept { return construction_; }
  Precision precision() const noexcept { return knots_.precision(); }
  Precision working_precision() const noexcept { return working_bits_; }

 private:
  FundamentalBasis(KnotSet knots, std::vector<NumPoly> h, std::vector<NumPoly> lagrange, Construction c,
                   Precision working_bits);

  friend FundamentalBasis hermite_fejer_basis(const KnotSet& knots);
  friend FundamentalBasis chebyshev_closed_form(unsigned n, Precision bits);

  KnotSet knots_;
  std::vector<NumPoly> h_;
  std::vector<NumPoly> lagrange_;
  Construction construction_;
  Precision working_bits_;
};

/// Extra working bits for basis construction: 64 plus twice the binary
/// logarithm of the worst Lagrange coefficient growth, estimated from
/// prod_j (1 + |x_j|) / min_i |omega'(x_i)|. Squaring l_i doubles it.
Precision basis_guard_bits(const KnotSet& knots);

/// l_i = omega / ((x - x_i) omega'(x_i)) with omega = prod_j (x - x_j),
/// computed at working precision `bits` (the knots' precision if 0).
std::vector<NumPoly> lagrange_basis(const KnotSet& knots, Precision bits = 0);

/// General construction h_i = l_i^2 (1 - 2 l_i'(x_i)(x - x_i)).
FundamentalBasis hermite_fejer_basis(const KnotSet& knots);

/// Closed form on Chebyshev knots of the first kind:
/// h_i = (1 - x x_i) / n^2 * (T_n(x) / (x - x_i))^2.
FundamentalBasis chebyshev_closed_form(unsigned n, Precision bits = kDefaultPrecision);

/// sum_i h_i(x) values_i. Throws LengthMismatch unless values.size() == n.
ApFloat interpolate(const FundamentalBasis& basis, std::span<const ApFloat> values, const ApFloat& x);

/// max(1, max_i |values_i|) * 2^{40 - bits}
ApFloat relative_tolerance(std::span<const ApFloat> values, Precision bits);

struct DerivativeSum {
  unsigned p;
  ApFloat y0;
  std::vector<ApFloat> terms;  // h_i^{(p)}(y0)
  ApFloat residual;            // sum of terms
  ApFloat tolerance;           // relative_tolerance(terms, precision)
  bool pass() const { return abs(residual) <= tolerance; }
};

/// Terms h_i^{(p)}(y0) by exact coefficient differentiation and Horner
/// evaluation; the residual is summed at working precision. Requires p >= 1
/// (for p = 0 the sum is 1, not 0).
DerivativeSum derivative_sum(const FundamentalBasis& basis, unsigned p, const ApFloat& y0);

}  // namespace hfejer
