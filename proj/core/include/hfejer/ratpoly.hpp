#pragma once

// Exact rational scalars and dense univariate polynomials over Q.
//
// ExactRational is GMP's mpq_class; every arithmetic operation leaves it in
// canonical form (positive denominator, coprime numerator/denominator).
// RatPoly stores coefficients low-to-high and is always normalized: either
// empty (the zero polynomial) or with a nonzero leading coefficient.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfejer {

using ExactRational = mpq_class;

/// num/den in canonical form. Throws std::invalid_argument if den == 0.
ExactRational make_rational(long num, long den = 1);

/// Parses "p/q", an integer, or a plain decimal such as "-0.35" or "1e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input.
ExactRational parse_rational(std::string_view text);

/// Serialized form used in every output: always "num/den", e.g. "8/1".
std::string to_string(const ExactRational& q);

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<ExactRational> coeffs);
  RatPoly(std::initializer_list<ExactRational> coeffs);

  static RatPoly constant(const ExactRational& c);
  static RatPoly monomial(const ExactRational& c, std::size_t k);
  static RatPoly x() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^k; zero beyond the degree.
  ExactRational coeff(std::size_t k) const;
  const ExactRational& leading() const { return coeffs_.back(); }
  const std::vector<ExactRational>& coeffs() const noexcept { return coeffs_; }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const ExactRational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const ExactRational& c) { return a *= c; }
  friend RatPoly operator*(const ExactRational& c, RatPoly a) { return a *= c; }
  friend RatPoly operator-(RatPoly a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<ExactRational> coeffs_;
};

/// Human-readable form, highest degree first, e.g. "4*x^3 - 3*x".
std::string to_string(const RatPoly& p, std::string_view var = "x");

enum class ArithOp { add, sub, mul };
RatPoly poly_arith(const RatPoly& a, const RatPoly& b, ArithOp op);

/// p-th derivative; coefficient k of the result is a_{k+p} (k+p)!/k!.
RatPoly derivative(const RatPoly& a, unsigned p = 1);

/// Horner evaluation. The zero polynomial evaluates to 0.
ExactRational evaluate(const RatPoly& a, const ExactRational& x);

/// Quotient and remainder of polynomial long division. den must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

/// q with num == q * den. Throws NotDivisible when the remainder is nonzero
/// and std::invalid_argument when den is zero.
RatPoly divide_exact(const RatPoly& num, const RatPoly& den);

/// Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t).
RatPoly chebyshev_t(unsigned n);

/// W with a(x) = x * W(x^2). Throws NotOdd if a has a nonzero even-degree
/// coefficient. The zero polynomial maps to the zero polynomial.
RatPoly odd_part(const RatPoly& a);

/// Coefficient reversal x^deg * a(1/x); roots map to their reciprocals.
/// Throws ZeroConstantTerm when a(0) == 0 (including the zero polynomial).
RatPoly reverse(const RatPoly& a);

/// Power sums p_1..p_{m_max} of the roots of a, counted with multiplicity,
/// from Newton's identities in coefficient form (a need not be monic).
/// Requires deg a >= 1.
std::vector<ExactRational> newton_power_sums(const RatPoly& a, unsigned m_max);

using InterpolationPoint = std::pair<ExactRational, ExactRational>;

/// Unique polynomial of degree < points.size() through all points.
/// Throws DuplicateAbscissa on repeated x. An empty input yields zero.
RatPoly interpolate(std::span<const InterpolationPoint> points);

}  // namespace hfejer
