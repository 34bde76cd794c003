#pragma once

// Arbitrary-precision binary floating point with the precision carried by each
// value. Binary operations round to the larger precision of their operands,
// always to nearest-even. Backed by MPFR.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>

#include "hfejer/ratpoly.hpp"

namespace hfejer {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinPrecision = 64;
inline constexpr Precision kDefaultPrecision = 256;

/// Throws std::invalid_argument unless bits >= kMinPrecision.
Precision checked_precision(Precision bits);

class ApFloat {
 public:
  explicit ApFloat(Precision bits = kDefaultPrecision);
  ApFloat(long value, Precision bits);
  ApFloat(const ExactRational& q, Precision bits);
  /// Decimal (or "inf"/"nan") string, correctly rounded.
  ApFloat(const std::string& decimal, Precision bits);

  ApFloat(const ApFloat& other);
  ApFloat(ApFloat&& other) noexcept;
  ApFloat& operator=(const ApFloat& other);
  ApFloat& operator=(ApFloat&& other) noexcept;
  ~ApFloat();

  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  /// Copy rounded (or exactly widened) to a new precision.
  ApFloat with_precision(Precision bits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; LONG_MIN-ish for zero.
  long exponent() const noexcept;

  /// Scientific decimal string with enough digits to round-trip the value.
  std::string to_string() const;
  std::string to_string(std::size_t digits) const;

  ApFloat& operator+=(const ApFloat& rhs);
  ApFloat& operator-=(const ApFloat& rhs);
  ApFloat& operator*=(const ApFloat& rhs);
  ApFloat& operator/=(const ApFloat& rhs);
  ApFloat& operator*=(long rhs);

  friend ApFloat operator+(const ApFloat& a, const ApFloat& b);
  friend ApFloat operator-(const ApFloat& a, const ApFloat& b);
  friend ApFloat operator*(const ApFloat& a, const ApFloat& b);
  friend ApFloat operator/(const ApFloat& a, const ApFloat& b);
  friend ApFloat operator*(const ApFloat& a, long b);
  friend ApFloat operator*(long a, const ApFloat& b) { return b * a; }
  friend ApFloat operator-(const ApFloat& a);

  friend bool operator==(const ApFloat& a, const ApFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const ApFloat& a, const ApFloat& b);

 private:
  mpfr_t value_;
};

ApFloat abs(const ApFloat& x);
/// x * 2^e, exact.
ApFloat ldexp(const ApFloat& x, long e);
/// 2^e at the given precision.
ApFloat pow2(long e, Precision bits);
const ApFloat& max_abs(const ApFloat& a, const ApFloat& b);

ApFloat ap_const_pi(Precision bits);

enum class Elementary { cos, sin, sqrt };
/// Throws DomainError for sqrt of a negative argument.
ApFloat ap_elementary(Elementary fn, const ApFloat& x);

inline ApFloat cos(const ApFloat& x) { return ap_elementary(Elementary::cos, x); }
inline ApFloat sin(const ApFloat& x) { return ap_elementary(Elementary::sin, x); }
inline ApFloat sqrt(const ApFloat& x) { return ap_elementary(Elementary::sqrt, x); }

/// Correctly rounded conversion of an exact rational.
inline ApFloat to_apfloat(const ExactRational& q, Precision bits) { return ApFloat(q, bits); }

/// Exact rational value of a finite ApFloat (a dyadic rational).
ExactRational to_rational(const ApFloat& x);

}  // namespace hfejer
