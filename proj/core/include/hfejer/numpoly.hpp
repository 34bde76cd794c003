#pragma once

// Dense polynomial with ApFloat coefficients sharing one precision. The
// numeric mirror of RatPoly; no degree normalization is done, because a
// coefficient that is mathematically zero is usually a tiny rounding residue.

#include <cstddef>
#include <span>
#include <vector>

#include "hfejer/apfloat.hpp"
#include "hfejer/ratpoly.hpp"

namespace hfejer {

class NumPoly {
 public:
  explicit NumPoly(Precision bits = kDefaultPrecision) : precision_(checked_precision(bits)) {}
  /// Coefficients are rounded to `bits`.
  NumPoly(std::span<const ApFloat> coeffs, Precision bits);
  /// Coefficient-wise correctly rounded image of an exact polynomial.
  NumPoly(const RatPoly& exact, Precision bits);

  static NumPoly constant(const ApFloat& c, Precision bits);
  /// c0 + c1 x
  static NumPoly linear(const ApFloat& c0, const ApFloat& c1, Precision bits);

  Precision precision() const noexcept { return precision_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<ApFloat>& coeffs() const noexcept { return coeffs_; }
  const ApFloat& operator[](std::size_t k) const { return coeffs_[k]; }

  /// Largest |coefficient|, zero for the empty polynomial.
  ApFloat max_abs_coeff() const;

  NumPoly& operator+=(const NumPoly& rhs);
  NumPoly& operator-=(const NumPoly& rhs);
  NumPoly& operator*=(const ApFloat& c);

  friend NumPoly operator+(NumPoly a, const NumPoly& b) { return a += b; }
  friend NumPoly operator-(NumPoly a, const NumPoly& b) { return a -= b; }
  friend NumPoly operator*(const NumPoly& a, const NumPoly& b);
  friend NumPoly operator*(NumPoly a, const ApFloat& c) { return a *= c; }

 private:
  void require_same_precision(const NumPoly& rhs) const;

  Precision precision_;
  std::vector<ApFloat> coeffs_;
};

/// p-th derivative by exact coefficient shifting: a_{k+p} (k+p)!/k!.
NumPoly derivative(const NumPoly& a, unsigned p = 1);

/// Horner evaluation at the polynomial's precision.
ApFloat evaluate(const NumPoly& a, const ApFloat& x);

/// Quotient of a by (x - root), dropping the remainder a(root).
NumPoly deflate(const NumPoly& a, const ApFloat& root);

/// prod_j (x - roots_j)
NumPoly from_roots(std::span<const ApFloat> roots, Precision bits);

}  // namespace hfejer
