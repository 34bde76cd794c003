#include "hfejer/numpoly.hpp"

#include <stdexcept>

namespace hfejer {

NumPoly::NumPoly(std::span<const ApFloat> coeffs, Precision bits) : precision_(checked_precision(bits)) {
  coeffs_.reserve(coeffs.size());
  for (const auto& c : coeffs) coeffs_.push_back(c.with_precision(bits));
}

NumPoly::NumPoly(const RatPoly& exact, Precision bits) : precision_(checked_precision(bits)) {
  coeffs_.reserve(exact.size());
  for (const auto& c : exact.coeffs()) coeffs_.emplace_back(c, bits);
}

NumPoly NumPoly::constant(const ApFloat& c, Precision bits) {
  NumPoly p(bits);
  p.coeffs_.push_back(c.with_precision(bits));
  return p;
}

NumPoly NumPoly::linear(const ApFloat& c0, const ApFloat& c1, Precision bits) {
  NumPoly p(bits);
  p.coeffs_.push_back(c0.with_precision(bits));
  p.coeffs_.push_back(c1.with_precision(bits));
  return p;
}

ApFloat NumPoly::max_abs_coeff() const {
  ApFloat m(precision_);
  for (const auto& c : coeffs_)
    if (mpfr_cmpabs(c.get(), m.get()) > 0) mpfr_abs(m.get(), c.get(), MPFR_RNDN);
  return m;
}

void NumPoly::require_same_precision(const NumPoly& rhs) const {
  if (rhs.precision_ != precision_)
    throw std::invalid_argument("NumPoly operands differ in precision (" + std::to_string(precision_) + " vs " +
                                std::to_string(rhs.precision_) + ")");
}

NumPoly& NumPoly::operator+=(const NumPoly& rhs) {
  require_same_precision(rhs);
  while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.emplace_back(precision_);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

NumPoly& NumPoly::operator-=(const NumPoly& rhs) {
  require_same_precision(rhs);
  while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.emplace_back(precision_);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

NumPoly& NumPoly::operator*=(const ApFloat& c) {
  for (auto& a : coeffs_) mpfr_mul(a.get(), a.get(), c.get(), MPFR_RNDN);
  return *this;
}

NumPoly operator*(const NumPoly& a, const NumPoly& b) {
  a.require_same_precision(b);
  NumPoly r(a.precision_);
  if (a.coeffs_.empty() || b.coeffs_.empty()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, ApFloat(a.precision_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpfr_ptr out = r.coeffs_[i + j].get();
      mpfr_fma(out, a.coeffs_[i].get(), b.coeffs_[j].get(), out, MPFR_RNDN);
    }
  }
  return r;
}

NumPoly derivative(const NumPoly& a, unsigned p) {
  if (p == 0) return a;
  NumPoly r(a.precision());
  if (a.size() <= p) return r;
  std::vector<ApFloat> out;
  out.reserve(a.size() - p);
  mpz_class falling;
  for (std::size_t k = 0; k + p < a.size(); ++k) {
    falling = 1;
    for (unsigned j = 1; j <= p; ++j) falling *= static_cast<unsigned long>(k + j);
    ApFloat c(a.precision());
    mpfr_mul_z(c.get(), a[k + p].get(), falling.get_mpz_t(), MPFR_RNDN);
    out.push_back(std::move(c));
  }
  return NumPoly(out, a.precision());
}

ApFloat evaluate(const NumPoly& a, const ApFloat& x) {
  ApFloat acc(a.precision());
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it)
    mpfr_fma(acc.get(), acc.get(), x.get(), it->get(), MPFR_RNDN);
  return acc;
}

NumPoly deflate(const NumPoly& a, const ApFloat& root) {
  NumPoly q(a.precision());
  if (a.size() <= 1) return q;
  std::vector<ApFloat> out(a.size() - 1, ApFloat(a.precision()));
  // b_{k-1} = a_k + root * b_k, from the top down.
  ApFloat carry(a.precision());
  for (std::size_t k = a.size() - 1; k >= 1; --k) {
    mpfr_fma(carry.get(), carry.get(), root.get(), a[k].get(), MPFR_RNDN);
    out[k - 1] = carry;
  }
  return NumPoly(out, a.precision());
}

NumPoly from_roots(std::span<const ApFloat> roots, Precision bits) {
  NumPoly w = NumPoly::constant(ApFloat(1, bits), bits);
  const ApFloat one(1, bits);
  for (const auto& r : roots) w = w * NumPoly::linear(-r, one, bits);
  return w;
}

}  // namespace hfejer
