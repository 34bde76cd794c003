#include "hfejer/apfloat.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "hfejer/errors.hpp"

namespace hfejer {

Precision checked_precision(Precision bits) {
  if (bits < kMinPrecision)
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinPrecision) + " bits, got " +
                                std::to_string(bits));
  if (bits > MPFR_PREC_MAX) throw std::invalid_argument("precision exceeds MPFR_PREC_MAX");
  return bits;
}

ApFloat::ApFloat(Precision bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_zero(value_, 1);
}

ApFloat::ApFloat(long value, Precision bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

ApFloat::ApFloat(const ExactRational& q, Precision bits) {
  mpfr_init2(value_, checked_precision(bits));
  mpfr_set_q(value_, q.get_mpq_t(), MPFR_RNDN);
}

ApFloat::ApFloat(const std::string& decimal, Precision bits) {
  mpfr_init2(value_, checked_precision(bits));
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("malformed decimal '" + decimal + "'");
  }
}

ApFloat::ApFloat(const ApFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

ApFloat::ApFloat(ApFloat&& other) noexcept {
  // Leave the source as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

ApFloat& ApFloat::operator=(const ApFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

ApFloat& ApFloat::operator=(ApFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

ApFloat::~ApFloat() { mpfr_clear(value_); }

ApFloat ApFloat::with_precision(Precision bits) const {
  ApFloat r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

long ApFloat::exponent() const noexcept {
  if (!mpfr_regular_p(value_)) return LONG_MIN / 2;
  return mpfr_get_exp(value_);
}

std::string ApFloat::to_string() const {
  return to_string(mpfr_get_str_ndigits(10, precision()));
}

std::string ApFloat::to_string(std::size_t digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return mpfr_signbit(value_) ? "-0" : "0";
  mpfr_exp_t exp10 = 0;
  char* raw = mpfr_get_str(nullptr, &exp10, 10, std::max<std::size_t>(digits, 2), value_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string out;
  if (mant.front() == '-') {
    out.push_back('-');
    mant.erase(mant.begin());
  }
  out.push_back(mant.front());
  out.push_back('.');
  out.append(mant, 1, std::string::npos);
  out.push_back('e');
  out.append(std::to_string(static_cast<long>(exp10) - 1));
  return out;
}

namespace {

Precision wider(const ApFloat& a, const ApFloat& b) { return std::max(a.precision(), b.precision()); }

// Rounds the in-place result to the wider precision of the two operands.
template <class Op>
ApFloat& apply_inplace(ApFloat& self, const ApFloat& rhs, Op op) {
  if (rhs.precision() > self.precision()) mpfr_prec_round(self.get(), rhs.precision(), MPFR_RNDN);
  op(self.get(), self.get(), rhs.get(), MPFR_RNDN);
  return self;
}

}  // namespace

ApFloat& ApFloat::operator+=(const ApFloat& rhs) { return apply_inplace(*this, rhs, mpfr_add); }
ApFloat& ApFloat::operator-=(const ApFloat& rhs) { return apply_inplace(*this, rhs, mpfr_sub); }
ApFloat& ApFloat::operator*=(const ApFloat& rhs) { return apply_inplace(*this, rhs, mpfr_mul); }
ApFloat& ApFloat::operator/=(const ApFloat& rhs) { return apply_inplace(*this, rhs, mpfr_div); }

ApFloat& ApFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

ApFloat operator+(const ApFloat& a, const ApFloat& b) {
  ApFloat r(wider(a, b));
  mpfr_add(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ApFloat operator-(const ApFloat& a, const ApFloat& b) {
  ApFloat r(wider(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ApFloat operator*(const ApFloat& a, const ApFloat& b) {
  ApFloat r(wider(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ApFloat operator/(const ApFloat& a, const ApFloat& b) {
  ApFloat r(wider(a, b));
  mpfr_div(r.value_, a.value_, b.value_, MPFR_RNDN);
  return r;
}

ApFloat operator*(const ApFloat& a, long b) {
  ApFloat r(a.precision());
  mpfr_mul_si(r.value_, a.value_, b, MPFR_RNDN);
  return r;
}

ApFloat operator-(const ApFloat& a) {
  ApFloat r(a.precision());
  mpfr_neg(r.value_, a.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const ApFloat& a, const ApFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

ApFloat abs(const ApFloat& x) {
  ApFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), MPFR_RNDN);
  return r;
}

ApFloat ldexp(const ApFloat& x, long e) {
  ApFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

ApFloat pow2(long e, Precision bits) { return ldexp(ApFloat(1, bits), e); }

const ApFloat& max_abs(const ApFloat& a, const ApFloat& b) { return mpfr_cmpabs(a.get(), b.get()) >= 0 ? a : b; }

ApFloat ap_const_pi(Precision bits) {
  ApFloat r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

ApFloat ap_elementary(Elementary fn, const ApFloat& x) {
  ApFloat r(x.precision());
  switch (fn) {
    case Elementary::cos:
      mpfr_cos(r.get(), x.get(), MPFR_RNDN);
      break;
    case Elementary::sin:
      mpfr_sin(r.get(), x.get(), MPFR_RNDN);
      break;
    case Elementary::sqrt:
      if (x.sign() < 0) throw DomainError("sqrt of a negative number");
      mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
      break;
  }
  return r;
}

ExactRational to_rational(const ApFloat& x) {
  if (!mpfr_number_p(x.get())) throw DomainError("cannot convert a non-finite value to a rational");
  if (x.is_zero()) return 0;
  mpz_class mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.get());
  ExactRational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

}  // namespace hfejer
