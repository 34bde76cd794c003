#include "hfejer/hermite_fejer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hfejer/errors.hpp"

namespace hfejer {

FundamentalBasis::FundamentalBasis(KnotSet knots, std::vector<NumPoly> h, std::vector<NumPoly> lagrange,
                                   Construction c, Precision working_bits)
    : knots_(std::move(knots)),
      h_(std::move(h)),
      lagrange_(std::move(lagrange)),
      construction_(c),
      working_bits_(working_bits) {}

Precision basis_guard_bits(const KnotSet& knots) {
  const auto& x = knots.points();
  double omega_log = 0;
  for (const auto& xj : x) omega_log += std::log2(1 + std::fabs(xj.to_double()));
  double min_deriv_log = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    double s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j == i) continue;
      // Differences are taken at full precision; tiny gaps must not vanish.
      s += (x[i] - x[j]).exponent();
    }
    min_deriv_log = std::min(min_deriv_log, s);
  }
  if (x.size() < 2) min_deriv_log = 0;
  const double growth = std::max(0.0, omega_log - min_deriv_log);
  return 64 + 2 * static_cast<Precision>(std::ceil(growth));
}

std::vector<NumPoly> lagrange_basis(const KnotSet& knots, Precision bits) {
  const Precision wp = bits == 0 ? knots.precision() : checked_precision(bits);
  const NumPoly omega = from_roots(knots.points(), wp);
  const NumPoly omega_prime = derivative(omega, 1);
  std::vector<NumPoly> ell;
  ell.reserve(knots.n());
  for (const auto& xi : knots.points()) {
    ApFloat scale = ApFloat(1, wp) / evaluate(omega_prime, xi);
    ell.push_back(deflate(omega, xi) * scale);
  }
  return ell;
}

namespace {

// h_i = l_i^2 * (1 - 2 s (x - x_i)) with s = l_i'(x_i).
NumPoly fundamental_from_lagrange(const NumPoly& ell, const ApFloat& xi, Precision wp) {
  const ApFloat s = evaluate(derivative(ell, 1), xi);
  ApFloat c1 = s * -2L;
  ApFloat c0 = ApFloat(1, wp) - c1 * xi;
  return (ell * ell) * NumPoly::linear(c0, c1, wp);
}

}  // namespace

FundamentalBasis hermite_fejer_basis(const KnotSet& knots) {
  const Precision wp = knots.precision() + basis_guard_bits(knots);
  auto ell = lagrange_basis(knots, wp);
  std::vector<NumPoly> h;
  h.reserve(knots.n());
  for (std::size_t i = 0; i < knots.n(); ++i) h.push_back(fundamental_from_lagrange(ell[i], knots[i], wp));
  return FundamentalBasis(knots, std::move(h), std::move(ell), Construction::general, wp);
}

FundamentalBasis chebyshev_closed_form(unsigned n, Precision bits) {
  KnotSet knots = chebyshev1_knots(n, bits);
  const Precision wp = bits + basis_guard_bits(knots);
  const NumPoly tn(chebyshev_t(n), wp);
  const NumPoly tn_prime = derivative(tn, 1);
  const ApFloat inv_n2 = ApFloat(1, wp) / ApFloat(static_cast<long>(n) * static_cast<long>(n), wp);

  std::vector<NumPoly> h, ell;
  h.reserve(n);
  ell.reserve(n);
  for (const auto& xi : knots.points()) {
    NumPoly q = deflate(tn, xi);  // T_n(x) / (x - x_i)
    ell.push_back(q * (ApFloat(1, wp) / evaluate(tn_prime, xi)));
    NumPoly factor = NumPoly::linear(ApFloat(1, wp), -xi, wp);  // 1 - x x_i
    h.push_back(((q * q) * factor) * inv_n2);
  }
  return FundamentalBasis(std::move(knots), std::move(h), std::move(ell), Construction::chebyshev_closed_form, wp);
}

ApFloat interpolate(const FundamentalBasis& basis, std::span<const ApFloat> values, const ApFloat& x) {
  if (values.size() != basis.n()) throw LengthMismatch(basis.n(), values.size());
  const Precision wp = basis.working_precision();
  ApFloat acc(wp);
  for (std::size_t i = 0; i < basis.n(); ++i) acc += evaluate(basis.h()[i], x) * values[i];
  return acc.with_precision(basis.precision());
}

ApFloat relative_tolerance(std::span<const ApFloat> values, Precision bits) {
  ApFloat scale(1, bits);
  for (const auto& v : values)
    if (mpfr_cmpabs(v.get(), scale.get()) > 0) scale = abs(v).with_precision(bits);
  return ldexp(scale, 40 - static_cast<long>(bits));
}

DerivativeSum derivative_sum(const FundamentalBasis& basis, unsigned p, const ApFloat& y0) {
  if (p == 0) throw std::invalid_argument("derivative order must be at least 1");
  const Precision bits = basis.precision();
  const Precision wp = basis.working_precision();
  const ApFloat y = y0.with_precision(std::max(wp, y0.precision()));

  std::vector<ApFloat> terms;
  terms.reserve(basis.n());
  ApFloat sum(wp);
  for (const auto& h : basis.h()) {
    ApFloat t = evaluate(derivative(h, p), y);
    sum += t;
    terms.push_back(t.with_precision(bits));
  }
  ApFloat tol = relative_tolerance(terms, bits);
  return DerivativeSum{p, y0.with_precision(bits), std::move(terms), sum.with_precision(bits), std::move(tol)};
}

}  // namespace hfejer
