#include <doctest.h>

#include <random>
#include <set>

#include "hfejer/errors.hpp"
#include "hfejer/hermite_fejer.hpp"
#include "oracles.hpp"

using namespace hfejer;

namespace {

long neg(Precision bits) { return -static_cast<long>(bits); }

// Exact Hermite-Fejer basis from rational knots, built independently from the
// interpolation conditions: h_i is the Hermite interpolant with values
// delta_ij and zero slopes, found by solving the 2n x 2n linear system.
std::vector<RatPoly> exact_basis(const std::vector<ExactRational>& x) {
  const std::size_t n = x.size(), m = 2 * n;
  std::vector<RatPoly> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<ExactRational>> a(m, std::vector<ExactRational>(m + 1));
    for (std::size_t j = 0; j < n; ++j) {
      ExactRational pw = 1;
      for (std::size_t k = 0; k < m; ++k) {
        a[2 * j][k] = pw;
        pw *= x[j];
      }
      ExactRational dpw = 1;
      for (std::size_t k = 1; k < m; ++k) {
        a[2 * j + 1][k] = ExactRational(static_cast<long>(k)) * dpw;
        dpw *= x[j];
      }
      a[2 * j][m] = j == i ? 1 : 0;
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t piv = c;
      while (a[piv][c] == 0) ++piv;
      std::swap(a[piv], a[c]);
      for (std::size_t r = 0; r < m; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const ExactRational f = a[r][c] / a[c][c];
        for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
      }
    }
    std::vector<ExactRational> coeffs(m);
    for (std::size_t k = 0; k < m; ++k) coeffs[k] = a[k][m] / a[k][k];
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

KnotSet rational_knots(const std::vector<ExactRational>& x, Precision bits) {
  std::vector<ApFloat> pts;
  for (const auto& v : x) pts.emplace_back(v, bits);
  return KnotSet(std::move(pts), FamilySpec::equispaced(x.front(), x.back()), bits);
}

ApFloat coeff_or_zero(const NumPoly& p, std::size_t k, Precision bits) {
  return k < p.size() ? p[k] : ApFloat(bits);
}

}  // namespace

TEST_SUITE("hermite_fejer") {
  TEST_CASE("Lagrange basis on small rational knots") {
    const Precision bits = 128;
    const KnotSet k2 = rational_knots({-1, 1}, bits);
    const auto l2 = lagrange_basis(k2);
    // l_1 = (1 - x)/2, l_2 = (1 + x)/2
    CHECK(l2[0][0] == ApFloat(make_rational(1, 2), bits));
    CHECK(l2[0][1] == ApFloat(make_rational(-1, 2), bits));
    CHECK(l2[1][1] == ApFloat(make_rational(1, 2), bits));

    const KnotSet k3 = rational_knots({-1, 0, 1}, bits);
    const auto l3 = lagrange_basis(k3);
    // l_2 = 1 - x^2
    CHECK(l3[1][0] == ApFloat(1, bits));
    CHECK(l3[1][1].is_zero());
    CHECK(l3[1][2] == ApFloat(-1, bits));
  }

  TEST_CASE("two-knot fundamental polynomial") {
    const Precision bits = 128;
    const auto basis = hermite_fejer_basis(rational_knots({-1, 1}, bits));
    // h_1 = (1 - x)^2 (x + 2) / 4 = (x^3 - 3x + 2)/4
    const std::vector<ExactRational> want{make_rational(1, 2), make_rational(-3, 4), 0, make_rational(1, 4)};
    for (std::size_t k = 0; k < 4; ++k)
      CHECK(abs(coeff_or_zero(basis.h()[0], k, bits) - ApFloat(want[k], bits)) <= pow2(4 + neg(bits), bits));
  }

  TEST_CASE("general construction agrees with the exact linear-system basis") {
    std::mt19937_64 rng(71);
    const Precision bits = 160;
    for (int trial = 0; trial < 12; ++trial) {
      std::uniform_int_distribution<int> count(2, 6);
      std::set<ExactRational> picked;
      const int n = count(rng);
      while (static_cast<int>(picked.size()) < n) picked.insert(oracle::random_rational(rng, 20, 11) / 20);
      const std::vector<ExactRational> x(picked.begin(), picked.end());
      if (x.front() <= -1 || x.back() >= 1) continue;
      std::vector<ApFloat> pts;
      for (const auto& v : x) pts.emplace_back(v, bits);
      const auto basis = hermite_fejer_basis(KnotSet(pts, FamilySpec::chebyshev1(), bits));
      const auto exact = exact_basis(x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t k = 0; k < exact[i].coeffs().size(); ++k) {
          const ApFloat want(exact[i].coeff(k), bits);
          const ApFloat scale = max_abs(ApFloat(1, bits), abs(want));
          CHECK(abs(coeff_or_zero(basis.h()[i], k, bits) - want) <= pow2(48 + neg(bits), bits) * scale);
        }
      }
    }
  }

  TEST_CASE("cardinality and zero slopes on Chebyshev knots") {
    const Precision bits = 192;
    for (unsigned n : {1u, 2u, 5u, 9u, 16u}) {
      const KnotSet k = chebyshev1_knots(n, bits);
      const auto basis = hermite_fejer_basis(k);
      for (std::size_t i = 0; i < n; ++i) {
        const NumPoly d = derivative(basis.h()[i], 1);
        for (std::size_t j = 0; j < n; ++j) {
          const ApFloat v = evaluate(basis.h()[i], k[j].with_precision(basis.working_precision()));
          CHECK(abs(v - ApFloat(i == j ? 1 : 0, bits)) <= pow2(24 + neg(bits), bits));
          CHECK(abs(evaluate(d, k[j].with_precision(basis.working_precision()))) <= pow2(32 + neg(bits), bits));
        }
      }
    }
  }

  TEST_CASE("partition of unity at random points") {
    std::mt19937_64 rng(73);
    const Precision bits = 128;
    for (const auto& spec : {FamilySpec::chebyshev1(), FamilySpec::chebyshev2(), FamilySpec::gauss_jacobi(1, 2),
                             FamilySpec::equispaced()}) {
      const auto basis = hermite_fejer_basis(make_knots(spec, 8, bits));
      for (int trial = 0; trial < 10; ++trial) {
        const ApFloat y(oracle::random_rational(rng, 10, 9) / 10, basis.working_precision());
        ApFloat s(basis.working_precision());
        for (const auto& h : basis.h()) s += evaluate(h, y);
        CHECK(abs(s - ApFloat(1, bits)) <= pow2(32 + neg(bits), bits));
      }
    }
  }

  TEST_CASE("degree of the middle polynomial for odd n") {
    // On symmetric knots with x_mid = 0, l_mid is even, so l_mid'(0) = 0 and
    // h_mid = l_mid^2 has degree 2n - 2 rather than 2n - 1.
    const Precision bits = 192;
    for (unsigned n : {3u, 5u, 7u}) {
      const auto basis = chebyshev_closed_form(n, bits);
      const NumPoly& h = basis.h()[n / 2];
      // Stored with the full 2n coefficients; the top one must vanish.
      REQUIRE(h.size() == 2 * n);
      CHECK(h[2 * n - 1].is_zero());
      CHECK(!h[2 * n - 2].is_zero());
      for (std::size_t k = 1; k < h.size(); k += 2) CHECK(abs(h[k]) <= pow2(16 + neg(bits), bits));
    }
  }

  TEST_CASE("closed form on Chebyshev knots matches the general construction") {
    const Precision bits = 192;
    const auto one = chebyshev_closed_form(1, bits);
    REQUIRE(one.n() == 1);
    CHECK(one.h()[0][0] == ApFloat(1, bits));
    for (std::size_t k = 1; k < one.h()[0].size(); ++k) CHECK(one.h()[0][k].is_zero());

    for (unsigned n : {2u, 3u, 6u, 11u}) {
      const auto cf = chebyshev_closed_form(n, bits);
      const auto gen = hermite_fejer_basis(chebyshev1_knots(n, bits));
      CHECK(cf.construction() == Construction::chebyshev_closed_form);
      CHECK(gen.construction() == Construction::general);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = std::max(cf.h()[i].size(), gen.h()[i].size());
        for (std::size_t k = 0; k < len; ++k)
          CHECK(abs(coeff_or_zero(cf.h()[i], k, bits) - coeff_or_zero(gen.h()[i], k, bits)) <=
                pow2(32 + neg(bits), bits));
      }
    }
  }

  TEST_CASE("partition of unity in coefficients, n = 8") {
    const Precision bits = 192;
    const auto basis = chebyshev_closed_form(8, bits);
    for (std::size_t k = 0; k < 16; ++k) {
      ApFloat s(basis.working_precision());
      for (const auto& h : basis.h()) s += coeff_or_zero(h, k, basis.working_precision());
      CHECK(abs(s - ApFloat(k == 0 ? 1 : 0, bits)) <= pow2(24 + neg(bits), bits));
    }
  }

  TEST_CASE("interpolate") {
    const Precision bits = 128;
    const auto basis = hermite_fejer_basis(chebyshev1_knots(4, bits));
    std::vector<ApFloat> ones(4, ApFloat(1, bits));
    CHECK(abs(interpolate(basis, ones, ApFloat(make_rational(1, 3), bits)) - ApFloat(1, bits)) <=
          pow2(32 + neg(bits), bits));
    std::vector<ApFloat> vals;
    for (int i = 0; i < 4; ++i) vals.emplace_back(i * i - 2L, bits);
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(abs(interpolate(basis, vals, basis.knots()[j]) - vals[j]) <= pow2(32 + neg(bits), bits));
    std::vector<ApFloat> short_vals(3, ApFloat(1, bits));
    CHECK_THROWS_AS(interpolate(basis, short_vals, ApFloat(0, bits)), LengthMismatch);
  }

  TEST_CASE("derivative_sum spot values, n = 3 Chebyshev, p = 2, y0 = 0") {
    const Precision bits = 256;
    const auto ds = derivative_sum(chebyshev_closed_form(3, bits), 2, ApFloat(0, bits));
    REQUIRE(ds.terms.size() == 3);
    const ApFloat tol = pow2(48 + neg(bits), bits);
    CHECK(abs(ds.terms[0] - ApFloat(make_rational(8, 3), bits)) <= tol);
    CHECK(abs(ds.terms[1] - ApFloat(make_rational(-16, 3), bits)) <= tol);
    CHECK(abs(ds.terms[2] - ApFloat(make_rational(8, 3), bits)) <= tol);
    CHECK(ds.pass());
    CHECK(ds.p == 2);
    // tolerance = max(1, 16/3) 2^{40-256}
    CHECK(abs(ds.tolerance - ApFloat(make_rational(16, 3), bits) * pow2(40 - 256, bits)) <= pow2(-250, bits) * ds.tolerance);
  }

  TEST_CASE("derivative_sum beyond the degree is exactly zero") {
    const auto basis = hermite_fejer_basis(chebyshev2_knots(4, 128));
    const auto ds = derivative_sum(basis, 8, ApFloat(make_rational(1, 7), 128));
    for (const auto& t : ds.terms) CHECK(t.is_zero());
    CHECK(ds.residual.is_zero());
    CHECK(ds.pass());
  }

  TEST_CASE("first derivatives vanish term by term at the knots") {
    const Precision bits = 192;
    const auto basis = hermite_fejer_basis(gauss_jacobi_knots(6, make_rational(1, 2), 0, bits));
    for (const auto& xk : basis.knots().points()) {
      const auto ds = derivative_sum(basis, 1, xk);
      for (const auto& t : ds.terms) CHECK(abs(t) <= pow2(40 + neg(bits), bits));
      CHECK(ds.pass());
    }
    CHECK_THROWS_AS(derivative_sum(basis, 0, ApFloat(0, bits)), std::invalid_argument);
  }

  TEST_CASE("derivative sums vanish across families, orders and points") {
    std::mt19937_64 rng(79);
    const Precision bits = 128;
    for (const auto& spec : {FamilySpec::chebyshev1(), FamilySpec::chebyshev2(), FamilySpec::gauss_jacobi(0, 0),
                             FamilySpec::equispaced()}) {
      for (unsigned n : {3u, 7u, 12u}) {
        const auto basis = hermite_fejer_basis(make_knots(spec, n, bits));
        for (unsigned p = 1; p <= 2 * n; p += 3) {
          const ApFloat y(oracle::random_rational(rng, 10, 9) / 10, bits);
          CHECK(derivative_sum(basis, p, y).pass());
        }
      }
    }
  }

  TEST_CASE("mirror symmetry of terms on symmetric knots") {
    // h_{n+1-i}(x) = h_i(-x), so the p-th derivative terms at 0 pair up with
    // sign (-1)^p.
    const Precision bits = 192;
    for (unsigned n : {4u, 7u}) {
      const auto basis = hermite_fejer_basis(chebyshev2_knots(n, bits));
      for (unsigned p : {1u, 2u, 3u}) {
        const auto ds = derivative_sum(basis, p, ApFloat(0, bits));
        for (std::size_t i = 0; i < n; ++i) {
          const ApFloat mirrored = p % 2 ? -ds.terms[n - 1 - i] : ds.terms[n - 1 - i];
          CHECK(abs(ds.terms[i] - mirrored) <= pow2(40 + neg(bits), bits) * max_abs(ApFloat(1, bits), abs(ds.terms[i])));
        }
      }
    }
  }

  TEST_CASE("omega'(x_i) from the coefficient route matches the product oracle") {
    const Precision bits = 192;
    const KnotSet k = gauss_jacobi_knots(9, make_rational(3, 2), make_rational(-1, 2), bits);
    const NumPoly omega = from_roots(k.points(), bits + 64);
    const NumPoly d = derivative(omega, 1);
    for (std::size_t i = 0; i < k.n(); ++i) {
      const ApFloat want = oracle::omega_prime_product(k.points(), i, bits + 64);
      CHECK(abs(evaluate(d, k[i]) - want) <= pow2(-bits + 16, bits) * abs(want));
    }
  }

  TEST_CASE("guard bits grow with clustering") {
    CHECK(basis_guard_bits(chebyshev1_knots(1, 128)) == 64);
    CHECK(basis_guard_bits(equispaced_knots(20, -1, 1, 128)) > basis_guard_bits(chebyshev1_knots(20, 128)));
    const auto basis = hermite_fejer_basis(chebyshev1_knots(10, 128));
    CHECK(basis.precision() == 128);
    CHECK(basis.working_precision() == 128 + basis_guard_bits(basis.knots()));
  }
}
