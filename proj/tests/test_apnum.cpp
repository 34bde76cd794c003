#include <doctest.h>

#include <random>

#include "hfejer/apfloat.hpp"
#include "hfejer/errors.hpp"
#include "hfejer/numpoly.hpp"
#include "oracles.hpp"

using namespace hfejer;

namespace {

ApFloat rel_err(const ApFloat& got, const ApFloat& want) { return abs(got - want) / abs(want); }

}  // namespace

TEST_SUITE("apnum") {
  TEST_CASE("precision contract") {
    CHECK_THROWS_AS(ApFloat(63), std::invalid_argument);
    CHECK(ApFloat(64).precision() == 64);
    const ApFloat a(1, 64), b(3, 128);
    CHECK((a + b).precision() == 128);
    CHECK((b / a).precision() == 128);
    ApFloat c(1, 64);
    c *= b;
    CHECK(c.precision() == 128);
    CHECK(ApFloat(7, 100).with_precision(200).precision() == 200);
  }

  TEST_CASE("ap_const_pi against Machin's formula") {
    const ApFloat pi64 = ap_const_pi(64);
    const ApFloat ref = oracle::machin_pi(256);
    CHECK(rel_err(pi64, ref) <= pow2(1 - 64, 256));
    CHECK(pi64.to_string(20).rfind("3.14159265358979323", 0) == 0);
    for (Precision p : {64, 100, 256, 512, 1000}) {
      const ApFloat a = ap_const_pi(p), b = ap_const_pi(2 * p);
      CHECK(rel_err(a, oracle::machin_pi(2 * p + 64)) <= pow2(1 - p, 2 * p + 64));
      CHECK(rel_err(a.with_precision(2 * p), b) <= pow2(2 - p, 2 * p));
    }
  }

  TEST_CASE("doubling precision reproduces earlier digits of pi") {
    const std::string d256 = ap_const_pi(256).to_string(70);
    const std::string d512 = ap_const_pi(512).to_string(150);
    CHECK(d512.substr(0, 65) == d256.substr(0, 65));
  }

  TEST_CASE("ap_elementary") {
    const Precision bits = 256;
    CHECK(cos(ApFloat(0, bits)) == ApFloat(1, bits));
    const ApFloat pi = ap_const_pi(bits);
    const ApFloat s = sin(pi / ApFloat(6, bits));
    CHECK(abs(s - ApFloat(make_rational(1, 2), bits)) <= pow2(-250, bits));
    const ApFloat s3 = sin(pi / ApFloat(3, bits));
    CHECK(abs(s3 * s3 - ApFloat(make_rational(3, 4), bits)) <= pow2(4 - static_cast<long>(bits), bits));
    CHECK(sqrt(ApFloat(4, bits)) == ApFloat(2, bits));
    CHECK_THROWS_AS(sqrt(ApFloat(-1, bits)), DomainError);
  }

  TEST_CASE("sin^2 + cos^2 = 1 at random angles") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0, 6.283185307179586);
    for (Precision bits : {64, 256}) {
      const ApFloat one(1, bits);
      for (int trial = 0; trial < 100; ++trial) {
        const ApFloat t(ExactRational(angle(rng)), bits);
        const ApFloat s = sin(t), c = cos(t);
        CHECK(abs(s * s + c * c - one) <= pow2(8 - static_cast<long>(bits), bits));
      }
    }
  }

  TEST_CASE("to_apfloat rounds correctly") {
    const ApFloat third = to_apfloat(make_rational(1, 3), 64);
    // Round-to-nearest: the error is at most half an ulp, 2^{-66} here.
    CHECK(abs(to_rational(third) - make_rational(1, 3)) <= ExactRational(1, mpz_class(1) << 66));
    CHECK(third.to_string(20).rfind("3.333333333333333333", 0) == 0);
    const ApFloat zero = to_apfloat(0, 128);
    CHECK(zero.is_zero());
    CHECK(zero.to_string() == "0");
    CHECK(to_rational(to_apfloat(make_rational(5, 8), 64)) == make_rational(5, 8));
  }

  TEST_CASE("decimal strings round-trip the value") {
    std::mt19937_64 rng(43);
    for (Precision bits : {64, 256, 521}) {
      for (int trial = 0; trial < 20; ++trial) {
        const ApFloat x = to_apfloat(oracle::random_rational(rng, 1000000, 999983), bits);
        CHECK(ApFloat(x.to_string(), bits) == x);
      }
    }
  }

  TEST_CASE("numpoly arithmetic") {
    const Precision bits = 128;
    const NumPoly xp1(RatPoly{1, 1}, bits);
    const NumPoly sq = xp1 * xp1;
    REQUIRE(sq.size() == 3);
    const ApFloat tol = pow2(-120, bits);
    CHECK(abs(sq[0] - ApFloat(1, bits)) <= tol);
    CHECK(abs(sq[1] - ApFloat(2, bits)) <= tol);
    CHECK(abs(sq[2] - ApFloat(1, bits)) <= tol);

    const NumPoly t3(chebyshev_t(3), bits);
    const NumPoly d2 = derivative(t3, 2);
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].is_zero());
    CHECK(d2[1] == ApFloat(24, bits));
    CHECK(derivative(t3, 5).size() == 0);

    const NumPoly sum = t3 + xp1 - xp1;
    CHECK(evaluate(sum, ApFloat(make_rational(1, 2), bits)) == ApFloat(-1, bits));
    const NumPoly scaled = t3 * ApFloat(3, bits);
    CHECK(evaluate(scaled, ApFloat(1, bits)) == ApFloat(3, bits));
    CHECK_THROWS_AS(t3 + NumPoly(RatPoly{1}, 256), std::invalid_argument);
  }

  TEST_CASE("deflate and from_roots") {
    const Precision bits = 192;
    std::vector<ApFloat> roots{ApFloat(make_rational(-1, 2), bits), ApFloat(make_rational(1, 3), bits),
                               ApFloat(2, bits)};
    const NumPoly w = from_roots(roots, bits);
    CHECK(w.size() == 4);
    for (const auto& r : roots) CHECK(abs(evaluate(w, r)) <= pow2(8 - static_cast<long>(bits), bits));
    const NumPoly q = deflate(w, roots[2]);
    CHECK(q.size() == 3);
    // q = (x + 1/2)(x - 1/3) = x^2 + x/6 - 1/6
    CHECK(abs(q[0] - ApFloat(make_rational(-1, 6), bits)) <= pow2(4 - static_cast<long>(bits), bits));
    CHECK(abs(q[1] - ApFloat(make_rational(1, 6), bits)) <= pow2(4 - static_cast<long>(bits), bits));
    CHECK(q[2] == ApFloat(1, bits));
  }

  TEST_CASE("numeric T_9 at cos(theta) is cos(9 theta)") {
    const Precision bits = 256;
    const NumPoly t9(chebyshev_t(9), bits);
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> angle(0, 3.14159);
    for (int trial = 0; trial < 20; ++trial) {
      const ApFloat theta(ExactRational(angle(rng)), bits);
      const ApFloat got = evaluate(t9, cos(theta));
      CHECK(abs(got - cos(theta * 9L)) <= pow2(16 - static_cast<long>(bits), bits));
    }
  }

  TEST_CASE("Horner evaluation error stays within the coefficient-scale bound") {
    // Exact rational evaluation of the same rounded coefficients is the oracle.
    std::mt19937_64 rng(53);
    const Precision bits = 96;
    for (int trial = 0; trial < 30; ++trial) {
      const RatPoly exact = oracle::random_ratpoly(rng, 12);
      const NumPoly num(exact, bits);
      const ExactRational x = oracle::random_rational(rng, 9, 7);
      ExactRational ref = 0, scale = 0, xabs_pow = 1;
      for (std::size_t k = 0; k < num.size(); ++k) {
        scale += abs(to_rational(num[k])) * xabs_pow;
        xabs_pow *= abs(x);
      }
      for (std::size_t k = num.size(); k-- > 0;) ref = ref * x + to_rational(num[k]);
      const ExactRational got = to_rational(evaluate(num, ApFloat(x, bits)));
      // 2n roundings of relative size 2^{-bits}, plus the rounding of x
      const ExactRational bound = scale * ExactRational(4 * (num.size() + 1)) / ExactRational(mpz_class(1) << bits);
      CHECK(abs(got - ref) <= bound);
    }
  }
}
