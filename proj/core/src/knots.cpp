#include "hfejer/knots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hfejer/errors.hpp"

namespace hfejer {

namespace {

// Extra bits for knot placement; results are rounded back to the caller's
// precision.
constexpr Precision kKnotGuardBits = 32;

void require_positive(unsigned n) {
  if (n == 0) throw std::invalid_argument("knot count must be positive");
}

void require_jacobi_params(const ExactRational& alpha, const ExactRational& beta) {
  if (alpha <= -1 || beta <= -1) throw std::invalid_argument("Jacobi parameters must exceed -1");
}

// Fills points[j] = -cos(angle(j)) and mirrors it, so sets built from
// symmetric angles are exactly symmetric with an exact 0 in the middle.
template <class Angle>
std::vector<ApFloat> mirrored_cosines(unsigned n, Precision bits, Angle angle) {
  const Precision wp = bits + kKnotGuardBits;
  std::vector<ApFloat> pts(n, ApFloat(bits));
  for (unsigned j = 0; j < n / 2; ++j) {
    ApFloat v = cos(angle(j, wp)).with_precision(bits);
    pts[j] = -v;
    pts[n - 1 - j] = std::move(v);
  }
  return pts;
}

// Three-term recurrence coefficients of P_k^{(alpha,beta)}, rounded once.
// P_{k+1} = (a_k x + b_k) P_k - c_k P_{k-1}.
class JacobiRecurrence {
 public:
  JacobiRecurrence(unsigned n, const ExactRational& alpha, const ExactRational& beta, Precision bits)
      : n_(n), bits_(bits) {
    const ExactRational s = alpha + beta;
    p1_slope_ = ApFloat(ExactRational((s + 2) / 2), bits);
    p1_shift_ = ApFloat(ExactRational((alpha - beta) / 2), bits);
    for (unsigned k = 1; k < n; ++k) {
      const ExactRational kk(static_cast<unsigned long>(k));
      const ExactRational t = 2 * kk + s;
      const ExactRational denom = 2 * (kk + 1) * (kk + s + 1) * t;
      a_.emplace_back(ExactRational((t + 1) * (t + 2) * t / denom), bits);
      b_.emplace_back(ExactRational((t + 1) * (alpha * alpha - beta * beta) / denom), bits);
      c_.emplace_back(ExactRational(2 * (kk + alpha) * (kk + beta) * (t + 2) / denom), bits);
    }
  }

  JacobiValue operator()(const ApFloat& x) const {
    const Precision wp = std::max(bits_, x.precision());
    ApFloat p_prev(1, wp), d_prev(0, wp);
    if (n_ == 0) return {p_prev, d_prev};
    ApFloat p = p1_slope_ * x + p1_shift_;
    ApFloat d = p1_slope_.with_precision(wp);
    ApFloat lin(wp), p_next(wp), d_next(wp);
    for (unsigned k = 1; k < n_; ++k) {
      const ApFloat& a = a_[k - 1];
      lin = a * x + b_[k - 1];
      // d_{k+1} = lin d_k + a p_k - c d_{k-1}; uses p_k before it is advanced.
      d_next = lin * d + a * p - c_[k - 1] * d_prev;
      p_next = lin * p - c_[k - 1] * p_prev;
      std::swap(p_prev, p);
      std::swap(p, p_next);
      std::swap(d_prev, d);
      std::swap(d, d_next);
    }
    return {p, d};
  }

 private:
  unsigned n_;
  Precision bits_;
  ApFloat p1_slope_{kMinPrecision}, p1_shift_{kMinPrecision};
  std::vector<ApFloat> a_, b_, c_;
};

// Cheap long-double estimates by Newton with deflation against the roots
// already found, seeded from Chebyshev-like angles.
std::vector<long double> estimate_jacobi_roots(unsigned n, long double alpha, long double beta) {
  const long double s = alpha + beta;
  auto eval = [&](long double x) {
    long double p0 = 1, p1 = ((s + 2) * x + (alpha - beta)) / 2;
    long double d0 = 0, d1 = (s + 2) / 2;
    if (n == 0) return std::pair{p0, d0};
    for (unsigned k = 1; k < n; ++k) {
      const long double t = 2.0L * k + s;
      const long double den = 2.0L * (k + 1) * (k + s + 1) * t;
      const long double a = (t + 1) * (t + 2) * t / den;
      const long double b = (t + 1) * (alpha * alpha - beta * beta) / den;
      const long double c = 2.0L * (k + alpha) * (k + beta) * (t + 2) / den;
      const long double p2 = (a * x + b) * p1 - c * p0;
      const long double d2 = (a * x + b) * d1 + a * p1 - c * d0;
      p0 = p1;
      p1 = p2;
      d0 = d1;
      d1 = d2;
    }
    return std::pair{p1, d1};
  };

  std::vector<long double> roots;
  roots.reserve(n);
  const long double pi = std::numbers::pi_v<long double>;
  for (unsigned k = 1; k <= n; ++k) {
    long double x = std::cos(pi * (k - 0.25L + alpha / 2) / (n + (s + 1) / 2));
    if (k > 1) x = (x + roots.back()) / 2;
    for (int it = 0; it < 100; ++it) {
      auto [p, d] = eval(x);
      long double deflate = 0;
      for (long double r : roots) deflate += 1 / (x - r);
      const long double step = p / (d - p * deflate);
      x -= step;
      if (std::fabs(step) < 1e-18L) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

ApFloat from_long_double(long double v, Precision wp) {
  ApFloat r(wp);
  mpfr_set_ld(r.get(), v, MPFR_RNDN);
  return r;
}

// Newton iteration safeguarded by the sign-change bracket (lo, hi).
ApFloat refine_in_bracket(const JacobiRecurrence& jac, ApFloat lo, ApFloat hi, ApFloat x, Precision wp,
                          Precision target_bits) {
  const ApFloat stop = pow2(16 - static_cast<long>(target_bits), wp);
  const int lo_sign = jac(lo).value.sign();
  if (!(lo < x && x < hi)) x = ldexp(lo + hi, -1);
  for (int it = 0; it < kJacobiNewtonCap; ++it) {
    JacobiValue pv = jac(x);
    if (pv.value.is_zero()) return x;
    if (pv.value.sign() == lo_sign) {
      lo = x;
    } else {
      hi = x;
    }
    if (!pv.derivative.is_zero()) {
      ApFloat next = x - pv.value / pv.derivative;
      // A converged step may round onto a bracket end, so test it first.
      if (abs(next - x) < stop) return next;
      if (lo < next && next < hi) {
        x = std::move(next);
        continue;
      }
    }
    x = ldexp(lo + hi, -1);
    if (hi - lo < stop) return x;
  }
  throw ConvergenceFailure("Jacobi root refinement exceeded " + std::to_string(kJacobiNewtonCap) +
                           " iterations");
}

// Roots of P_n from the roots of P_{n-1}, which strictly interlace them.
std::vector<ApFloat> jacobi_roots_by_interlacing(unsigned n, const ExactRational& alpha,
                                                 const ExactRational& beta, Precision wp,
                                                 Precision target_bits) {
  std::vector<ApFloat> prev;
  for (unsigned m = 1; m <= n; ++m) {
    JacobiRecurrence jac(m, alpha, beta, wp);
    std::vector<ApFloat> cur;
    cur.reserve(m);
    for (unsigned k = 0; k < m; ++k) {
      ApFloat lo = k == 0 ? ApFloat(-1, wp) : prev[k - 1];
      ApFloat hi = k + 1 == m ? ApFloat(1, wp) : prev[k];
      ApFloat mid = ldexp(lo + hi, -1);
      cur.push_back(refine_in_bracket(jac, std::move(lo), std::move(hi), std::move(mid), wp, target_bits));
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

std::string_view to_string(KnotFamily family) {
  switch (family) {
    case KnotFamily::chebyshev1:
      return "chebyshev1";
    case KnotFamily::chebyshev2:
      return "chebyshev2";
    case KnotFamily::equispaced:
      return "equispaced";
    case KnotFamily::gauss_jacobi:
      return "gauss_jacobi";
  }
  return "unknown";
}

KnotFamily parse_knot_family(std::string_view name) {
  for (auto f : {KnotFamily::chebyshev1, KnotFamily::chebyshev2, KnotFamily::equispaced, KnotFamily::gauss_jacobi})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown knot family '" + std::string(name) + "'");
}

KnotSet::KnotSet(std::vector<ApFloat> points, FamilySpec family, Precision bits)
    : family_(std::move(family)), precision_(checked_precision(bits)) {
  points_.reserve(points.size());
  for (auto& p : points) points_.push_back(p.precision() == bits ? std::move(p) : p.with_precision(bits));

  const ApFloat min_gap = pow2(16 - static_cast<long>(bits), bits);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] - points_[i - 1] > min_gap))
      throw KnotSpacingError("knots " + std::to_string(i - 1) + " and " + std::to_string(i) +
                             " are not increasing by more than 2^(16-precision)");
  }
  if (points_.empty()) return;
  if (family_.kind == KnotFamily::equispaced) {
    if (points_.front() < ApFloat(family_.a, bits) || points_.back() > ApFloat(family_.b, bits))
      throw DomainError("equispaced knots outside [a, b]");
  } else {
    const ApFloat one(1, bits);
    if (!(points_.front() > -one) || !(points_.back() < one)) throw DomainError("knots outside (-1, 1)");
  }
}

KnotSet chebyshev1_knots(unsigned n, Precision bits) {
  require_positive(n);
  checked_precision(bits);
  // -cos((2j+1) pi / (2n)) for the lower half, ascending.
  auto pts = mirrored_cosines(n, bits, [n](unsigned j, Precision wp) {
    ApFloat t = ap_const_pi(wp) * static_cast<long>(2 * j + 1);
    return t / ApFloat(static_cast<long>(2 * n), wp);
  });
  return KnotSet(std::move(pts), FamilySpec::chebyshev1(), bits);
}

KnotSet chebyshev2_knots(unsigned n, Precision bits) {
  require_positive(n);
  checked_precision(bits);
  auto pts = mirrored_cosines(n, bits, [n](unsigned j, Precision wp) {
    ApFloat t = ap_const_pi(wp) * static_cast<long>(j + 1);
    return t / ApFloat(static_cast<long>(n + 1), wp);
  });
  return KnotSet(std::move(pts), FamilySpec::chebyshev2(), bits);
}

KnotSet equispaced_knots(unsigned n, const ExactRational& a, const ExactRational& b, Precision bits) {
  if (n < 2) throw std::invalid_argument("equispaced knots need n >= 2");
  if (!(a < b)) throw std::invalid_argument("equispaced knots need a < b");
  std::vector<ApFloat> pts;
  pts.reserve(n);
  const ExactRational step = (b - a) / ExactRational(static_cast<unsigned long>(n - 1));
  for (unsigned i = 0; i < n; ++i) pts.emplace_back(ExactRational(a + step * i), bits);
  return KnotSet(std::move(pts), FamilySpec::equispaced(a, b), bits);
}

JacobiValue jacobi_eval(unsigned n, const ExactRational& alpha, const ExactRational& beta, const ApFloat& x) {
  require_jacobi_params(alpha, beta);
  return JacobiRecurrence(n, alpha, beta, x.precision())(x);
}

KnotSet gauss_jacobi_knots(unsigned n, const ExactRational& alpha, const ExactRational& beta, Precision bits) {
  require_positive(n);
  require_jacobi_params(alpha, beta);
  checked_precision(bits);
  const Precision wp = bits + kKnotGuardBits;
  const JacobiRecurrence jac(n, alpha, beta, wp);

  const auto est = estimate_jacobi_roots(n, alpha.get_d(), beta.get_d());
  std::vector<ApFloat> edges;
  edges.reserve(n + 1);
  edges.emplace_back(-1, wp);
  for (unsigned k = 0; k + 1 < n; ++k) edges.push_back(from_long_double((est[k] + est[k + 1]) / 2, wp));
  edges.emplace_back(1, wp);

  // n brackets with alternating endpoint signs hold exactly one root each.
  bool bracketed = std::is_sorted(est.begin(), est.end()) && std::isfinite(static_cast<double>(est.front()));
  for (unsigned k = 0; bracketed && k <= n; ++k) {
    if (!(edges[k] >= edges.front() && edges[k] <= edges.back())) bracketed = false;
    if (k > 0 && !(edges[k] > edges[k - 1])) bracketed = false;
  }
  std::vector<int> signs;
  for (unsigned k = 0; bracketed && k <= n; ++k) {
    signs.push_back(jac(edges[k]).value.sign());
    if (signs.back() == 0 || (k > 0 && signs[k] == signs[k - 1])) bracketed = false;
  }

  std::vector<ApFloat> roots;
  if (bracketed) {
    roots.reserve(n);
    for (unsigned k = 0; k < n; ++k) {
      ApFloat seed = from_long_double(est[k], wp);
      roots.push_back(refine_in_bracket(jac, edges[k], edges[k + 1], std::move(seed), wp, bits));
    }
  } else {
    roots = jacobi_roots_by_interlacing(n, alpha, beta, wp, bits);
  }

  // P_n^{(a,a)} has parity n, so its zeros are symmetric and 0 is one for odd n.
  if (alpha == beta) {
    for (unsigned j = 0; j < n / 2; ++j) {
      ApFloat m = ldexp(abs(roots[j]) + abs(roots[n - 1 - j]), -1);
      roots[j] = -m;
      roots[n - 1 - j] = std::move(m);
    }
    if (n % 2 == 1) roots[n / 2] = ApFloat(0, wp);
  }

  std::vector<ApFloat> pts;
  pts.reserve(n);
  for (const auto& r : roots) pts.push_back(r.with_precision(bits));
  return KnotSet(std::move(pts), FamilySpec::gauss_jacobi(alpha, beta), bits);
}

namespace detail {

std::vector<ApFloat> jacobi_roots_by_interlacing(unsigned n, const ExactRational& alpha,
                                                 const ExactRational& beta, Precision bits) {
  require_positive(n);
  require_jacobi_params(alpha, beta);
  checked_precision(bits);
  auto roots = hfejer::jacobi_roots_by_interlacing(n, alpha, beta, bits + kKnotGuardBits, bits);
  for (auto& r : roots) r = r.with_precision(bits);
  return roots;
}

}  // namespace detail

KnotSet make_knots(const FamilySpec& family, unsigned n, Precision bits) {
  switch (family.kind) {
    case KnotFamily::chebyshev1:
      return chebyshev1_knots(n, bits);
    case KnotFamily::chebyshev2:
      return chebyshev2_knots(n, bits);
    case KnotFamily::equispaced:
      return equispaced_knots(n, family.a, family.b, bits);
    case KnotFamily::gauss_jacobi:
      return gauss_jacobi_knots(n, family.alpha, family.beta, bits);
  }
  throw std::invalid_argument("unknown knot family");
}

}  // namespace hfejer
