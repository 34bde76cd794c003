#include "hfejer/conjecture.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hfejer/errors.hpp"
#include "hfejer/exact_identities.hpp"
#include "hfejer/hermite_fejer.hpp"

namespace hfejer {

namespace {

void require_odd_list(std::span<const unsigned> ns, const char* what) {
  for (unsigned n : ns)
    if (n < 3 || n % 2 == 0)
      throw std::invalid_argument(std::string(what) + " values must be odd and >= 3, got " + std::to_string(n));
}

ExactRational pow2_rational(long e) {
  ExactRational r = 1;
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

}  // namespace

bool formula_matches(const RatPoly& formula, unsigned m, std::span<const unsigned> ns) {
  return std::all_of(ns.begin(), ns.end(), [&](unsigned n) {
    return evaluate(formula, ExactRational(static_cast<unsigned long>(n))) == inverse_power_sum(n, m);
  });
}

ConjectureReport conjecture_power_formula(unsigned m, std::span<const unsigned> train_n,
                                          std::span<const unsigned> holdout_n) {
  if (m == 0) throw std::invalid_argument("power index must be positive");
  require_odd_list(train_n, "training");
  require_odd_list(holdout_n, "holdout");
  std::set<unsigned> seen(train_n.begin(), train_n.end());
  if (seen.size() != train_n.size()) throw std::invalid_argument("training values repeat");
  for (unsigned n : holdout_n)
    if (seen.count(n)) throw std::invalid_argument("training and holdout overlap at n = " + std::to_string(n));
  if (train_n.size() < 2 * static_cast<std::size_t>(m) + 1)
    throw InsufficientTrainingPoints(2 * static_cast<std::size_t>(m) + 1, train_n.size());

  std::vector<InterpolationPoint> pts;
  pts.reserve(train_n.size());
  for (unsigned n : train_n) pts.emplace_back(ExactRational(static_cast<unsigned long>(n)), inverse_power_sum(n, m));
  RatPoly formula = interpolate(pts);
  const bool confirmed = formula_matches(formula, m, holdout_n);
  return ConjectureReport{m,
                          std::vector<unsigned>(train_n.begin(), train_n.end()),
                          std::move(formula),
                          std::vector<unsigned>(holdout_n.begin(), holdout_n.end()),
                          confirmed};
}

Recognition rational_reconstruct(const ApFloat& x, std::uint64_t max_denominator, const Recompute& source) {
  if (max_denominator == 0) throw std::invalid_argument("max_denominator must be positive");
  Recognition out{x, std::nullopt, std::nullopt, 0};
  if (!mpfr_number_p(x.get())) return out;

  const Precision p = x.precision();
  const ExactRational value = to_rational(x);
  const ExactRational window = pow2_rational(-static_cast<long>(p / 2)) * std::max(ExactRational(1), ExactRational(abs(value)));
  const mpz_class max_den(static_cast<unsigned long>(max_denominator));

  // Convergents h/k of the exact dyadic value of x:
  // h_j = a_j h_{j-1} + h_{j-2}, seeded with h_{-1} = 1, h_{-2} = 0 (k: 0, 1).
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1, a;
  ExactRational rem = value;
  for (;;) {
    mpz_fdiv_q(a.get_mpz_t(), rem.get_num_mpz_t(), rem.get_den_mpz_t());
    mpz_class hn = a * h1 + h2;
    mpz_class kn = a * k1 + k2;
    if (kn > max_den) break;
    h2 = h1;
    h1 = hn;
    k2 = k1;
    k1 = kn;
    const ExactRational conv(h1, k1);
    if (abs(value - conv) < window) {
      out.proposal = conv;
      break;
    }
    ExactRational frac = rem - ExactRational(a);
    if (sgn(frac) == 0) break;
    rem = 1 / frac;
  }
  if (!out.proposal) return out;

  const Precision doubled = 2 * p;
  const ExactRational check = to_rational(source(doubled));
  const ExactRational& q = *out.proposal;
  const ExactRational limit = pow2_rational(-static_cast<long>(p)) * (sgn(q) == 0 ? ExactRational(1) : ExactRational(abs(q)));
  if (abs(check - q) <= limit) {
    out.candidate = q;
    out.confirmed_at_bits = doubled;
  }
  return out;
}

namespace {

struct SplitTerms {
  ApFloat special;
  ApFloat rest;
};

SplitTerms split_terms(const FamilySpec& family, unsigned n, unsigned p, const ExactRational& y0,
                       std::size_t special, Precision bits) {
  const FundamentalBasis basis = hermite_fejer_basis(make_knots(family, n, bits));
  const DerivativeSum ds = derivative_sum(basis, p, ApFloat(y0, bits));
  ApFloat rest(bits);
  for (std::size_t i = 0; i < ds.terms.size(); ++i)
    if (i != special) rest += ds.terms[i];
  return {ds.terms[special], rest};
}

std::size_t nearest_knot(const KnotSet& knots, const ExactRational& y0) {
  const ApFloat y(y0, knots.precision());
  std::size_t best = 0;
  for (std::size_t i = 1; i < knots.n(); ++i)
    if (abs(knots[i] - y) < abs(knots[best] - y)) best = i;
  return best;
}

}  // namespace

std::vector<KnotExploration> explore_knot_family(const FamilySpec& family, unsigned p, const ExactRational& y0,
                                                 std::span<const unsigned> n_list, Precision bits,
                                                 std::uint64_t max_denominator) {
  if (p == 0) throw std::invalid_argument("derivative order must be at least 1");
  std::vector<KnotExploration> out;
  out.reserve(n_list.size());
  for (unsigned n : n_list) {
    const std::size_t special = nearest_knot(make_knots(family, n, bits), y0);
    SplitTerms base = split_terms(family, n, p, y0, special, bits);
    auto special_at = [&](Precision b) { return split_terms(family, n, p, y0, special, b).special; };
    auto rest_at = [&](Precision b) { return split_terms(family, n, p, y0, special, b).rest; };
    out.push_back(KnotExploration{n, special, rational_reconstruct(base.special, max_denominator, special_at),
                                  rational_reconstruct(base.rest, max_denominator, rest_at)});
  }
  return out;
}

}  // namespace hfejer
