#pragma once

// Experimental side: fit closed forms for PS(m, n) = sum 1/sin^{2m}(k pi/n)
// as polynomials in n, and recognize rationals in high-precision numerics.
// Nothing here proves anything; formulas are "confirmed on holdout" and
// recognitions are "confirmed at doubled precision".

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hfejer/apfloat.hpp"
#include "hfejer/knots.hpp"
#include "hfejer/ratpoly.hpp"

namespace hfejer {

struct ConjectureReport {
  unsigned m;
  std::vector<unsigned> train_n;
  RatPoly formula;  // in the variable n
  std::vector<unsigned> holdout_n;
  bool confirmed;
};

/// Interpolates the exact values PS(m, n) over train_n and checks the result
/// exactly on holdout_n. Every n must be odd and >= 3 and the two lists
/// disjoint (std::invalid_argument otherwise). Throws
/// InsufficientTrainingPoints when train_n has fewer than 2m + 1 entries.
ConjectureReport conjecture_power_formula(unsigned m, std::span<const unsigned> train_n,
                                          std::span<const unsigned> holdout_n);

/// True iff formula(n) == PS(m, n) exactly for every n.
bool formula_matches(const RatPoly& formula, unsigned m, std::span<const unsigned> ns);

/// Produces the quantity being recognized at a requested precision.
using Recompute = std::function<ApFloat(Precision)>;

struct Recognition {
  ApFloat input;
  /// First convergent inside the acceptance window, before confirmation.
  std::optional<ExactRational> proposal;
  /// Present only when the proposal survived recomputation at 2x precision.
  std::optional<ExactRational> candidate;
  Precision confirmed_at_bits = 0;
};

/// Scans the continued-fraction convergents h/k of x (k <= max_denominator)
/// and proposes the first with |x - h/k| < 2^{-p/2} max(1, |x|), p the
/// precision of x. The proposal is confirmed when source(2p) lies within
/// 2^{-p} |h/k| of it (2^{-p} absolutely when h = 0).
Recognition rational_reconstruct(const ApFloat& x, std::uint64_t max_denominator, const Recompute& source);

struct KnotExploration {
  unsigned n;
  std::size_t special_index;  // knot nearest y0
  Recognition special;        // h_special^{(p)}(y0)
  Recognition rest;           // sum of the other terms
};

/// For each n: builds the Hermite-Fejer basis on the family's knots, takes
/// the p-th derivative terms at y0, separates the term of the knot nearest
/// y0, and tries to recognize it and the sum of the rest as rationals.
std::vector<KnotExploration> explore_knot_family(const FamilySpec& family, unsigned p, const ExactRational& y0,
                                                 std::span<const unsigned> n_list, Precision bits,
                                                 std::uint64_t max_denominator);

}  // namespace hfejer
