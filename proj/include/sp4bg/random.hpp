#pragma once

// Seeded random ring elements and matrices for property checks.

#include <climits>
#include <random>

#include "sp4bg/pseudo_good.hpp"
#include "sp4bg/sp4.hpp"

namespace sp4bg {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Coordinates bounded by `bound`; Z[1/p] denominators up to p^1.
inline RingElem random_element(const RingId& R, Rng& rng, long bound = 5) {
  switch (R.kind()) {
    case RingKind::integers:
      return RingElem::from_int(R, uniform(rng, -bound, bound));
    case RingKind::localized:
      return RingElem::localized(R, uniform(rng, -bound, bound), uniform(rng, -1, 1));
    case RingKind::quadratic:
      return RingElem::quadratic(R, uniform(rng, -bound, bound), uniform(rng, -bound, bound));
    case RingKind::cubic:
      return RingElem::cubic(R, uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound));
    default:
      return RingElem::field(R, static_cast<unsigned>(uniform(rng, 0, R.param() - 1)));
  }
}

/// A unit other than +-1 from a small box, or 1 if none is found.
inline RingElem small_unit(const RingId& R) {
  for (long s = 1; s <= 60; ++s)
    for (long a = -s; a <= s; ++a)
      for (long b : {s - std::labs(a), std::labs(a) - s}) {
        RingElem x = RingElem::quadratic(R, a, b);
        if (x.is_unit() && !x.is_one() && !(-x).is_one()) return x;
      }
  return RingElem::one(R);
}

inline RingElem random_unit(const RingId& R, Rng& rng) {
  RingElem sign = uniform(rng, 0, 1) ? RingElem::one(R) : -RingElem::one(R);
  switch (R.kind()) {
    case RingKind::integers:
      return sign;
    case RingKind::localized:
      return sign * pow(RingElem::from_int(R, R.param()), uniform(rng, -2, 2));
    case RingKind::quadratic:
      return sign * pow(small_unit(R), uniform(rng, -2, 2));
    case RingKind::cubic: {
      Transversal X = coset_reps(R);
      RingElem u = X.members()[static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(X.size()) - 1))];
      return sign * pow(u, uniform(rng, -2, 2));
    }
    default:
      return RingElem::field(R, static_cast<unsigned>(uniform(rng, 1, R.param() - 1)));
  }
}

inline Root random_root(Rng& rng) { return all_roots[static_cast<std::size_t>(uniform(rng, 0, 7))]; }

/// Product of n random root elements.
inline SpMatrix random_elementary(const RingId& R, Rng& rng, int n, long bound = 3) {
  SpMatrix m = SpMatrix::identity(R);
  for (int i = 0; i < n; ++i) m *= root_element(random_root(rng), random_element(R, rng, bound));
  return m;
}

inline long max_abs_coordinate(const SpMatrix& m) {
  mpz_class best = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (const auto& c : m(i, j).coords()) best = std::max(best, mpz_class(abs(c)));
  return best.fits_slong_p() ? best.get_si() : LONG_MAX;
}

/// An element of N: product of `factors` conjugates C e_phi(2x) C^-1 with
/// conjugator coordinates bounded by `conj_bound`.
inline SpMatrix random_congruence_element(const RingId& R, Rng& rng, int factors, long conj_bound = 10) {
  SpMatrix m = SpMatrix::identity(R);
  RingElem two = RingElem::from_int(R, 2);
  for (int f = 0; f < factors; ++f) {
    SpMatrix c;
    do c = random_elementary(R, rng, 3, 3);
    while (max_abs_coordinate(c) > conj_bound);
    m *= c * root_element(random_root(rng), two * random_element(R, rng, 3)) * c.inverse();
  }
  return m;
}

}  // namespace sp4bg
