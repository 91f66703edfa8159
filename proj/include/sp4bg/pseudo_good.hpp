#pragma once

// 2R-pseudo-goodness: units of R hitting every nonzero class of R/2R, and
// transversals X of 2R made of 0 and units.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4bg/ring.hpp"

namespace sp4bg {

enum class Verdict { yes, no, inconclusive };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

/// Solution of b^2 D = a^2 + 4*sign giving the unit (a + b sqrt D)/2.
struct UnitEquation {
  long a;
  long b;
  int sign;

  std::string to_string(long D) const {
    return std::to_string(b) + "^2*" + std::to_string(D) + "=" + std::to_string(a) + "^2" + (sign > 0 ? "+4" : "-4");
  }
};

struct PseudoGoodResult {
  Verdict verdict = Verdict::inconclusive;
  /// One unit per nonzero residue class, ordered by residue code (yes only).
  std::vector<RingElem> witnesses;
  std::optional<UnitEquation> equation;
  std::string reason;
};

namespace detail {

inline bool is_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

// Witnesses from one unit u: the residue group is cyclic of order |R/2R| - 1,
// so the powers of u cover it once the image of u generates it.
inline std::vector<RingElem> witnesses_from_powers(const RingElem& u) {
  const long n = u.ring().residue_size();
  std::map<unsigned, RingElem> by_code;
  RingElem x = RingElem::one(u.ring());
  for (long k = 0; k < n - 1; ++k) {
    by_code.emplace(residue_index(x), x);
    x *= u;
  }
  std::vector<RingElem> out;
  for (auto& [code, w] : by_code) out.push_back(w);
  return out;
}

inline PseudoGoodResult verdict_from_unit(const RingElem& u, const std::string& label) {
  PseudoGoodResult res;
  if (!u.is_unit()) fail(errc::not_a_unit, label + " " + u.to_string());
  if (residue_index(u) == 1) {
    res.verdict = Verdict::no;
    res.reason = "supplied fundamental unit " + u.to_string() + " maps to 1 in R/2R, so every unit +-u^k does";
    return res;
  }
  res.verdict = Verdict::yes;
  res.witnesses = witnesses_from_powers(u);
  res.reason = label + " " + u.to_string() + " maps to a generator of (R/2R)*";
  return res;
}

}  // namespace detail

/// Bounded search for units covering (R/2R) - {0}. For real quadratic orders it
/// scans b = 1..search_bound for b^2 D = a^2 + 4 and then b^2 D = a^2 - 4. A
/// negative verdict needs a caller-supplied fundamental unit, except for
/// imaginary orders whose unit group is finite.
inline PseudoGoodResult is_pseudo_good(const RingId& R, long search_bound,
                                       const std::optional<RingElem>& fundamental_unit = std::nullopt) {
  if (!R.has_residue_mod2()) R.residue_ring();  // throws UnsupportedResidue
  PseudoGoodResult res;
  switch (R.kind()) {
    case RingKind::integers:
    case RingKind::localized:
    case RingKind::prime_field:
      res.verdict = Verdict::yes;
      res.witnesses = {RingElem::one(R)};
      res.reason = "R/2R = F2";
      return res;
    case RingKind::gf4:
    case RingKind::gf8:
      res.verdict = Verdict::yes;
      for (unsigned c = 1; c < static_cast<unsigned>(R.param()); ++c) res.witnesses.push_back(RingElem::field(R, c));
      res.reason = "R is a field of characteristic 2";
      return res;
    case RingKind::cubic: {
      RingElem x = RingElem::generator(R);
      res = detail::verdict_from_unit(x, "unit x_p with x_p^2 (x_p + p) = 1:");
      return res;
    }
    case RingKind::quadratic:
      break;
  }

  const long D = R.param();
  if (fundamental_unit) {
    if (!(fundamental_unit->ring() == R)) fail(errc::mixed_rings, "supplied unit is not in " + R.to_string());
    return detail::verdict_from_unit(*fundamental_unit, "supplied unit");
  }
  if (D < 0) {
    if (D == -3) return detail::verdict_from_unit(RingElem::generator(R), "sixth root of unity");
    res.verdict = Verdict::no;
    res.reason = "unit group of an imaginary quadratic order with D < -3 is {+1, -1}";
    return res;
  }
  for (long b = 1; b <= search_bound; ++b) {
    for (int sign : {+1, -1}) {
      mpz_class a2 = mpz_class(b) * b * D - 4 * sign, a;
      if (!detail::is_square(a2, a) || a == 0) continue;
      if ((b & 1) == 0) continue;  // image 1 in R/2R; keep searching
      // (a + b sqrt D)/2 = (a - b)/2 + b w
      RingElem u = RingElem::quadratic(R, (a - b) / 2, b);
      res = detail::verdict_from_unit(u, "unit");
      res.equation = UnitEquation{a.get_si(), b, sign};
      return res;
    }
  }
  res.verdict = Verdict::inconclusive;
  res.reason = "no unit with odd b found for b <= " + std::to_string(search_bound);
  return res;
}

/// A transversal X of 2R in R: 0 and 1 included, every nonzero member a unit.
class Transversal {
 public:
  Transversal() = default;

  Transversal(RingId ring, std::vector<RingElem> by_code) : ring_(ring), by_code_(std::move(by_code)) {}

  const RingId& ring() const { return ring_; }

  /// Members ordered by residue code; element 0 is 0 and element 1 is 1.
  const std::vector<RingElem>& members() const { return by_code_; }

  std::size_t size() const { return by_code_.size(); }

  /// The member congruent to x mod 2R.
  const RingElem& rep_of(const RingElem& x) const { return by_code_.at(residue_index(x)); }

 private:
  RingId ring_;
  std::vector<RingElem> by_code_;
};

inline long l1_size(const RingElem& x) {
  mpz_class s = 0;
  for (int i = 0; i < 3; ++i) s += abs(x.coord(i));
  return s.get_si();
}

inline Transversal coset_reps(const RingId& R, long search_bound = 100) {
  if (R.two_is_unit()) fail(errc::unsupported_residue, "2 is a unit in " + R.to_string());
  const long n = R.residue_size();
  std::vector<std::optional<RingElem>> slot(static_cast<std::size_t>(n));
  slot[0] = RingElem::zero(R);
  slot[1] = RingElem::one(R);
  auto filled = [&] { return std::all_of(slot.begin(), slot.end(), [](auto& s) { return s.has_value(); }); };
  auto offer = [&](const RingElem& u) {
    unsigned c = residue_index(u);
    if (!slot[c]) slot[c] = u;
  };

  switch (R.kind()) {
    case RingKind::gf4:
    case RingKind::gf8:
      for (unsigned c = 2; c < static_cast<unsigned>(n); ++c) slot[c] = RingElem::field(R, c);
      break;
    case RingKind::quadratic: {
      // small units first: by |a| + |b|, then a descending, then b descending
      for (long s = 1; s <= 12 && !filled(); ++s)
        for (long a = s; a >= -s && !filled(); --a) {
          long rest = s - std::labs(a);
          for (long b : {rest, -rest}) {
            RingElem u = RingElem::quadratic(R, a, b);
            if (u.is_unit()) offer(u);
            if (rest == 0) break;
          }
        }
      if (!filled()) {
        PseudoGoodResult pg = is_pseudo_good(R, search_bound);
        if (pg.verdict != Verdict::yes) fail(errc::not_pseudo_good, R.to_string() + ": " + pg.reason);
        for (auto& w : pg.witnesses) {
          offer(w);
          offer(w.inv());
        }
      }
      break;
    }
    case RingKind::cubic: {
      RingElem x = RingElem::generator(R);
      std::vector<std::optional<RingElem>> best(slot.size());
      for (long k = -6; k <= 6; ++k) {
        RingElem u = pow(x, k);
        unsigned c = residue_index(u);
        if (c <= 1) continue;
        if (!best[c] || l1_size(u) < l1_size(*best[c])) best[c] = u;
      }
      for (std::size_t c = 2; c < slot.size(); ++c) slot[c] = best[c];
      break;
    }
    default:
      break;
  }
  if (!filled()) fail(errc::not_pseudo_good, R.to_string());
  std::vector<RingElem> out;
  for (auto& s : slot) out.push_back(*s);
  return Transversal(R, std::move(out));
}

}  // namespace sp4bg
