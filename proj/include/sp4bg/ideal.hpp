#pragma once

// Ideal arithmetic: gcd generators in Z and Z[1/p], Hermite normal form
// lattices in the quadratic orders O(D).

#include <utility>
#include <vector>

#include "sp4bg/ring.hpp"

namespace sp4bg {

/// An ideal of O(D) as the Z-lattice with basis rows (h11, h12), (0, h22)
/// in w-coordinates, 0 <= h12 < h22. The zero ideal has all entries 0.
class QuadIdeal {
 public:
  QuadIdeal() = default;

  /// Ideal generated by the given elements: the Z-span of {g, g w}.
  static QuadIdeal generated_by(const RingId& R, const std::vector<RingElem>& gens) {
    if (R.kind() != RingKind::quadratic) fail(errc::unsupported_ring, "QuadIdeal needs O(D)");
    std::vector<std::pair<mpz_class, mpz_class>> vecs;
    RingElem w = RingElem::generator(R);
    for (const auto& g : gens) {
      if (!(g.ring() == R)) fail(errc::mixed_rings, g.ring().to_string() + " vs " + R.to_string());
      RingElem gw = g * w;
      vecs.emplace_back(g.coord(0), g.coord(1));
      vecs.emplace_back(gw.coord(0), gw.coord(1));
    }
    return from_lattice(R, std::move(vecs));
  }

  static QuadIdeal unit(const RingId& R) { return generated_by(R, {RingElem::one(R)}); }

  const RingId& ring() const { return ring_; }
  const mpz_class& h11() const { return h11_; }
  const mpz_class& h12() const { return h12_; }
  const mpz_class& h22() const { return h22_; }

  bool is_zero() const { return h11_ == 0 && h22_ == 0; }
  bool is_unit() const { return h11_ == 1 && h12_ == 0 && h22_ == 1; }

  /// Norm of the ideal, the index of the lattice.
  mpz_class norm() const { return h11_ * h22_; }

  std::vector<RingElem> basis() const {
    return {RingElem::quadratic(ring_, h11_, h12_), RingElem::quadratic(ring_, 0, h22_)};
  }

  bool contains(const RingElem& x) const {
    if (is_zero()) return x.is_zero();
    // x = c1 v1 + c2 v2
    if (!mpz_divisible_p(x.coord(0).get_mpz_t(), h11_.get_mpz_t())) return false;
    mpz_class c1 = x.coord(0) / h11_;
    mpz_class rest = x.coord(1) - c1 * h12_;
    return mpz_divisible_p(rest.get_mpz_t(), h22_.get_mpz_t()) != 0;
  }

  /// Closed under multiplication by w.
  bool is_ideal() const {
    if (is_zero()) return true;
    RingElem w = RingElem::generator(ring_);
    for (const auto& v : basis())
      if (!contains(v * w)) return false;
    return true;
  }

  friend QuadIdeal operator+(const QuadIdeal& x, const QuadIdeal& y) {
    std::vector<std::pair<mpz_class, mpz_class>> vecs;
    for (const auto* I : {&x, &y})
      for (const auto& v : I->basis()) vecs.emplace_back(v.coord(0), v.coord(1));
    return from_lattice(x.ring_, std::move(vecs));
  }

  friend QuadIdeal operator*(const QuadIdeal& x, const QuadIdeal& y) {
    std::vector<std::pair<mpz_class, mpz_class>> vecs;
    for (const auto& u : x.basis())
      for (const auto& v : y.basis()) {
        RingElem p = u * v;
        vecs.emplace_back(p.coord(0), p.coord(1));
      }
    return from_lattice(x.ring_, std::move(vecs));
  }

  bool operator==(const QuadIdeal&) const = default;

  std::string to_string() const {
    return "HNF[[" + h11_.get_str() + "," + h12_.get_str() + "],[0," + h22_.get_str() + "]]";
  }

  /// Row HNF of the Z-span of arbitrary vectors in Z^2.
  static QuadIdeal from_lattice(const RingId& R, std::vector<std::pair<mpz_class, mpz_class>> vecs) {
    QuadIdeal I;
    I.ring_ = R;
    mpz_class g = 0, x = 0, second = 0;
    for (auto& [c0, c1] : vecs) {
      if (c0 == 0) {
        second = gcd(second, c1);
        continue;
      }
      // combine (g, x) and (c0, c1) into (d, .) and a vector with first coordinate 0
      mpz_class d, s, t;
      mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), c0.get_mpz_t());
      mpz_class nx = s * x + t * c1;
      mpz_class zero_second = (c0 / d) * x - (g / d) * c1;
      second = gcd(second, zero_second);
      g = d;
      x = nx;
    }
    if (g < 0) {
      g = -g;
      x = -x;
    }
    I.h11_ = g;
    I.h22_ = abs(second);
    if (I.h22_ != 0) {
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), I.h22_.get_mpz_t());
    }
    I.h12_ = x;
    if (g == 0 || I.h22_ == 0) {
      // rank < 2 only happens for the zero ideal of an order
      I.h11_ = I.h12_ = I.h22_ = 0;
    }
    return I;
  }

 private:
  RingId ring_;
  mpz_class h11_ = 0, h12_ = 0, h22_ = 0;
};

/// Ideal of Z, Z[1/p] (by a nonnegative generator, p-free for Z[1/p]) or O(D).
class Ideal {
 public:
  static Ideal generated_by(const RingId& R, const std::vector<RingElem>& gens) {
    Ideal I;
    I.ring_ = R;
    switch (R.kind()) {
      case RingKind::integers:
      case RingKind::localized:
        for (const auto& g : gens) {
          if (!(g.ring() == R)) fail(errc::mixed_rings, g.ring().to_string() + " vs " + R.to_string());
          I.gen_ = gcd(I.gen_, g.coord(0));
        }
        break;
      case RingKind::quadratic:
        I.quad_ = QuadIdeal::generated_by(R, gens);
        break;
      default:
        fail(errc::unsupported_ring, "ideal arithmetic needs Z, Z[1/p] or O(D), got " + R.to_string());
    }
    return I;
  }

  const RingId& ring() const { return ring_; }

  bool is_unit() const { return is_quadratic() ? quad_.is_unit() : gen_ == 1; }

  bool is_quadratic() const { return ring_.kind() == RingKind::quadratic; }

  const mpz_class& generator() const { return gen_; }
  const QuadIdeal& quad() const { return quad_; }

  friend Ideal operator+(const Ideal& x, const Ideal& y) {
    Ideal r = x;
    if (x.is_quadratic())
      r.quad_ = x.quad_ + y.quad_;
    else
      r.gen_ = gcd(x.gen_, y.gen_);
    return r;
  }

  friend Ideal operator*(const Ideal& x, const Ideal& y) {
    Ideal r = x;
    if (x.is_quadratic())
      r.quad_ = x.quad_ * y.quad_;
    else
      r.gen_ = x.gen_ * y.gen_;
    return r;
  }

  std::string to_string() const { return is_quadratic() ? quad_.to_string() : "(" + gen_.get_str() + ")"; }

 private:
  RingId ring_;
  mpz_class gen_ = 0;
  QuadIdeal quad_;
};

struct IdealCheck {
  bool unit;
  Ideal ideal;  ///< the computed sum; a witness when not the unit ideal
};

/// Sum over terms of the product of the ideals in each term; every ideal is
/// given by a generator list.
inline IdealCheck ideal_sum_product_is_unit(const RingId& R,
                                            const std::vector<std::vector<std::vector<RingElem>>>& terms) {
  Ideal sum = Ideal::generated_by(R, {});
  for (const auto& term : terms) {
    Ideal prod = Ideal::generated_by(R, {RingElem::one(R)});
    for (const auto& gens : term) prod = prod * Ideal::generated_by(R, gens);
    sum = sum + prod;
  }
  return {sum.is_unit(), sum};
}

/// Sum of the ideals generated by each inner list.
inline IdealCheck ideal_sum_is_unit(const RingId& R, const std::vector<std::vector<RingElem>>& generator_sets) {
  std::vector<std::vector<std::vector<RingElem>>> terms;
  for (const auto& g : generator_sets) terms.push_back({g});
  return ideal_sum_product_is_unit(R, terms);
}

}  // namespace sp4bg
