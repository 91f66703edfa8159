#pragma once

// Exact arithmetic over the supported coefficient rings.
//
//   Z            integers
//   Z[1/p]       integers localized at an odd prime p; value n * p^(-e), n coprime to p
//   O(D)         quadratic order Z[w], w = (1 + sqrt D)/2, D squarefree, D = 1 mod 4
//   Cubic(p)     the order Z[x], x^3 + p x^2 - 1 = 0
//   F2, F3       prime fields
//   F4           F2[t]/(t^2 + t + 1)
//   F8           F2[t]/(t^3 + t^2 + 1)

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sp4bg/error.hpp"

namespace sp4bg {

enum class RingKind : std::uint8_t { integers, localized, quadratic, cubic, prime_field, gf4, gf8 };

namespace detail {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool is_squarefree(long n) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

inline long mod_floor(long a, long m) { return ((a % m) + m) % m; }

}  // namespace detail

class RingId {
 public:
  RingId() = default;

  static RingId integers() { return RingId(RingKind::integers, 0); }

  static RingId localized(long p) {
    if (p == 2 || !detail::is_prime(p))
      fail(errc::unsupported_ring, "Z[1/p] needs an odd prime p, got " + std::to_string(p));
    return RingId(RingKind::localized, p);
  }

  static RingId quadratic(long D) {
    if (D == 1 || !detail::is_squarefree(D) || detail::mod_floor(D, 4) != 1)
      fail(errc::unsupported_ring, "O(D) needs squarefree D = 1 mod 4, D != 1, got " + std::to_string(D));
    return RingId(RingKind::quadratic, D);
  }

  static RingId cubic(long p) {
    if (p == 2 || !detail::is_prime(p))
      fail(errc::unsupported_ring, "Cubic(p) needs an odd prime p, got " + std::to_string(p));
    return RingId(RingKind::cubic, p);
  }

  static RingId prime_field(long q) {
    if (q != 2 && q != 3) fail(errc::unsupported_ring, "prime field must be F2 or F3");
    return RingId(RingKind::prime_field, q);
  }

  static RingId gf4() { return RingId(RingKind::gf4, 4); }
  static RingId gf8() { return RingId(RingKind::gf8, 8); }

  /// Parses the ring literals "Z", "Z[1/p]", "O(D)", "Cubic(p)", "F2", "F3", "F4", "F8".
  static RingId parse(std::string_view s);

  RingKind kind() const { return kind_; }
  long param() const { return param_; }

  /// (D - 1) / 4, so that w^2 = w + m.
  long quadratic_m() const { return (param_ - 1) / 4; }

  bool is_field() const {
    return kind_ == RingKind::prime_field || kind_ == RingKind::gf4 || kind_ == RingKind::gf8;
  }

  /// Field size for the finite fields, 0 otherwise.
  long field_size() const { return is_field() ? param_ : 0; }

  /// True when R/2R is one of F2, F4, F8 and reduce_mod2 is defined.
  bool has_residue_mod2() const {
    switch (kind_) {
      case RingKind::integers:
      case RingKind::localized:
      case RingKind::cubic:
      case RingKind::gf4:
      case RingKind::gf8:
        return true;
      case RingKind::prime_field:
        return param_ == 2;
      case RingKind::quadratic:
        return detail::mod_floor(quadratic_m(), 2) == 1;
    }
    return false;
  }

  bool two_is_unit() const { return kind_ == RingKind::prime_field && param_ == 3; }

  RingId residue_ring() const {
    if (!has_residue_mod2()) {
      if (two_is_unit()) fail(errc::unsupported_residue, "2 is a unit in " + to_string());
      fail(errc::unsupported_residue, "2 is not inert in " + to_string());
    }
    switch (kind_) {
      case RingKind::quadratic:
      case RingKind::gf4:
        return gf4();
      case RingKind::cubic:
      case RingKind::gf8:
        return gf8();
      default:
        return prime_field(2);
    }
  }

  long residue_size() const { return residue_ring().param_; }

  std::string to_string() const {
    switch (kind_) {
      case RingKind::integers: return "Z";
      case RingKind::localized: return "Z[1/" + std::to_string(param_) + "]";
      case RingKind::quadratic: return "O(" + std::to_string(param_) + ")";
      case RingKind::cubic: return "Cubic(" + std::to_string(param_) + ")";
      case RingKind::prime_field: return "F" + std::to_string(param_);
      case RingKind::gf4: return "F4";
      case RingKind::gf8: return "F8";
    }
    return "?";
  }

  bool operator==(const RingId&) const = default;

 private:
  RingId(RingKind kind, long param) : kind_(kind), param_(param) {}

  RingKind kind_ = RingKind::integers;
  long param_ = 0;
};

inline RingId RingId::parse(std::string_view s) {
  auto number_in = [&](std::string_view prefix, std::string_view suffix) -> std::optional<long> {
    if (s.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (s.substr(0, prefix.size()) != prefix) return std::nullopt;
    if (s.substr(s.size() - suffix.size()) != suffix) return std::nullopt;
    std::string body(s.substr(prefix.size(), s.size() - prefix.size() - suffix.size()));
    try {
      std::size_t used = 0;
      long v = std::stol(body, &used);
      if (used != body.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };
  if (s == "Z") return integers();
  if (s == "F2") return prime_field(2);
  if (s == "F3") return prime_field(3);
  if (s == "F4") return gf4();
  if (s == "F8") return gf8();
  if (auto p = number_in("Z[1/", "]")) return localized(*p);
  if (auto d = number_in("O(", ")")) return quadratic(*d);
  if (auto p = number_in("Cubic(", ")")) return cubic(*p);
  fail(errc::parse_error, "unknown ring literal '" + std::string(s) + "'");
}

class RingElem {
 public:
  RingElem() = default;

  static RingElem zero(const RingId& ring) { return RingElem(ring); }

  static RingElem one(const RingId& ring) { return from_int(ring, 1); }

  static RingElem from_int(const RingId& ring, const mpz_class& n) {
    RingElem x(ring);
    // F4, F8 store bit patterns, so an integer lands on its parity
    if (ring.kind() == RingKind::gf4 || ring.kind() == RingKind::gf8)
      x.c_[0] = mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
    else
      x.c_[0] = n;
    x.normalize();
    return x;
  }

  static RingElem from_int(const RingId& ring, long n) { return from_int(ring, mpz_class(n)); }

  /// a + b w in O(D).
  static RingElem quadratic(const RingId& ring, const mpz_class& a, const mpz_class& b) {
    expect_kind(ring, RingKind::quadratic);
    RingElem x(ring);
    x.c_[0] = a;
    x.c_[1] = b;
    return x;
  }

  /// a + b x + c x^2 in Cubic(p).
  static RingElem cubic(const RingId& ring, const mpz_class& a, const mpz_class& b, const mpz_class& c) {
    expect_kind(ring, RingKind::cubic);
    RingElem x(ring);
    x.c_[0] = a;
    x.c_[1] = b;
    x.c_[2] = c;
    return x;
  }

  /// n / p^e in Z[1/p].
  static RingElem localized(const RingId& ring, const mpz_class& n, long e) {
    expect_kind(ring, RingKind::localized);
    RingElem x(ring);
    x.c_[0] = n;
    x.e_ = e;
    x.normalize();
    return x;
  }

  /// Field element from its canonical encoding: the residue for F2/F3, the bit
  /// pattern of the polynomial in t for F4/F8.
  static RingElem field(const RingId& ring, unsigned code) {
    if (!ring.is_field()) fail(errc::not_a_field, ring.to_string());
    RingElem x(ring);
    x.c_[0] = code;
    x.normalize();
    return x;
  }

  /// The distinguished generator: w for O(D), x_p for Cubic(p), t for F4/F8.
  static RingElem generator(const RingId& ring) {
    switch (ring.kind()) {
      case RingKind::quadratic: return quadratic(ring, 0, 1);
      case RingKind::cubic: return cubic(ring, 0, 1, 0);
      case RingKind::gf4:
      case RingKind::gf8: return field(ring, 2);
      default: fail(errc::unsupported_ring, "no distinguished generator in " + ring.to_string());
    }
  }

  /// Inverse of coords(): one entry for Z, F2, F3; (n, e) for Z[1/p]; (a, b) for
  /// O(D); (a, b, c) for Cubic(p); polynomial coefficients in t for F4 and F8.
  static RingElem from_coords(const RingId& ring, std::span<const mpz_class> c) {
    auto need = [&](std::size_t n) {
      if (c.size() != n)
        fail(errc::parse_error, ring.to_string() + " elements take " + std::to_string(n) + " coordinates");
    };
    switch (ring.kind()) {
      case RingKind::integers: need(1); return from_int(ring, c[0]);
      case RingKind::localized: need(2); return localized(ring, c[0], c[1].get_si());
      case RingKind::quadratic: need(2); return quadratic(ring, c[0], c[1]);
      case RingKind::cubic: need(3); return cubic(ring, c[0], c[1], c[2]);
      case RingKind::prime_field: need(1); {
        mpz_class r = c[0] % ring.param();
        if (r < 0) r += ring.param();
        return field(ring, static_cast<unsigned>(r.get_ui()));
      }
      case RingKind::gf4:
      case RingKind::gf8: {
        std::size_t deg = ring.kind() == RingKind::gf4 ? 2 : 3;
        need(deg);
        unsigned code = 0;
        for (std::size_t i = 0; i < deg; ++i) {
          mpz_class bit = c[i] % 2;
          if (bit != 0) code |= 1u << i;
        }
        return field(ring, code);
      }
    }
    fail(errc::parse_error, "bad coordinates");
  }

  const RingId& ring() const { return ring_; }

  std::vector<mpz_class> coords() const {
    switch (ring_.kind()) {
      case RingKind::integers:
      case RingKind::prime_field: return {c_[0]};
      case RingKind::localized: return {c_[0], mpz_class(e_)};
      case RingKind::quadratic: return {c_[0], c_[1]};
      case RingKind::cubic: return {c_[0], c_[1], c_[2]};
      case RingKind::gf4:
      case RingKind::gf8: {
        std::size_t deg = ring_.kind() == RingKind::gf4 ? 2 : 3;
        std::vector<mpz_class> out;
        unsigned code = field_code();
        for (std::size_t i = 0; i < deg; ++i) out.emplace_back((code >> i) & 1u);
        return out;
      }
    }
    return {};
  }

  /// Raw coordinate access; i < 3.
  const mpz_class& coord(int i) const { return c_[i]; }

  /// Denominator exponent of a Z[1/p] element.
  long exponent() const { return e_; }

  unsigned field_code() const { return static_cast<unsigned>(c_[0].get_ui()); }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  bool is_one() const { return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && e_ == 0; }

  bool is_unit() const;

  /// Multiplicative inverse; throws NotAUnit.
  RingElem inv() const;

  RingElem operator-() const {
    RingElem x = *this;
    for (auto& c : x.c_) c = -c;
    x.normalize();
    return x;
  }

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o) { return *this += -o; }
  RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);

  bool operator==(const RingElem& o) const {
    return ring_ == o.ring_ && e_ == o.e_ && c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2];
  }

  std::string to_string() const;

 private:
  explicit RingElem(const RingId& ring) : ring_(ring) {}

  static void expect_kind(const RingId& ring, RingKind kind) {
    if (ring.kind() != kind) fail(errc::unsupported_ring, "wrong constructor for " + ring.to_string());
  }

  void check_same(const RingElem& o) const {
    if (!(ring_ == o.ring_))
      fail(errc::mixed_rings, ring_.to_string() + " vs " + o.ring_.to_string());
  }

  void normalize();

  friend RingElem reduce_mod2(const RingElem& x);

  RingId ring_;
  std::array<mpz_class, 3> c_;
  long e_ = 0;
};

namespace detail {

// Carry-less product reduced by the defining polynomial (bit pattern incl. leading term).
inline unsigned gf2_poly_mul(unsigned a, unsigned b, unsigned modulus, unsigned degree) {
  unsigned r = 0;
  for (unsigned i = 0; i < degree; ++i)
    if (b & (1u << i)) r ^= a << i;
  for (int i = 2 * static_cast<int>(degree) - 2; i >= static_cast<int>(degree); --i)
    if (r & (1u << i)) r ^= modulus << (i - degree);
  return r;
}

constexpr unsigned gf4_modulus = 0b111;   // t^2 + t + 1
constexpr unsigned gf8_modulus = 0b1101;  // t^3 + t^2 + 1

inline mpz_class det3(const std::array<std::array<mpz_class, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Columns are u, u*x, u*x^2 in the basis 1, x, x^2 of Cubic(p).
inline std::array<std::array<mpz_class, 3>, 3> cubic_mult_matrix(const mpz_class& a0, const mpz_class& a1,
                                                                 const mpz_class& a2, long p) {
  std::array<std::array<mpz_class, 3>, 3> m;
  m[0] = {a0, a2, a1 - p * a2};
  m[1] = {a1, a0, a2};
  m[2] = {a2, a1 - p * a2, a0 - p * a1 + p * p * a2};
  return m;
}

}  // namespace detail

inline void RingElem::normalize() {
  switch (ring_.kind()) {
    case RingKind::localized: {
      if (c_[0] == 0) {
        e_ = 0;
        break;
      }
      const unsigned long p = static_cast<unsigned long>(ring_.param());
      while (mpz_divisible_ui_p(c_[0].get_mpz_t(), p)) {
        mpz_divexact_ui(c_[0].get_mpz_t(), c_[0].get_mpz_t(), p);
        --e_;
      }
      break;
    }
    case RingKind::prime_field: {
      mpz_class r = c_[0] % ring_.param();
      if (r < 0) r += ring_.param();
      c_[0] = r;
      break;
    }
    case RingKind::gf4:
    case RingKind::gf8: {
      // characteristic 2: negation is the identity on the bit pattern
      if (c_[0] < 0) c_[0] = -c_[0];
      unsigned mask = ring_.kind() == RingKind::gf4 ? 3u : 7u;
      c_[0] = c_[0].get_ui() & mask;
      break;
    }
    default:
      break;
  }
}

inline RingElem& RingElem::operator+=(const RingElem& o) {
  check_same(o);
  switch (ring_.kind()) {
    case RingKind::localized: {
      if (o.c_[0] == 0) return *this;
      if (c_[0] == 0) return *this = o;
      const unsigned long p = static_cast<unsigned long>(ring_.param());
      long top = std::max(e_, o.e_);
      mpz_class lhs, rhs, scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(top - e_));
      lhs = c_[0] * scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(top - o.e_));
      rhs = o.c_[0] * scale;
      c_[0] = lhs + rhs;
      e_ = top;
      break;
    }
    case RingKind::gf4:
    case RingKind::gf8:
      c_[0] = field_code() ^ o.field_code();
      return *this;
    default:
      for (int i = 0; i < 3; ++i) c_[i] += o.c_[i];
      break;
  }
  normalize();
  return *this;
}

inline RingElem operator*(const RingElem& a, const RingElem& b) {
  a.check_same(b);
  RingElem r(a.ring_);
  switch (a.ring_.kind()) {
    case RingKind::integers:
    case RingKind::prime_field:
      r.c_[0] = a.c_[0] * b.c_[0];
      break;
    case RingKind::localized:
      r.c_[0] = a.c_[0] * b.c_[0];
      r.e_ = a.e_ + b.e_;
      break;
    case RingKind::quadratic: {
      // (a0 + a1 w)(b0 + b1 w) with w^2 = w + m
      const long m = a.ring_.quadratic_m();
      mpz_class bd = a.c_[1] * b.c_[1];
      r.c_[0] = a.c_[0] * b.c_[0] + m * bd;
      r.c_[1] = a.c_[0] * b.c_[1] + a.c_[1] * b.c_[0] + bd;
      break;
    }
    case RingKind::cubic: {
      // x^3 = 1 - p x^2 and x^4 = -p + x + p^2 x^2
      const long p = a.ring_.param();
      const auto& x = a.c_;
      const auto& y = b.c_;
      mpz_class c0 = x[0] * y[0];
      mpz_class c1 = x[0] * y[1] + x[1] * y[0];
      mpz_class c2 = x[0] * y[2] + x[1] * y[1] + x[2] * y[0];
      mpz_class c3 = x[1] * y[2] + x[2] * y[1];
      mpz_class c4 = x[2] * y[2];
      r.c_[0] = c0 + c3 - p * c4;
      r.c_[1] = c1 + c4;
      r.c_[2] = c2 - p * c3 + p * p * c4;
      break;
    }
    case RingKind::gf4:
      r.c_[0] = detail::gf2_poly_mul(a.field_code(), b.field_code(), detail::gf4_modulus, 2);
      return r;
    case RingKind::gf8:
      r.c_[0] = detail::gf2_poly_mul(a.field_code(), b.field_code(), detail::gf8_modulus, 3);
      return r;
  }
  r.normalize();
  return r;
}

struct NormTrace {
  mpz_class norm;
  mpz_class trace;
};

/// Field norm and trace over Q; O(D) and Cubic(p) only.
inline NormTrace norm_trace(const RingElem& x) {
  const RingId& R = x.ring();
  if (R.kind() == RingKind::quadratic) {
    const long m = R.quadratic_m();
    const mpz_class &a = x.coord(0), &b = x.coord(1);
    return {a * a + a * b - m * b * b, 2 * a + b};
  }
  if (R.kind() == RingKind::cubic) {
    auto m = detail::cubic_mult_matrix(x.coord(0), x.coord(1), x.coord(2), R.param());
    return {detail::det3(m), m[0][0] + m[1][1] + m[2][2]};
  }
  fail(errc::unsupported_ring, "norm/trace needs O(D) or Cubic(p), got " + R.to_string());
}

inline bool RingElem::is_unit() const {
  switch (ring_.kind()) {
    case RingKind::integers: return c_[0] == 1 || c_[0] == -1;
    case RingKind::localized: return c_[0] == 1 || c_[0] == -1;
    case RingKind::quadratic:
    case RingKind::cubic: {
      mpz_class n = norm_trace(*this).norm;
      return n == 1 || n == -1;
    }
    default: return !is_zero();
  }
}

inline RingElem RingElem::inv() const {
  if (!is_unit()) fail(errc::not_a_unit, to_string() + " in " + ring_.to_string());
  switch (ring_.kind()) {
    case RingKind::integers: return *this;
    case RingKind::localized: return localized(ring_, c_[0], -e_);
    case RingKind::quadratic: {
      // conj(a + b w) = (a + b) - b w, and u * conj(u) = N(u) = +-1
      mpz_class n = norm_trace(*this).norm;
      return quadratic(ring_, (c_[0] + c_[1]) * n, -c_[1] * n);
    }
    case RingKind::cubic: {
      auto m = detail::cubic_mult_matrix(c_[0], c_[1], c_[2], ring_.param());
      mpz_class det = detail::det3(m);
      // first column of the adjugate, i.e. cofactors of the first row
      mpz_class y0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
      mpz_class y1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
      mpz_class y2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
      return cubic(ring_, y0 * det, y1 * det, y2 * det);
    }
    case RingKind::prime_field: {
      // q <= 3: every nonzero element is its own inverse
      return *this;
    }
    case RingKind::gf4:
    case RingKind::gf8: {
      unsigned size = static_cast<unsigned>(ring_.param());
      for (unsigned c = 1; c < size; ++c)
        if ((*this * field(ring_, c)).is_one()) return field(ring_, c);
      break;
    }
  }
  fail(errc::not_a_unit, to_string());
}

inline RingElem pow(const RingElem& x, long n) {
  RingElem base = n < 0 ? x.inv() : x;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  RingElem acc = RingElem::one(x.ring());
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline std::string RingElem::to_string() const {
  std::ostringstream os;
  switch (ring_.kind()) {
    case RingKind::integers:
    case RingKind::prime_field:
      os << c_[0];
      break;
    case RingKind::localized:
      os << c_[0];
      if (e_ > 0) os << "/" << ring_.param() << "^" << e_;
      if (e_ < 0) os << "*" << ring_.param() << "^" << -e_;
      break;
    case RingKind::quadratic:
      os << c_[0] << (c_[1] < 0 ? "-" : "+") << abs(c_[1]) << "w";
      break;
    case RingKind::cubic:
      os << c_[0] << (c_[1] < 0 ? "-" : "+") << abs(c_[1]) << "x" << (c_[2] < 0 ? "-" : "+") << abs(c_[2])
         << "x^2";
      break;
    case RingKind::gf4:
    case RingKind::gf8: {
      unsigned code = field_code();
      if (code == 0) return "0";
      bool first = true;
      for (int i = 2; i >= 0; --i) {
        if (!(code & (1u << i))) continue;
        if (!first) os << "+";
        first = false;
        os << (i == 0 ? "1" : i == 1 ? "t" : "t^2");
      }
      break;
    }
  }
  return os.str();
}

/// Image in R/2R, realized as F2, F4 or F8; a ring homomorphism.
inline RingElem reduce_mod2(const RingElem& x) {
  const RingId& R = x.ring();
  RingId target = R.residue_ring();
  auto bit = [](const mpz_class& v) { return static_cast<unsigned>(mpz_odd_p(v.get_mpz_t()) ? 1 : 0); };
  switch (R.kind()) {
    case RingKind::integers:
    case RingKind::localized:
    case RingKind::prime_field:
      return RingElem::field(target, bit(x.c_[0]));
    case RingKind::quadratic:
      return RingElem::field(target, bit(x.c_[0]) | bit(x.c_[1]) << 1);
    case RingKind::cubic:
      return RingElem::field(target, bit(x.c_[0]) | bit(x.c_[1]) << 1 | bit(x.c_[2]) << 2);
    case RingKind::gf4:
    case RingKind::gf8:
      return x;
  }
  fail(errc::unsupported_residue, R.to_string());
}

/// Index of the class of x in R/2R (the field encoding of its residue).
inline unsigned residue_index(const RingElem& x) { return reduce_mod2(x).field_code(); }

inline bool in_two_r(const RingElem& x) { return residue_index(x) == 0; }

// ---------------------------------------------------------------------------
// Euclidean division

inline bool supports_euclid(const RingId& R) {
  switch (R.kind()) {
    case RingKind::integers:
    case RingKind::localized:
    case RingKind::prime_field:
    case RingKind::gf4:
    case RingKind::gf8:
      return true;
    case RingKind::quadratic: {
      long D = R.param();
      return D == -3 || D == 5 || D == 13 || D == 21 || D == 29;
    }
    case RingKind::cubic:
      return false;
  }
  return false;
}

/// The Euclidean function: |n|, |p-free part|, |N(x)|, or 0/1 in a field.
inline mpz_class euclid_size(const RingElem& x) {
  switch (x.ring().kind()) {
    case RingKind::integers:
    case RingKind::localized:
      return abs(x.coord(0));
    case RingKind::quadratic:
      return abs(norm_trace(x).norm);
    case RingKind::cubic:
      fail(errc::not_euclidean_here, x.ring().to_string());
    default:
      return x.is_zero() ? 0 : 1;
  }
}

struct DivResult {
  RingElem q;
  RingElem r;
};

/// a = q b + r with euclid_size(r) < euclid_size(b).
inline DivResult euclid_divide(const RingElem& a, const RingElem& b) {
  if (!(a.ring() == b.ring())) fail(errc::mixed_rings, a.ring().to_string() + " vs " + b.ring().to_string());
  const RingId& R = a.ring();
  if (!supports_euclid(R)) fail(errc::not_euclidean_here, R.to_string());
  if (b.is_zero()) fail(errc::division_by_zero, "euclid_divide by 0");

  switch (R.kind()) {
    case RingKind::integers: {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.coord(0).get_mpz_t(), b.coord(0).get_mpz_t());
      RingElem qe = RingElem::from_int(R, q);
      return {qe, a - qe * b};
    }
    case RingKind::localized: {
      // a = na p^-ea, b = nb p^-eb; q = floor(na/nb) p^(eb-ea)
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a.coord(0).get_mpz_t(), b.coord(0).get_mpz_t());
      RingElem qe = RingElem::localized(R, q, a.exponent() - b.exponent());
      return {qe, a - qe * b};
    }
    case RingKind::quadratic: {
      // a / b = a conj(b) / N(b) = (s + t w) / n
      mpz_class n = norm_trace(b).norm;
      RingElem conj = RingElem::quadratic(R, b.coord(0) + b.coord(1), -b.coord(1));
      RingElem num = a * conj;
      mpz_class s = num.coord(0), t = num.coord(1);
      if (n < 0) {
        n = -n;
        s = -s;
        t = -t;
      }
      auto round_div = [&](const mpz_class& v) {
        mpz_class out, numer = 2 * v + n, denom = 2 * n;
        mpz_fdiv_q(out.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
        return out;
      };
      mpz_class i0 = round_div(s), j0 = round_div(t);
      mpz_class bound = euclid_size(b);
      std::optional<DivResult> best;
      mpz_class best_size;
      for (int di : {0, 1, -1, 2, -2, 3, -3}) {
        for (int dj : {0, 1, -1, 2, -2, 3, -3}) {
          RingElem q = RingElem::quadratic(R, i0 + di, j0 + dj);
          RingElem r = a - q * b;
          mpz_class sz = euclid_size(r);
          if (!best || sz < best_size) {
            best = DivResult{q, r};
            best_size = sz;
          }
        }
      }
      if (best_size >= bound)
        fail(errc::not_euclidean_here, "no remainder of smaller norm found near " + a.to_string() + " / " +
                                           b.to_string());
      return *best;
    }
    default: {
      RingElem q = a * b.inv();
      return {q, RingElem::zero(R)};
    }
  }
}

}  // namespace sp4bg
