#pragma once

// 4x4 symplectic matrices over the ring catalog, preserving
// J = [[0, I2], [-I2, 0]].

#include <array>
#include <string>
#include <string_view>

#include "sp4bg/ring.hpp"

namespace sp4bg {

enum class Root : std::uint8_t { a, b, ab, a2b, na, nb, nab, na2b };

inline constexpr std::array<Root, 8> all_roots = {Root::a,  Root::b,  Root::ab,  Root::a2b,
                                                  Root::na, Root::nb, Root::nab, Root::na2b};

/// Positive roots in the frozen Borel order 2a+b, a+b, b, a.
inline constexpr std::array<Root, 4> borel_root_order = {Root::a2b, Root::ab, Root::b, Root::a};

inline constexpr bool is_positive(Root r) { return static_cast<int>(r) < 4; }

inline constexpr Root negate(Root r) { return static_cast<Root>((static_cast<int>(r) + 4) % 8); }

inline constexpr bool is_long(Root r) {
  return r == Root::b || r == Root::a2b || r == Root::nb || r == Root::na2b;
}

inline std::string_view root_name(Root r) {
  static constexpr std::array<std::string_view, 8> names = {"a", "b", "a+b", "2a+b", "-a", "-b", "-(a+b)", "-(2a+b)"};
  return names[static_cast<int>(r)];
}

inline Root parse_root(std::string_view s) {
  for (Root r : all_roots)
    if (root_name(r) == s) return r;
  if (s == "alpha") return Root::a;
  if (s == "beta") return Root::b;
  if (s == "alpha+beta") return Root::ab;
  if (s == "2alpha+beta") return Root::a2b;
  fail(errc::parse_error, "unknown root '" + std::string(s) + "'");
}

class SpMatrix {
 public:
  SpMatrix() : SpMatrix(RingId::integers()) {}

  explicit SpMatrix(const RingId& ring) : ring_(ring) { e_.fill(RingElem::zero(ring)); }

  static SpMatrix identity(const RingId& ring) {
    SpMatrix m(ring);
    for (int i = 0; i < 4; ++i) m.e_[i * 5] = RingElem::one(ring);
    return m;
  }

  static SpMatrix diagonal(const std::array<RingElem, 4>& d) {
    SpMatrix m(d[0].ring());
    for (int i = 0; i < 4; ++i) m.set(i, i, d[i]);
    return m;
  }

  const RingId& ring() const { return ring_; }

  const RingElem& operator()(int i, int j) const { return e_[i * 4 + j]; }

  void set(int i, int j, const RingElem& x) {
    if (!(x.ring() == ring_)) fail(errc::mixed_rings, x.ring().to_string() + " entry in " + ring_.to_string());
    e_[i * 4 + j] = x;
  }

  friend SpMatrix operator*(const SpMatrix& x, const SpMatrix& y) {
    if (!(x.ring_ == y.ring_)) fail(errc::mixed_rings, x.ring_.to_string() + " vs " + y.ring_.to_string());
    SpMatrix r(x.ring_);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const RingElem& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
          const RingElem& ykj = y(k, j);
          if (!ykj.is_zero()) r.e_[i * 4 + j] += xik * ykj;
        }
      }
    return r;
  }

  SpMatrix& operator*=(const SpMatrix& o) { return *this = *this * o; }

  friend SpMatrix operator+(const SpMatrix& x, const SpMatrix& y) {
    SpMatrix r = x;
    for (int i = 0; i < 16; ++i) r.e_[i] += y.e_[i];
    return r;
  }

  friend SpMatrix operator-(const SpMatrix& x, const SpMatrix& y) {
    SpMatrix r = x;
    for (int i = 0; i < 16; ++i) r.e_[i] -= y.e_[i];
    return r;
  }

  SpMatrix operator-() const {
    SpMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }

  SpMatrix transpose() const {
    SpMatrix r(ring_);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.e_[j * 4 + i] = e_[i * 4 + j];
    return r;
  }

  /// Inverse of a symplectic matrix: [[A,B],[C,D]]^-1 = [[D^T,-B^T],[-C^T,A^T]].
  SpMatrix inverse() const {
    SpMatrix r(ring_);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r.e_[i * 4 + j] = (*this)(j + 2, i + 2);
        r.e_[i * 4 + j + 2] = -(*this)(j, i + 2);
        r.e_[(i + 2) * 4 + j] = -(*this)(j + 2, i);
        r.e_[(i + 2) * 4 + j + 2] = (*this)(j, i);
      }
    return r;
  }

  bool is_identity() const { return *this == identity(ring_); }

  bool operator==(const SpMatrix& o) const { return ring_ == o.ring_ && e_ == o.e_; }

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
      s += i ? "; " : "";
      for (int j = 0; j < 4; ++j) s += (j ? " " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  RingId ring_;
  std::array<RingElem, 16> e_;
};

inline SpMatrix symplectic_form(const RingId& ring) {
  SpMatrix j(ring);
  j.set(0, 2, RingElem::one(ring));
  j.set(1, 3, RingElem::one(ring));
  j.set(2, 0, -RingElem::one(ring));
  j.set(3, 1, -RingElem::one(ring));
  return j;
}

inline bool is_symplectic(const SpMatrix& m) {
  SpMatrix j = symplectic_form(m.ring());
  return m.transpose() * j * m == j;
}

inline SpMatrix root_element(Root r, const RingElem& t) {
  SpMatrix m = SpMatrix::identity(t.ring());
  if (t.is_zero()) return m;
  switch (is_positive(r) ? r : negate(r)) {
    case Root::a:
      m.set(0, 1, t);
      m.set(3, 2, -t);
      break;
    case Root::b:
      m.set(1, 3, t);
      break;
    case Root::ab:
      m.set(0, 3, t);
      m.set(1, 2, t);
      break;
    case Root::a2b:
      m.set(0, 2, t);
      break;
    default:
      break;
  }
  return is_positive(r) ? m : m.transpose();
}

/// w_r(t) = e_r(t) e_-r(-t^-1) e_r(t).
inline SpMatrix weyl_elem(Root r, const RingElem& t) {
  RingElem ti = t.inv();
  return root_element(r, t) * root_element(negate(r), -ti) * root_element(r, t);
}

/// h_r(t) = w_r(t) w_r(1)^-1.
inline SpMatrix torus_elem(Root r, const RingElem& t) {
  return weyl_elem(r, t) * weyl_elem(r, RingElem::one(t.ring())).inverse();
}

/// Group commutator (x, y) = x y x^-1 y^-1.
inline SpMatrix commutator(const SpMatrix& x, const SpMatrix& y) {
  return x * y * x.inverse() * y.inverse();
}

// Sign constants of this realization:
//   (e_{a+b}(b), e_a(a)) = e_{2a+b}(c1 * 2ab)
//   (e_b(b), e_a(a))     = e_{a+b}(c2 * ab) e_{2a+b}(c3 * a^2 b)
inline constexpr int commutator_c1 = -1;
inline constexpr int commutator_c2 = -1;
inline constexpr int commutator_c3 = -1;

/// Image root and sign with w e_psi(t) w^-1 = e_image(sign * t), w = w_a(1) or w_b(1).
struct SignEntry {
  Root image;
  int sign;
};

/// gen 0 is w_a, gen 1 is w_b.
inline SignEntry sign_table(int gen, Root psi) {
  static constexpr std::array<std::array<SignEntry, 8>, 2> table = {{
      {{{Root::na, -1},
        {Root::a2b, 1},
        {Root::ab, -1},
        {Root::b, 1},
        {Root::a, -1},
        {Root::na2b, 1},
        {Root::nab, -1},
        {Root::nb, 1}}},
      {{{Root::ab, -1},
        {Root::nb, -1},
        {Root::a, 1},
        {Root::a2b, 1},
        {Root::nab, -1},
        {Root::b, -1},
        {Root::na, 1},
        {Root::na2b, 1}}},
  }};
  return table[gen][static_cast<int>(psi)];
}

inline SpMatrix reduce_matrix(const SpMatrix& m) {
  SpMatrix r(m.ring().residue_ring());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.set(i, j, reduce_mod2(m(i, j)));
  return r;
}

/// Entrywise image under any ring map.
template <class F>
SpMatrix map_entries(const SpMatrix& m, const RingId& target, F&& f) {
  SpMatrix r(target);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.set(i, j, f(m(i, j)));
  return r;
}

}  // namespace sp4bg
