#pragma once

// Factorization of Sp4(R) elements into root elements over Euclidean rings.

#include <utility>
#include <vector>

#include "sp4bg/bruhat.hpp"

namespace sp4bg {

struct Letter {
  Root root;
  RingElem value;

  bool operator==(const Letter&) const = default;
};

struct UnipotentWord {
  std::vector<Letter> letters;
  /// Number of (U+ U-) blocks after grouping sign runs.
  int J = 0;

  /// Blocks (u+_i, u-_i) with the product over i of u+_i u-_i equal to the word.
  std::vector<std::pair<SpMatrix, SpMatrix>> blocks(const RingId& ring) const;
};

inline SpMatrix evaluate(const std::vector<Letter>& letters, const RingId& ring) {
  SpMatrix m = SpMatrix::identity(ring);
  for (const auto& l : letters) m *= root_element(l.root, l.value);
  return m;
}

namespace detail {

inline std::vector<Letter> merge_letters(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  for (const auto& l : in) {
    if (l.value.is_zero()) continue;
    if (!out.empty() && out.back().root == l.root) {
      out.back().value += l.value;
      if (out.back().value.is_zero()) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// Runs of equal sign; a leading negative run gets an empty positive partner.
inline std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> sign_blocks(const std::vector<Letter>& w) {
  std::vector<std::pair<std::vector<Letter>, std::vector<Letter>>> out;
  for (const auto& l : w) {
    bool pos = is_positive(l.root);
    if (out.empty() || (pos && !out.back().second.empty())) out.emplace_back();
    (pos ? out.back().first : out.back().second).push_back(l);
  }
  return out;
}

inline std::vector<Letter> positive_letters(const BorelCoords& c) {
  return {{Root::a2b, c.t1}, {Root::ab, c.t2}, {Root::b, c.t3}, {Root::a, c.t4}};
}

// M = u+ u- with both factors unipotent, when the Doolittle pivots of the
// reversed matrix are all 1.
inline std::optional<std::vector<Letter>> try_upper_lower(const SpMatrix& m) {
  const RingId& R = m.ring();
  // Borel basis reversed: lower-upper there is upper-lower here.
  constexpr std::array<int, 4> order = {2, 3, 1, 0};
  std::array<std::array<RingElem, 4>, 4> a, l, u;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = m(order[i], order[j]);
      l[i][j] = u[i][j] = RingElem::zero(R);
    }
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      RingElem s = a[i][j];
      for (int k = 0; k < i; ++k) s -= l[i][k] * u[k][j];
      u[i][j] = s;
    }
    if (!u[i][i].is_one()) return std::nullopt;
    l[i][i] = RingElem::one(R);
    for (int j = i + 1; j < 4; ++j) {
      RingElem s = a[j][i];
      for (int k = 0; k < i; ++k) s -= l[j][k] * u[k][i];
      l[j][i] = s;
    }
  }
  SpMatrix up(R), lo(R);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      up.set(order[i], order[j], l[i][j]);
      lo.set(order[i], order[j], u[i][j]);
    }
  if (!is_borel(up) || !is_borel(lo.transpose())) return std::nullopt;
  BorelCoords cp = borel_coords(up), cn = borel_coords(lo.transpose());
  std::vector<Letter> w = positive_letters(cp);
  // lo = (e_2a+b(t1) e_a+b(t2) e_b(t3) e_a(t4))^T
  w.push_back({Root::na, cn.t4});
  w.push_back({Root::nb, cn.t3});
  w.push_back({Root::nab, cn.t2});
  w.push_back({Root::na2b, cn.t1});
  return merge_letters(w);
}

// Left row operations E_k ... E_1 M = I, recorded as letters E_i.
class Eliminator {
 public:
  explicit Eliminator(const SpMatrix& m) : m_(m), ring_(m.ring()) {}

  void apply(Root r, RingElem t) {
    if (t.is_zero()) return;
    m_ = root_element(r, t) * m_;
    ops_.push_back({r, t});
  }

  const RingElem& at(int i, int j) const { return m_(i, j); }

  // Euclid on entries (i, col) and (k, col) using up(t): row i += t row k and
  // down(t): row k += t row i; ends with entry (k, col) zero.
  void euclid(int col, int i, int k, Root up, Root down) {
    RingElem one = RingElem::one(ring_);
    while (!at(k, col).is_zero()) {
      if (at(i, col).is_zero()) {
        apply(up, one);
        continue;
      }
      DivResult d = euclid_divide(at(k, col), at(i, col));
      apply(down, -d.q);
      if (at(k, col).is_zero()) break;
      d = euclid_divide(at(i, col), at(k, col));
      apply(up, -d.q);
    }
  }

  // With entry (i, col) a unit g and (k, col) zero, turn g into 1.
  void unit_to_one(int col, int i, Root up, Root down) {
    RingElem g = at(i, col);
    if (g.is_one()) return;
    RingElem one = RingElem::one(ring_);
    apply(down, g.inv());
    apply(up, one - g);
    apply(down, -one);
  }

  const SpMatrix& matrix() const { return m_; }

  /// M = E_1^-1 ... E_k^-1.
  std::vector<Letter> inverse_word() const {
    std::vector<Letter> w;
    for (const auto& l : ops_) w.push_back({l.root, -l.value});
    return w;
  }

 private:
  SpMatrix m_;
  RingId ring_;
  std::vector<Letter> ops_;
};

}  // namespace detail

inline std::vector<std::pair<SpMatrix, SpMatrix>> UnipotentWord::blocks(const RingId& ring) const {
  std::vector<std::pair<SpMatrix, SpMatrix>> out;
  for (const auto& [pos, neg] : detail::sign_blocks(letters)) out.emplace_back(evaluate(pos, ring), evaluate(neg, ring));
  return out;
}

/// A word of root elements with product M. Tries M = u+ u- first, then
/// symplectic Euclidean elimination on the first column and the embedded SL2
/// on coordinates (2, 4).
inline UnipotentWord unipotent_factor(const SpMatrix& m) {
  const RingId& R = m.ring();
  if (!is_symplectic(m)) fail(errc::not_symplectic, m.to_string());
  UnipotentWord out;
  if (m.is_identity()) return out;

  if (auto w = detail::try_upper_lower(m)) {
    out.letters = *w;
  } else {
    if (!supports_euclid(R)) fail(errc::not_euclidean_here, R.to_string());
    detail::Eliminator e(m);
    // first column to e1; (v1, v3) via 2a+b, then (v2, v4) via b, then (v1, v2) via a
    e.euclid(0, 0, 2, Root::a2b, Root::na2b);
    e.euclid(0, 1, 3, Root::b, Root::nb);
    e.euclid(0, 0, 1, Root::a, Root::na);
    e.unit_to_one(0, 0, Root::a2b, Root::na2b);
    // third column to e3; row 3 is now e3 by symplecticity
    e.apply(Root::ab, -e.at(1, 2));
    e.apply(Root::a, e.at(3, 2));
    e.apply(Root::a2b, -e.at(0, 2));
    // SL2 block on coordinates (2, 4)
    e.euclid(1, 1, 3, Root::b, Root::nb);
    e.unit_to_one(1, 1, Root::b, Root::nb);
    e.apply(Root::b, -e.at(1, 3));
    if (!e.matrix().is_identity()) fail(errc::not_symplectic, "elimination did not reach the identity");
    out.letters = detail::merge_letters(e.inverse_word());
  }
  out.J = static_cast<int>(detail::sign_blocks(out.letters).size());
  if (!(evaluate(out.letters, R) == m)) fail(errc::not_symplectic, "unipotent word does not reproduce its input");
  return out;
}

}  // namespace sp4bg
