#pragma once

// Fully enumerated Sp4(F_q), q in {2, 3, 4}, and S6 as a permutation group,
// with conjugacy classes and conjugation-invariant word norms.
//
// Word norms are computed on classes: the ball B(k) is a union of classes, and
// a class D lies in B(k) iff d c lies in B(k-1) for its representative d and
// some c in the generating classes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sp4bg/sp4.hpp"

namespace sp4bg {

using ElemId = std::uint32_t;

/// Addition and multiplication tables of F2, F3, F4 on field codes (F4 as bit
/// patterns of polynomials in t).
class SmallField {
 public:
  static const SmallField& get(int q) {
    static const std::array<SmallField, 3> fields = {SmallField(2), SmallField(3), SmallField(4)};
    if (q < 2 || q > 4) fail(errc::unsupported_field, "q = " + std::to_string(q));
    return fields[q - 2];
  }

  int q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }

  RingId ring() const { return q_ == 4 ? RingId::gf4() : RingId::prime_field(q_); }

 private:
  explicit SmallField(int q) : q_(q) {
    RingId R = ring();
    for (int a = 0; a < q; ++a) {
      RingElem x = RingElem::field(R, a);
      neg_[a] = static_cast<std::uint8_t>((-x).field_code());
      for (int b = 0; b < q; ++b) {
        RingElem y = RingElem::field(R, b);
        add_[a][b] = static_cast<std::uint8_t>((x + y).field_code());
        mul_[a][b] = static_cast<std::uint8_t>((x * y).field_code());
      }
    }
  }

  int q_;
  std::uint8_t add_[4][4]{}, mul_[4][4]{}, neg_[4]{};
};

using Mat4 = std::array<std::uint8_t, 16>;

inline std::uint32_t encode(const Mat4& m) {
  std::uint32_t c = 0;
  for (int i = 0; i < 16; ++i) c |= static_cast<std::uint32_t>(m[i]) << (2 * i);
  return c;
}

inline Mat4 decode(std::uint32_t c) {
  Mat4 m;
  for (int i = 0; i < 16; ++i) m[i] = static_cast<std::uint8_t>((c >> (2 * i)) & 3u);
  return m;
}

class GroupTable {
 public:
  /// q^4 (q^2 - 1)(q^4 - 1).
  static std::uint64_t formula_order(std::uint64_t q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }

  static GroupTable enumerate(int q) {
    if (q < 2 || q > 4) fail(errc::unsupported_field, "Sp4(F_q) tables exist for q in {2, 3, 4}");
    GroupTable g(q);
    const SmallField& F = g.field();
    std::vector<Mat4> gens;
    for (Root r : all_roots)
      for (int c : q == 4 ? std::vector<int>{1, 2} : std::vector<int>{1})
        gens.push_back(g.to_mat(root_element(r, RingElem::field(F.ring(), c))));

    Mat4 id{};
    for (int i = 0; i < 4; ++i) id[i * 5] = 1;
    std::vector<std::uint32_t> order{encode(id)};
    std::unordered_set<std::uint32_t> seen{encode(id)};
    seen.reserve(static_cast<std::size_t>(formula_order(q)) * 2);
    for (std::size_t i = 0; i < order.size(); ++i) {
      Mat4 x = decode(order[i]);
      for (const auto& s : gens) {
        std::uint32_t c = encode(g.mul_mat(x, s));
        if (seen.insert(c).second) order.push_back(c);
      }
    }
    std::sort(order.begin(), order.end());
    g.codes_ = std::move(order);
    g.mats_.reserve(g.codes_.size());
    for (auto c : g.codes_) g.mats_.push_back(decode(c));
    g.inv_.resize(g.codes_.size());
    for (ElemId i = 0; i < g.codes_.size(); ++i) g.inv_[i] = g.index_of(encode(g.inv_mat(g.mats_[i])));
    g.identity_ = g.index_of(encode(id));
    for (const auto& s : gens) g.gens_.push_back(g.index_of(encode(s)));
    return g;
  }

  int q() const { return q_; }
  std::size_t order() const { return codes_.size(); }
  ElemId identity() const { return identity_; }
  const std::vector<ElemId>& generators() const { return gens_; }
  const SmallField& field() const { return SmallField::get(q_); }
  const Mat4& mat(ElemId i) const { return mats_[i]; }

  ElemId mul(ElemId a, ElemId b) const { return index_of(encode(mul_mat(mats_[a], mats_[b]))); }
  ElemId inv(ElemId a) const { return inv_[a]; }

  ElemId index_of(std::uint32_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) fail(errc::not_symplectic, "matrix is not in the enumerated group");
    return static_cast<ElemId>(it - codes_.begin());
  }

  Mat4 to_mat(const SpMatrix& m) const {
    if (!(m.ring() == field().ring())) fail(errc::mixed_rings, m.ring().to_string() + " vs " + field().ring().to_string());
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r[i * 4 + j] = static_cast<std::uint8_t>(m(i, j).field_code());
    return r;
  }

  ElemId from_matrix(const SpMatrix& m) const { return index_of(encode(to_mat(m))); }

  SpMatrix to_matrix(ElemId i) const {
    SpMatrix m(field().ring());
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.set(r, c, RingElem::field(field().ring(), mats_[i][r * 4 + c]));
    return m;
  }

  Mat4 mul_mat(const Mat4& a, const Mat4& b) const {
    const SmallField& F = field();
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::uint8_t acc = 0;
        for (int k = 0; k < 4; ++k) acc = F.add(acc, F.mul(a[i * 4 + k], b[k * 4 + j]));
        r[i * 4 + j] = acc;
      }
    return r;
  }

 private:
  explicit GroupTable(int q) : q_(q) {}

  // [[A,B],[C,D]]^-1 = [[D^T,-B^T],[-C^T,A^T]]
  Mat4 inv_mat(const Mat4& m) const {
    const SmallField& F = field();
    Mat4 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r[i * 4 + j] = m[(j + 2) * 4 + i + 2];
        r[i * 4 + j + 2] = F.neg(m[j * 4 + i + 2]);
        r[(i + 2) * 4 + j] = F.neg(m[(j + 2) * 4 + i]);
        r[(i + 2) * 4 + j + 2] = m[j * 4 + i];
      }
    return r;
  }

  int q_;
  std::vector<std::uint32_t> codes_;
  std::vector<Mat4> mats_;
  std::vector<ElemId> inv_;
  std::vector<ElemId> gens_;
  ElemId identity_ = 0;
};

using Perm6 = std::array<std::uint8_t, 6>;

/// S6 on points 0..5 with (p q)(i) = p(q(i)).
class PermGroup {
 public:
  static const PermGroup& s6() {
    static const PermGroup g;
    return g;
  }

  std::size_t order() const { return perms_.size(); }
  ElemId identity() const { return 0; }
  ElemId mul(ElemId a, ElemId b) const { return table_[a * perms_.size() + b]; }
  ElemId inv(ElemId a) const { return inv_[a]; }
  const std::vector<ElemId>& generators() const { return gens_; }
  const Perm6& perm(ElemId i) const { return perms_[i]; }

  ElemId index_of(const Perm6& p) const {
    auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
    if (it == perms_.end() || *it != p) fail(errc::invalid_argument, "not a permutation of 0..5");
    return static_cast<ElemId>(it - perms_.begin());
  }

 private:
  PermGroup() {
    Perm6 p;
    std::iota(p.begin(), p.end(), 0);
    do perms_.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms_.size();
    table_.resize(n * n);
    inv_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Perm6 c;
        for (int i = 0; i < 6; ++i) c[i] = perms_[a][perms_[b][i]];
        table_[a * n + b] = static_cast<std::uint16_t>(index_of(c));
        if (table_[a * n + b] == 0) inv_[a] = static_cast<ElemId>(b);
      }
    gens_ = {index_of({1, 0, 2, 3, 4, 5}), index_of({1, 2, 3, 4, 5, 0})};
  }

  std::vector<Perm6> perms_;
  std::vector<std::uint16_t> table_;
  std::vector<ElemId> inv_;
  std::vector<ElemId> gens_;
};

/// Number of cycles of sigma on 6 points, fixed points included.
inline int orbit_count(const Perm6& sigma) {
  std::array<bool, 6> seen{};
  int orbits = 0;
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    ++orbits;
    for (int j = i; !seen[j]; j = sigma[j]) seen[j] = true;
  }
  return orbits;
}

/// A product of k transpositions has at least 6 - k orbits, so false rules
/// sigma out as such a product.
inline bool s6_orbit_lower_bound(const Perm6& sigma, int k) { return orbit_count(sigma) >= 6 - k; }

struct ClassSet {
  std::vector<std::uint32_t> class_of;
  std::vector<ElemId> reps;
  std::vector<std::size_t> sizes;

  std::size_t count() const { return reps.size(); }
};

/// Conjugacy classes as orbits under conjugation by the group generators.
template <class G>
ClassSet compute_classes(const G& g) {
  constexpr std::uint32_t unset = UINT32_MAX;
  ClassSet cs;
  cs.class_of.assign(g.order(), unset);
  std::vector<ElemId> conj, conj_inv;
  for (ElemId s : g.generators()) {
    conj.push_back(s);
    conj_inv.push_back(g.inv(s));
  }
  std::vector<ElemId> stack;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (cs.class_of[x] != unset) continue;
    auto id = static_cast<std::uint32_t>(cs.reps.size());
    cs.reps.push_back(x);
    std::size_t size = 0;
    cs.class_of[x] = id;
    stack.push_back(x);
    while (!stack.empty()) {
      ElemId y = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t k = 0; k < conj.size(); ++k) {
        ElemId z = g.mul(g.mul(conj[k], y), conj_inv[k]);
        if (cs.class_of[z] == unset) {
          cs.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    cs.sizes.push_back(size);
  }
  return cs;
}

struct NormBall {
  /// Norm of each class, -1 when unreachable.
  std::vector<int> class_norm;
  /// Number of elements of norm exactly r.
  std::vector<std::size_t> radius_counts;
  bool generating = false;
  /// Largest norm, when the ball reaches the whole group.
  std::optional<int> diameter;
};

namespace detail {

template <class G>
std::vector<ElemId> class_closure(const G& g, const ClassSet& cs, const std::vector<ElemId>& s) {
  std::vector<bool> take(cs.count(), false);
  for (ElemId x : s) {
    take[cs.class_of[x]] = true;
    take[cs.class_of[g.inv(x)]] = true;
  }
  take[cs.class_of[g.identity()]] = false;
  std::vector<ElemId> out;
  for (ElemId x = 0; x < g.order(); ++x)
    if (take[cs.class_of[x]]) out.push_back(x);
  return out;
}

}  // namespace detail

/// Balls of the conjugation-invariant word norm for the class closure of
/// S and S^-1, grown until stable.
template <class G>
NormBall word_norm_profile(const G& g, const ClassSet& cs, const std::vector<ElemId>& s,
                           std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
  NormBall nb;
  nb.class_norm.assign(cs.count(), -1);
  nb.class_norm[cs.class_of[g.identity()]] = 0;
  nb.radius_counts.push_back(1);
  std::vector<ElemId> closure = detail::class_closure(g, cs, s);
  for (int k = 1;; ++k) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) fail(errc::too_large, "time budget exhausted");
    std::vector<std::uint32_t> added;
    for (std::uint32_t d = 0; d < cs.count(); ++d) {
      if (nb.class_norm[d] != -1) continue;
      ElemId rep = cs.reps[d];
      for (ElemId c : closure)
        if (nb.class_norm[cs.class_of[g.mul(rep, c)]] == k - 1) {
          added.push_back(d);
          break;
        }
    }
    if (added.empty()) break;
    std::size_t count = 0;
    for (auto d : added) {
      nb.class_norm[d] = k;
      count += cs.sizes[d];
    }
    nb.radius_counts.push_back(count);
  }
  nb.generating = std::none_of(nb.class_norm.begin(), nb.class_norm.end(), [](int n) { return n < 0; });
  if (nb.generating) nb.diameter = static_cast<int>(nb.radius_counts.size()) - 1;
  return nb;
}

/// Norm of a single element for the given ball.
inline int element_norm(const NormBall& nb, const ClassSet& cs, ElemId x) { return nb.class_norm[cs.class_of[x]]; }

/// The normal closure of g as an element bitmap.
template <class G>
std::vector<bool> normal_closure(const G& grp, const ClassSet& cs, const std::vector<ElemId>& gens) {
  NormBall nb = word_norm_profile(grp, cs, gens);
  std::vector<bool> in(grp.order());
  for (ElemId x = 0; x < grp.order(); ++x) in[x] = nb.class_norm[cs.class_of[x]] >= 0;
  return in;
}

struct ClassCovering {
  std::uint32_t class_id;
  ElemId rep;
  std::size_t size;
  std::optional<int> diameter;  ///< nullopt when the class does not normally generate
};

struct CoveringResult {
  std::optional<int> cn;
  std::vector<ClassCovering> classes;
};

/// Max over normally generating classes C of the diameter of G for the norm of C.
template <class G>
CoveringResult covering_number(const G& g, const ClassSet& cs,
                               std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt) {
  CoveringResult res;
  const auto id_class = cs.class_of[g.identity()];
  for (std::uint32_t c = 0; c < cs.count(); ++c) {
    if (c == id_class) continue;
    NormBall nb = word_norm_profile(g, cs, {cs.reps[c]}, deadline);
    res.classes.push_back({c, cs.reps[c], cs.sizes[c], nb.diameter});
    if (nb.diameter) res.cn = std::max(res.cn.value_or(0), *nb.diameter);
  }
  return res;
}

}  // namespace sp4bg
