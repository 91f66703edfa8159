#pragma once

// Borel coordinates and the Bruhat decomposition B w B over fields.

#include <optional>
#include <vector>

#include "sp4bg/weyl.hpp"

namespace sp4bg {

/// e_{2a+b}(t1) e_{a+b}(t2) e_b(t3) e_a(t4) h_a(s_a) h_b(s_b).
struct BorelCoords {
  RingElem t1, t2, t3, t4;
  RingElem s_a, s_b;

  static BorelCoords trivial(const RingId& ring) {
    RingElem z = RingElem::zero(ring), o = RingElem::one(ring);
    return {z, z, z, z, o, o};
  }

  const RingId& ring() const { return t1.ring(); }

  bool operator==(const BorelCoords&) const = default;
};

/// h_a(t) h_b(s) = diag(t, s/t, 1/t, t/s).
inline SpMatrix torus_matrix(const RingElem& sa, const RingElem& sb) {
  RingElem ia = sa.inv(), ib = sb.inv();
  return SpMatrix::diagonal({sa, sb * ia, ia, sa * ib});
}

inline SpMatrix unipotent_matrix(const BorelCoords& c) {
  return root_element(Root::a2b, c.t1) * root_element(Root::ab, c.t2) * root_element(Root::b, c.t3) *
         root_element(Root::a, c.t4);
}

inline SpMatrix evaluate(const BorelCoords& c) { return unipotent_matrix(c) * torus_matrix(c.s_a, c.s_b); }

namespace detail {

// Basis order (e1, e2, e4, e3) makes the Borel subgroup upper triangular.
inline constexpr std::array<int, 4> borel_basis = {0, 1, 3, 2};

}  // namespace detail

/// Upper triangular in the Borel basis, unit diagonal, symplectic.
inline bool is_borel(const SpMatrix& m) {
  using detail::borel_basis;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j)
      if (!m(borel_basis[i], borel_basis[j]).is_zero()) return false;
  for (int i = 0; i < 4; ++i)
    if (!m(i, i).is_unit()) return false;
  return is_symplectic(m);
}

inline BorelCoords borel_coords(const SpMatrix& m) {
  if (!is_borel(m)) fail(errc::not_in_borel, m.to_string());
  RingElem sa = m(0, 0);
  RingElem sb = m(1, 1) * sa;
  SpMatrix u = m * torus_matrix(sa, sb).inverse();
  RingElem t4 = u(0, 1), t2 = u(0, 3), t3 = u(1, 3);
  RingElem t1 = u(0, 2) + t2 * t4;
  BorelCoords c{t1, t2, t3, t4, sa, sb};
  if (!(evaluate(c) == m)) fail(errc::not_in_borel, "coordinates do not reproduce " + m.to_string());
  return c;
}

struct BruhatForm {
  BorelCoords b1;
  WeylWord w;
  BorelCoords b2;
};

inline SpMatrix evaluate(const BruhatForm& f) {
  return evaluate(f.b1) * weyl_lift(f.w, f.b1.ring()) * evaluate(f.b2);
}

namespace detail {

// Solves A x = rhs over a field (A is rows x cols); returns nullopt when inconsistent.
inline std::optional<std::vector<RingElem>> solve_linear(std::vector<std::vector<RingElem>> a,
                                                         std::vector<RingElem> rhs, const RingId& ring) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(rhs[p], rhs[r]);
    RingElem inv = a[r][c].inv();
    for (auto& x : a[r]) x *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RingElem f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<RingElem> x(cols, RingElem::zero(ring));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

}  // namespace detail

/// M = b1 w~ b2 with b1 in U_w (unique) and w~ the lift of the reduced word.
inline BruhatForm bruhat_decompose(const SpMatrix& m) {
  const RingId& F = m.ring();
  if (!F.is_field()) fail(errc::not_a_field, F.to_string());
  if (!is_symplectic(m)) fail(errc::not_symplectic, m.to_string());
  using detail::borel_basis;

  // Work in the Borel basis where B is upper triangular.
  std::array<std::array<RingElem, 4>, 4> x;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) x[i][j] = m(borel_basis[i], borel_basis[j]);

  // Pivot pattern: rows bottom-up, leftmost nonzero, cleared upwards by row operations.
  std::array<int, 4> piv{};
  {
    auto y = x;
    for (int r = 3; r >= 0; --r) {
      int p = 0;
      while (p < 4 && y[r][p].is_zero()) ++p;
      if (p == 4) fail(errc::not_symplectic, "singular matrix");
      piv[r] = p;
      RingElem inv = y[r][p].inv();
      for (int i = 0; i < r; ++i) {
        if (y[i][p].is_zero()) continue;
        RingElem f = y[i][p] * inv;
        for (int j = 0; j < 4; ++j) y[i][j] -= f * y[r][j];
      }
    }
  }

  // v in U_sigma with v x = sigma * upper: row r of v x vanishes left of piv[r];
  // v[r][i] may be nonzero only for i > r with piv[i] < piv[r].
  std::array<std::array<RingElem, 4>, 4> v;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[i][j] = i == j ? RingElem::one(F) : RingElem::zero(F);
  for (int r = 0; r < 4; ++r) {
    std::vector<int> vars;
    for (int i = r + 1; i < 4; ++i)
      if (piv[i] < piv[r]) vars.push_back(i);
    if (vars.empty()) continue;
    std::vector<std::vector<RingElem>> a;
    std::vector<RingElem> rhs;
    for (int j = 0; j < piv[r]; ++j) {
      std::vector<RingElem> row;
      for (int i : vars) row.push_back(x[i][j]);
      a.push_back(row);
      rhs.push_back(-x[r][j]);
    }
    auto sol = detail::solve_linear(a, rhs, F);
    if (!sol) fail(errc::not_symplectic, "inconsistent Bruhat system");
    for (std::size_t k = 0; k < vars.size(); ++k) v[r][vars[k]] = (*sol)[k];
  }

  SpMatrix vm(F);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) vm.set(borel_basis[i], borel_basis[j], v[i][j]);

  // Weyl element whose lift has the same monomial pattern.
  std::optional<WeylWord> w;
  for (auto word : weyl_reduced_words) {
    SpMatrix lift = weyl_lift(word, F);
    bool match = true;
    for (int r = 0; r < 4 && match; ++r)
      for (int c = 0; c < 4 && match; ++c)
        match = lift(borel_basis[r], borel_basis[c]).is_zero() == (c != piv[r]);
    if (match) {
      w = WeylWord(word);
      break;
    }
  }
  if (!w) fail(errc::not_symplectic, "pivot pattern is not a Weyl element");

  SpMatrix b2 = weyl_lift(*w, F).inverse() * vm * m;
  BruhatForm out{borel_coords(vm.inverse()), *w, borel_coords(b2)};
  if (!(evaluate(out) == m)) fail(errc::not_symplectic, "Bruhat decomposition failed to round-trip");
  return out;
}

}  // namespace sp4bg
