#pragma once

// Factoring elements of the level-2 congruence subgroup N = ker(Sp4(R) -> Sp4(R/2R))
// into conjugates C e_phi(v) C^-1 with v in 2R.

#include <random>
#include <string>
#include <vector>

#include "sp4bg/pseudo_good.hpp"
#include "sp4bg/unipotent.hpp"

namespace sp4bg {

struct QFactor {
  SpMatrix conjugator;
  Root root;
  RingElem value;
  /// Where the factor was emitted: "direct", "cell k letter s", "normalize".
  std::string origin;

  SpMatrix evaluate() const { return conjugator * root_element(root, value) * conjugator.inverse(); }
};

struct QCertificate {
  SpMatrix target;
  std::vector<QFactor> factors;
  int J = 0;
  /// Borel part conjugated away before normalization (word length is conjugation invariant).
  SpMatrix residual_conjugator;
  bool verified = false;

  std::size_t length() const { return factors.size(); }
  long bound() const { return 8L * J + 6; }
};

inline SpMatrix evaluate(const std::vector<QFactor>& fs, const RingId& ring) {
  SpMatrix m = SpMatrix::identity(ring);
  for (const auto& f : fs) m *= f.evaluate();
  return m;
}

inline bool verify(const QCertificate& c) {
  for (const auto& f : c.factors)
    if (!in_two_r(f.value)) return false;
  return evaluate(c.factors, c.target.ring()) == c.target;
}

namespace detail {

inline void require_congruence_ring(const RingId& R) {
  if (R.two_is_unit()) fail(errc::two_is_unit, R.to_string());
  R.residue_ring();
}

// b1 w~ b2 with b1, b2 in B and w~ the lift of the reduced word w.
struct CellState {
  SpMatrix b1;
  WeylWord w;
  SpMatrix b2;
};

inline RingElem simple_coordinate(const SpMatrix& b, int gen) {
  BorelCoords c = borel_coords(b);
  return gen == 0 ? c.t4 : c.t3;
}

// state * w~_s, emitting at most one factor on the left.
inline void multiply_letter(CellState& st, char letter, const Transversal& X, std::vector<QFactor>& out,
                            const std::string& origin) {
  const RingId& R = st.b1.ring();
  const int gen = letter_gen(letter);
  const Root s = gen == 0 ? Root::a : Root::b;
  const SpMatrix ws = weyl_elem(s, RingElem::one(R));
  const SpMatrix ws_inv = ws.inverse();

  RingElem a = simple_coordinate(st.b2, gen);
  SpMatrix rest = root_element(s, -a) * st.b2;
  SpMatrix conj_rest = ws_inv * rest * ws;

  WeylWord ws_word = st.w + letter;
  if (weyl_length(ws_word) > weyl_length(st.w)) {
    SpMatrix wl = weyl_lift(st.w, R);
    st.b1 = st.b1 * wl * root_element(s, a) * wl.inverse();
    st.w = weyl_reduce(ws_word);
    st.b2 = conj_rest;
    return;
  }

  // w = w' s with l(w') = l(w) - 1
  WeylWord wp = weyl_reduce(ws_word);
  SpMatrix wpl = weyl_lift(wp, R);
  SignEntry e = sign_table(gen, s);  // w_s e_s(a) w_s^-1 = e_{-s}(sign a)
  RingElem a1 = e.sign > 0 ? a : -a;
  SpMatrix b3 = ws * ws * conj_rest;
  SpMatrix C = st.b1 * wpl;

  if (in_two_r(a1)) {
    if (!a1.is_zero()) out.push_back({C, negate(s), a1, origin});
    st.w = wp;
    st.b2 = b3;
    return;
  }
  // a1 = d - x^-1 with x in X a unit and d in 2R
  RingElem ra = reduce_mod2(a1);
  RingElem x = X.members().at(ra.inv().field_code());
  RingElem d = a1 + x.inv();
  if (!in_two_r(d)) fail(errc::not_pseudo_good, "transversal does not match residue of " + a1.to_string());
  if (!d.is_zero()) out.push_back({C, negate(s), d, origin});
  // e_{-s}(-x^-1) = e_s(-x) h_s(x) w_s e_s(-x)
  st.b1 = st.b1 * wpl * root_element(s, -x) * torus_elem(s, x) * wpl.inverse();
  st.b2 = root_element(s, -x) * b3;
}

inline CellState from_form(const BruhatForm& f) {
  return {evaluate(f.b1), weyl_reduce(f.w), evaluate(f.b2)};
}

inline BruhatForm to_form(const CellState& st) { return {borel_coords(st.b1), st.w, borel_coords(st.b2)}; }

}  // namespace detail

struct CellProduct {
  BruhatForm form;
  std::vector<QFactor> emitted;
};

/// x * w~2 rewritten letter by letter as (emitted product) * (b1 w~ b2), with at
/// most one emission per letter.
inline CellProduct cell_multiply(const BruhatForm& x, const WeylWord& w2, const Transversal& X) {
  detail::require_congruence_ring(x.b1.ring());
  detail::CellState st = detail::from_form(x);
  std::vector<QFactor> out;
  for (std::size_t i = 0; i < w2.size(); ++i)
    detail::multiply_letter(st, w2[i], X, out, std::string("letter ") + w2[i]);
  return {detail::to_form(st), out};
}

struct NormalizedBorel {
  BorelCoords coords;
  std::vector<QFactor> emitted;
};

/// b = (emitted product) * b' with every coordinate of b' in X.
inline NormalizedBorel borel_normalize(const BorelCoords& b, const Transversal& X) {
  const RingId& R = b.ring();
  detail::require_congruence_ring(R);
  SpMatrix prefix = SpMatrix::identity(R);
  std::vector<QFactor> out;
  auto shift = [&](Root r, const RingElem& t) {
    RingElem x = X.rep_of(t);
    RingElem d = t - x;
    if (!d.is_zero()) out.push_back({prefix, r, d, "normalize"});
    prefix = prefix * root_element(r, x);
    return x;
  };
  BorelCoords n = b;
  n.t1 = shift(Root::a2b, b.t1);
  n.t2 = shift(Root::ab, b.t2);
  n.t3 = shift(Root::b, b.t3);
  n.t4 = shift(Root::a, b.t4);
  // h_r(s) = e_r(s) e_-r(-s^-1) e_r(s) w_r(1)^-1 and -x^-1 is the Y-representative of -s^-1
  auto torus = [&](Root r, const RingElem& s) {
    RingElem x = X.rep_of(s);
    RingElem one = RingElem::one(R);
    auto step = [&](Root rr, const RingElem& t, const RingElem& rep) {
      RingElem d = t - rep;
      if (!d.is_zero()) out.push_back({prefix, rr, d, "normalize"});
      prefix = prefix * root_element(rr, rep);
    };
    step(r, s, x);
    step(negate(r), -s.inv(), -x.inv());
    step(r, s, x);
    prefix = prefix * weyl_elem(r, one).inverse();
    return x;
  };
  n.s_a = torus(Root::a, b.s_a);
  n.s_b = torus(Root::b, b.s_b);
  if (!(evaluate(out, R) * evaluate(n) == evaluate(b)))
    fail(errc::residual_not_identity, "borel_normalize lost the product identity");
  return {n, out};
}

struct CongruenceOptions {
  /// Use the root-element word itself when every value is in 2R and it is short enough.
  bool allow_direct = true;
};

inline QCertificate congruence_factor(const SpMatrix& m, const CongruenceOptions& opt = {}) {
  const RingId& R = m.ring();
  detail::require_congruence_ring(R);
  if (!is_symplectic(m)) fail(errc::not_symplectic, m.to_string());
  if (!reduce_matrix(m).is_identity()) fail(errc::not_in_congruence_subgroup, m.to_string());

  QCertificate cert;
  cert.target = m;
  cert.residual_conjugator = SpMatrix::identity(R);
  if (m.is_identity()) {
    cert.verified = true;
    return cert;
  }
  Transversal X = coset_reps(R);
  UnipotentWord uw = unipotent_factor(m);
  cert.J = uw.J;

  bool all_even = std::all_of(uw.letters.begin(), uw.letters.end(), [](const Letter& l) { return in_two_r(l.value); });
  if (opt.allow_direct && all_even && static_cast<long>(uw.letters.size()) <= cert.bound()) {
    for (const auto& l : uw.letters) cert.factors.push_back({SpMatrix::identity(R), l.root, l.value, "direct"});
  } else {
    // u+ u- = (u+ w0~)(w0~^-1 u- w0~ w0~^-2) w0~
    const SpMatrix w0 = weyl_lift(longest_word, R);
    const SpMatrix w0_inv = w0.inverse();
    const SpMatrix w0_inv2 = w0_inv * w0_inv;
    std::vector<SpMatrix> cells;
    for (const auto& [up, lo] : uw.blocks(R)) {
      cells.push_back(up);
      cells.push_back(w0_inv * lo * w0 * w0_inv2);
    }
    detail::CellState st{cells[0], longest_word, SpMatrix::identity(R)};
    std::vector<QFactor> emitted;
    for (std::size_t k = 1; k < cells.size(); ++k) {
      st.b2 = st.b2 * cells[k];
      for (char c : longest_word)
        detail::multiply_letter(st, c, X, emitted, "cell " + std::to_string(k + 1) + " letter " + c);
    }
    // b1 w~ b2 = b2^-1 (b2 b1 w~) b2; normalize b2 b1
    NormalizedBorel nb = borel_normalize(borel_coords(st.b2 * st.b1), X);
    SpMatrix residual = evaluate(nb.coords) * weyl_lift(st.w, R);
    if (!residual.is_identity())
      fail(errc::residual_not_identity, "normalized residual " + residual.to_string() + " is not I");
    SpMatrix b2_inv = st.b2.inverse();
    cert.residual_conjugator = b2_inv;
    cert.factors = std::move(emitted);
    for (auto& f : nb.emitted) {
      f.conjugator = b2_inv * f.conjugator;
      cert.factors.push_back(std::move(f));
    }
  }
  cert.verified = verify(cert);
  if (!cert.verified) fail(errc::residual_not_identity, "certificate product does not match the target");
  return cert;
}

struct BrCapNReport {
  long cases = 0;
  long reducing_to_identity = 0;
  long counterexamples = 0;
  bool exhaustive = false;
};

/// Checks that b w~ = I whenever b w~ is I mod 2R, for b in B with coordinates
/// in the transversal X.
inline BrCapNReport br_cap_N_is_trivial(const RingId& R, long samples, std::uint64_t seed = 1) {
  detail::require_congruence_ring(R);
  Transversal X = coset_reps(R);
  std::vector<RingElem> xs = X.members();
  std::vector<RingElem> units(xs.begin() + 1, xs.end());
  BrCapNReport rep;
  auto check = [&](const BorelCoords& c, std::string_view w) {
    SpMatrix bw = evaluate(c) * weyl_lift(w, R);
    ++rep.cases;
    if (reduce_matrix(bw).is_identity()) {
      ++rep.reducing_to_identity;
      if (!bw.is_identity()) ++rep.counterexamples;
    }
  };
  const std::size_t n = xs.size(), nu = units.size();
  const std::size_t total = n * n * n * n * nu * nu;
  if (samples <= 0 || static_cast<long>(total * 8) <= samples) {
    rep.exhaustive = true;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      auto take = [&](std::size_t base) {
        std::size_t v = c % base;
        c /= base;
        return v;
      };
      BorelCoords b{xs[take(n)], xs[take(n)], xs[take(n)], xs[take(n)], units[take(nu)], units[take(nu)]};
      for (auto w : weyl_reduced_words) check(b, w);
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<RingElem>& v) { return v[rng() % v.size()]; };
  for (long i = 0; i < samples; ++i) {
    BorelCoords b{pick(xs), pick(xs), pick(xs), pick(xs), pick(units), pick(units)};
    check(b, weyl_reduced_words[rng() % 8]);
  }
  return rep;
}

}  // namespace sp4bg
