#pragma once

// Normal generation of Sp4(R): the local obstruction Pi(S), the abelianization
// to F2^r, the classifier, and assembly of the Delta_k bounds.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4bg/finite.hpp"
#include "sp4bg/ideal.hpp"
#include "sp4bg/unipotent.hpp"

namespace sp4bg {

/// Number of primes P over 2 with R/P = F2.
inline int r_of_ring(const RingId& R) {
  switch (R.kind()) {
    case RingKind::integers:
    case RingKind::localized:
      return 1;
    case RingKind::prime_field:
      return R.param() == 2 ? 1 : 0;
    case RingKind::quadratic:
      // D = 5 mod 8: 2 inert with residue F4; D = 1 mod 8: 2 splits into two F2 primes
      return detail::mod_floor(R.param(), 8) == 1 ? 2 : 0;
    case RingKind::cubic:
    case RingKind::gf4:
    case RingKind::gf8:
      return 0;
  }
  fail(errc::unsupported_ring, R.to_string());
}

struct PiResult {
  bool empty = false;
  /// The non-unit ideal sum, or the central elements over a field.
  std::string witness;
};

/// Pi(S) is empty iff the sum over A in S of I(A - I) I(A + I) is R.
inline PiResult pi_is_empty(const RingId& R, const std::vector<SpMatrix>& S) {
  PiResult res;
  if (R.is_field()) {
    // the only maximal ideal is 0; A is central iff A = +-I
    SpMatrix id = SpMatrix::identity(R);
    for (const auto& A : S)
      if (!(A == id) && !(A == -id)) res.empty = true;
    if (!res.empty) res.witness = "every element of S is +-I";
    return res;
  }
  std::vector<std::vector<std::vector<RingElem>>> terms;
  SpMatrix id = SpMatrix::identity(R);
  for (const auto& A : S) {
    SpMatrix minus = A - id, plus = A + id;
    std::vector<RingElem> gm, gp;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        gm.push_back(minus(i, j));
        gp.push_back(plus(i, j));
      }
    terms.push_back({gm, gp});
  }
  IdealCheck chk = ideal_sum_product_is_unit(R, terms);
  res.empty = chk.unit;
  if (!chk.unit) res.witness = "sum of I(A-I)I(A+I) is " + chk.ideal.to_string() + ", not R";
  return res;
}

using AbelianImage = std::vector<int>;

namespace detail {

inline AbelianImage letter_image(const RingElem& x, int r) {
  if (r == 1) return {static_cast<int>(residue_index(x))};
  // split quadratic order: P1 = (2, w), P2 = (2, w - 1)
  int a = mpz_odd_p(x.coord(0).get_mpz_t()) ? 1 : 0;
  int b = mpz_odd_p(x.coord(1).get_mpz_t()) ? 1 : 0;
  return {a, a ^ b};
}

}  // namespace detail

/// Image of M in F2^r under e_phi(x) -> (x mod P_1, ..., x mod P_r), computed
/// from a root-element factorization.
inline AbelianImage abelianization(const SpMatrix& M) {
  const int r = r_of_ring(M.ring());
  AbelianImage img(static_cast<std::size_t>(r), 0);
  if (r == 0) return img;
  UnipotentWord w = unipotent_factor(M);
  for (const auto& l : w.letters) {
    AbelianImage li = detail::letter_image(l.value, r);
    for (int i = 0; i < r; ++i) img[i] ^= li[i];
  }
  return img;
}

/// Rank over F2 of a set of vectors.
inline int f2_rank(std::vector<AbelianImage> rows) {
  int rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = static_cast<std::size_t>(rank);
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && rows[i][c])
        for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= rows[rank][j];
    ++rank;
  }
  return rank;
}

struct ClassifyResult {
  bool normally_generates = false;
  PiResult pi;
  std::vector<AbelianImage> images;
  int rank = 0;
  int r = 0;
  std::string reason;
};

inline ClassifyResult classify_normal_gen(const RingId& R, const std::vector<SpMatrix>& S) {
  ClassifyResult res;
  res.r = r_of_ring(R);
  res.pi = pi_is_empty(R, S);
  for (const auto& A : S) res.images.push_back(abelianization(A));
  res.rank = res.r == 0 ? 0 : f2_rank(res.images);
  if (!res.pi.empty)
    res.reason = "Pi(S) is not empty: " + res.pi.witness;
  else if (res.rank < res.r)
    res.reason = "abelian images span a rank " + std::to_string(res.rank) + " subspace of F2^" + std::to_string(res.r);
  else
    res.normally_generates = true;
  if (res.normally_generates) res.reason = "Pi(S) is empty and the abelian images span F2^" + std::to_string(res.r);
  return res;
}

/// Ground truth over F_q: the normal closure of S is the whole table.
inline bool normally_generates_by_closure(const GroupTable& g, const ClassSet& cs, const std::vector<SpMatrix>& S) {
  std::vector<ElemId> ids;
  for (const auto& A : S) ids.push_back(g.from_matrix(A));
  if (ids.empty()) return false;
  return word_norm_profile(g, cs, ids).generating;
}

struct QuotientTerm {
  std::string quotient;
  long value;
  std::string provenance;  ///< "computed" or "quoted"
};

struct LowerBoundReport {
  std::vector<mpz_class> r_values;
  std::vector<SpMatrix> S;
  std::vector<QuotientTerm> terms;
  long certified_lower = 0;
  long target = 0;  ///< 4k + r(R)
  ClassifyResult classification;
};

/// Tables reused across lower-bound runs.
struct QuotientTables {
  std::map<int, std::pair<GroupTable, ClassSet>> tables;

  const std::pair<GroupTable, ClassSet>& get(int q) {
    auto it = tables.find(q);
    if (it == tables.end()) {
      GroupTable g = GroupTable::enumerate(q);
      ClassSet cs = compute_classes(g);
      it = tables.emplace(q, std::make_pair(std::move(g), std::move(cs))).first;
    }
    return it->second;
  }
};

/// S = {e_b(r_1), ..., e_b(r_k)} with r_1 the product of the aux primes and
/// r_u = 2 times the product of the aux primes other than v_u. Each generator is
/// nontrivial in exactly one of Sp4(F2), Sp4(F_v), so norms add over the
/// quotients.
inline LowerBoundReport delta_lower_certify(const RingId& R, int k, const std::vector<long>& aux,
                                            QuotientTables& cache) {
  if (R.kind() != RingKind::integers) fail(errc::unsupported_ring, "lower-bound construction runs over Z");
  if (k < 1) fail(errc::invalid_argument, "k must be positive");
  if (k > 12) fail(errc::too_large, "k = " + std::to_string(k));
  if (static_cast<int>(aux.size()) != k - 1) fail(errc::invalid_argument, "need k - 1 auxiliary primes");
  for (std::size_t i = 0; i < aux.size(); ++i) {
    if (aux[i] == 2 || !detail::is_prime(aux[i])) fail(errc::invalid_argument, "aux primes must be odd primes");
    for (std::size_t j = 0; j < i; ++j)
      if (aux[i] == aux[j]) fail(errc::invalid_argument, "aux primes must be distinct");
  }

  LowerBoundReport rep;
  mpz_class prod = 1;
  for (long v : aux) prod *= v;
  rep.r_values.push_back(prod);
  for (long v : aux) rep.r_values.push_back(2 * (prod / v));
  for (const auto& r : rep.r_values) rep.S.push_back(root_element(Root::b, RingElem::from_int(R, r)));
  rep.classification = classify_normal_gen(R, rep.S);
  if (!rep.classification.normally_generates)
    fail(errc::invalid_argument, "constructed set does not normally generate: " + rep.classification.reason);

  std::vector<long> moduli{2};
  moduli.insert(moduli.end(), aux.begin(), aux.end());
  for (std::size_t qi = 0; qi < moduli.size(); ++qi) {
    const long v = moduli[qi];
    // generator u is nontrivial mod v exactly when u == qi
    for (std::size_t u = 0; u < rep.r_values.size(); ++u) {
      bool trivial = mpz_divisible_ui_p(rep.r_values[u].get_mpz_t(), static_cast<unsigned long>(v)) != 0;
      if (trivial == (u == qi)) fail(errc::invalid_argument, "generators do not separate the quotients");
    }
    std::string name = "Sp4(F" + std::to_string(v) + ")";
    if (v == 2 || v == 3) {
      const auto& [g, cs] = cache.get(static_cast<int>(v));
      RingId F = g.field().ring();
      mpz_class rv = rep.r_values[qi] % v;
      SpMatrix gen = root_element(Root::b, RingElem::from_int(F, rv));
      NormBall nb = word_norm_profile(g, cs, {g.from_matrix(gen)});
      if (!nb.diameter) fail(errc::invalid_argument, "reduced generator does not normally generate " + name);
      rep.terms.push_back({name, *nb.diameter, "computed"});
    } else {
      rep.terms.push_back({name, 4, "quoted"});
    }
  }
  for (const auto& t : rep.terms) rep.certified_lower += t.value;
  rep.target = 4L * k + r_of_ring(R);
  return rep;
}

struct BoundReport {
  RingId ring;
  long k = 0;
  long L = 0;
  long K = 0;
  std::optional<long> delta_infty_quotient;
  std::optional<mpz_class> upper;
  long lower = 0;  ///< 4k + r(R), meaningful for k >= r(R)
  std::map<std::string, std::string> provenance;
  std::vector<std::string> notes;
};

inline constexpr long default_L = 320;
inline constexpr long alternate_L = 384;
inline constexpr long K_infinitely_many_units = 46;
inline constexpr long K_pid = 646;

/// 46 when R has infinitely many units, 646 otherwise.
inline long default_K(const RingId& R) {
  switch (R.kind()) {
    case RingKind::localized:
    case RingKind::cubic:
      return K_infinitely_many_units;
    case RingKind::quadratic:
      return R.param() > 0 ? K_infinitely_many_units : K_pid;
    default:
      return K_pid;
  }
}

inline std::optional<long> delta_infty_of_residue(const RingId& R) {
  if (!R.has_residue_mod2()) return std::nullopt;
  switch (R.residue_ring().kind()) {
    case RingKind::prime_field: return 5;
    case RingKind::gf4: return 4;
    default: return std::nullopt;
  }
}

/// upper = L K k + Delta_infty(Sp4(R/2R)).
inline BoundReport delta_upper_report(const RingId& R, long k, long L, long K) {
  BoundReport b;
  b.ring = R;
  b.k = k;
  b.L = L;
  b.K = K;
  b.delta_infty_quotient = delta_infty_of_residue(R);
  if (b.delta_infty_quotient) b.upper = mpz_class(L) * K * k + *b.delta_infty_quotient;
  b.lower = 4 * k + r_of_ring(R);
  b.provenance["L"] = L == default_L ? "quoted: centralization constant L(C2,R) = 320"
                                     : (L == alternate_L ? "quoted: 384 profile, 248064 = 384 * 646" : "user supplied");
  b.provenance["K"] = K == K_infinitely_many_units ? "quoted: K(C2,2R) <= 46 for infinitely many units"
                      : K == K_pid                 ? "quoted: K(C2,2R) <= 646 for principal ideal domains"
                                                   : "user supplied";
  b.provenance["delta_infty_quotient"] =
      b.delta_infty_quotient ? "quoted: Delta_infty(Sp4(K)) <= " + std::to_string(*b.delta_infty_quotient) +
                                   " for K = " + R.residue_ring().to_string()
                             : "unknown for this residue ring";
  b.provenance["lower"] = "quoted: Delta_k >= 4k + r(R) for k >= r(R)";
  b.notes.push_back("248064 = 384 * 646 exactly; 320 * 646 = 206720");
  b.notes.push_back("quoted 17644 differs from 384 * 46 = 17664 (and 320 * 46 = 14720); likely a typo for 17664");
  if (R.kind() == RingKind::quadratic)
    b.notes.push_back("class number 1 of " + R.to_string() + " is assumed, not checked");
  return b;
}

}  // namespace sp4bg
