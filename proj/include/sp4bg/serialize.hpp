#pragma once

// JSON forms: elements as coordinate arrays, matrices as {"ring", "rows"},
// certificates and reports as objects.

#include <json.hpp>

#include "sp4bg/congruence.hpp"
#include "sp4bg/normalgen.hpp"

namespace sp4bg::json {

using nlohmann::json;

inline json from_mpz(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline mpz_class to_mpz(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class x;
    if (x.set_str(j.get<std::string>(), 10) != 0) fail(errc::parse_error, "bad integer " + j.dump());
    return x;
  }
  fail(errc::parse_error, "expected an integer, got " + j.dump());
}

inline json from_elem(const RingElem& x) {
  json a = json::array();
  for (const auto& c : x.coords()) a.push_back(from_mpz(c));
  return a;
}

/// Accepts a coordinate array, or a bare integer for the image of Z.
inline RingElem to_elem(const RingId& R, const json& j) {
  if (j.is_number_integer() || j.is_string()) return RingElem::from_int(R, to_mpz(j));
  if (!j.is_array()) fail(errc::parse_error, "expected a coordinate array, got " + j.dump());
  std::vector<mpz_class> c;
  for (const auto& x : j) c.push_back(to_mpz(x));
  return RingElem::from_coords(R, c);
}

inline json from_rows(const SpMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(from_elem(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

inline json from_matrix(const SpMatrix& m) { return {{"ring", m.ring().to_string()}, {"rows", from_rows(m)}}; }

inline SpMatrix to_matrix(const RingId& R, const json& rows) {
  if (!rows.is_array() || rows.size() != 4) fail(errc::parse_error, "a matrix has 4 rows");
  SpMatrix m(R);
  for (int i = 0; i < 4; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 4) fail(errc::parse_error, "a matrix row has 4 entries");
    for (int k = 0; k < 4; ++k) m.set(i, k, to_elem(R, rows[i][k]));
  }
  return m;
}

/// {"ring": ..., "rows": ...}; the ring may instead come from the caller.
inline SpMatrix to_matrix(const json& j, const std::optional<RingId>& fallback = std::nullopt) {
  RingId R;
  if (j.is_object() && j.contains("ring"))
    R = RingId::parse(j.at("ring").get<std::string>());
  else if (fallback)
    R = *fallback;
  else
    fail(errc::parse_error, "matrix without ring");
  return to_matrix(R, j.is_object() ? j.at("rows") : j);
}

inline json from_borel(const BorelCoords& c) {
  return {{"t_2a+b", from_elem(c.t1)}, {"t_a+b", from_elem(c.t2)}, {"t_b", from_elem(c.t3)},
          {"t_a", from_elem(c.t4)},    {"s_a", from_elem(c.s_a)},  {"s_b", from_elem(c.s_b)}};
}

inline BorelCoords to_borel(const RingId& R, const json& j) {
  return {to_elem(R, j.at("t_2a+b")), to_elem(R, j.at("t_a+b")), to_elem(R, j.at("t_b")),
          to_elem(R, j.at("t_a")),    to_elem(R, j.at("s_a")),   to_elem(R, j.at("s_b"))};
}

inline json from_bruhat(const BruhatForm& f) {
  return {{"ring", f.b1.ring().to_string()}, {"b1", from_borel(f.b1)}, {"w", f.w}, {"b2", from_borel(f.b2)}};
}

inline json from_word(const UnipotentWord& w) {
  json letters = json::array();
  for (const auto& l : w.letters) letters.push_back({{"root", root_name(l.root)}, {"value", from_elem(l.value)}});
  return {{"letters", letters}, {"J", w.J}};
}

inline json from_certificate(const QCertificate& c) {
  json factors = json::array();
  for (const auto& f : c.factors)
    factors.push_back({{"conjugator", from_matrix(f.conjugator)},
                       {"root", root_name(f.root)},
                       {"value", from_elem(f.value)},
                       {"origin", f.origin}});
  return {{"ring", c.target.ring().to_string()},
          {"target", from_matrix(c.target)},
          {"factors", factors},
          {"length", c.length()},
          {"J", c.J},
          {"bound_8J_plus_6", c.bound()},
          {"verified", c.verified},
          {"metadata",
           {{"emission_side", "left"},
            {"residual_conjugator", from_matrix(c.residual_conjugator)},
            {"note", "Borel part conjugated away before normalization; word length is conjugation invariant"}}}};
}

/// Parses and re-verifies a certificate.
inline QCertificate to_certificate(const json& j) {
  RingId R = RingId::parse(j.at("ring").get<std::string>());
  QCertificate c;
  c.target = to_matrix(j.at("target"), R);
  c.J = j.value("J", 0);
  c.residual_conjugator = SpMatrix::identity(R);
  for (const auto& f : j.at("factors"))
    c.factors.push_back({to_matrix(f.at("conjugator"), R), parse_root(f.at("root").get<std::string>()),
                         to_elem(R, f.at("value")), f.value("origin", "")});
  c.verified = verify(c);
  return c;
}

inline json from_ball(const NormBall& nb) {
  json j = {{"radius_counts", nb.radius_counts}, {"generating", nb.generating}};
  j["diameter"] = nb.diameter ? json(*nb.diameter) : json(nullptr);
  return j;
}

inline json from_bounds(const BoundReport& b) {
  json j = {{"ring", b.ring.to_string()},
            {"k", b.k},
            {"L", b.L},
            {"K", b.K},
            {"lower", b.lower},
            {"constants_provenance", b.provenance},
            {"notes", b.notes}};
  j["delta_infty_quotient"] = b.delta_infty_quotient ? json(*b.delta_infty_quotient) : json(nullptr);
  j["upper"] = b.upper ? from_mpz(*b.upper) : json(nullptr);
  return j;
}

inline json from_lower(const LowerBoundReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"quotient", t.quotient}, {"value", t.value}, {"provenance", t.provenance}});
  json rs = json::array();
  for (const auto& x : r.r_values) rs.push_back(from_mpz(x));
  json S = json::array();
  for (const auto& r_u : r.r_values) S.push_back("e_b(" + r_u.get_str() + ")");
  return {{"r_values", rs},         {"S", S},
          {"terms", terms},         {"certified_lower", r.certified_lower},
          {"target_4k_plus_r", r.target}, {"normally_generates", r.classification.normally_generates}};
}

}  // namespace sp4bg::json
