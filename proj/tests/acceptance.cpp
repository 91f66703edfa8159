// Acceptance criteria 1-10. One PASS/FAIL line per criterion.
//
//   acceptance [--strict] [--q4] [--q4-budget SECONDS]
//
// Exit status is 1 when a criterion fails that is not listed in known_deviations,
// or on any failure under --strict. --q4 (or SP4BG_ACCEPT_Q4=1) adds the
// cn(Sp4(F4)) recomputation, reported but never asserted.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "sp4bg/sp4bg.hpp"

using namespace sp4bg;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failed;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failed += " [failed: " + what + "]";
    }
  }
};

// Criteria that fail for a recorded mathematical reason; see the README.
const std::set<int> known_deviations = {9};

struct Table {
  GroupTable g;
  ClassSet cs;
};

Table make_table(int q) {
  GroupTable g = GroupTable::enumerate(q);
  ClassSet cs = compute_classes(g);
  return {std::move(g), std::move(cs)};
}

void c1(Outcome& o) {
  long checks = 0;
  for (const char* lit : {"Z", "Z[1/5]", "O(5)", "O(-3)", "F2", "F3", "F4"}) {
    CheckReport r = verify_relations(RingId::parse(lit), 500, 20240607);
    checks += r.checks;
    o.expect(r.ok(), std::string(lit) + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
  o.detail << checks << " relation checks over Z, Z[1/5], O(5), O(-3), F2, F3, F4";
}

void c2(Outcome& o) {
  auto all = weyl_enumerate();
  o.expect(all.size() == 8, "|W| = 8");
  o.expect(weyl_length(longest_word) == 4, "l(w0) = 4");
  o.expect(weyl_reduce("abab") == weyl_reduce(longest_word), "w0 = (w_a w_b)^2");
  BruhatOracleReport rep = bruhat_q2_oracle();
  std::size_t total = 0;
  for (const auto& [w, n] : rep.cell_sizes) total += n;
  o.expect(rep.elements == 720 && rep.round_trips, "720 round trips");
  o.expect(rep.matches_oracle, "Weyl parts match the double-coset partition");
  o.expect(total == 720, "cells sum to 720");
  o.detail << "|W| = " << all.size() << ", l(w0) = " << weyl_length(longest_word) << ", " << rep.elements
           << " elements, " << rep.cell_sizes.size() << " cells summing to " << total;
}

void c3(Outcome& o) {
  Rng rng(20240607);
  RingId R = RingId::integers();
  int verified = 0;
  std::size_t longest = 0;
  int maxJ = 0;
  long slack = LONG_MAX;
  for (int i = 0; i < 200; ++i) {
    SpMatrix m = random_congruence_element(R, rng, static_cast<int>(uniform(rng, 1, 6)), 10);
    QCertificate c = congruence_factor(m);
    bool ok = c.verified && evaluate(c.factors, R) == m && static_cast<long>(c.length()) <= c.bound();
    verified += ok;
    longest = std::max(longest, c.length());
    maxJ = std::max(maxJ, c.J);
    slack = std::min(slack, c.bound() - static_cast<long>(c.length()));
  }
  o.expect(verified == 200, "all 200 certificates verify within 8J+6");
  o.detail << verified << "/200 verified, longest " << longest << ", max J " << maxJ << ", min slack to 8J+6 " << slack;
}

void c4(Outcome& o) {
  BrCapNReport z = br_cap_N_is_trivial(RingId::integers(), 0);
  BrCapNReport q = br_cap_N_is_trivial(RingId::quadratic(5), 1000, 20240607);
  // random samples almost never reduce to I, so the full O(5) case space runs too
  BrCapNReport qa = br_cap_N_is_trivial(RingId::quadratic(5), 0);
  o.expect(z.exhaustive && z.cases == 128, "128 exhaustive cases over Z");
  o.expect(q.cases == 1000, "1000 O(5) samples");
  o.expect(qa.exhaustive && qa.cases == 4 * 4 * 4 * 4 * 3 * 3 * 8, "exhaustive O(5)");
  o.expect(z.counterexamples + q.counterexamples + qa.counterexamples == 0, "no nontrivial intersection");
  o.detail << "Z: " << z.cases << " cases, " << z.reducing_to_identity << " reduce to I; O(5): " << q.cases
           << " samples, " << q.reducing_to_identity << " reduce to I; O(5) exhaustive: " << qa.cases << " cases, "
           << qa.reducing_to_identity << " reduce to I; counterexamples "
           << z.counterexamples + q.counterexamples + qa.counterexamples;
}

void c5(Outcome& o) {
  const std::vector<std::string> expected = {"1^2*5=1^2+4",   "1^2*13=3^2+4",  "1^2*21=5^2-4",  "1^2*29=5^2+4",
                                             "1^2*53=7^2+4",  "5^2*61=39^2+4", "3^2*69=25^2-4", "1^2*77=9^2-4",
                                             "1^2*85=9^2+4",  "3^2*93=29^2-4"};
  std::vector<std::string> got;
  bool d37 = false;
  for (const auto& row : pseudo_good_table(100, 1000)) {
    if (row.D == 37) {
      d37 = row.search.verdict == Verdict::inconclusive && row.supplied && row.supplied->verdict == Verdict::no;
      continue;
    }
    o.expect(row.search.verdict == Verdict::yes, "D=" + std::to_string(row.D) + " yes");
    if (row.search.equation) got.push_back(row.search.equation->to_string(row.D));
  }
  o.expect(got == expected, "witness equations");
  o.expect(d37, "D=37 inconclusive by search, no with 6+sqrt37");
  o.detail << got.size() << " yes rows with matching witnesses, D=37 "
           << (d37 ? "inconclusive by search and no with 6+sqrt37" : "unexpected");
}

void c6(Outcome& o) {
  for (long p : {3, 5, 7, 11}) {
    CubicRow r = cubic_check(p);
    o.expect(r.ok(), "p=" + std::to_string(p));
  }
  o.detail << "p in {3, 5, 7, 11}: reduction, irreducibility, units, x^2(x+p) = 1, image != 1";
}

void c7(Outcome& o) {
  Table t2 = make_table(2);
  RingId F2 = t2.g.field().ring();
  NormBall b2 = word_norm_profile(t2.g, t2.cs, {t2.g.from_matrix(root_element(Root::b, RingElem::one(F2)))});
  o.expect(b2.diameter && *b2.diameter >= 5, "||Sp4(F2)|| >= 5");

  const PermGroup& s6 = PermGroup::s6();
  ClassSet s6cs = compute_classes(s6);
  NormBall tb = word_norm_profile(s6, s6cs, {s6.index_of({1, 0, 2, 3, 4, 5})});
  const Perm6 cycle = {1, 2, 3, 4, 5, 0};
  bool obstruction = !s6_orbit_lower_bound(cycle, 4);
  o.expect(obstruction, "6-cycle is not a product of 4 transpositions");
  o.expect(element_norm(tb, s6cs, s6.index_of(cycle)) == 5, "6-cycle has norm 5");
  o.expect(tb.radius_counts == b2.radius_counts, "S6 and Sp4(F2) profiles agree");

  Table t3 = make_table(3);
  RingId F3 = t3.g.field().ring();
  NormBall b3 = word_norm_profile(t3.g, t3.cs, {t3.g.from_matrix(root_element(Root::b, RingElem::one(F3)))});
  o.expect(b3.diameter && *b3.diameter >= 4, "||Sp4(F3)|| >= 4");

  CoveringResult cn = covering_number(s6, s6cs);
  o.expect(cn.cn && *cn.cn == 5, "cn(S6) = 5");
  o.detail << "||Sp4(F2)||_e_b(1) = " << (b2.diameter ? *b2.diameter : -1) << ", ||Sp4(F3)||_e_b(1) = "
           << (b3.diameter ? *b3.diameter : -1) << ", 6-cycle obstruction " << (obstruction ? "holds" : "missing")
           << ", cn(S6) = " << (cn.cn ? *cn.cn : -1);
}

void c7_q4(Outcome& o, double budget) {
  auto deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                         std::chrono::duration<double>(budget));
  Table t4 = make_table(4);
  try {
    CoveringResult r = covering_number(t4.g, t4.cs, deadline);
    int cn = r.cn ? *r.cn : -1;
    o.detail << "cn(Sp4(F4)) = " << cn << (cn == 4 ? " (matches 4)" : " (MISMATCH with the quoted 4)");
  } catch (const Error& e) {
    o.detail << "cn(Sp4(F4)) not finished: " << e.what();
  }
}

void c8(Outcome& o) {
  int agree = 0, total = 0;
  for (int q : {2, 4}) {
    Table t = make_table(q);
    RingId F = t.g.field().ring();
    Rng rng(20240607 + q);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<SpMatrix> S;
      for (long n = uniform(rng, 1, 2); n > 0; --n) {
        long kind = uniform(rng, 0, 3);
        if (kind == 0)
          S.push_back(SpMatrix::identity(F));
        else if (kind == 1)
          S.push_back(random_elementary(F, rng, 2));
        else
          S.push_back(t.g.to_matrix(static_cast<ElemId>(uniform(rng, 0, static_cast<long>(t.g.order()) - 1))));
      }
      bool truth = normally_generates_by_closure(t.g, t.cs, S);
      agree += classify_normal_gen(F, S).normally_generates == truth;
      ++total;
    }
  }
  RingId Z = RingId::integers();
  bool one = classify_normal_gen(Z, {root_element(Root::b, RingElem::from_int(Z, 1))}).normally_generates;
  bool two = classify_normal_gen(Z, {root_element(Root::b, RingElem::from_int(Z, 2))}).normally_generates;
  o.expect(agree == total, "classifier agrees with normal closure");
  o.expect(one && !two, "{e_b(1)} yes and {e_b(2)} no over Z");
  o.detail << agree << "/" << total << " sets over F2 and F4 agree with normal closure; Z: {e_b(1)} "
           << (one ? "yes" : "no") << ", {e_b(2)} " << (two ? "yes" : "no");
}

void c9(Outcome& o) {
  QuotientTables cache;
  LowerBoundReport r = delta_lower_certify(RingId::integers(), 2, {3}, cache);
  o.expect(r.certified_lower == 9, "certified_lower = 9");
  o.detail << "certified_lower = " << r.certified_lower << " (";
  for (std::size_t i = 0; i < r.terms.size(); ++i)
    o.detail << (i ? " + " : "") << r.terms[i].quotient << " " << r.terms[i].value << " " << r.terms[i].provenance;
  o.detail << "), target 4k+r = " << r.target << "; bound holds: " << (r.certified_lower >= r.target ? "yes" : "no");
  if (!o.pass)
    o.detail << ". Known deviation: -I in Sp4(F3) needs five transvections, so the F3 quotient contributes 5,"
                " not 4, and the certified value exceeds 9";
}

void c10(Outcome& o) {
  RingId Z = RingId::integers(), E = RingId::quadratic(-3);
  BoundReport z384 = delta_upper_report(Z, 1, alternate_L, K_pid);
  BoundReport e384 = delta_upper_report(E, 1, alternate_L, K_pid);
  BoundReport z320 = delta_upper_report(Z, 1, default_L, K_pid);
  BoundReport e320 = delta_upper_report(E, 1, default_L, K_pid);
  auto coeff = [](const BoundReport& b) { return mpz_class(*b.upper - *b.delta_infty_quotient); };
  o.expect(*z384.delta_infty_quotient == 5 && coeff(z384) == 248064, "Z: 5 + 248064k");
  o.expect(*e384.delta_infty_quotient == 4 && coeff(e384) == 248064, "O(-3): 4 + 248064k");
  o.expect(coeff(z320) == 206720, "Z: 5 + 206720k at L=320");
  bool flagged = false;
  for (const auto& n : z384.notes) flagged |= n.find("17644") != std::string::npos && n.find("17664") != std::string::npos;
  o.expect(flagged, "17644/17664 flagged");
  o.detail << "Z: " << *z384.delta_infty_quotient << " + " << coeff(z384).get_str() << "k (L=384), "
           << *z320.delta_infty_quotient << " + " << coeff(z320).get_str() << "k (L=320); O(-3): "
           << *e384.delta_infty_quotient << " + " << coeff(e384).get_str() << "k (L=384), "
           << *e320.delta_infty_quotient << " + " << coeff(e320).get_str() << "k (L=320); 17644 vs 384*46 = "
           << alternate_L * K_infinitely_many_units << " flagged";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sp4bg acceptance criteria"};
  bool strict = false, q4 = false;
  double q4_budget = 3600;
  app.add_flag("--strict", strict, "Exit nonzero on any failing criterion");
  app.add_flag("--q4", q4, "Also recompute cn(Sp4(F4))");
  app.add_option("--q4-budget", q4_budget, "Seconds for the cn(Sp4(F4)) run");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("SP4BG_ACCEPT_Q4"); env && std::string(env) == "1") q4 = true;

  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
      {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}};
  int failed = 0, unexpected = 0;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.failed += std::string(" [exception: ") + e.what() + "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %.2fs  %s\n", n, o.pass ? "PASS" : "FAIL", secs,
                (o.detail.str() + o.failed).c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (!known_deviations.count(n)) ++unexpected;
    }
  }
  if (q4) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    c7_q4(o, q4_budget);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion  7 (q=4, reported only): %.2fs  %s\n", secs, o.detail.str().c_str());
  }
  std::printf("%d of %zu criteria pass; %d failing with a recorded deviation, %d unexpected\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), failed - unexpected, unexpected);
  if (strict) return failed ? 1 : 0;
  return unexpected ? 1 : 0;
}
