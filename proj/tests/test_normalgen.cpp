#include "support.hpp"

using namespace sp4bg;
using namespace sp4bg::testing;

TEST(RofRing, Examples) {
  EXPECT_EQ(r_of_ring(Z()), 1);
  EXPECT_EQ(r_of_ring(RingId::localized(7)), 1);
  EXPECT_EQ(r_of_ring(O(5)), 0);
  EXPECT_EQ(r_of_ring(O(-3)), 0);
  EXPECT_EQ(r_of_ring(O(-7)), 2);
  EXPECT_EQ(r_of_ring(RingId::cubic(5)), 0);
  EXPECT_EQ(r_of_ring(RingId::prime_field(2)), 1);
  EXPECT_EQ(r_of_ring(RingId::gf4()), 0);
}

TEST(PiIsEmpty, Examples) {
  RingId R = Z();
  EXPECT_TRUE(pi_is_empty(R, {root_element(Root::b, I(R, 1))}).empty);
  // e_b(3) is I mod 3
  PiResult three = pi_is_empty(R, {root_element(Root::b, I(R, 3))});
  EXPECT_FALSE(three.empty);
  EXPECT_NE(three.witness.find("3"), std::string::npos) << three.witness;
  PiResult id = pi_is_empty(R, {SpMatrix::identity(R)});
  EXPECT_FALSE(id.empty);
  EXPECT_FALSE(id.witness.empty());
  // e_b(6) is central mod 2 and mod 3
  EXPECT_FALSE(pi_is_empty(R, {root_element(Root::b, I(R, 6))}).empty);
  EXPECT_TRUE(pi_is_empty(R, {root_element(Root::b, I(R, 6)), root_element(Root::a, I(R, 35))}).empty);
  EXPECT_FALSE(pi_is_empty(R, {-SpMatrix::identity(R)}).empty);
  EXPECT_TRUE(pi_is_empty(O(5), {root_element(Root::b, I(O(5), 1))}).empty);
  RingId F = RingId::prime_field(3);
  EXPECT_FALSE(pi_is_empty(F, {-SpMatrix::identity(F)}).empty);
  EXPECT_TRUE(pi_is_empty(F, {root_element(Root::b, RingElem::one(F))}).empty);
}

namespace {

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (detail::is_prime(p)) out.push_back(p);
  return out;
}

bool central_mod(const SpMatrix& A, long p) {
  auto divides_all = [&](const SpMatrix& M) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!mpz_divisible_ui_p(M(i, j).coord(0).get_mpz_t(), static_cast<unsigned long>(p))) return false;
    return true;
  };
  SpMatrix id = SpMatrix::identity(A.ring());
  return divides_all(A - id) || divides_all(A + id);
}

}  // namespace

TEST(PiIsEmpty, AgreesWithPrimeByPrimeCheck) {
  RingId R = Z();
  Rng rng(61);
  const std::vector<long> primes = primes_up_to(1000);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SpMatrix> S;
    for (long n = uniform(rng, 1, 3); n > 0; --n) {
      // scaled root elements keep every witness prime small
      long s = uniform(rng, 0, 1) ? 1 : -1;
      SpMatrix A = root_element(random_root(rng), I(R, uniform(rng, -400, 400))) *
                   root_element(random_root(rng), I(R, 2 * uniform(rng, -10, 10)));
      S.push_back(s == 1 ? A : -A);
    }
    bool brute_empty = true;
    for (long p : primes)
      if (std::all_of(S.begin(), S.end(), [&](const SpMatrix& A) { return central_mod(A, p); })) brute_empty = false;
    bool all_pm_identity = std::all_of(S.begin(), S.end(), [&](const SpMatrix& A) {
      return A.is_identity() || (-A).is_identity();
    });
    if (all_pm_identity) brute_empty = false;
    ASSERT_EQ(pi_is_empty(R, S).empty, brute_empty) << trial;
  }
}

TEST(Abelianization, Examples) {
  RingId R = Z();
  EXPECT_EQ(abelianization(root_element(Root::b, I(R, 3))), AbelianImage{1});
  EXPECT_EQ(abelianization(root_element(Root::a, I(R, 2)) * root_element(Root::b, I(R, 4))), AbelianImage{0});
  EXPECT_EQ(abelianization(root_element(Root::a, I(R, 1)) * root_element(Root::b, I(R, 1))), AbelianImage{0});
  EXPECT_TRUE(abelianization(root_element(Root::b, I(O(5), 1))).empty());
  EXPECT_ERRC(errc::not_euclidean_here, abelianization(root_element(Root::a, I(O(-7), 1)) * root_element(Root::na, I(O(-7), 2)) *
                                                       root_element(Root::a, I(O(-7), 3))));
}

TEST(Abelianization, AdditiveAndKillsCommutators) {
  Rng rng(62);
  for (const auto& R : {Z(), RingId::localized(3)})
    for (int i = 0; i < 200; ++i) {
      SpMatrix m = random_elementary(R, rng, 5), n = random_elementary(R, rng, 5);
      AbelianImage am = abelianization(m), an = abelianization(n), amn = abelianization(m * n);
      ASSERT_EQ(amn.size(), 1u);
      ASSERT_EQ(amn[0], am[0] ^ an[0]) << R.to_string();
      ASSERT_EQ(abelianization(commutator(m, n)), AbelianImage{0});
    }
}

TEST(Classify, ExamplesOverZAndO5) {
  RingId R = Z();
  EXPECT_TRUE(classify_normal_gen(R, {root_element(Root::b, I(R, 1))}).normally_generates);
  ClassifyResult two = classify_normal_gen(R, {root_element(Root::b, I(R, 2))});
  EXPECT_FALSE(two.normally_generates);
  EXPECT_FALSE(two.pi.empty);
  EXPECT_EQ(two.images, std::vector<AbelianImage>{AbelianImage{0}});
  EXPECT_EQ(two.rank, 0);
  EXPECT_TRUE(classify_normal_gen(R, {root_element(Root::b, I(R, 3)), root_element(Root::b, I(R, 2))}).normally_generates);
  EXPECT_FALSE(classify_normal_gen(R, {-SpMatrix::identity(R)}).normally_generates);
  EXPECT_TRUE(classify_normal_gen(O(5), {root_element(Root::b, I(O(5), 1))}).normally_generates);
}

namespace {

void classify_against_closure(int q, std::uint64_t seed) {
  GroupTable g = GroupTable::enumerate(q);
  ClassSet cs = compute_classes(g);
  Rng rng(seed);
  int yes = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SpMatrix> S;
    for (long n = uniform(rng, 1, 2); n > 0; --n) {
      // mix small-support elements in so both verdicts occur
      if (uniform(rng, 0, 3) == 0)
        S.push_back(SpMatrix::identity(g.field().ring()));
      else if (uniform(rng, 0, 1) == 0)
        S.push_back(random_elementary(g.field().ring(), rng, 2));
      else
        S.push_back(g.to_matrix(static_cast<ElemId>(uniform(rng, 0, static_cast<long>(g.order()) - 1))));
    }
    bool truth = normally_generates_by_closure(g, cs, S);
    ASSERT_EQ(classify_normal_gen(g.field().ring(), S).normally_generates, truth) << "q=" << q << " trial " << trial;
    yes += truth;
  }
  EXPECT_GT(yes, 0);
  EXPECT_LT(yes, 50);
}

}  // namespace

TEST(Classify, AgreesWithClosureOverF2) { classify_against_closure(2, 63); }
TEST(Classify, AgreesWithClosureOverF4) { classify_against_closure(4, 64); }

TEST(LowerBound, SingleGenerator) {
  QuotientTables cache;
  LowerBoundReport rep = delta_lower_certify(Z(), 1, {}, cache);
  ASSERT_EQ(rep.r_values.size(), 1u);
  EXPECT_EQ(rep.r_values[0], 1);
  EXPECT_EQ(rep.certified_lower, 5);
  EXPECT_EQ(rep.target, 5);
  EXPECT_TRUE(rep.classification.normally_generates);
}

TEST(LowerBound, TwoGeneratorsWithAuxThree) {
  QuotientTables cache;
  LowerBoundReport rep = delta_lower_certify(Z(), 2, {3}, cache);
  EXPECT_EQ(rep.r_values, (std::vector<mpz_class>{3, 2}));
  ASSERT_EQ(rep.terms.size(), 2u);
  EXPECT_EQ(rep.terms[0].value, 5);
  EXPECT_EQ(rep.terms[0].provenance, "computed");
  // -I in Sp4(F3) needs five transvections, see MinusIdentityOverF3
  EXPECT_EQ(rep.terms[1].value, 5);
  EXPECT_EQ(rep.certified_lower, 10);
  EXPECT_EQ(rep.target, 9);
  EXPECT_GE(rep.certified_lower, rep.target);
}

TEST(LowerBound, QuotedTermForLargerPrimes) {
  QuotientTables cache;
  LowerBoundReport rep = delta_lower_certify(Z(), 3, {3, 5}, cache);
  EXPECT_EQ(rep.r_values, (std::vector<mpz_class>{15, 10, 6}));
  ASSERT_EQ(rep.terms.size(), 3u);
  EXPECT_EQ(rep.terms[2].value, 4);
  EXPECT_EQ(rep.terms[2].provenance, "quoted");
  EXPECT_GE(rep.certified_lower, rep.target);
  EXPECT_EQ(rep.target, 13);
}

TEST(LowerBound, Errors) {
  QuotientTables cache;
  EXPECT_ERRC(errc::unsupported_ring, delta_lower_certify(O(5), 1, {}, cache));
  EXPECT_ERRC(errc::invalid_argument, delta_lower_certify(Z(), 2, {}, cache));
  EXPECT_ERRC(errc::invalid_argument, delta_lower_certify(Z(), 2, {9}, cache));
  EXPECT_ERRC(errc::invalid_argument, delta_lower_certify(Z(), 3, {3, 3}, cache));
  EXPECT_ERRC(errc::too_large, delta_lower_certify(Z(), 13, std::vector<long>(12, 3), cache));
}

TEST(LowerBound, MinusIdentityOverF3) {
  // meet in the middle over products of transvections, independent of the class BFS
  GroupTable g = GroupTable::enumerate(3);
  ClassSet cs = compute_classes(g);
  RingId F = g.field().ring();
  ElemId t1 = g.from_matrix(root_element(Root::b, RingElem::one(F)));
  ElemId t2 = g.inv(t1);
  std::vector<ElemId> T;
  for (ElemId x = 0; x < g.order(); ++x)
    if (cs.class_of[x] == cs.class_of[t1] || cs.class_of[x] == cs.class_of[t2]) T.push_back(x);
  EXPECT_EQ(T.size(), 80u);
  std::vector<bool> upto2(g.order(), false);
  upto2[g.identity()] = true;
  for (ElemId a : T) {
    upto2[a] = true;
    for (ElemId b : T) upto2[g.mul(a, b)] = true;
  }
  ElemId minus = g.from_matrix(-SpMatrix::identity(F));
  // -I = xy with x, y products of at most two transvections iff x^-1 (-I) is in the set
  bool four = false;
  for (ElemId x = 0; x < g.order() && !four; ++x)
    if (upto2[x] && upto2[g.mul(g.inv(x), minus)]) four = true;
  EXPECT_FALSE(four);
  bool five = false;
  for (ElemId x = 0; x < g.order() && !five; ++x)
    if (upto2[x])
      for (ElemId t : T)
        if (upto2[g.mul(g.mul(g.inv(x), minus), t)]) {
          five = true;
          break;
        }
  EXPECT_TRUE(five);
}

TEST(Bounds, Arithmetic) {
  BoundReport z384 = delta_upper_report(Z(), 1, alternate_L, K_pid);
  EXPECT_EQ(*z384.upper, 5 + 248064);
  EXPECT_EQ(z384.lower, 5);
  BoundReport z320 = delta_upper_report(Z(), 1, default_L, K_pid);
  EXPECT_EQ(*z320.upper, 5 + 206720);
  BoundReport e = delta_upper_report(O(-3), 1, alternate_L, K_pid);
  EXPECT_EQ(*e.upper, 4 + 248064);
  EXPECT_EQ(e.lower, 4);
  BoundReport k3 = delta_upper_report(Z(), 3, alternate_L, K_pid);
  EXPECT_EQ(*k3.upper, 5 + 3 * 248064);
  EXPECT_EQ(k3.lower, 13);
  EXPECT_FALSE(delta_upper_report(RingId::prime_field(3), 1, default_L, K_pid).upper);
  EXPECT_EQ(alternate_L * K_infinitely_many_units, 17664);
  EXPECT_EQ(default_K(Z()), K_pid);
  EXPECT_EQ(default_K(O(5)), K_infinitely_many_units);
  EXPECT_EQ(default_K(O(-3)), K_pid);
  EXPECT_EQ(default_K(RingId::localized(3)), K_infinitely_many_units);
  EXPECT_EQ(z384.provenance.size(), 4u);
  EXPECT_EQ(json::from_bounds(z384).dump(), json::from_bounds(delta_upper_report(Z(), 1, alternate_L, K_pid)).dump());
}
