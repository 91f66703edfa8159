#include "support.hpp"

using namespace sp4bg;
using namespace sp4bg::testing;

TEST(Roots, Basics) {
  EXPECT_EQ(all_roots.size(), 8u);
  int positive = 0, long_roots = 0;
  for (Root r : all_roots) {
    EXPECT_EQ(negate(negate(r)), r);
    EXPECT_NE(is_positive(r), is_positive(negate(r)));
    EXPECT_EQ(is_long(r), is_long(negate(r)));
    EXPECT_EQ(parse_root(root_name(r)), r);
    positive += is_positive(r);
    long_roots += is_long(r);
  }
  EXPECT_EQ(positive, 4);
  EXPECT_EQ(long_roots, 4);
  EXPECT_TRUE(is_long(Root::b));
  EXPECT_TRUE(is_long(Root::a2b));
  EXPECT_FALSE(is_long(Root::a));
}

TEST(RootElement, ExplicitMatrices) {
  RingId R = Z();
  RingElem t = I(R, 7);
  auto unit = [&](std::initializer_list<std::tuple<int, int, long>> entries) {
    SpMatrix m = SpMatrix::identity(R);
    for (auto [i, j, v] : entries) m.set(i, j, I(R, v));
    return m;
  };
  EXPECT_EQ(root_element(Root::a, t), unit({{0, 1, 7}, {3, 2, -7}}));
  EXPECT_EQ(root_element(Root::b, t), unit({{1, 3, 7}}));
  EXPECT_EQ(root_element(Root::ab, t), unit({{0, 3, 7}, {1, 2, 7}}));
  EXPECT_EQ(root_element(Root::a2b, t), unit({{0, 2, 7}}));
  for (Root r : all_roots) {
    if (!is_positive(r)) continue;
    EXPECT_EQ(root_element(negate(r), t), root_element(r, t).transpose());
  }
  EXPECT_TRUE(root_element(Root::b, RingElem::zero(R)).is_identity());
}

TEST(RootElement, SymplecticEverywhere) {
  Rng rng(1);
  for (const auto& R : catalog())
    for (int i = 0; i < 50; ++i)
      for (Root r : all_roots) ASSERT_TRUE(is_symplectic(root_element(r, random_element(R, rng)))) << R.to_string();
}

TEST(IsSymplectic, Examples) {
  RingId R = Z();
  EXPECT_TRUE(is_symplectic(SpMatrix::identity(R)));
  SpMatrix m = SpMatrix::identity(R);
  m.set(0, 1, I(R, 1));
  EXPECT_FALSE(is_symplectic(m));
  EXPECT_TRUE(is_symplectic(symplectic_form(R)));
}

TEST(Commutator, FrozenSigns) {
  EXPECT_EQ(commutator_c1, -1);
  EXPECT_EQ(commutator_c2, -1);
  EXPECT_EQ(commutator_c3, -1);
  RingId R = Z();
  RingElem one = RingElem::one(R);
  EXPECT_EQ(commutator(root_element(Root::b, one), root_element(Root::a, one)),
            root_element(Root::ab, I(R, commutator_c2)) * root_element(Root::a2b, I(R, commutator_c3)));
  EXPECT_TRUE(commutator(root_element(Root::a2b, I(R, 4)), root_element(Root::b, I(R, 9))).is_identity());
  EXPECT_TRUE(commutator(root_element(Root::b, I(R, 4)), root_element(Root::a, RingElem::zero(R))).is_identity());
}

TEST(Commutator, GeneralIdentitiesOverZ) {
  // (e_a+b(b), e_a(a)) = e_2a+b(2 c1 ab) and the two-term relation, with a, b symbolic via many samples
  RingId R = Z();
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) {
      RingElem x = I(R, a), y = I(R, b);
      ASSERT_EQ(commutator(root_element(Root::ab, y), root_element(Root::a, x)),
                root_element(Root::a2b, I(R, 2 * commutator_c1 * a * b)));
      ASSERT_EQ(commutator(root_element(Root::b, y), root_element(Root::a, x)),
                root_element(Root::ab, I(R, commutator_c2 * a * b)) * root_element(Root::a2b, I(R, commutator_c3 * a * a * b)));
    }
}

TEST(Commutator, MixedRings) { EXPECT_ERRC(errc::mixed_rings, commutator(SpMatrix::identity(Z()), SpMatrix::identity(O(5)))); }

TEST(WeylTorus, Elements) {
  RingId R = Z();
  RingElem one = RingElem::one(R);
  EXPECT_TRUE(torus_elem(Root::a, one).is_identity());
  SpMatrix wa = weyl_elem(Root::a, one);
  EXPECT_EQ(wa * wa, torus_elem(Root::a, -one));
  EXPECT_EQ(wa * wa, -SpMatrix::identity(R));
  EXPECT_TRUE((wa * wa * wa * wa).is_identity());
  EXPECT_EQ(wa.inverse(), -wa);
  SpMatrix w0 = weyl_lift(longest_word, R);
  EXPECT_EQ(w0.inverse(), -w0);
  EXPECT_ERRC(errc::not_a_unit, weyl_elem(Root::a, I(R, 2)));
  EXPECT_ERRC(errc::not_a_unit, torus_elem(Root::b, I(R, 3)));
}

TEST(WeylTorus, DiagonalTorus) {
  Rng rng(2);
  for (const auto& R : {RingId::localized(5), O(5), RingId::cubic(3), RingId::gf8(), RingId::prime_field(3)})
    for (int i = 0; i < 20; ++i) {
      RingElem t = random_unit(R, rng), s = random_unit(R, rng);
      EXPECT_EQ(torus_elem(Root::a, t) * torus_elem(Root::b, s), SpMatrix::diagonal({t, s * t.inv(), t.inv(), t * s.inv()}));
    }
}

TEST(SignTable, DefiningIdentity) {
  Rng rng(4);
  for (const auto& R : {Z(), O(5), RingId::gf4()})
    for (int g = 0; g < 2; ++g) {
      SpMatrix w = weyl_elem(g == 0 ? Root::a : Root::b, RingElem::one(R));
      for (Root psi : all_roots) {
        SignEntry e = sign_table(g, psi);
        for (int k = 0; k < 3; ++k) {
          RingElem a = k == 0 ? RingElem::one(R) : random_element(R, rng);
          ASSERT_EQ(w * root_element(psi, a) * w.inverse(), root_element(e.image, e.sign > 0 ? a : -a));
        }
      }
    }
}

TEST(SignTable, FrozenEntries) {
  struct Row {
    int gen;
    Root psi, image;
    int sign;
  };
  for (const Row& r : {Row{0, Root::a, Root::na, -1}, Row{0, Root::b, Root::a2b, 1}, Row{0, Root::ab, Root::ab, -1},
                       Row{0, Root::a2b, Root::b, 1}, Row{1, Root::a, Root::ab, -1}, Row{1, Root::b, Root::nb, -1},
                       Row{1, Root::ab, Root::a, 1}, Row{1, Root::a2b, Root::a2b, 1}}) {
    SignEntry e = sign_table(r.gen, r.psi);
    EXPECT_EQ(e.image, r.image) << r.gen << " " << root_name(r.psi);
    EXPECT_EQ(e.sign, r.sign) << r.gen << " " << root_name(r.psi);
    SignEntry n = sign_table(r.gen, negate(r.psi));
    EXPECT_EQ(n.image, negate(r.image));
  }
}

TEST(ReduceMatrix, Examples) {
  RingId R = Z();
  RingId F2 = RingId::prime_field(2);
  EXPECT_TRUE(reduce_matrix(root_element(Root::b, I(R, 2))).is_identity());
  EXPECT_EQ(reduce_matrix(root_element(Root::a, I(R, 3))), root_element(Root::a, RingElem::one(F2)));
  RingId D5 = O(5);
  RingElem w = RingElem::generator(D5);
  EXPECT_EQ(reduce_matrix(torus_elem(Root::a, w)), torus_elem(Root::a, reduce_mod2(w)));
  EXPECT_ERRC(errc::unsupported_residue, reduce_matrix(SpMatrix::identity(RingId::prime_field(3))));
}

TEST(ReduceMatrix, Homomorphism) {
  Rng rng(6);
  for (const auto& R : catalog()) {
    if (!R.has_residue_mod2()) continue;
    for (int i = 0; i < 100; ++i) {
      SpMatrix x = random_elementary(R, rng, 4), y = random_elementary(R, rng, 4);
      ASSERT_EQ(reduce_matrix(x * y), reduce_matrix(x) * reduce_matrix(y)) << R.to_string();
    }
  }
}

TEST(SpMatrix, InverseIsSymplecticInverse) {
  Rng rng(8);
  for (const auto& R : catalog())
    for (int i = 0; i < 30; ++i) {
      SpMatrix m = random_elementary(R, rng, 6);
      ASSERT_TRUE((m * m.inverse()).is_identity());
      ASSERT_TRUE(is_symplectic(m));
    }
}

class RelationSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(RelationSuite, FiveHundredSamples) {
  CheckReport rep = verify_relations(RingId::parse(GetParam()), 500, 1);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures.front());
  EXPECT_GT(rep.checks, 30000);
}

INSTANTIATE_TEST_SUITE_P(Catalog, RelationSuite,
                         ::testing::Values("Z", "Z[1/5]", "O(5)", "O(-3)", "O(37)", "Cubic(3)", "F2", "F3", "F4", "F8"),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : (c == '-' ? 'm' : '_');
                           return s;
                         });
