#include "sequiv/braid_closure.hpp"
#include "sequiv/corpus.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace sequiv;

TEST(Closure, Permutations) {
  EXPECT_EQ(closure_components(ArtinBraidWord(2, {1, 1})), 2u);
  EXPECT_EQ(closure_components(ArtinBraidWord(2, {1, 1, 1})), 1u);
  EXPECT_EQ(closure_components(ArtinBraidWord(3, {1, -2, 1, -2})), 1u);
  EXPECT_EQ(closure_components(ArtinBraidWord(3, {1})), 2u);
  EXPECT_EQ(closure_components(ArtinBraidWord(3, {})), 3u);
  EXPECT_TRUE(is_knot_closure(ArtinBraidWord(2, {-1})));
  EXPECT_FALSE(is_knot_closure(ArtinBraidWord(4, {1, 2, 1})));
  const auto perm = closure_permutation(ArtinBraidWord(3, {1, 2}));
  EXPECT_EQ(perm.size(), 3u);
  EXPECT_THROW(ArtinBraidWord(1, {}), precondition_error);
  EXPECT_THROW(ArtinBraidWord(3, {3}), precondition_error);
  EXPECT_THROW(ArtinBraidWord(3, {0}), precondition_error);
}

TEST(BraidSeifert, Trefoil) {
  const SeifertMatrix m = seifert_matrix(ArtinBraidWord(2, {1, 1, 1}));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(alexander(m), LaurentPoly(-1, {1, -1, 1}));
  EXPECT_EQ(knot_signature(m), -2);
  EXPECT_EQ(knot_determinant(m), 3);
  EXPECT_EQ(arf(m), 1);
  EXPECT_EQ(alexander(m).evaluate(-1), -3);
}

TEST(BraidSeifert, FigureEight) {
  const SeifertMatrix m = seifert_matrix(ArtinBraidWord(3, {1, -2, 1, -2}));
  EXPECT_EQ(m.size(), 2u);
  EXPECT_EQ(alexander(m), LaurentPoly(-1, {-1, 3, -1}));
  EXPECT_EQ(knot_determinant(m), 5);
  EXPECT_EQ(knot_signature(m), 0);
  EXPECT_EQ(arf(m), 1);
}

TEST(BraidSeifert, UnknotGivesEmptyMatrix) {
  EXPECT_EQ(seifert_matrix(ArtinBraidWord(2, {1})).size(), 0u);
  EXPECT_EQ(seifert_matrix(ArtinBraidWord(3, {1, -2})).size(), 0u);
  EXPECT_THROW(seifert_matrix(ArtinBraidWord(2, {1, 1})), precondition_error);
  EXPECT_THROW(seifert_matrix(ArtinBraidWord(3, {1, 1, 1})), precondition_error);
}

TEST(BraidSeifert, SizeIsCrossingsMinusCirclesPlusOne) {
  for (const auto &w : generate_corpus({4, 12, 200, 7})) {
    // the closure of an n-strand braid smooths to n Seifert circles
    const std::size_t expected = w.length() - w.strands() + 1;
    EXPECT_EQ(seifert_matrix(w).size(), expected);
  }
}

TEST(Burau, GeneratorValues) {
  const LaurentPoly t = LaurentPoly::t();
  const PolyMatrix s1 = burau_generator(3, 1, 1);
  ASSERT_EQ(s1.size(), 2u);
  EXPECT_EQ(s1[0][0], -t);
  const PolyMatrix inv = burau_generator(3, 1, -1);
  const PolyMatrix prod = multiply(s1, inv);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      EXPECT_EQ(prod[r][c], LaurentPoly(r == c ? 1 : 0));
  // braid relation s1 s2 s1 = s2 s1 s2
  const PolyMatrix s2 = burau_generator(3, 2, 1);
  EXPECT_EQ(multiply(multiply(s1, s2), s1), multiply(multiply(s2, s1), s2));
}

TEST(Burau, AlexanderExamples) {
  EXPECT_EQ(burau_alexander(ArtinBraidWord(2, {1, 1, 1})), LaurentPoly(-1, {1, -1, 1}));
  EXPECT_EQ(burau_alexander(ArtinBraidWord(3, {1, -2, 1, -2})), LaurentPoly(-1, {-1, 3, -1}));
  EXPECT_EQ(burau_alexander(ArtinBraidWord(2, {1})), LaurentPoly(1));
  // cinquefoil
  EXPECT_EQ(burau_alexander(ArtinBraidWord(2, {1, 1, 1, 1, 1})),
            LaurentPoly(-2, {1, -1, 1, -1, 1}));
  EXPECT_THROW(burau_alexander(ArtinBraidWord(2, {1, 1})), precondition_error);
}

TEST(Burau, NormalizeAlexander) {
  EXPECT_EQ(normalize_alexander(LaurentPoly(3, {-1, 1, -1})), LaurentPoly(-1, {1, -1, 1}));
  EXPECT_THROW(normalize_alexander(LaurentPoly()), precondition_error);
}

TEST(BraidSeifert, AgreesWithBurauOnCorpus) {
  const auto corpus = generate_corpus({});
  ASSERT_EQ(corpus.size(), 1000u);
  for (const auto &w : corpus) {
    const SeifertMatrix m = seifert_matrix(w);
    ASSERT_EQ(alexander(m), burau_alexander(w)) << "strands " << w.strands();
  }
}

TEST(BraidSeifert, MarkovReverseAndMirror) {
  for (const auto &w : generate_corpus({4, 10, 150, 11})) {
    const Invariants base = invariants(seifert_matrix(w));
    for (int sign : {1, -1}) {
      const Invariants st = invariants(seifert_matrix(w.stabilized(sign)));
      EXPECT_EQ(st.alexander, base.alexander);
      EXPECT_EQ(st.signature, base.signature);
      EXPECT_EQ(st.arf, base.arf);
    }
    const Invariants rev = invariants(seifert_matrix(w.reversed()));
    EXPECT_EQ(rev.alexander, base.alexander);
    EXPECT_EQ(rev.signature, base.signature);
    const Invariants mir = invariants(seifert_matrix(w.mirrored()));
    EXPECT_EQ(mir.alexander, base.alexander);
    EXPECT_EQ(mir.signature, -base.signature);
    EXPECT_EQ(mir.determinant, base.determinant);
    EXPECT_EQ(mir.arf, base.arf);
  }
}

TEST(Corpus, DeterministicAndDistinct) {
  const auto a = generate_corpus({3, 8, 50, 99});
  const auto b = generate_corpus({3, 8, 50, 99});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, generate_corpus({3, 8, 50, 100}));
  for (const auto &w : a) {
    EXPECT_TRUE(is_knot_closure(w));
    EXPECT_LE(w.strands(), 3u);
    EXPECT_LE(w.length(), 8u);
  }
  EXPECT_THROW(generate_corpus({1, 8, 5, 1}), precondition_error);
}
