#include <gtest/gtest.h>

#include "rubbertaut/errors.hpp"
#include "rubbertaut/genus_one.hpp"

using namespace rubbertaut;

namespace {

TautClass psi1() { return TautClass(Generator::psi1()); }
TautClass D(std::vector<int> s, std::vector<int> j) { return TautClass(Generator::boundary(s, j)); }

const RingContext& ring3() {
  static const RingContext r = RingContext::standard(3);
  return r;
}

bool same(const TautClass& a, const TautClass& b) { return equal_mod_relations(a, b, ring3()); }

}  // namespace

TEST(GenusOne, DegreeTwoKnownSide) {
  // 4 psi_1 - psi_1 - D(2|13) - D(3|12) after the genus-zero rubber is replaced by H = 1.
  const EvaluatedRelation rel = genus_one_relation(2);
  EXPECT_TRUE(same(rel.known, Rational(3) * psi1() - D({2}, {1, 3}) - D({3}, {1, 2})));
  ASSERT_EQ(rel.p_terms.size(), 1u);
  EXPECT_EQ(rel.p_terms[0].coeff, Rational(-1));
  EXPECT_EQ(rel.p_terms[0].a2, 1);
  EXPECT_EQ(rel.p_terms[0].a3, 1);
  ASSERT_EQ(rel.s_terms.size(), 1u);
  EXPECT_EQ(rel.s_terms[0].coeff, Rational(-1));
  EXPECT_EQ(rel.s_terms[0].m, 1);
  EXPECT_EQ(rel.s_terms[0].b, 1);
}

TEST(GenusOne, DegreeThreeKnownSide) {
  const EvaluatedRelation rel = genus_one_relation(3);
  EXPECT_TRUE(same(rel.known, Rational(30) * psi1() - Rational(12) * D({2}, {1, 3}) - Rational(12) * D({3}, {1, 2}) -
                                  Rational(2) * D({}, {1, 2, 3})));
  EXPECT_EQ(rel.p_terms.size(), 2u);
  EXPECT_EQ(rel.s_terms.size(), 2u);
}

TEST(GenusOne, LengthTwoPullbacks) {
  EXPECT_TRUE(same(length_two_pullback(2, 1), psi1() - D({2}, {1, 3})));
  EXPECT_TRUE(same(length_two_pullback(3, 1), psi1() - D({3}, {1, 2})));
  EXPECT_THROW(length_two_pullback(1, 1), InvalidArgument);
  const RingContext r12({1, 2});
  // sigma_2* pi_3* of the pulled-back classes: 0 and D(1|23).
  EXPECT_EQ(pushforward_forget(length_two_pullback(2, 1), 3, ring3(), r12), Rational(0));
  EXPECT_EQ(section_pushforward(pushforward_forget(length_two_pullback(3, 1), 3, ring3(), r12), 2, 3, ring3()),
            D({1}, {2, 3}));
}

TEST(GenusOne, DegreeTwoSolve) {
  const GenusOneSolution sol = evaluate_and_solve(2);
  EXPECT_EQ(sol.c1_ratio, Rational(1));
  EXPECT_TRUE(same(sol.a2, psi1() - D({2}, {1, 3})));
  EXPECT_TRUE(same(sol.a3, psi1() - D({3}, {1, 2})));
  EXPECT_TRUE(same(sol.b, psi1() - D({1}, {2, 3})));
  EXPECT_EQ(sol.b_prime, Rational(0));
  EXPECT_EQ(sol.rank, 5);
  EXPECT_TRUE(same(sol.a2 + sol.a3 + sol.b,
                   Rational(3) * psi1() - D({2}, {1, 3}) - D({3}, {1, 2}) - D({1}, {2, 3})));
  // Pairwise distinct, nonzero.
  EXPECT_FALSE(same(sol.a2, sol.a3));
  EXPECT_FALSE(same(sol.a2, sol.b));
  EXPECT_FALSE(same(sol.a3, sol.b));
  EXPECT_FALSE(reduce(sol.b, ring3()).is_zero());
}

TEST(GenusOne, PushPushForcesBPrimeZero) {
  const EvaluatedRelation rel = genus_one_relation(2);
  GenusOneSolution sol = evaluate_and_solve(2);
  EXPECT_TRUE(pushpush_residual(rel, sol).is_zero());
  sol.b_prime = 1;
  EXPECT_EQ(pushpush_residual(rel, sol), Rational(-2) * D({1}, {2, 3}));
}

TEST(GenusOne, DegreeThreeReducesToZero) {
  const GenusOneSolution sol = evaluate_and_solve(2);
  EXPECT_TRUE(check_relation(3, sol).is_zero());
  EXPECT_TRUE(check_relation(2, sol).is_zero());
  // Before reduction the residual is a multiple of the finrel relation.
  const EvaluatedRelation rel = genus_one_relation(3);
  TautClass raw = rel.known;
  EXPECT_FALSE(reduce(raw, ring3()).is_zero());
}

TEST(GenusOne, DegreesAgreeOnB) {
  const GenusOneSolution s2 = evaluate_and_solve(2);
  const GenusOneSolution s3 = evaluate_and_solve(3);
  EXPECT_TRUE(same(s2.b, s3.b));
  EXPECT_EQ(s2.b_prime, s3.b_prime);
}

TEST(GenusOne, WrongBLeavesResidual) {
  GenusOneSolution sol = evaluate_and_solve(2);
  sol.b = sol.b + D({}, {1, 2, 3});
  EXPECT_FALSE(check_relation(2, sol).is_zero());
  EXPECT_FALSE(check_relation(3, sol).is_zero());
}

TEST(GenusOne, DegreeBounds) { EXPECT_THROW(genus_one_relation(1), InvalidArgument); }
