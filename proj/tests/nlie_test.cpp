#include <gtest/gtest.h>

#include "nlr/fixtures.hpp"
#include "nlr/nlie.hpp"

using namespace nlr;

namespace {

// independent brute-force check over every ordered argument list
bool brute_force_fundamental_identity(const NLieAlgebra& l) {
  const std::size_t d = l.dim;
  const auto e = [&](std::size_t i) { return unit_vector(d, i); };
  for (std::size_t x1 = 0; x1 < d; ++x1)
    for (std::size_t x2 = 0; x2 < d; ++x2)
      for (std::size_t y1 = 0; y1 < d; ++y1)
        for (std::size_t y2 = 0; y2 < d; ++y2)
          for (std::size_t y3 = 0; y3 < d; ++y3) {
            const Vector lhs = l.eval({e(x1), e(x2), l.eval({e(y1), e(y2), e(y3)})});
            Vector rhs = l.eval({l.eval({e(x1), e(x2), e(y1)}), e(y2), e(y3)});
            rhs = add(rhs, l.eval({e(y1), l.eval({e(x1), e(x2), e(y2)}), e(y3)}));
            rhs = add(rhs, l.eval({e(y1), e(y2), l.eval({e(x1), e(x2), e(y3)})}));
            if (lhs != rhs) return false;
          }
  return true;
}

Vector e(std::size_t i) { return unit_vector(4, i); }

}  // namespace

TEST(FundamentalIdentity, FixturesPass) {
  EXPECT_TRUE(check_fundamental_identity(fixtures::abel4_lie()).ok());
  EXPECT_TRUE(check_fundamental_identity(fixtures::nilp4_lie()).ok());
  EXPECT_TRUE(check_fundamental_identity(fixtures::a4_lie()).ok());
}

TEST(FundamentalIdentity, A4ConstantsAgreeWithBruteForce) {
  const NLieAlgebra a4 = fixtures::a4_lie();
  EXPECT_EQ(a4.at({0, 1, 2}), e(3));
  EXPECT_EQ(a4.at({0, 1, 3}), scaled(-1, e(2)));
  EXPECT_EQ(a4.at({0, 2, 3}), e(1));
  EXPECT_EQ(a4.at({1, 2, 3}), scaled(-1, e(0)));
  EXPECT_TRUE(brute_force_fundamental_identity(a4));
}

TEST(FundamentalIdentity, PerturbedA4FailsAndAgreesWithBruteForce) {
  std::size_t failures = 0;
  for (const auto& t : enumerate_blocks(4, 3))
    for (std::size_t k = 0; k < 4; ++k) {
      NLieAlgebra m = fixtures::a4_lie();
      m.bracket.add(t, 1, e(k));
      const Report r = check_fundamental_identity(m);
      EXPECT_EQ(r.ok(), brute_force_fundamental_identity(m)) << to_string(t) << " " << k;
      if (!r.ok()) {
        ++failures;
        EXPECT_TRUE(r.first_failure()->witness.count("x"));
        EXPECT_TRUE(r.first_failure()->witness.count("y"));
      }
    }
  EXPECT_GT(failures, 0u);
}

TEST(FundamentalBracket, Nilp4SingleTerm) {
  const LeibnizAlgebra f = fundamental_bracket(fixtures::nilp4_lie());
  const BlockBasis b(4, 2);
  EXPECT_EQ(f.eval(unit_vector(6, b.rank({0, 1})), unit_vector(6, b.rank({0, 2}))), unit_vector(6, b.rank({0, 3})));
}

TEST(FundamentalBracket, Abel4IsZero) {
  EXPECT_EQ(fundamental_bracket(fixtures::abel4_lie()), LeibnizAlgebra::zero(6));
}

TEST(FundamentalBracket, A4CancellingPair) {
  const LeibnizAlgebra f = fundamental_bracket(fixtures::a4_lie());
  const BlockBasis b(4, 2);
  EXPECT_TRUE(is_zero(f.eval(unit_vector(6, b.rank({0, 1})), unit_vector(6, b.rank({2, 3})))));
}

TEST(Leibniz, FundamentalBracketsOfFixturesPass) {
  for (const auto& l : {fixtures::abel4_lie(), fixtures::nilp4_lie(), fixtures::a4_lie()})
    EXPECT_TRUE(check_leibniz(fundamental_bracket(l)).ok());
  EXPECT_TRUE(check_leibniz(LeibnizAlgebra::zero(6)).ok());
}

TEST(Leibniz, TwoDimensionalViolation) {
  LeibnizAlgebra b = LeibnizAlgebra::zero(2);
  b.table[0][1] = unit_vector(2, 1);
  b.table[1][1] = unit_vector(2, 1);
  const Report r = check_leibniz(b);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->witness.at("triple"), "(0,1,1)");
}

TEST(Morphism, Examples) {
  EXPECT_TRUE(is_morphism(Matrix::identity(4), fixtures::a4_lie(), fixtures::a4_lie()));
  EXPECT_TRUE(is_morphism(Matrix(4, 4), fixtures::a4_lie(), fixtures::abel4_lie()));
  Matrix diag = Matrix::identity(4);
  diag(3, 3) = 2;
  EXPECT_FALSE(is_morphism(diag, fixtures::nilp4_lie(), fixtures::nilp4_lie()));
  const auto w = morphism_witness(diag, fixtures::nilp4_lie(), fixtures::nilp4_lie());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->at("tuple"), "(0,1,2)");
  EXPECT_THROW(is_morphism(Matrix(3, 4), fixtures::a4_lie(), fixtures::a4_lie()), DimensionError);
}

TEST(Ideals, Examples) {
  const NLieAlgebra nil = fixtures::nilp4_lie();
  EXPECT_TRUE(is_ideal(nil, Subspace::span(4, {e(3)})));
  const Subspace s1 = Subspace::span(4, {e(0)});
  EXPECT_TRUE(is_subalgebra(nil, s1));
  EXPECT_FALSE(is_ideal(nil, s1));
  EXPECT_TRUE(ideal_witness(nil, s1));
  EXPECT_TRUE(is_ideal(nil, Subspace::whole(4)));
  EXPECT_TRUE(is_ideal(fixtures::a4_lie(), Subspace::span(4, {})));
  EXPECT_FALSE(is_ideal(fixtures::a4_lie(), Subspace::span(4, {e(3)})));
}

TEST(Quotient, Examples) {
  const Quotient q1 = quotient(fixtures::nilp4_lie(), Subspace::span(4, {e(3)}));
  EXPECT_EQ(q1.algebra, NLieAlgebra::abelian(3, 3));
  const Quotient q0 = quotient(fixtures::a4_lie(), Subspace::span(4, {}));
  EXPECT_EQ(q0.algebra, fixtures::a4_lie());
  const Quotient q2 = quotient(fixtures::nilp4_lie(), Subspace::span(4, {e(2), e(3)}));
  EXPECT_EQ(q2.algebra.dim, 2u);
  EXPECT_TRUE(check_fundamental_identity(q2.algebra).ok());
  EXPECT_THROW(quotient(fixtures::nilp4_lie(), Subspace::span(4, {e(0)})), Error);
}

TEST(Quotient, ProjectionIsAMorphismKillingTheIdeal) {
  const NLieAlgebra nil = fixtures::nilp4_lie();
  const Subspace ideal = Subspace::span(4, {e(3)});
  const Quotient q = quotient(nil, ideal);
  EXPECT_TRUE(is_morphism(q.projection, nil, q.algebra));
  for (const auto& b : ideal.basis) EXPECT_TRUE(is_zero(q.projection * b));
  EXPECT_EQ(q.projection * q.section, Matrix::identity(3));
}
