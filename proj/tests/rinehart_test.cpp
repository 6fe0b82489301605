#include <gtest/gtest.h>

#include "nlr/fixtures.hpp"
#include "nlr/rep.hpp"
#include "nlr/rinehart.hpp"

using namespace nlr;

namespace {

Vector e(std::size_t d, std::size_t i) { return unit_vector(d, i); }

// t·d/dt on ℚ[t]/(t²)
const Matrix kEuler{{0, 0}, {0, 1}};

}  // namespace

TEST(VerifyRinehart, AllFixturesPass) {
  for (const auto& f : fixtures::all()) {
    const Report r = verify_rinehart(f.algebra);
    EXPECT_TRUE(r.ok()) << f.name << ": " << (r.first_failure() ? r.first_failure()->name : "");
  }
  EXPECT_TRUE(verify_rinehart(fixtures::nilp4_over_dual_numbers()).ok());
}

TEST(VerifyRinehart, ReportsEveryConditionFamily) {
  const Report r = verify_rinehart(fixtures::dual());
  for (const char* name : {"base_commutativity", "a_module", "anchor_derivation", "fundamental_identity",
                           "anchor_rep1", "anchor_rep2", "anchor_a_linear", "compatibility",
                           "compatibility_first_slot"})
    EXPECT_TRUE(r.find(name)) << name;
}

TEST(VerifyRinehart, DoubledAnchorBreaksCompatibility) {
  NLieRinehart r = fixtures::dual();
  r.anchor.set({0, 2}, Scalar(2) * kEuler);
  const Report rep = verify_rinehart(r);
  EXPECT_FALSE(rep.passed("compatibility"));
  EXPECT_EQ(rep.find("compatibility")->witness.at("x"), "(0,2)");
  EXPECT_EQ(rep.find("compatibility")->witness.at("a"), "1");
}

TEST(VerifyRinehart, WeakModeSkipsAnchorLinearity) {
  // ρ(tu ∧ v) = t·d/dt violates A-linearity of the anchor but nothing else it is checked against here
  NLieRinehart r = fixtures::dual();
  r.anchor.set({1, 2}, kEuler);
  EXPECT_FALSE(verify_rinehart(r).passed("anchor_a_linear"));
  const Report weak = verify_rinehart(r, true);
  EXPECT_EQ(weak.status_of("anchor_a_linear"), Status::skipped);
}

TEST(AnchorKernel, Examples) {
  const Subspace k = anchor_kernel(fixtures::dual());
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(k.contains(e(4, 1)));
  EXPECT_TRUE(k.contains(e(4, 3)));
  EXPECT_EQ(anchor_kernel(fixtures::nilp4()).dim(), 4u);
  EXPECT_EQ(anchor_kernel(fixtures::der2()).dim(), 0u);
}

TEST(AnchorKernel, IsARinehartIdeal) {
  for (const auto& f : fixtures::all()) {
    const Report r = check_rinehart_ideal(f.algebra, anchor_kernel(f.algebra));
    EXPECT_TRUE(r.ok()) << f.name;
  }
}

TEST(RinehartIdeal, AnchorConditionDetectsLeak) {
  // span(u, tu) is an n-Lie ideal of FIX-DUAL, but ρ(u, v)(t)·v = tv is outside it
  const Subspace s = Subspace::span(4, {e(4, 0), e(4, 1)});
  const Report r = check_rinehart_ideal(fixtures::dual(), s);
  EXPECT_FALSE(r.ok());
}

TEST(Decomposition, AbelianSplitsAndNilpotentDoesNot) {
  const Subspace i = Subspace::span(4, {e(4, 0), e(4, 1)});
  const Subspace j = Subspace::span(4, {e(4, 2), e(4, 3)});
  const Report r = check_decomposition(fixtures::abel4(), i, j);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.numbers().at("decomposable"), 1);
  const Report n = check_decomposition(fixtures::nilp4(), Subspace::span(4, {e(4, 0), e(4, 1), e(4, 2)}),
                                       Subspace::span(4, {e(4, 3)}));
  EXPECT_FALSE(n.ok());
  EXPECT_EQ(n.numbers().at("decomposable"), 0);
}

TEST(LeibnizRinehart, ZeroAnchorAndDualAnchor) {
  const LeibnizRinehart nil = leibniz_rinehart(fixtures::nilp4());
  EXPECT_EQ(nil.carrier.size(), 6u);
  for (const auto& a : nil.anchor) EXPECT_TRUE(a.is_zero());
  EXPECT_TRUE(verify_leibniz_rinehart(nil).ok());

  const LeibnizRinehart dual = leibniz_rinehart(fixtures::dual());
  for (std::size_t b = 0; b < dual.carrier.size(); ++b) {
    if (dual.carrier[b] == Index{0, 2})
      EXPECT_EQ(dual.anchor[b], kEuler);
    else
      EXPECT_TRUE(dual.anchor[b].is_zero()) << to_string(dual.carrier[b]);
  }
  EXPECT_TRUE(verify_leibniz_rinehart(dual).ok());
}

TEST(LeibnizRinehart, A4IsALeibnizAlgebra) {
  const LeibnizRinehart lr = leibniz_rinehart(fixtures::a4());
  EXPECT_EQ(lr.leib.dim, 6u);
  EXPECT_TRUE(check_leibniz(lr.leib).ok());
  EXPECT_TRUE(verify_leibniz_rinehart(lr).ok());
}

TEST(LeibnizRinehart, CompatibilityHoldsOnEveryFixture) {
  for (const auto& f : fixtures::all()) EXPECT_TRUE(verify_leibniz_rinehart(leibniz_rinehart(f.algebra)).ok()) << f.name;
}

TEST(TensorExtend, OverTheFieldIsTheSameAlgebra) {
  const NLieRinehart t = tensor_extend(fixtures::a4());
  EXPECT_EQ(t.lie, fixtures::a4().lie);
  EXPECT_TRUE(verify_rinehart(t).ok());
}

TEST(TensorExtend, Nilp4OverDualNumbers) {
  const NLieRinehart t = tensor_extend(fixtures::nilp4_over_dual_numbers());
  EXPECT_EQ(t.dim(), 8u);
  // basis a_i ⊗ e_j at i·4 + j
  EXPECT_EQ(t.lie.eval({e(8, 0), e(8, 1), e(8, 4 + 2)}), e(8, 4 + 3));
  EXPECT_TRUE(verify_rinehart(t).ok());
}

TEST(TensorExtend, ZeroBracketPropagates) {
  const NLieRinehart t = tensor_extend(fixtures::abel4());
  EXPECT_EQ(t.lie, NLieAlgebra::abelian(4, 3));
}

TEST(AppendA, Nilp4) {
  const NLieRinehart e5 = append_a(fixtures::nilp4());
  EXPECT_EQ(e5.dim(), 5u);
  for (const auto& t : enumerate_blocks(5, 3)) {
    const Vector v = e5.lie.at(t);
    EXPECT_EQ(sgn(v[4]), 0);
  }
  EXPECT_EQ(e5.lie.at({0, 1, 2}), e(5, 3));
  EXPECT_TRUE(verify_rinehart(e5).ok());
}

TEST(AppendA, DualPicksUpTheAnchor) {
  const NLieRinehart e6 = append_a(fixtures::dual());
  EXPECT_EQ(e6.dim(), 6u);
  EXPECT_TRUE(is_zero(e6.lie.at({0, 2, 4})));
  EXPECT_EQ(e6.lie.at({0, 2, 5}), e(6, 5));
  EXPECT_TRUE(verify_rinehart(e6).ok());
  EXPECT_EQ(append_a(e6).dim(), 8u);
}

TEST(RinehartMorphism, Examples) {
  EXPECT_TRUE(is_rinehart_morphism(Matrix::identity(2), Matrix::identity(4), fixtures::dual(), fixtures::dual()));

  const RinehartQuotient q = rinehart_quotient(fixtures::nilp4(), Subspace::span(4, {e(4, 3)}));
  EXPECT_TRUE(q.report.ok());
  EXPECT_TRUE(is_rinehart_morphism(Matrix::identity(1), q.projection, fixtures::nilp4(), q.algebra));

  Matrix swap(4, 4);
  swap(2, 0) = swap(0, 2) = swap(3, 1) = swap(1, 3) = 1;
  const Report r = check_rinehart_morphism(Matrix::identity(2), swap, fixtures::dual(), fixtures::dual());
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.passed("anchor_intertwining"));
  EXPECT_FALSE(r.find("anchor_intertwining")->witness.empty());

  EXPECT_THROW(check_rinehart_morphism(Matrix::identity(3), swap, fixtures::dual(), fixtures::dual()), DimensionError);
}
