#include <gtest/gtest.h>

#include <random>

#include "nlr/ext.hpp"
#include "nlr/fixtures.hpp"

using namespace nlr;

namespace {

Vector e(std::size_t d, std::size_t i) { return unit_vector(d, i); }

VectorMap unit_form(std::size_t d, const Index& t) {
  VectorMap f = make_vector_map(3, d, 1);
  f.set(t, Vector{Scalar(1)});
  return f;
}

VectorMap random_map(std::size_t d, std::size_t target, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-2, 2);
  VectorMap f = make_vector_map(3, d, target);
  for (const auto& t : enumerate_blocks(d, 3)) {
    Vector v(target);
    for (auto& x : v) x = c(rng);
    f.set(t, v);
  }
  return f;
}

}  // namespace

TEST(CentralExtension, ZeroCocycleIsTrivial) {
  const NLieRinehart R = fixtures::nilp4();
  const NLieRinehart E = central_extend(R, make_vector_map(3, 4, 1));
  EXPECT_EQ(E.dim(), 5u);
  EXPECT_EQ(E.lie.at({0, 1, 2}), e(5, 3));
  EXPECT_TRUE(is_ideal(E.lie, Subspace::span(5, {e(5, 4)})));
  for (const auto& t : enumerate_blocks(5, 3))
    if (t.back() == 4) {
      EXPECT_TRUE(is_zero(E.lie.at(t)));
    }
  EXPECT_TRUE(verify_rinehart(E).ok());
}

TEST(CentralExtension, Nilp4TopForm) {
  const NLieRinehart R = fixtures::nilp4();
  const VectorMap phi = unit_form(4, {0, 1, 2});
  EXPECT_TRUE(check_central_cocycle(R, phi).ok());
  const NLieRinehart E = central_extend(R, phi);
  EXPECT_EQ(E.lie.at({0, 1, 2}), add(e(5, 3), e(5, 4)));
  EXPECT_TRUE(verify_rinehart(E).ok());
}

TEST(CentralExtension, EveryScalarFormOnA4IsACocycle) {
  // [·,·,·] maps onto L, so φ = e4*∘[·,·,·] = e^{123} is the coboundary of e4*
  const NLieRinehart R = fixtures::a4();
  const VectorMap phi = unit_form(4, {0, 1, 2});
  EXPECT_TRUE(check_central_cocycle(R, phi).ok());
  const NLieRinehart E = central_extend(R, phi);
  EXPECT_TRUE(verify_rinehart(E).ok());
  Matrix split = Matrix::identity(5);
  split(4, 3) = 1;  // x ↦ x + e4*(x) e intertwines the trivial extension with E
  EXPECT_TRUE(is_morphism(split, central_extend(R, make_vector_map(3, 4, 1)).lie, E.lie));
}

TEST(CentralExtension, NonCocycleOnDualNumbersIsLocalized) {
  const NLieRinehart R = fixtures::dual();
  std::mt19937_64 rng(3);
  bool seen = false;
  for (int i = 0; i < 20 && !seen; ++i) {
    const VectorMap phi = random_map(4, 1, rng);
    const Report c = check_central_cocycle(R, phi);
    if (c.passed("central_cocycle")) continue;
    seen = true;
    EXPECT_THROW(central_extend(R, phi), InvalidCocycle);
    const Report v = verify_rinehart(central_extend(R, phi, true));
    EXPECT_FALSE(v.ok());
    EXPECT_FALSE(v.first_failure()->witness.empty());
  }
  EXPECT_TRUE(seen);
}

TEST(CentralExtension, ValidityMatchesTheCocycleSweep) {
  std::mt19937_64 rng(5);
  for (const auto& f : fixtures::all())
    for (int i = 0; i < 6; ++i) {
      VectorMap phi = make_vector_map(f.algebra.n(), f.algebra.dim(), 1);
      std::uniform_int_distribution<int> c(-2, 2);
      for (const auto& t : enumerate_blocks(f.algebra.dim(), f.algebra.n())) phi.set(t, Vector{Scalar(c(rng))});
      const bool cocycle = check_central_cocycle(f.algebra, phi).ok();
      EXPECT_EQ(cocycle, verify_rinehart(central_extend(f.algebra, phi, true)).ok()) << f.name;
    }
}

TEST(ModuleCocycle, ZeroAndCoboundariesPass) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  EXPECT_TRUE(check_2cocycle_module(R, rep, make_vector_map(3, 4, 4)).ok());
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 5; ++i) {
    Matrix f(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t s = 0; s < 4; ++s) f(r, s) = c(rng);
    EXPECT_TRUE(check_2cocycle_module(R, rep, theta_from_cochain(R, rep, f)).ok());
  }
}

TEST(ModuleCocycle, RandomThetaOnA4AdjointFails) {
  const NLieRinehart R = fixtures::a4();
  const Representation rep = adjoint_on_kernel(R);
  std::mt19937_64 rng(17);
  bool found = false;
  for (int i = 0; i < 50 && !found; ++i) {
    const VectorMap theta = random_map(4, 4, rng);
    const Report r = check_2cocycle_module(R, rep, theta);
    if (r.ok()) continue;
    found = true;
    EXPECT_TRUE(r.first_failure()->witness.count("x"));
    EXPECT_TRUE(r.first_failure()->witness.count("y"));
    EXPECT_FALSE(verify_rinehart(t_theta_extend(R, rep, theta, true)).ok());
    EXPECT_THROW(t_theta_extend(R, rep, theta), InvalidCocycle);
  }
  EXPECT_TRUE(found);
}

TEST(TThetaExtension, ZeroThetaIsTheSemidirectProduct) {
  for (const auto& f : fixtures::all()) {
    const Representation rep = adjoint_on_kernel(f.algebra);
    const NLieRinehart t0 = t_theta_extend(f.algebra, rep, make_vector_map(f.algebra.n(), f.algebra.dim(), rep.dim));
    const NLieRinehart s = semidirect(f.algebra, rep);
    EXPECT_EQ(t0.lie, s.lie) << f.name;
    EXPECT_EQ(t0.a_action, s.a_action);
    EXPECT_EQ(t0.anchor, s.anchor);
  }
}

TEST(TThetaExtension, ThetaIdOnNilp4Adjoint) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  const VectorMap theta = theta_from_cochain(R, rep, Matrix::identity(4));
  EXPECT_TRUE(verify_rinehart(t_theta_extend(R, rep, theta)).ok());
}

TEST(TThetaExtension, MutatedThetaBreaksTheExtension) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  const VectorMap good = theta_from_cochain(R, rep, Matrix::identity(4));
  std::size_t broken = 0;
  for (const auto& t : enumerate_blocks(4, 3))
    for (std::size_t k = 0; k < 4; ++k) {
      VectorMap bad = good;
      bad.add(t, 1, e(4, k));
      const bool cocycle = check_2cocycle_module(R, rep, bad).ok();
      EXPECT_EQ(cocycle, verify_rinehart(t_theta_extend(R, rep, bad, true)).ok());
      broken += !cocycle;
    }
  EXPECT_GT(broken, 0u);
}

TEST(ThetaFromCochain, Examples) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  EXPECT_EQ(theta_from_cochain(R, rep, Matrix(4, 4)), make_vector_map(3, 4, 4));
  const VectorMap tid = theta_from_cochain(R, rep, Matrix::identity(4));
  EXPECT_EQ(tid.at({0, 1, 2}), (Vector{0, 0, 0, -2}));
  const NLieRinehart ab = fixtures::abel4();
  const Representation zero_psi = trivial_representation(ab);
  EXPECT_EQ(theta_from_cochain(ab, zero_psi, Matrix{{1, 2, 3, 4}}), make_vector_map(3, 4, 1));
}

TEST(ThetaFromCochain, IsMinusTheCoboundary) {
  for (const auto& f : fixtures::all()) {
    for (const auto& rep : {adjoint_on_kernel(f.algebra), anchor_representation(f.algebra)}) {
      if (f.algebra.n() != 3) continue;
      const CochainSpace c1(f.algebra, Coefficients::of(rep), 1);
      for (const auto& b : c1.basis()) {
        const Matrix m = cochain1_matrix(c1, b);
        EXPECT_FALSE(theta_delta_witness(f.algebra, rep, m)) << f.name;
      }
    }
  }
}

TEST(PhiEquivalence, IdentityShiftIsAnIsomorphism) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  const VectorMap zero = make_vector_map(3, 4, 4);
  EXPECT_TRUE(phi_equivalence(R, rep, zero, Matrix(4, 4)).ok());
  const Report r = phi_equivalence(R, rep, zero, Matrix::identity(4));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.passed("forward_f_bracket_morphism"));
  EXPECT_TRUE(r.passed("backward_anchor_intertwining"));
}

TEST(PhiEquivalence, DualNumbersWithAnchorCoefficients) {
  const NLieRinehart R = fixtures::dual();
  const Representation rep = anchor_representation(R);
  // u ↦ 1, tu ↦ t, v ↦ 0, tv ↦ 0
  const Matrix f{{1, 0, 0, 0}, {0, 1, 0, 0}};
  const Report r = phi_equivalence(R, rep, make_vector_map(3, 4, 2), f);
  EXPECT_TRUE(r.passed("forward_anchor_intertwining"));
  EXPECT_TRUE(r.passed("forward_a_equivariance"));
  EXPECT_TRUE(r.ok());
}

TEST(PhiEquivalence, SpanningSetOfCochainsOnNilp4) {
  const NLieRinehart R = fixtures::nilp4();
  const Representation rep = adjoint_on_kernel(R);
  const VectorMap theta = theta_from_cochain(R, rep, Matrix::identity(4));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Matrix f(4, 4);
      f(r, c) = 1;
      EXPECT_TRUE(phi_equivalence(R, rep, theta, f).ok()) << r << "," << c;
    }
}
