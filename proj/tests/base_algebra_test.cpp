#include <gtest/gtest.h>

#include "nlr/base_algebra.hpp"

using namespace nlr;

namespace {

bool in_span(const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vector> cols;
  for (const auto& b : basis) {
    Vector v;
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) v.push_back(b(r, c));
    cols.push_back(v);
  }
  Vector target;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) target.push_back(m(r, c));
  return solve_in_span(Matrix::from_columns(cols, target.size()), target).has_value();
}

}  // namespace

TEST(CommAlgebra, FieldAndDualNumbersPass) {
  EXPECT_TRUE(check_comm_assoc_unital(CommAlgebra::field()).ok());
  EXPECT_TRUE(check_comm_assoc_unital(CommAlgebra::truncated_polynomial(2)).ok());
  EXPECT_TRUE(check_comm_assoc_unital(CommAlgebra::truncated_polynomial(4)).ok());
}

TEST(CommAlgebra, AsymmetricTableFailsWithWitness) {
  CommAlgebra a = CommAlgebra::truncated_polynomial(2);
  a.product[1][1] = {Scalar(1), Scalar(1)};
  EXPECT_TRUE(check_comm_assoc_unital(a).ok());
  a.product[1][0] = {Scalar(0), Scalar(0)};
  const Report r = check_comm_assoc_unital(a);
  EXPECT_FALSE(r.passed("commutativity"));
  EXPECT_EQ(r.find("commutativity")->witness.at("pair"), "(0,1)");
}

TEST(CommAlgebra, NonassociativeTableFails) {
  // basis 1, x, y with x² = y, y² = x and xy = 0
  CommAlgebra a;
  a.dim = 3;
  a.unit = unit_vector(3, 0);
  a.product.assign(3, std::vector<Vector>(3, Vector(3)));
  for (std::size_t i = 0; i < 3; ++i) a.product[0][i] = a.product[i][0] = unit_vector(3, i);
  a.product[1][1] = unit_vector(3, 2);
  a.product[2][2] = unit_vector(3, 1);
  const Report r = check_comm_assoc_unital(a);
  EXPECT_TRUE(r.passed("commutativity"));
  EXPECT_FALSE(r.passed("associativity"));
}

TEST(CommAlgebra, WrongUnitFails) {
  CommAlgebra a = CommAlgebra::truncated_polynomial(2);
  a.unit = unit_vector(2, 1);
  EXPECT_FALSE(check_comm_assoc_unital(a).passed("unit"));
}

TEST(Derivation, Examples) {
  const CommAlgebra dual = CommAlgebra::truncated_polynomial(2);
  EXPECT_TRUE(is_derivation(dual, Matrix(2, 2)));
  EXPECT_FALSE(is_derivation(dual, Matrix::identity(2)));
  EXPECT_TRUE(is_derivation(dual, Matrix{{0, 0}, {0, 1}}));
}

TEST(DerivationSpace, FieldHasNone) { EXPECT_TRUE(derivation_space(CommAlgebra::field()).empty()); }

TEST(DerivationSpace, DualNumbersSpannedByEulerField) {
  const auto d = derivation_space(CommAlgebra::truncated_polynomial(2));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_TRUE(in_span(d, Matrix{{0, 0}, {0, 1}}));
}

TEST(DerivationSpace, CubicTruncation) {
  const CommAlgebra a = CommAlgebra::truncated_polynomial(3);
  const auto d = derivation_space(a);
  ASSERT_EQ(d.size(), 2u);
  // t d/dt and t² d/dt on the basis 1, t, t²
  EXPECT_TRUE(in_span(d, Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  EXPECT_TRUE(in_span(d, Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}}));
}

TEST(DerivationSpace, MembersAreDerivationsKillingTheUnitAndClosedUnderCommutator) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const CommAlgebra a = CommAlgebra::truncated_polynomial(k);
    const auto d = derivation_space(a);
    for (const auto& x : d) {
      EXPECT_TRUE(is_derivation(a, x));
      EXPECT_TRUE(is_zero(x * a.unit));
      for (const auto& y : d) EXPECT_TRUE(is_derivation(a, commutator(x, y)));
    }
  }
}
