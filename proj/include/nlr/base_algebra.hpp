#pragma once

// Finite-dimensional commutative associative unital algebras by structure
// constants, and their derivations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlr/exact.hpp"
#include "nlr/report.hpp"

namespace nlr {

struct CommAlgebra {
  std::size_t dim = 0;
  Vector unit;
  std::vector<std::vector<Vector>> product;  // product[i][j] = a_i · a_j

  static CommAlgebra field() {
    CommAlgebra a;
    a.dim = 1;
    a.unit = {Scalar(1)};
    a.product = {{{Scalar(1)}}};
    return a;
  }

  /// ℚ[t]/(t^k) on the basis 1, t, …, t^{k-1}.
  static CommAlgebra truncated_polynomial(std::size_t k) {
    if (k == 0) throw DimensionError("truncated_polynomial: k must be positive");
    CommAlgebra a;
    a.dim = k;
    a.unit = unit_vector(k, 0);
    a.product.assign(k, std::vector<Vector>(k, Vector(k)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i + j < k) a.product[i][j][i + j] = 1;
    return a;
  }

  void validate() const {
    if (unit.size() != dim) throw DimensionError("base algebra: unit has wrong length");
    if (product.size() != dim) throw DimensionError("base algebra: product table has wrong size");
    for (const auto& row : product) {
      if (row.size() != dim) throw DimensionError("base algebra: product table has wrong size");
      for (const auto& v : row)
        if (v.size() != dim) throw DimensionError("base algebra: product entry has wrong length");
    }
  }

  Vector mul(const Vector& a, const Vector& b) const {
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (sgn(b[j]) != 0) axpy(out, a[i] * b[j], product[i][j]);
    }
    return out;
  }

  /// Matrix of b ↦ a·b.
  Matrix mult_matrix(const Vector& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector col = mul(a, unit_vector(dim, j));
      for (std::size_t r = 0; r < dim; ++r) m(r, j) = col[r];
    }
    return m;
  }

  Matrix basis_mult(std::size_t i) const { return mult_matrix(unit_vector(dim, i)); }

  /// Index of the unit when it is a basis vector.
  std::optional<std::size_t> unit_index() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(unit[i]) == 0) continue;
      if (unit[i] != 1 || found) return std::nullopt;
      found = i;
    }
    return found;
  }

  friend bool operator==(const CommAlgebra&, const CommAlgebra&) = default;
};

inline Report check_comm_assoc_unital(const CommAlgebra& a) {
  a.validate();
  Report r("base_algebra");
  const std::size_t d = a.dim;
  std::optional<Witness> w;
  for (std::size_t i = 0; i < d && !w; ++i)
    for (std::size_t j = i + 1; j < d && !w; ++j)
      if (a.product[i][j] != a.product[j][i])
        w = Witness{{"pair", "(" + std::to_string(i) + "," + std::to_string(j) + ")"},
                    {"ij", to_string(a.product[i][j])},
                    {"ji", to_string(a.product[j][i])}};
  r.record("commutativity", w);
  w.reset();
  for (std::size_t i = 0; i < d && !w; ++i)
    for (std::size_t j = 0; j < d && !w; ++j)
      for (std::size_t k = 0; k < d && !w; ++k) {
        Vector lhs = a.mul(a.product[i][j], unit_vector(d, k));
        Vector rhs = a.mul(unit_vector(d, i), a.product[j][k]);
        if (lhs != rhs)
          w = Witness{{"triple", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")"},
                      {"lhs", to_string(lhs)},
                      {"rhs", to_string(rhs)}};
      }
  r.record("associativity", w);
  w.reset();
  for (std::size_t i = 0; i < d && !w; ++i) {
    Vector v = a.mul(a.unit, unit_vector(d, i));
    if (v != unit_vector(d, i)) w = Witness{{"basis", std::to_string(i)}, {"unit_times_basis", to_string(v)}};
  }
  r.record("unit", w);
  return r;
}

/// First basis pair violating the Leibniz rule, if any.
inline std::optional<Witness> derivation_witness(const CommAlgebra& a, const Matrix& d) {
  if (d.rows() != a.dim || d.cols() != a.dim) throw DimensionError("derivation: matrix has wrong shape");
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      const Vector ei = unit_vector(a.dim, i);
      const Vector ej = unit_vector(a.dim, j);
      Vector lhs = d * a.product[i][j];
      Vector rhs = add(a.mul(d.column(i), ej), a.mul(ei, d.column(j)));
      if (lhs != rhs)
        return Witness{{"pair", "(" + std::to_string(i) + "," + std::to_string(j) + ")"},
                       {"lhs", to_string(lhs)},
                       {"rhs", to_string(rhs)}};
    }
  return std::nullopt;
}

inline bool is_derivation(const CommAlgebra& a, const Matrix& d) { return !derivation_witness(a, d); }

/// Basis of Der(A), read off the canonical kernel of the Leibniz constraints.
inline std::vector<Matrix> derivation_space(const CommAlgebra& a) {
  const std::size_t d = a.dim;
  const auto var = [d](std::size_t r, std::size_t c) { return r * d + c; };
  RowEchelon e(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        Vector row(d * d);
        for (std::size_t k = 0; k < d; ++k) {
          row[var(r, k)] += a.product[i][j][k];
          row[var(k, i)] -= a.product[k][j][r];
          row[var(k, j)] -= a.product[i][k][r];
        }
        e.add(row);
      }
  std::vector<Matrix> out;
  for (const auto& v : e.null_space()) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m(r, c) = v[var(r, c)];
    out.push_back(std::move(m));
  }
  return out;
}

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

}  // namespace nlr
