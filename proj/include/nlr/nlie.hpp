#pragma once

// n-Lie (Filippov) algebras by alternating structure constants, the
// fundamental bracket on fundamental elements, morphisms, ideals, quotients.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlr/alternating_map.hpp"
#include "nlr/exact.hpp"
#include "nlr/report.hpp"
#include "nlr/wedge.hpp"

namespace nlr {

struct NLieAlgebra {
  std::size_t dim = 0;
  std::size_t n = 2;
  VectorMap bracket;

  static NLieAlgebra abelian(std::size_t dim, std::size_t n) {
    return {dim, n, make_vector_map(n, dim, dim)};
  }

  /// Builds the table from values on canonical basis tuples.
  static NLieAlgebra from_function(std::size_t dim, std::size_t n,
                                   const std::function<Vector(const Index&)>& f) {
    NLieAlgebra l = abelian(dim, n);
    for (const auto& t : enumerate_blocks(dim, n)) l.bracket.set(t, f(t));
    return l;
  }

  void validate() const {
    if (n < 2) throw DimensionError("n-Lie algebra: arity must be at least 2");
    if (bracket.arity() != n || bracket.domain_dim() != dim || bracket.zero().size() != dim)
      throw DimensionError("n-Lie algebra: bracket table does not match dim/arity");
  }

  Vector at(const Index& tuple) const { return bracket.at(tuple); }
  Vector eval(const std::vector<Vector>& args) const { return bracket.eval(args); }

  /// ad(x_1, …, x_{n-1}) as a matrix on L.
  Matrix ad(const std::vector<Vector>& xs) const {
    if (xs.size() + 1 != n) throw DimensionError("ad: expected n-1 arguments");
    Matrix m(dim, dim);
    std::vector<Vector> args = xs;
    args.push_back(Vector(dim));
    for (std::size_t j = 0; j < dim; ++j) {
      args.back() = unit_vector(dim, j);
      Vector col = eval(args);
      for (std::size_t r = 0; r < dim; ++r) m(r, j) = col[r];
    }
    return m;
  }

  Matrix ad_basis(const Index& xs) const { return ad(basis_args(xs, dim)); }

  friend bool operator==(const NLieAlgebra& a, const NLieAlgebra& b) {
    return a.dim == b.dim && a.n == b.n && a.bracket == b.bracket;
  }
};

/// [y_1, …, v, …, y_n] with v in slot i and basis vectors elsewhere.
inline Vector bracket_with_slot(const NLieAlgebra& l, const Index& ys, std::size_t slot, const Vector& v) {
  std::vector<Vector> args = basis_args(ys, l.dim);
  args[slot] = v;
  return l.eval(args);
}

inline Report check_fundamental_identity(const NLieAlgebra& l) {
  l.validate();
  Report r("fundamental_identity");
  const auto xs = enumerate_blocks(l.dim, l.n - 1);
  const auto ys = enumerate_blocks(l.dim, l.n);
  for (const auto& x : xs) {
    const Matrix adx = l.ad_basis(x);
    for (const auto& y : ys) {
      Vector lhs = adx * l.at(y);
      Vector rhs(l.dim);
      for (std::size_t i = 0; i < l.n; ++i) axpy(rhs, 1, bracket_with_slot(l, y, i, adx.column(y[i])));
      if (lhs != rhs) {
        r.fail("fundamental_identity",
               {{"x", to_string(x)}, {"y", to_string(y)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
        return r;
      }
    }
  }
  r.pass("fundamental_identity");
  return r;
}

/// Ordinary bilinear algebra with no symmetry imposed.
struct LeibnizAlgebra {
  std::size_t dim = 0;
  std::vector<std::vector<Vector>> table;  // table[i][j] = [b_i, b_j]

  static LeibnizAlgebra zero(std::size_t dim) {
    return {dim, std::vector<std::vector<Vector>>(dim, std::vector<Vector>(dim, Vector(dim)))};
  }

  Vector eval(const Vector& x, const Vector& y) const {
    Vector out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j)
        if (sgn(y[j]) != 0) axpy(out, x[i] * y[j], table[i][j]);
    }
    return out;
  }

  /// Matrix of y ↦ [x, y].
  Matrix left(const Vector& x) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector col = eval(x, unit_vector(dim, j));
      for (std::size_t r = 0; r < dim; ++r) m(r, j) = col[r];
    }
    return m;
  }

  friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) = default;
};

/// [X, Y]_F on the canonical basis of the (n-1)-th wedge power.
inline LeibnizAlgebra fundamental_bracket(const NLieAlgebra& l) {
  l.validate();
  const BlockBasis blocks(l.dim, l.n - 1);
  LeibnizAlgebra b = LeibnizAlgebra::zero(blocks.size());
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    const Matrix adx = l.ad_basis(blocks[a]);
    for (std::size_t c = 0; c < blocks.size(); ++c) {
      const Index& y = blocks[c];
      Vector sum(blocks.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<Vector> factors = basis_args(y, l.dim);
        factors[i] = adx.column(y[i]);
        axpy(sum, 1, blocks.wedge(factors));
      }
      b.table[a][c] = std::move(sum);
    }
  }
  return b;
}

inline Report check_leibniz(const LeibnizAlgebra& b) {
  Report r("leibniz");
  for (std::size_t x = 0; x < b.dim; ++x)
    for (std::size_t y = 0; y < b.dim; ++y)
      for (std::size_t z = 0; z < b.dim; ++z) {
        const Vector ex = unit_vector(b.dim, x);
        const Vector ey = unit_vector(b.dim, y);
        Vector lhs = b.eval(ex, b.table[y][z]);
        Vector rhs = add(b.eval(b.table[x][y], unit_vector(b.dim, z)), b.eval(ey, b.table[x][z]));
        if (lhs != rhs) {
          r.fail("leibniz_identity", {{"triple", to_string(Index{x, y, z})},
                                      {"lhs", to_string(lhs)},
                                      {"rhs", to_string(rhs)}});
          return r;
        }
      }
  r.pass("leibniz_identity");
  return r;
}

inline std::vector<Vector> apply_all(const Matrix& f, const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(f * v);
  return out;
}

inline std::optional<Witness> morphism_witness(const Matrix& f, const NLieAlgebra& l, const NLieAlgebra& l2) {
  if (f.cols() != l.dim || f.rows() != l2.dim) throw DimensionError("morphism: matrix shape mismatch");
  if (l.n != l2.n) throw DimensionError("morphism: arity mismatch");
  for (const auto& t : enumerate_blocks(l.dim, l.n)) {
    Vector lhs = f * l.at(t);
    Vector rhs = l2.eval(apply_all(f, basis_args(t, l.dim)));
    if (lhs != rhs) return Witness{{"tuple", to_string(t)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
  }
  return std::nullopt;
}

inline bool is_morphism(const Matrix& f, const NLieAlgebra& l, const NLieAlgebra& l2) {
  return !morphism_witness(f, l, l2);
}

/// Linearly independent spanning set inside an ambient coordinate space.
struct Subspace {
  std::size_t ambient = 0;
  std::vector<Vector> basis;

  /// Keeps the vectors that are independent of the earlier ones.
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vs) {
    Subspace s{ambient, {}};
    RowEchelon e(ambient);
    for (const auto& v : vs) {
      if (v.size() != ambient) throw DimensionError("subspace: vector length mismatch");
      if (e.add(v)) s.basis.push_back(v);
    }
    return s;
  }

  static Subspace whole(std::size_t ambient) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
    return {ambient, vs};
  }

  std::size_t dim() const { return basis.size(); }
  Matrix matrix() const { return Matrix::from_columns(basis, ambient); }

  bool contains(const Vector& v) const {
    RowEchelon e(ambient);
    for (const auto& b : basis) e.add(b);
    return e.in_span(v);
  }

  /// Coordinates in the basis, or nullopt outside the span.
  std::optional<Vector> coordinates(const Vector& v) const { return solve_in_span(matrix(), v); }
};

namespace detail {

inline std::optional<Witness> closure_witness(const NLieAlgebra& l, const Subspace& s, bool ideal) {
  RowEchelon e(l.dim);
  for (const auto& b : s.basis) e.add(b);
  if (ideal) {
    for (std::size_t k = 0; k < s.dim(); ++k)
      for (const auto& t : enumerate_blocks(l.dim, l.n - 1)) {
        std::vector<Vector> args = basis_args(t, l.dim);
        args.insert(args.begin(), s.basis[k]);
        Vector v = l.eval(args);
        if (!e.in_span(v))
          return Witness{{"subspace_basis", std::to_string(k)}, {"others", to_string(t)}, {"bracket", to_string(v)}};
      }
  } else {
    for (const auto& t : enumerate_blocks(s.dim(), l.n)) {
      std::vector<Vector> args;
      for (auto i : t) args.push_back(s.basis[i]);
      Vector v = l.eval(args);
      if (!e.in_span(v)) return Witness{{"subspace_tuple", to_string(t)}, {"bracket", to_string(v)}};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Witness> ideal_witness(const NLieAlgebra& l, const Subspace& s) {
  return detail::closure_witness(l, s, true);
}
inline std::optional<Witness> subalgebra_witness(const NLieAlgebra& l, const Subspace& s) {
  return detail::closure_witness(l, s, false);
}
inline bool is_ideal(const NLieAlgebra& l, const Subspace& s) { return !ideal_witness(l, s); }
inline bool is_subalgebra(const NLieAlgebra& l, const Subspace& s) { return !subalgebra_witness(l, s); }

/// Projection onto the span of the standard vectors completing a subspace,
/// chosen greedily in index order.
struct Complement {
  std::vector<std::size_t> columns;  // standard basis indices spanning the complement
  Matrix projection;                 // ambient → complement coordinates, kills the subspace
  Matrix section;                    // complement coordinates → ambient
};

inline Complement complement_of(const Subspace& s) {
  RowEchelon e(s.ambient);
  for (const auto& b : s.basis) e.add(b);
  Complement c;
  for (std::size_t i = 0; i < s.ambient; ++i)
    if (e.add(unit_vector(s.ambient, i))) c.columns.push_back(i);
  std::vector<Vector> cols = s.basis;
  for (auto i : c.columns) cols.push_back(unit_vector(s.ambient, i));
  const Matrix inv = inverse(Matrix::from_columns(cols, s.ambient));
  const std::size_t q = c.columns.size();
  c.projection = Matrix(q, s.ambient);
  c.section = Matrix(s.ambient, q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t k = 0; k < s.ambient; ++k) c.projection(r, k) = inv(s.dim() + r, k);
    c.section(c.columns[r], r) = 1;
  }
  return c;
}

struct Quotient {
  NLieAlgebra algebra;
  Matrix projection;
  Matrix section;
  std::vector<std::size_t> complement;
};

inline Quotient quotient(const NLieAlgebra& l, const Subspace& ideal) {
  if (auto w = ideal_witness(l, ideal)) throw Error("quotient: subspace is not an ideal at " + w->at("others"));
  Complement c = complement_of(ideal);
  const std::size_t q = c.columns.size();
  NLieAlgebra out = NLieAlgebra::from_function(q, l.n, [&](const Index& t) {
    return c.projection * l.eval(apply_all(c.section, basis_args(t, q)));
  });
  return {std::move(out), c.projection, c.section, c.columns};
}

}  // namespace nlr
