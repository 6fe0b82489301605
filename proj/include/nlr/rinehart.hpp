#pragma once

// n-Lie Rinehart algebras: an n-Lie algebra L that is a module over a
// commutative algebra A, with an anchor into Der(A).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlr/alternating_map.hpp"
#include "nlr/base_algebra.hpp"
#include "nlr/exact.hpp"
#include "nlr/nlie.hpp"
#include "nlr/report.hpp"
#include "nlr/wedge.hpp"

namespace nlr {

struct NLieRinehart {
  CommAlgebra base;
  NLieAlgebra lie;
  std::vector<Matrix> a_action;  // one dim(L)×dim(L) matrix per basis vector of A
  MatrixMap anchor;              // arity n-1 on L, values dim(A)×dim(A)

  std::size_t dim() const { return lie.dim; }
  std::size_t n() const { return lie.n; }

  /// R = (A, L) with the trivial action over A = ℚ and zero anchor.
  static NLieRinehart over_field(NLieAlgebra l) {
    NLieRinehart r;
    r.base = CommAlgebra::field();
    r.a_action = {Matrix::identity(l.dim)};
    r.anchor = make_matrix_map(l.n - 1, l.dim, 1, 1);
    r.lie = std::move(l);
    return r;
  }

  void validate() const {
    base.validate();
    lie.validate();
    if (a_action.size() != base.dim) throw DimensionError("rinehart: need one action matrix per basis vector of A");
    for (const auto& m : a_action)
      if (m.rows() != dim() || m.cols() != dim()) throw DimensionError("rinehart: action matrix has wrong shape");
    if (anchor.arity() != n() - 1 || anchor.domain_dim() != dim() || anchor.zero().rows() != base.dim ||
        anchor.zero().cols() != base.dim)
      throw DimensionError("rinehart: anchor table does not match dimensions");
  }

  /// Action of an arbitrary element of A on L.
  Matrix act(const Vector& a) const {
    Matrix m(dim(), dim());
    for (std::size_t k = 0; k < base.dim; ++k) accumulate(m, a[k], a_action[k]);
    return m;
  }

  Matrix rho(const std::vector<Vector>& xs) const { return anchor.eval(xs); }
  Matrix rho_basis(const Index& xs) const { return anchor.at(xs); }

  friend bool operator==(const NLieRinehart& a, const NLieRinehart& b) {
    return a.base == b.base && a.lie == b.lie && a.a_action == b.a_action && a.anchor == b.anchor;
  }
};

/// Action of A on a carrier given by per-basis matrices.
inline Matrix combine(const std::vector<Matrix>& action, const Vector& a, std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t k = 0; k < action.size(); ++k) accumulate(m, a[k], action[k]);
  return m;
}

inline std::optional<Witness> module_witness(const CommAlgebra& a, const std::vector<Matrix>& action,
                                             std::size_t dim) {
  if (combine(action, a.unit, dim) != Matrix::identity(dim)) return Witness{{"unit", "does not act as identity"}};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Matrix lhs = action[i] * action[j];
      Matrix rhs = combine(action, a.product[i][j], dim);
      if (lhs != rhs)
        return Witness{{"pair", to_string(Index{i, j})}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    }
  return std::nullopt;
}

using PsiFn = std::function<Matrix(const std::vector<Vector>&)>;

/// Both representation identities of an n-Lie algebra for ψ, on basis data.
inline void check_rep_identities(const NLieAlgebra& l, const PsiFn& psi, Report& r, const std::string& prefix) {
  const std::size_t n = l.n;
  const std::size_t d = l.dim;
  const auto blocks = enumerate_blocks(d, n - 1);
  std::optional<Witness> w;
  for (std::size_t a = 0; a < blocks.size() && !w; ++a) {
    const auto xs = basis_args(blocks[a], d);
    const Matrix px = psi(xs);
    const Matrix adx = l.ad(xs);
    for (std::size_t b = 0; b < blocks.size() && !w; ++b) {
      const auto ys = basis_args(blocks[b], d);
      const Matrix py = psi(ys);
      Matrix lhs = px * py - py * px;
      Matrix rhs(px.rows(), px.cols());
      for (std::size_t i = 0; i < ys.size(); ++i) {
        auto zs = ys;
        zs[i] = adx * ys[i];
        rhs += psi(zs);
      }
      if (lhs != rhs)
        w = Witness{{"x", to_string(blocks[a])}, {"y", to_string(blocks[b])}, {"lhs", to_string(lhs)},
                    {"rhs", to_string(rhs)}};
    }
  }
  r.record(prefix + "rep1", w);
  w.reset();
  const auto xs_all = enumerate_blocks(d, n - 2);
  const auto ys_all = enumerate_blocks(d, n);
  for (const auto& x : xs_all) {
    if (w) break;
    for (const auto& y : ys_all) {
      auto args = basis_args(x, d);
      args.push_back(l.at(y));
      Matrix lhs = psi(args);
      Matrix rhs(lhs.rows(), lhs.cols());
      for (std::size_t i = 0; i < n; ++i) {
        Index hat;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) hat.push_back(y[j]);
        auto inner = basis_args(x, d);
        inner.push_back(unit_vector(d, y[i]));
        // sign (-1)^{n-i} with i counted from 1
        const int sign = ((n - (i + 1)) % 2 == 0) ? 1 : -1;
        accumulate(rhs, sign, psi(basis_args(hat, d)) * psi(inner));
      }
      if (lhs != rhs) {
        w = Witness{{"x", to_string(x)}, {"y", to_string(y)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
        break;
      }
    }
  }
  r.record(prefix + "rep2", w);
}

inline Report verify_rinehart(const NLieRinehart& R, bool weak = false) {
  R.validate();
  Report r("verify");
  r.merge(check_comm_assoc_unital(R.base), "base_");
  r.record("a_module", module_witness(R.base, R.a_action, R.dim()));
  r.merge(check_fundamental_identity(R.lie));

  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  const std::size_t da = R.base.dim;
  const auto blocks = enumerate_blocks(d, n - 1);

  std::optional<Witness> w;
  for (const auto& b : blocks) {
    if (auto dw = derivation_witness(R.base, R.rho_basis(b))) {
      w = *dw;
      (*w)["x"] = to_string(b);
      break;
    }
  }
  r.record("anchor_derivation", w);

  check_rep_identities(R.lie, [&](const std::vector<Vector>& xs) { return R.rho(xs); }, r, "anchor_");

  // ρ(a x_1, …) = a ρ(x_1, …), in the first slot and then in the others
  const auto rest = enumerate_blocks(d, n - 2);
  for (std::size_t slot = 0; slot < 2; ++slot) {
    const std::string name = slot == 0 ? "anchor_a_linear" : "anchor_a_linear_other_slots";
    if (weak) {
      r.skip(name);
      continue;
    }
    if (slot == 1 && n < 3) {
      r.skip(name);
      continue;
    }
    w.reset();
    for (std::size_t k = 0; k < da && !w; ++k) {
      const Matrix ak = R.base.basis_mult(k);
      for (std::size_t x = 0; x < d && !w; ++x)
        for (const auto& y : rest) {
          auto args = basis_args(y, d);
          const std::size_t pos = slot == 0 ? 0 : 1;
          args.insert(args.begin() + static_cast<std::ptrdiff_t>(std::min(pos, args.size())), unit_vector(d, x));
          const Matrix plain = R.rho(args);
          args[std::min(pos, args.size() - 1)] = R.a_action[k] * unit_vector(d, x);
          Matrix lhs = R.rho(args);
          Matrix rhs = ak * plain;
          if (lhs != rhs) {
            w = Witness{{"a", std::to_string(k)}, {"x", std::to_string(x)}, {"others", to_string(y)},
                        {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
            break;
          }
        }
    }
    r.record(name, w);
  }

  // [x_1, …, x_{n-1}, a x_n] = a [x_1, …, x_n] + ρ(x_1, …, x_{n-1})(a) x_n
  w.reset();
  for (const auto& b : blocks) {
    if (w) break;
    const auto xs = basis_args(b, d);
    const Matrix adx = R.lie.ad(xs);
    const Matrix rx = R.rho(xs);
    for (std::size_t k = 0; k < da && !w; ++k) {
      const Matrix correction = R.act(rx.column(k));
      for (std::size_t z = 0; z < d; ++z) {
        Vector lhs = adx * (R.a_action[k] * unit_vector(d, z));
        Vector rhs = add(R.a_action[k] * adx.column(z), correction.column(z));
        if (lhs != rhs) {
          w = Witness{{"x", to_string(b)}, {"a", std::to_string(k)}, {"last", std::to_string(z)},
                      {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          break;
        }
      }
    }
  }
  r.record("compatibility", w);

  // [a x_1, x_2, …, x_n] = a [x_1, …, x_n] + (-1)^{n-1} ρ(x_2, …, x_n)(a) x_1
  w.reset();
  const int sign = (n - 1) % 2 == 0 ? 1 : -1;
  for (const auto& b : blocks) {
    if (w) break;
    const auto xs = basis_args(b, d);
    const Matrix rx = R.rho(xs);
    for (std::size_t k = 0; k < da && !w; ++k) {
      const Matrix correction = R.act(rx.column(k));
      for (std::size_t z = 0; z < d; ++z) {
        std::vector<Vector> args = xs;
        args.insert(args.begin(), R.a_action[k] * unit_vector(d, z));
        Vector lhs = R.lie.eval(args);
        args[0] = unit_vector(d, z);
        Vector rhs = R.a_action[k] * R.lie.eval(args);
        axpy(rhs, sign, correction.column(z));
        if (lhs != rhs) {
          w = Witness{{"first", std::to_string(z)}, {"others", to_string(b)}, {"a", std::to_string(k)},
                      {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          break;
        }
      }
    }
  }
  r.record("compatibility_first_slot", w);
  return r;
}

/// K = {x : ρ(x, L, …, L) = 0}.
inline Subspace anchor_kernel(const NLieRinehart& R) {
  const std::size_t d = R.dim();
  const std::size_t da = R.base.dim;
  RowEchelon e(d);
  for (const auto& y : enumerate_blocks(d, R.n() - 2)) {
    std::vector<Matrix> vals;
    for (std::size_t j = 0; j < d; ++j) {
      auto args = basis_args(y, d);
      args.insert(args.begin(), unit_vector(d, j));
      vals.push_back(R.rho(args));
    }
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < da; ++c) {
        Vector row(d);
        for (std::size_t j = 0; j < d; ++j) row[j] = vals[j](r, c);
        e.add(row);
      }
  }
  return {d, e.null_space()};
}

/// Ideal conditions: bracket ideal, A-stable, ρ(i, x_2, …)(a)·y ∈ I.
inline Report check_rinehart_ideal(const NLieRinehart& R, const Subspace& s) {
  Report r("ideal");
  r.record("nlie_ideal", ideal_witness(R.lie, s));
  const std::size_t d = R.dim();
  std::optional<Witness> w;
  for (std::size_t k = 0; k < R.base.dim && !w; ++k)
    for (std::size_t i = 0; i < s.dim() && !w; ++i) {
      Vector v = R.a_action[k] * s.basis[i];
      if (!s.contains(v)) w = Witness{{"a", std::to_string(k)}, {"subspace_basis", std::to_string(i)}, {"image", to_string(v)}};
    }
  r.record("a_stable", w);
  w.reset();
  for (std::size_t i = 0; i < s.dim() && !w; ++i)
    for (const auto& y : enumerate_blocks(d, R.n() - 2)) {
      if (w) break;
      auto args = basis_args(y, d);
      args.insert(args.begin(), s.basis[i]);
      const Matrix rho = R.rho(args);
      for (std::size_t k = 0; k < R.base.dim && !w; ++k) {
        const Matrix act = R.act(rho.column(k));
        for (std::size_t z = 0; z < d; ++z) {
          Vector v = act.column(z);
          if (!s.contains(v)) {
            w = Witness{{"subspace_basis", std::to_string(i)}, {"others", to_string(y)}, {"a", std::to_string(k)},
                        {"y", std::to_string(z)}, {"image", to_string(v)}};
            break;
          }
        }
      }
    }
  r.record("anchor_condition", w);
  return r;
}

inline Report check_rinehart_subalgebra(const NLieRinehart& R, const Subspace& s) {
  Report r("subalgebra");
  r.record("nlie_subalgebra", subalgebra_witness(R.lie, s));
  std::optional<Witness> w;
  for (std::size_t k = 0; k < R.base.dim && !w; ++k)
    for (std::size_t i = 0; i < s.dim() && !w; ++i) {
      Vector v = R.a_action[k] * s.basis[i];
      if (!s.contains(v)) w = Witness{{"a", std::to_string(k)}, {"subspace_basis", std::to_string(i)}};
    }
  r.record("a_stable", w);
  return r;
}

/// Flags R as decomposable when I and J are nonzero ideals with L = I ⊕ J.
inline Report check_decomposition(const NLieRinehart& R, const Subspace& i, const Subspace& j) {
  Report r("decomposition");
  r.merge(check_rinehart_ideal(R, i), "I_");
  r.merge(check_rinehart_ideal(R, j), "J_");
  if (i.dim() == 0 || j.dim() == 0)
    r.fail("nonzero", {{"dim_I", std::to_string(i.dim())}, {"dim_J", std::to_string(j.dim())}});
  else
    r.pass("nonzero");
  std::vector<Vector> all = i.basis;
  all.insert(all.end(), j.basis.begin(), j.basis.end());
  const std::size_t sum_rank = Subspace::span(R.dim(), all).dim();
  if (sum_rank != i.dim() + j.dim())
    r.fail("trivial_intersection", {{"dim_intersection", std::to_string(i.dim() + j.dim() - sum_rank)}});
  else
    r.pass("trivial_intersection");
  if (sum_rank != R.dim())
    r.fail("spans", {{"dim_sum", std::to_string(sum_rank)}});
  else
    r.pass("spans");
  r.set_number("decomposable", r.ok() ? 1 : 0);
  return r;
}

/// Fundamental elements as a Leibniz-Rinehart algebra.
struct LeibnizRinehart {
  CommAlgebra base;
  BlockBasis carrier;
  LeibnizAlgebra leib;
  std::vector<Matrix> a_action;  // a(x_1 ∧ x_2 ∧ …) = (a x_1) ∧ x_2 ∧ … on canonical blocks
  std::vector<Matrix> anchor;    // one derivation per canonical block
};

inline LeibnizRinehart leibniz_rinehart(const NLieRinehart& R) {
  const std::size_t d = R.dim();
  LeibnizRinehart out;
  out.base = R.base;
  out.carrier = BlockBasis(d, R.n() - 1);
  out.leib = fundamental_bracket(R.lie);
  const std::size_t N = out.carrier.size();
  for (std::size_t k = 0; k < R.base.dim; ++k) {
    Matrix m(N, N);
    for (std::size_t b = 0; b < N; ++b) {
      auto factors = basis_args(out.carrier[b], d);
      factors[0] = R.a_action[k] * factors[0];
      Vector col = out.carrier.wedge(factors);
      for (std::size_t r = 0; r < N; ++r) m(r, b) = col[r];
    }
    out.a_action.push_back(std::move(m));
  }
  for (std::size_t b = 0; b < N; ++b) out.anchor.push_back(R.rho_basis(out.carrier[b]));
  return out;
}

inline Report verify_leibniz_rinehart(const LeibnizRinehart& lr) {
  Report r("leibniz_rinehart");
  r.merge(check_leibniz(lr.leib));
  const std::size_t N = lr.carrier.size();
  r.record("a_module", module_witness(lr.base, lr.a_action, N));
  const auto rho = [&](const Vector& x) {
    Matrix m(lr.base.dim, lr.base.dim);
    for (std::size_t b = 0; b < N; ++b) accumulate(m, x[b], lr.anchor[b]);
    return m;
  };
  std::optional<Witness> w;
  for (std::size_t b = 0; b < N && !w; ++b)
    if (auto dw = derivation_witness(lr.base, lr.anchor[b])) w = *dw;
  r.record("anchor_derivation", w);
  w.reset();
  for (std::size_t x = 0; x < N && !w; ++x)
    for (std::size_t y = 0; y < N && !w; ++y) {
      Matrix lhs = rho(lr.leib.table[x][y]);
      Matrix rhs = commutator(lr.anchor[x], lr.anchor[y]);
      if (lhs != rhs) w = Witness{{"pair", to_string(Index{x, y})}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    }
  r.record("anchor_bracket", w);
  w.reset();
  for (std::size_t k = 0; k < lr.base.dim && !w; ++k)
    for (std::size_t x = 0; x < N && !w; ++x) {
      Matrix lhs = rho(lr.a_action[k].column(x));
      Matrix rhs = lr.base.basis_mult(k) * lr.anchor[x];
      if (lhs != rhs) w = Witness{{"a", std::to_string(k)}, {"x", std::to_string(x)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    }
  r.record("anchor_a_linear", w);
  w.reset();
  for (std::size_t x = 0; x < N && !w; ++x) {
    const Matrix left = lr.leib.left(unit_vector(N, x));
    for (std::size_t k = 0; k < lr.base.dim && !w; ++k) {
      const Matrix correction = combine(lr.a_action, lr.anchor[x].column(k), N);
      for (std::size_t y = 0; y < N; ++y) {
        Vector lhs = left * lr.a_action[k].column(y);
        Vector rhs = add(lr.a_action[k] * left.column(y), correction.column(y));
        if (lhs != rhs) {
          w = Witness{{"x", to_string(lr.carrier[x])}, {"y", to_string(lr.carrier[y])}, {"a", std::to_string(k)},
                      {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          break;
        }
      }
    }
  }
  r.record("compatibility", w);
  return r;
}

/// A ⊗ L with A acting on the first factor; basis a_i ⊗ x_j has index i·dim(L) + j.
inline NLieRinehart tensor_extend(const NLieRinehart& R) {
  const std::size_t da = R.base.dim;
  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  const std::size_t D = da * d;
  const auto a_of = [d](std::size_t idx) { return idx / d; };
  const auto x_of = [d](std::size_t idx) { return idx % d; };
  const auto product_of = [&](const Index& t, std::size_t count) {
    Vector p = R.base.unit;
    for (std::size_t i = 0; i < count; ++i) p = R.base.mul(p, unit_vector(da, a_of(t[i])));
    return p;
  };
  NLieRinehart out;
  out.base = R.base;
  out.lie = NLieAlgebra::from_function(D, n, [&](const Index& t) {
    Index xs;
    for (auto i : t) xs.push_back(x_of(i));
    const Vector br = R.lie.at(xs);
    const Vector a = product_of(t, n);
    Vector v(D);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < d; ++j) v[i * d + j] = a[i] * br[j];
    return v;
  });
  for (std::size_t k = 0; k < da; ++k) {
    Matrix m(D, D);
    for (std::size_t i = 0; i < da; ++i) {
      const Vector ka = R.base.product[k][i];
      for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t j = 0; j < d; ++j) m(i2 * d + j, i * d + j) = ka[i2];
    }
    out.a_action.push_back(std::move(m));
  }
  out.anchor = make_matrix_map(n - 1, D, da, da);
  for (const auto& t : enumerate_blocks(D, n - 1)) {
    Index xs;
    for (auto i : t) xs.push_back(x_of(i));
    out.anchor.set(t, R.base.mult_matrix(product_of(t, n - 1)) * R.rho_basis(xs));
  }
  return out;
}

/// Checks that (g, f) is a homomorphism from R to R2.
inline Report check_rinehart_morphism(const Matrix& g, const Matrix& f, const NLieRinehart& R, const NLieRinehart& R2) {
  if (g.rows() != R2.base.dim || g.cols() != R.base.dim) throw DimensionError("morphism: g has wrong shape");
  if (f.rows() != R2.dim() || f.cols() != R.dim()) throw DimensionError("morphism: f has wrong shape");
  Report r("rinehart_morphism");
  std::optional<Witness> w;
  if (g * R.base.unit != R2.base.unit) w = Witness{{"unit", "g(1) != 1"}};
  for (std::size_t i = 0; i < R.base.dim && !w; ++i)
    for (std::size_t j = 0; j < R.base.dim && !w; ++j) {
      Vector lhs = g * R.base.product[i][j];
      Vector rhs = R2.base.mul(g.column(i), g.column(j));
      if (lhs != rhs) w = Witness{{"pair", to_string(Index{i, j})}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
    }
  r.record("g_algebra_morphism", w);
  r.record("f_bracket_morphism", morphism_witness(f, R.lie, R2.lie));
  w.reset();
  for (std::size_t k = 0; k < R.base.dim && !w; ++k) {
    Matrix lhs = f * R.a_action[k];
    Matrix rhs = R2.act(g.column(k)) * f;
    if (lhs != rhs) w = Witness{{"a", std::to_string(k)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
  }
  r.record("a_equivariance", w);
  w.reset();
  for (const auto& t : enumerate_blocks(R.dim(), R.n() - 1)) {
    auto xs = basis_args(t, R.dim());
    Matrix lhs = g * R.rho(xs);
    Matrix rhs = R2.rho(apply_all(f, xs)) * g;
    if (lhs != rhs) {
      w = Witness{{"x", to_string(t)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
      break;
    }
  }
  r.record("anchor_intertwining", w);
  return r;
}

inline bool is_rinehart_morphism(const Matrix& g, const Matrix& f, const NLieRinehart& R, const NLieRinehart& R2) {
  return check_rinehart_morphism(g, f, R, R2).ok();
}

/// Quotient by an A-stable ideal. The anchor descends only when
/// ρ(I, L, …, L) = 0; the report records that condition.
struct RinehartQuotient {
  NLieRinehart algebra;
  Matrix projection;
  Matrix section;
  Report report;
};

inline RinehartQuotient rinehart_quotient(const NLieRinehart& R, const Subspace& ideal) {
  Quotient q = quotient(R.lie, ideal);
  RinehartQuotient out;
  out.report = Report("quotient");
  std::optional<Witness> w;
  for (std::size_t k = 0; k < R.base.dim && !w; ++k)
    for (std::size_t i = 0; i < ideal.dim() && !w; ++i)
      if (!ideal.contains(R.a_action[k] * ideal.basis[i]))
        w = Witness{{"a", std::to_string(k)}, {"subspace_basis", std::to_string(i)}};
  if (w) throw Error("quotient: ideal is not stable under A (a=" + w->at("a") + ")");
  w.reset();
  const std::size_t d = R.dim();
  for (std::size_t i = 0; i < ideal.dim() && !w; ++i)
    for (const auto& y : enumerate_blocks(d, R.n() - 2)) {
      auto args = basis_args(y, d);
      args.insert(args.begin(), ideal.basis[i]);
      Matrix v = R.rho(args);
      if (!v.is_zero()) {
        w = Witness{{"subspace_basis", std::to_string(i)}, {"others", to_string(y)}, {"value", to_string(v)}};
        break;
      }
    }
  out.report.record("anchor_descends", w);
  const std::size_t dq = q.algebra.dim;
  out.algebra.base = R.base;
  out.algebra.lie = q.algebra;
  for (const auto& m : R.a_action) out.algebra.a_action.push_back(q.projection * m * q.section);
  out.algebra.anchor = make_matrix_map(R.n() - 1, dq, R.base.dim, R.base.dim);
  for (const auto& t : enumerate_blocks(dq, R.n() - 1))
    out.algebra.anchor.set(t, R.rho(apply_all(q.section, basis_args(t, dq))));
  out.projection = q.projection;
  out.section = q.section;
  return out;
}

}  // namespace nlr
