#pragma once

// Representations (M, ψ) of an n-Lie Rinehart algebra, semidirect products,
// duals and the adjoint action on the anchor kernel.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlr/alternating_map.hpp"
#include "nlr/exact.hpp"
#include "nlr/nlie.hpp"
#include "nlr/report.hpp"
#include "nlr/rinehart.hpp"

namespace nlr {

struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> a_action;  // one dim×dim matrix per basis vector of A
  MatrixMap psi;                 // arity n-1 on L, values dim×dim

  Matrix eval(const std::vector<Vector>& xs) const { return psi.eval(xs); }
  Matrix at(const Index& xs) const { return psi.at(xs); }

  Matrix act(const Vector& a) const { return combine(a_action, a, dim); }

  void validate(const NLieRinehart& R) const {
    if (a_action.size() != R.base.dim) throw DimensionError("representation: need one action matrix per basis vector of A");
    for (const auto& m : a_action)
      if (m.rows() != dim || m.cols() != dim) throw DimensionError("representation: action matrix has wrong shape");
    if (psi.arity() != R.n() - 1 || psi.domain_dim() != R.dim() || psi.zero().rows() != dim || psi.zero().cols() != dim)
      throw DimensionError("representation: psi table does not match dimensions");
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dim == b.dim && a.a_action == b.a_action && a.psi == b.psi;
  }
};

/// (A, ρ).
inline Representation anchor_representation(const NLieRinehart& R) {
  Representation rep;
  rep.dim = R.base.dim;
  for (std::size_t k = 0; k < R.base.dim; ++k) rep.a_action.push_back(R.base.basis_mult(k));
  rep.psi = R.anchor;
  return rep;
}

/// The line ℚ with A acting through the coordinate of the unit and ψ = 0.
inline Representation trivial_representation(const NLieRinehart& R) {
  auto u = R.base.unit_index();
  if (!u) throw Error("trivial representation: the unit of A must be a basis vector");
  Representation rep;
  rep.dim = 1;
  for (std::size_t k = 0; k < R.base.dim; ++k) rep.a_action.push_back(Matrix{{Scalar(k == *u ? 1 : 0)}});
  rep.psi = make_matrix_map(R.n() - 1, R.dim(), 1, 1);
  return rep;
}

/// The adjoint map ad on L itself. It is a representation of the n-Lie
/// algebra, but in general not of the Rinehart structure.
inline Representation ad_map(const NLieRinehart& R) {
  Representation rep;
  rep.dim = R.dim();
  rep.a_action = R.a_action;
  rep.psi = make_matrix_map(R.n() - 1, R.dim(), R.dim(), R.dim());
  for (const auto& t : enumerate_blocks(R.dim(), R.n() - 1)) rep.psi.set(t, R.lie.ad_basis(t));
  return rep;
}

inline Report verify_representation(const NLieRinehart& R, const Representation& rep) {
  rep.validate(R);
  Report r("representation");
  r.record("a_module", module_witness(R.base, rep.a_action, rep.dim));
  check_rep_identities(R.lie, [&](const std::vector<Vector>& xs) { return rep.eval(xs); }, r, "");
  const std::size_t d = R.dim();
  std::optional<Witness> w;
  for (std::size_t k = 0; k < R.base.dim && !w; ++k)
    for (std::size_t x = 0; x < d && !w; ++x)
      for (const auto& y : enumerate_blocks(d, R.n() - 2)) {
        auto args = basis_args(y, d);
        args.insert(args.begin(), unit_vector(d, x));
        const Matrix plain = rep.eval(args);
        args[0] = R.a_action[k] * args[0];
        Matrix lhs = rep.eval(args);
        Matrix rhs = rep.a_action[k] * plain;
        if (lhs != rhs) {
          w = Witness{{"a", std::to_string(k)}, {"x", std::to_string(x)}, {"others", to_string(y)},
                      {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
          break;
        }
      }
  r.record("psi_a_linear", w);
  w.reset();
  for (const auto& t : enumerate_blocks(d, R.n() - 1)) {
    if (w) break;
    const Matrix p = rep.at(t);
    const Matrix rx = R.rho_basis(t);
    for (std::size_t k = 0; k < R.base.dim; ++k) {
      Matrix lhs = p * rep.a_action[k];
      Matrix rhs = rep.a_action[k] * p + rep.act(rx.column(k));
      if (lhs != rhs) {
        w = Witness{{"x", to_string(t)}, {"a", std::to_string(k)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
        break;
      }
    }
  }
  r.record("psi_leibniz", w);
  return r;
}

namespace detail {

inline int hat_sign(std::size_t n, std::size_t i) { return (n - (i + 1)) % 2 == 0 ? 1 : -1; }

/// L ⊕ M with the bracket
///   [x_1+m_1, …] = [x] + θ(x) + [m]_M + Σ (-1)^{n-i} ψ(…, x̂_i, …) m_i
/// and anchor ρ on the L-components. θ and the M-bracket are optional.
inline NLieRinehart build_extension(const NLieRinehart& R, std::size_t m, const std::vector<Matrix>& m_action,
                                    const MatrixMap& psi, const VectorMap* theta, const NLieAlgebra* m_bracket) {
  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  const std::size_t D = d + m;
  NLieRinehart out;
  out.base = R.base;
  out.lie = NLieAlgebra::from_function(D, n, [&](const Index& t) {
    Vector v(D);
    std::size_t in_m = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (t[i] >= d) {
        ++in_m;
        pos = i;
      }
    if (in_m == 0) {
      const Vector b = R.lie.at(t);
      for (std::size_t i = 0; i < d; ++i) v[i] = b[i];
      if (theta) {
        const Vector th = theta->at(t);
        for (std::size_t i = 0; i < m; ++i) v[d + i] = th[i];
      }
    } else if (in_m == 1) {
      Index xs;
      for (std::size_t i = 0; i < n; ++i)
        if (i != pos) xs.push_back(t[i]);
      const Vector col = psi.at(xs).column(t[pos] - d);
      for (std::size_t i = 0; i < m; ++i) v[d + i] = hat_sign(n, pos) * col[i];
    } else if (in_m == n && m_bracket) {
      Index ms;
      for (auto i : t) ms.push_back(i - d);
      const Vector b = m_bracket->at(ms);
      for (std::size_t i = 0; i < m; ++i) v[d + i] = b[i];
    }
    return v;
  });
  for (std::size_t k = 0; k < R.base.dim; ++k) out.a_action.push_back(direct_sum(R.a_action[k], m_action[k]));
  out.anchor = make_matrix_map(n - 1, D, R.base.dim, R.base.dim);
  for (const auto& [t, v] : R.anchor.entries()) out.anchor.set(t, v);
  return out;
}

}  // namespace detail

/// L ⋉ M. Built even when the representation is invalid, so the iff can be
/// observed on the output.
inline NLieRinehart semidirect(const NLieRinehart& R, const Representation& rep) {
  rep.validate(R);
  return detail::build_extension(R, rep.dim, rep.a_action, rep.psi, nullptr, nullptr);
}

/// E = L ⊕ A.
inline NLieRinehart append_a(const NLieRinehart& R) { return semidirect(R, anchor_representation(R)); }

/// Matrix of T restricted to an invariant subspace, in the subspace basis.
inline Matrix restrict_to(const Matrix& basis, const Matrix& t) {
  Matrix out(basis.cols(), basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    auto c = solve_in_span(basis, t * basis.column(j));
    if (!c) throw Error("restrict_to: subspace is not invariant");
    for (std::size_t i = 0; i < basis.cols(); ++i) out(i, j) = (*c)[i];
  }
  return out;
}

/// (K, ad) on the anchor kernel, in the canonical kernel basis.
inline Representation adjoint_on_kernel(const NLieRinehart& R) {
  const Subspace k = anchor_kernel(R);
  const Matrix basis = k.matrix();
  Representation rep;
  rep.dim = k.dim();
  for (const auto& a : R.a_action) rep.a_action.push_back(restrict_to(basis, a));
  rep.psi = make_matrix_map(R.n() - 1, R.dim(), rep.dim, rep.dim);
  for (const auto& t : enumerate_blocks(R.dim(), R.n() - 1)) rep.psi.set(t, restrict_to(basis, R.lie.ad_basis(t)));
  return rep;
}

enum class DualConvention {
  pairing,        // ⟨ψ*(X) f, m⟩ = -⟨f, ψ(X) m⟩
  anchor_twisted  // (ψ*(X) f)(m) = ρ(X)(f(m)) - f(ψ(X) m)
};

struct DualRepresentation {
  std::vector<Matrix> basis;  // A-linear maps M → A, each dim(A)×dim(M)
  Representation rep;         // meaningful only when closed
  bool closed = false;
  Report report;
};

inline DualRepresentation dual_rep(const NLieRinehart& R, const Representation& rep,
                                   DualConvention convention = DualConvention::pairing) {
  rep.validate(R);
  const std::size_t da = R.base.dim;
  const std::size_t m = rep.dim;
  const auto var = [m](std::size_t r, std::size_t c) { return r * m + c; };
  RowEchelon e(da * m);
  for (std::size_t k = 0; k < da; ++k) {
    const Matrix ak = R.base.basis_mult(k);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        // (F·act(a_k) - mult(a_k)·F)(r, c) = 0
        Vector row(da * m);
        for (std::size_t j = 0; j < m; ++j) row[var(r, j)] += rep.a_action[k](j, c);
        for (std::size_t j = 0; j < da; ++j) row[var(j, c)] -= ak(r, j);
        e.add(row);
      }
  }
  DualRepresentation out;
  out.report = Report("dual");
  std::vector<Vector> flat = e.null_space();
  for (const auto& v : flat) {
    Matrix f(da, m);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < m; ++c) f(r, c) = v[var(r, c)];
    out.basis.push_back(std::move(f));
  }
  const Matrix flat_basis = Matrix::from_columns(flat, da * m);
  const auto flatten = [&](const Matrix& f) {
    Vector v(da * m);
    for (std::size_t r = 0; r < da; ++r)
      for (std::size_t c = 0; c < m; ++c) v[var(r, c)] = f(r, c);
    return v;
  };
  const std::size_t q = out.basis.size();
  out.rep.dim = q;
  for (std::size_t k = 0; k < da; ++k) {
    Matrix act(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      auto c = solve_in_span(flat_basis, flatten(R.base.basis_mult(k) * out.basis[j]));
      if (!c) throw Error("dual: A-action leaves the space of A-linear maps");
      for (std::size_t i = 0; i < q; ++i) act(i, j) = (*c)[i];
    }
    out.rep.a_action.push_back(std::move(act));
  }
  out.rep.psi = make_matrix_map(R.n() - 1, R.dim(), q, q);
  std::optional<Witness> closure;
  std::optional<Witness> pairing;
  for (const auto& t : enumerate_blocks(R.dim(), R.n() - 1)) {
    const Matrix p = rep.at(t);
    Matrix value(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      Matrix image = Scalar(-1) * (out.basis[j] * p);
      if (convention == DualConvention::anchor_twisted) image += R.rho_basis(t) * out.basis[j];
      auto c = solve_in_span(flat_basis, flatten(image));
      if (!c) {
        if (!closure) closure = Witness{{"x", to_string(t)}, {"dual_basis", std::to_string(j)}, {"image", to_string(image)}};
        continue;
      }
      for (std::size_t i = 0; i < q; ++i) value(i, j) = (*c)[i];
      Matrix pair_sum = image + out.basis[j] * p;
      if (convention == DualConvention::pairing && !pair_sum.is_zero() && !pairing)
        pairing = Witness{{"x", to_string(t)}, {"dual_basis", std::to_string(j)}};
    }
    out.rep.psi.set(t, value);
  }
  out.report.record("closure", closure);
  if (convention == DualConvention::pairing)
    out.report.record("pairing", pairing);
  else
    out.report.skip("pairing");
  out.closed = !closure;
  if (out.closed)
    out.report.merge(verify_representation(R, out.rep), "rep_");
  else
    out.rep.psi = make_matrix_map(R.n() - 1, R.dim(), q, q);
  return out;
}

}  // namespace nlr
