#pragma once

// Central extensions by 2-cocycles, T_θ-extensions, θ_f and the Φ map
// between T_θ and T_{θ+θ_f}.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlr/alternating_map.hpp"
#include "nlr/cohomology.hpp"
#include "nlr/exact.hpp"
#include "nlr/nlie.hpp"
#include "nlr/report.hpp"
#include "nlr/rep.hpp"
#include "nlr/rinehart.hpp"

namespace nlr {

/// Thrown by the non-diagnostic constructors when the cocycle data is invalid.
class InvalidCocycle : public Error {
 public:
  InvalidCocycle(const std::string& what, Witness w) : Error(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// θ(a x_1, …) = a θ(x_1, …) on basis data; alternation makes one slot enough.
inline std::optional<Witness> cochain_a_linear_witness(const NLieRinehart& R, const Representation& rep,
                                                       const VectorMap& theta) {
  const std::size_t d = R.dim();
  for (std::size_t k = 0; k < R.base.dim; ++k)
    for (std::size_t x = 0; x < d; ++x)
      for (const auto& y : enumerate_blocks(d, R.n() - 1)) {
        auto args = basis_args(y, d);
        args.insert(args.begin(), unit_vector(d, x));
        const Vector plain = theta.eval(args);
        args[0] = R.a_action[k] * args[0];
        Vector lhs = theta.eval(args);
        Vector rhs = rep.a_action[k] * plain;
        if (lhs != rhs)
          return Witness{{"a", std::to_string(k)}, {"x", std::to_string(x)}, {"others", to_string(y)},
                         {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
      }
  return std::nullopt;
}

/// The module 2-cocycle identity
///   θ(Y, [x]) = Σ θ(…, [Y, x_i], …) + Σ (-1)^{n-i} ψ(x̂_i) θ(Y, x_i) - ψ(Y) θ(x),
/// swept over canonical Y and x, plus A-linearity of θ.
inline Report check_2cocycle_module(const NLieRinehart& R, const Representation& rep, const VectorMap& theta,
                                    const std::string& name = "module_cocycle") {
  rep.validate(R);
  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  if (theta.arity() != n || theta.domain_dim() != d || theta.zero().size() != rep.dim)
    throw DimensionError("2-cocycle: table does not match dimensions");
  Report r("2cocycle");
  std::optional<Witness> w;
  const auto ys = enumerate_blocks(d, n - 1);
  const auto xs = enumerate_blocks(d, n);
  for (const auto& y : ys) {
    if (w) break;
    const Matrix ady = R.lie.ad_basis(y);
    const Matrix psiy = rep.at(y);
    for (const auto& x : xs) {
      auto yargs = basis_args(y, d);
      yargs.push_back(R.lie.at(x));
      Vector lhs = theta.eval(yargs);
      Vector rhs(rep.dim);
      const auto xargs = basis_args(x, d);
      for (std::size_t i = 0; i < n; ++i) {
        auto a = xargs;
        a[i] = ady.column(x[i]);
        axpy(rhs, 1, theta.eval(a));
        Index hat;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) hat.push_back(x[j]);
        Index yi = y;
        yi.push_back(x[i]);
        axpy(rhs, detail::hat_sign(n, i), rep.at(hat) * theta.at(yi));
      }
      axpy(rhs, -1, psiy * theta.at(x));
      if (lhs != rhs) {
        w = Witness{{"y", to_string(y)}, {"x", to_string(x)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
        break;
      }
    }
  }
  r.record(name, w);
  r.record("a_linear", cochain_a_linear_witness(R, rep, theta));
  return r;
}

/// The fundamental-identity condition on φ for the central extension by a
/// line V = ℚe on which A acts through the unit coordinate.
inline Report check_central_cocycle(const NLieRinehart& R, const VectorMap& phi) {
  return check_2cocycle_module(R, trivial_representation(R), phi, "central_cocycle");
}

/// T_θ(L) on L ⊕ M. Outside diagnostic mode an invalid θ throws.
inline NLieRinehart t_theta_extend(const NLieRinehart& R, const Representation& rep, const VectorMap& theta,
                                   bool diagnostic = false) {
  if (!diagnostic) {
    const Report r = check_2cocycle_module(R, rep, theta);
    if (const Check* c = r.first_failure()) throw InvalidCocycle("θ is not a 2-cocycle: " + c->name, c->witness);
  }
  rep.validate(R);
  return detail::build_extension(R, rep.dim, rep.a_action, rep.psi, &theta, nullptr);
}

/// L ⊕ ℚe with [x̃_1, …, x̃_n] = [x_1, …, x_n] + φ(x_1, …, x_n) e.
inline NLieRinehart central_extend(const NLieRinehart& R, const VectorMap& phi, bool diagnostic = false) {
  const Representation line = trivial_representation(R);
  if (!diagnostic) {
    const Report r = check_central_cocycle(R, phi);
    if (const Check* c = r.first_failure()) throw InvalidCocycle("φ is not a 2-cocycle: " + c->name, c->witness);
  }
  if (phi.arity() != R.n() || phi.domain_dim() != R.dim() || phi.zero().size() != 1)
    throw DimensionError("central extension: φ must be a scalar n-form on L");
  return detail::build_extension(R, 1, line.a_action, line.psi, &phi, nullptr);
}

/// f: L → M as a dim(M)×dim(L) matrix, from a raw 1-cochain.
inline Matrix cochain1_matrix(const CochainSpace& c1, const Vector& raw) {
  if (c1.p() != 1) throw DimensionError("expected a 1-cochain");
  const std::size_t d = c1.algebra().dim();
  Matrix f(c1.m(), d);
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t t = 0; t < c1.m(); ++t) f(t, z) = raw[z * c1.m() + t];
  return f;
}

inline Vector cochain1_raw(const Matrix& f) {
  Vector raw(f.rows() * f.cols());
  for (std::size_t z = 0; z < f.cols(); ++z)
    for (std::size_t t = 0; t < f.rows(); ++t) raw[z * f.rows() + t] = f(t, z);
  return raw;
}

/// θ_f(x) = f([x]) - Σ (-1)^{n-i} ψ(x̂_i) f(x_i).
inline VectorMap theta_from_cochain(const NLieRinehart& R, const Representation& rep, const Matrix& f) {
  if (f.rows() != rep.dim || f.cols() != R.dim()) throw DimensionError("θ_f: f must be dim(M)×dim(L)");
  const std::size_t n = R.n();
  VectorMap theta = make_vector_map(n, R.dim(), rep.dim);
  for (const auto& x : enumerate_blocks(R.dim(), n)) {
    Vector v = f * R.lie.at(x);
    for (std::size_t i = 0; i < n; ++i) {
      Index hat;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) hat.push_back(x[j]);
      axpy(v, -detail::hat_sign(n, i), rep.at(hat) * f.column(x[i]));
    }
    theta.set(x, v);
  }
  return theta;
}

inline VectorMap add_maps(const VectorMap& a, const VectorMap& b) {
  VectorMap out = a;
  for (const auto& [t, v] : b.entries()) out.add(t, 1, v);
  return out;
}

/// Compares θ_f with -δf on every (block, z) tuple.
inline std::optional<Witness> theta_delta_witness(const NLieRinehart& R, const Representation& rep, const Matrix& f) {
  const Coefficients c = Coefficients::of(rep);
  const CochainSpace c1(R, c, 1);
  const CochainSpace c2(R, c, 2);
  const Vector df = coboundary(c1, c2, cochain1_raw(f));
  const VectorMap theta = theta_from_cochain(R, rep, f);
  for (const auto& b : c2.blocks().blocks())
    for (std::size_t z = 0; z < R.dim(); ++z) {
      Index full = b;
      full.push_back(z);
      const Vector t = theta.at(full);
      const Vector neg = scaled(-1, c2.value(df, {b}, z));
      if (t != neg)
        return Witness{{"block", to_string(b)}, {"z", std::to_string(z)}, {"theta_f", to_string(t)},
                       {"minus_delta_f", to_string(neg)}};
    }
  return std::nullopt;
}

/// Φ(x + m) = x + f(x) + m between T_θ and T_{θ+θ_f}, checked in both directions.
inline Report phi_equivalence(const NLieRinehart& R, const Representation& rep, const VectorMap& theta,
                              const Matrix& f) {
  const std::size_t d = R.dim();
  const std::size_t m = rep.dim;
  const VectorMap shifted = add_maps(theta, theta_from_cochain(R, rep, f));
  const NLieRinehart t0 = t_theta_extend(R, rep, theta, true);
  const NLieRinehart t1 = t_theta_extend(R, rep, shifted, true);
  Matrix phi = Matrix::identity(d + m);
  Matrix inv = Matrix::identity(d + m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      phi(d + r, c) = f(r, c);
      inv(d + r, c) = -f(r, c);
    }
  const Matrix ida = Matrix::identity(R.base.dim);
  Report out("phi_equivalence");
  out.merge(verify_rinehart(t0), "source_");
  out.merge(verify_rinehart(t1), "target_");
  out.merge(check_rinehart_morphism(ida, phi, t0, t1), "forward_");
  out.merge(check_rinehart_morphism(ida, inv, t1, t0), "backward_");
  return out;
}

}  // namespace nlr
