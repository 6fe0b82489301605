#pragma once

// Crossed modules ∂: M → L of n-Lie Rinehart algebras and the degree-3
// invariant h_E of a crossed module in the ternary case.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
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

/// An n-Lie A-algebra M with an action ψ of L; rep.a_action is the A-action on M.
struct LieAAlgebraModule {
  NLieAlgebra m_lie;
  Representation rep;
};

struct CrossedModule {
  NLieRinehart R;
  LieAAlgebraModule action;
  Matrix boundary;  // dim L × dim M

  std::size_t m_dim() const { return action.m_lie.dim; }
};

/// (I, ad, inclusion) for an A-stable ideal I of L; the axioms are left to verify_crossed.
inline CrossedModule ideal_crossed(const NLieRinehart& R, const Subspace& ideal) {
  if (auto w = ideal_witness(R.lie, ideal)) throw Error("ideal_crossed: subspace is not an ideal at " + w->at("others"));
  const std::size_t k = ideal.dim();
  const std::size_t n = R.n();
  const Matrix ib = ideal.matrix();
  CrossedModule X;
  X.R = R;
  X.boundary = ib;
  X.action.m_lie = NLieAlgebra::from_function(k, n, [&](const Index& t) {
    return *ideal.coordinates(R.lie.eval(apply_all(ib, basis_args(t, k))));
  });
  X.action.rep.dim = k;
  for (const auto& a : R.a_action) X.action.rep.a_action.push_back(restrict_to(ib, a));
  X.action.rep.psi = make_matrix_map(n - 1, R.dim(), k, k);
  for (const auto& t : enumerate_blocks(R.dim(), n - 1)) X.action.rep.psi.set(t, restrict_to(ib, R.lie.ad_basis(t)));
  return X;
}

/// (ker f, ad, inclusion) for a linear map f out of L.
inline CrossedModule kernel_crossed(const NLieRinehart& R, const Matrix& f) {
  return ideal_crossed(R, Subspace{R.dim(), kernel_basis(f)});
}

/// M = I ⊕ L with M abelian, ψ = ad on both summands and ∂ = (inclusion, 0).
/// A crossed module when [I, L, …] = 0 and ρ vanishes on I.
inline CrossedModule mixed_crossed(const NLieRinehart& R, const Subspace& ideal) {
  const CrossedModule inc = ideal_crossed(R, ideal);
  const std::size_t k = ideal.dim();
  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  CrossedModule X;
  X.R = R;
  X.boundary = hconcat(ideal.matrix(), Matrix(d, d));
  X.action.m_lie = NLieAlgebra::abelian(k + d, n);
  X.action.rep.dim = k + d;
  for (std::size_t i = 0; i < R.a_action.size(); ++i)
    X.action.rep.a_action.push_back(direct_sum(inc.action.rep.a_action[i], R.a_action[i]));
  X.action.rep.psi = make_matrix_map(n - 1, d, k + d, k + d);
  for (const auto& t : enumerate_blocks(d, n - 1))
    X.action.rep.psi.set(t, direct_sum(inc.action.rep.at(t), R.lie.ad_basis(t)));
  return X;
}

inline Report verify_action(const NLieRinehart& R, const LieAAlgebraModule& act) {
  if (act.rep.dim != act.m_lie.dim || act.m_lie.n != R.n()) throw DimensionError("action: carrier of ψ must be M");
  Report r("action");
  r.merge(verify_representation(R, act.rep));
  Report fi = check_fundamental_identity(act.m_lie);
  r.record("m_fundamental_identity", fi.ok() ? std::nullopt : std::optional<Witness>(fi.first_failure()->witness));
  const std::size_t dm = act.m_lie.dim;
  const std::size_t n = R.n();
  std::optional<Witness> w;
  for (std::size_t k = 0; k < R.base.dim && !w; ++k)
    for (const auto& t : enumerate_blocks(dm, n)) {
      const Vector lhs = act.rep.a_action[k] * act.m_lie.at(t);
      for (std::size_t slot = 0; slot < n && !w; ++slot) {
        const Vector rhs = bracket_with_slot(act.m_lie, t, slot, act.rep.a_action[k].column(t[slot]));
        if (lhs != rhs)
          w = Witness{{"a", std::to_string(k)}, {"m", to_string(t)}, {"slot", std::to_string(slot)},
                      {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
      }
      if (w) break;
    }
  r.record("m_a_multilinear", w);
  w.reset();
  // ψ(X)[m] = Σ [m_1, …, ψ(X) m_i, …, m_n]
  for (const auto& x : enumerate_blocks(R.dim(), n - 1)) {
    if (w) break;
    const Matrix px = act.rep.at(x);
    for (const auto& t : enumerate_blocks(dm, n)) {
      const Vector lhs = px * act.m_lie.at(t);
      Vector rhs(dm);
      for (std::size_t i = 0; i < n; ++i) axpy(rhs, 1, bracket_with_slot(act.m_lie, t, i, px.column(t[i])));
      if (lhs != rhs) {
        w = Witness{{"x", to_string(x)}, {"m", to_string(t)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
        break;
      }
    }
  }
  r.record("derivation_property", w);
  return r;
}

inline Report verify_crossed(const CrossedModule& X) {
  const NLieRinehart& R = X.R;
  const std::size_t d = R.dim();
  const std::size_t dm = X.m_dim();
  const std::size_t n = R.n();
  if (X.boundary.rows() != d || X.boundary.cols() != dm) throw DimensionError("crossed module: ∂ must be dim L × dim M");
  Report r("crossed");
  r.merge(verify_action(R, X.action), "action_");
  const Matrix& b = X.boundary;
  r.record("CM0", morphism_witness(b, X.action.m_lie, R.lie));
  std::optional<Witness> w;
  for (const auto& x : enumerate_blocks(d, n - 1)) {
    Matrix lhs = b * X.action.rep.at(x);
    Matrix rhs = R.lie.ad_basis(x) * b;
    if (lhs != rhs) {
      w = Witness{{"x", to_string(x)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
      break;
    }
  }
  r.record("CM1", w);
  w.reset();
  for (const auto& t : enumerate_blocks(dm, n - 1)) {
    std::vector<Vector> dms;
    for (auto i : t) dms.push_back(b.column(i));
    const Matrix lhs = X.action.rep.eval(dms);
    for (std::size_t m = 0; m < dm && !w; ++m) {
      Index full = t;
      full.push_back(m);
      const Vector rhs = X.action.m_lie.at(full);
      if (lhs.column(m) != rhs)
        w = Witness{{"m", to_string(t)}, {"last", std::to_string(m)}, {"lhs", to_string(lhs.column(m))},
                    {"rhs", to_string(rhs)}};
    }
    if (w) break;
  }
  r.record("CM2", w);
  w.reset();
  for (std::size_t k = 0; k < R.base.dim && !w; ++k) {
    Matrix lhs = b * X.action.rep.a_action[k];
    Matrix rhs = R.a_action[k] * b;
    if (lhs != rhs) w = Witness{{"a", std::to_string(k)}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}};
  }
  r.record("CM3", w);
  w.reset();
  for (const auto& t : enumerate_blocks(dm, n - 1)) {
    std::vector<Vector> dms;
    for (auto i : t) dms.push_back(b.column(i));
    const Matrix v = R.rho(dms);
    if (!v.is_zero()) {
      w = Witness{{"m", to_string(t)}, {"value", to_string(v)}};
      break;
    }
  }
  r.record("CM4", w);
  return r;
}

struct KernelCokernel {
  Subspace n;               // ker ∂ inside M
  Representation n_rep;     // outer action of p on n, in the basis of n
  RinehartQuotient p;       // L / Im ∂
  Report report;
};

inline KernelCokernel kernel_cokernel(const CrossedModule& X) {
  const NLieRinehart& R = X.R;
  const std::size_t dm = X.m_dim();
  const std::size_t nn = R.n();
  KernelCokernel out;
  out.report = Report("kernel_cokernel");
  out.n = Subspace{dm, kernel_basis(X.boundary)};
  const Subspace image = Subspace::span(R.dim(), X.boundary.columns());

  std::optional<Witness> w;
  for (std::size_t k = 0; k < out.n.dim() && !w; ++k)
    for (const auto& t : enumerate_blocks(dm, nn - 1)) {
      auto args = basis_args(t, dm);
      args.push_back(out.n.basis[k]);
      const Vector v = X.action.m_lie.eval(args);
      if (!is_zero(v)) {
        w = Witness{{"kernel_basis", std::to_string(k)}, {"others", to_string(t)}, {"bracket", to_string(v)}};
        break;
      }
    }
  out.report.record("n_central", w);
  out.report.record("image_ideal", ideal_witness(R.lie, image));
  out.p = rinehart_quotient(R, image);
  out.report.merge(out.p.report);

  w.reset();
  for (std::size_t k = 0; k < out.n.dim() && !w; ++k)
    for (const auto& x : enumerate_blocks(R.dim(), nn - 1)) {
      const Vector v = X.action.rep.at(x) * out.n.basis[k];
      if (!out.n.contains(v)) {
        w = Witness{{"x", to_string(x)}, {"kernel_basis", std::to_string(k)}, {"image", to_string(v)}};
        break;
      }
    }
  out.report.record("n_invariant", w);
  // ψ(∂m, x_2, …) must vanish on n for ψ̄ to be independent of lifts
  w.reset();
  for (std::size_t j = 0; j < dm && !w; ++j)
    for (const auto& y : enumerate_blocks(R.dim(), nn - 2)) {
      auto args = basis_args(y, R.dim());
      args.insert(args.begin(), X.boundary.column(j));
      const Matrix pm = X.action.rep.eval(args);
      for (std::size_t k = 0; k < out.n.dim() && !w; ++k) {
        const Vector v = pm * out.n.basis[k];
        if (!is_zero(v))
          w = Witness{{"m", std::to_string(j)}, {"others", to_string(y)}, {"kernel_basis", std::to_string(k)},
                      {"value", to_string(v)}};
      }
      if (w) break;
    }
  out.report.record("outer_action_well_defined", w);

  const std::size_t q = out.p.algebra.dim();
  const std::size_t k = out.n.dim();
  out.n_rep.dim = k;
  out.n_rep.psi = make_matrix_map(nn - 1, q, k, k);
  if (out.report.passed("n_invariant")) {
    const Matrix nb = out.n.matrix();
    for (const auto& a : X.action.rep.a_action) out.n_rep.a_action.push_back(k ? restrict_to(nb, a) : Matrix(0, 0));
    for (const auto& t : enumerate_blocks(q, nn - 1)) {
      const Matrix lifted = X.action.rep.eval(apply_all(out.p.section, basis_args(t, q)));
      out.n_rep.psi.set(t, k ? restrict_to(nb, lifted) : Matrix(0, 0));
    }
  } else {
    for (std::size_t i = 0; i < R.base.dim; ++i) out.n_rep.a_action.push_back(Matrix(k, k));
  }
  return out;
}

/// L ⋊ M with [x + m] = [x] + [m]_M + Σ (-1)^{n-i} ψ(x̂_i) m_i.
inline NLieRinehart semidirect_crossed(const CrossedModule& X) {
  return detail::build_extension(X.R, X.m_dim(), X.action.rep.a_action, X.action.rep.psi, nullptr,
                                 &X.action.m_lie);
}

/// (Id_L + ∂): L⋊M → L⋊L and (∂ + Id_M): M⋊M → L⋊M.
inline Report check_structure_maps(const CrossedModule& X) {
  const NLieRinehart& R = X.R;
  const std::size_t d = R.dim();
  const std::size_t dm = X.m_dim();
  const NLieRinehart lm = semidirect_crossed(X);
  const Representation adl = ad_map(R);
  const NLieRinehart ll = detail::build_extension(R, d, R.a_action, adl.psi, nullptr, &R.lie);
  NLieRinehart mr;
  mr.base = R.base;
  mr.lie = X.action.m_lie;
  mr.a_action = X.action.rep.a_action;
  mr.anchor = make_matrix_map(R.n() - 1, dm, R.base.dim, R.base.dim);
  MatrixMap adm = make_matrix_map(R.n() - 1, dm, dm, dm);
  for (const auto& t : enumerate_blocks(dm, R.n() - 1)) adm.set(t, X.action.m_lie.ad_basis(t));
  const NLieRinehart mm = detail::build_extension(mr, dm, mr.a_action, adm, nullptr, &X.action.m_lie);
  const Matrix f1 = direct_sum(Matrix::identity(d), X.boundary);
  const Matrix f2 = direct_sum(X.boundary, Matrix::identity(dm));
  const Matrix ida = Matrix::identity(R.base.dim);
  Report r("structure_maps");
  r.merge(check_rinehart_morphism(ida, f1, lm, ll), "id_plus_boundary_");
  r.merge(check_rinehart_morphism(ida, f2, mm, lm), "boundary_plus_id_");
  return r;
}

/// Right inverse of ∂ on Im ∂, through the first independent columns of ∂.
inline Matrix default_sigma(const Matrix& boundary) {
  const std::size_t d = boundary.rows();
  const std::size_t dm = boundary.cols();
  const auto cols = independent_columns(boundary);
  Matrix sigma(dm, d);
  if (cols.empty()) return sigma;
  std::vector<Vector> b;
  for (auto c : cols) b.push_back(boundary.column(c));
  const Complement comp = complement_of(Subspace{d, b});
  const Matrix coords_basis = [&] {
    std::vector<Vector> all = b;
    for (auto i : comp.columns) all.push_back(unit_vector(d, i));
    return inverse(Matrix::from_columns(all, d));
  }();
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) sigma(cols[i], k) = coords_basis(i, k);
  return sigma;
}

struct CrossedInvariantTrace {
  Matrix section_s;      // p → L
  Matrix section_sigma;  // L ⊇ Im ∂ → M
  VectorMap alpha;       // on p, values in L
  VectorMap beta;        // on p, values in M
  Vector h_m;            // raw 3-cochain on p with values in M
  Vector h;              // raw 3-cochain in C^3(p, n)
  Vector h_displayed;    // the eight-term display evaluated literally, values in M
  bool class_zero = false;
  std::optional<Vector> preimage;  // raw 2-cochain g in C^2(p, n) with δg = h
  Report report;
};

namespace detail {

inline Coefficients twisted_coefficients(const CrossedModule& X, const Matrix& s) {
  const Representation& rep = X.action.rep;
  return {rep.dim, rep.a_action, [rep, s](const Index& t) { return rep.eval(apply_all(s, basis_args(t, s.cols()))); }};
}

}  // namespace detail

/// h_E for n = 3: h = -δβ with β = σα and p acting on M through the section s.
inline CrossedInvariantTrace h_class(const CrossedModule& X, std::optional<Matrix> s = std::nullopt,
                                     std::optional<Matrix> sigma = std::nullopt) {
  if (X.R.n() != 3) throw DimensionError("h_class: only ternary crossed modules are supported");
  const NLieRinehart& R = X.R;
  const std::size_t d = R.dim();
  const std::size_t dm = X.m_dim();
  const KernelCokernel kc = kernel_cokernel(X);
  const NLieRinehart& p = kc.p.algebra;
  const std::size_t q = p.dim();
  CrossedInvariantTrace tr;
  tr.report = Report("h3");
  tr.report.merge(kc.report, "sequence_");
  tr.section_s = s ? *s : kc.p.section;
  tr.section_sigma = sigma ? *sigma : default_sigma(X.boundary);
  if (tr.section_s.rows() != d || tr.section_s.cols() != q) throw DimensionError("h_class: s must be dim L × dim p");
  if (tr.section_sigma.rows() != dm || tr.section_sigma.cols() != d)
    throw DimensionError("h_class: σ must be dim M × dim L");
  if (kc.p.projection * tr.section_s != Matrix::identity(q)) throw Error("h_class: π∘s is not the identity");
  for (const auto& c : X.boundary.columns())
    if (X.boundary * (tr.section_sigma * c) != c) throw Error("h_class: ∂∘σ is not the identity on Im ∂");

  const Matrix& sm = tr.section_s;
  tr.alpha = make_vector_map(3, q, d);
  tr.beta = make_vector_map(3, q, dm);
  std::optional<Witness> w;
  for (const auto& t : enumerate_blocks(q, 3)) {
    const Vector a = sub(R.lie.eval(apply_all(sm, basis_args(t, q))), sm * p.lie.at(t));
    if (!is_zero(kc.p.projection * a) && !w) w = Witness{{"x", to_string(t)}, {"alpha", to_string(a)}};
    tr.alpha.set(t, a);
    tr.beta.set(t, tr.section_sigma * a);
  }
  tr.report.record("alpha_in_image", w);

  const Coefficients cm = detail::twisted_coefficients(X, sm);
  const CochainSpace b2(p, cm, 2);
  const CochainSpace b3(p, cm, 3);
  Vector beta_raw(b2.raw_dim());
  for (const auto& blk : b2.blocks().blocks())
    for (std::size_t z = 0; z < q; ++z) {
      Index full = blk;
      full.push_back(z);
      b2.set(beta_raw, {blk}, z, tr.beta.at(full));
    }
  tr.h_m = scaled(-1, coboundary(b2, b3, beta_raw));

  // literal display, for comparison only
  tr.h_displayed = Vector(b3.raw_dim());
  for (std::size_t id = 0; id < b3.tuple_count(); ++id) {
    auto [pos, z] = b3.decode(id);
    const Index& x12 = b3.blocks()[pos[0]];
    const Index& x34 = b3.blocks()[pos[1]];
    const std::vector<Vector> e = {unit_vector(q, x12[0]), unit_vector(q, x12[1]), unit_vector(q, x34[0]),
                                   unit_vector(q, x34[1]), unit_vector(q, z)};
    const auto br = [&](std::size_t i, std::size_t j, std::size_t k) { return p.lie.eval({e[i], e[j], e[k]}); };
    const auto be = [&](const Vector& a, const Vector& b, const Vector& c) { return tr.beta.eval({a, b, c}); };
    const auto ps = [&](std::size_t i, std::size_t j) {
      return cm.psi(Index{i == 4 ? z : (i < 2 ? x12[i] : x34[i - 2]), j == 4 ? z : (j < 2 ? x12[j] : x34[j - 2])});
    };
    Vector v = be(br(0, 1, 2), e[3], e[4]);
    axpy(v, 1, be(e[2], br(0, 1, 3), e[4]));
    axpy(v, 1, be(e[0], e[1], br(2, 3, 4)));
    axpy(v, 1, be(e[2], e[3], br(0, 1, 4)));
    axpy(v, 1, ps(0, 1) * be(e[2], e[3], e[4]));
    axpy(v, 1, ps(2, 3) * be(e[0], e[1], e[4]));
    axpy(v, -1, ps(2, 4) * be(e[0], e[1], e[3]));
    axpy(v, 1, ps(3, 4) * be(e[0], e[1], e[2]));
    for (std::size_t t = 0; t < dm; ++t) tr.h_displayed[id * dm + t] = v[t];
  }

  // h lands in n = ker ∂
  const Matrix nb = kc.n.matrix();
  const std::size_t k = kc.n.dim();
  const Coefficients cn = Coefficients::of(kc.n_rep);
  const CochainSpace n3(p, cn, 3);
  tr.h = Vector(n3.raw_dim());
  w.reset();
  for (std::size_t id = 0; id < b3.tuple_count(); ++id) {
    Vector v(dm);
    for (std::size_t t = 0; t < dm; ++t) v[t] = tr.h_m[id * dm + t];
    if (is_zero(v)) continue;
    auto c = k ? solve_in_span(nb, v) : std::optional<Vector>{};
    if (!c) {
      if (!w) w = Witness{{"tuple", std::to_string(id)}, {"value", to_string(v)}};
      continue;
    }
    for (std::size_t t = 0; t < k; ++t) tr.h[id * k + t] = (*c)[t];
  }
  tr.report.record("h_in_n", w);
  tr.report.record("h_a_multilinear", n3.violation(tr.h));
  const CochainSpace n4(p, cn, 4);
  const Vector dh = coboundary(n3, n4, tr.h);
  tr.report.record("delta_h_zero", is_zero(dh) ? std::nullopt : std::optional<Witness>(Witness{{"delta_h", "nonzero"}}));
  try {
    tr.preimage = is_coboundary(n3, tr.h);
    tr.class_zero = tr.preimage.has_value();
    tr.report.pass("class_computed");
  } catch (const LeakageError& e) {
    tr.report.fail("class_computed", e.witness());
  }
  tr.report.set_number("class_zero", tr.class_zero ? 1 : 0);
  tr.report.set_number("n_dim", static_cast<std::int64_t>(k));
  tr.report.set_number("p_dim", static_cast<std::int64_t>(q));
  return tr;
}

/// Certificate that h computed with (s1, σ1) and (s2, σ2) differ by a coboundary.
inline Report h_class_section_independence(const CrossedModule& X, const Matrix& s1, const Matrix& sigma1,
                                           const Matrix& s2, const Matrix& sigma2) {
  const CrossedInvariantTrace t1 = h_class(X, s1, sigma1);
  const CrossedInvariantTrace t2 = h_class(X, s2, sigma2);
  Report r("section_independence");
  r.merge(t1.report, "first_");
  r.merge(t2.report, "second_");
  const KernelCokernel kc = kernel_cokernel(X);
  const CochainSpace n3(kc.p.algebra, Coefficients::of(kc.n_rep), 3);
  const Vector diff = sub(t1.h, t2.h);
  std::optional<Vector> g = is_coboundary(n3, diff);
  if (g) {
    const CochainSpace n2(kc.p.algebra, Coefficients::of(kc.n_rep), 2);
    const bool exact = coboundary(n2, n3, *g) == diff;
    r.record("certificate", exact ? std::nullopt : std::optional<Witness>(Witness{{"certificate", "does not reproduce the difference"}}));
  } else {
    r.fail("certificate", {{"difference", "not a coboundary"}});
  }
  if (t1.class_zero != t2.class_zero) r.fail("classes_equal", {{"first", std::to_string(t1.class_zero)}, {"second", std::to_string(t2.class_zero)}});
  else r.pass("classes_equal");
  return r;
}

struct SectionPair {
  Matrix s;
  Matrix sigma;
};

/// s = s_0 + ∂G and σ = σ_0 + N H with random integer G, H in [-3, 3].
inline SectionPair random_sections(const CrossedModule& X, std::uint64_t seed) {
  const KernelCokernel kc = kernel_cokernel(X);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const std::size_t q = kc.p.algebra.dim();
  const std::size_t d = X.R.dim();
  const std::size_t dm = X.m_dim();
  Matrix g(dm, q);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < q; ++j) g(i, j) = coef(rng);
  const std::size_t k = kc.n.dim();
  Matrix h(k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) h(i, j) = coef(rng);
  SectionPair out{kc.p.section + X.boundary * g, default_sigma(X.boundary)};
  if (k) out.sigma += kc.n.matrix() * h;
  return out;
}

/// Moves X along δ: M → M', γ: L → L' (both invertible).
inline CrossedModule transport(const CrossedModule& X, const Matrix& delta, const Matrix& gamma) {
  const Matrix di = inverse(delta);
  const Matrix gi = inverse(gamma);
  const std::size_t d = X.R.dim();
  const std::size_t dm = X.m_dim();
  const std::size_t n = X.R.n();
  CrossedModule out;
  out.R.base = X.R.base;
  out.R.lie = NLieAlgebra::from_function(d, n, [&](const Index& t) {
    return gamma * X.R.lie.eval(apply_all(gi, basis_args(t, d)));
  });
  for (const auto& a : X.R.a_action) out.R.a_action.push_back(gamma * a * gi);
  out.R.anchor = make_matrix_map(n - 1, d, X.R.base.dim, X.R.base.dim);
  for (const auto& t : enumerate_blocks(d, n - 1)) out.R.anchor.set(t, X.R.rho(apply_all(gi, basis_args(t, d))));
  out.action.m_lie = NLieAlgebra::from_function(dm, n, [&](const Index& t) {
    return delta * X.action.m_lie.eval(apply_all(di, basis_args(t, dm)));
  });
  out.action.rep.dim = dm;
  for (const auto& a : X.action.rep.a_action) out.action.rep.a_action.push_back(delta * a * di);
  out.action.rep.psi = make_matrix_map(n - 1, d, dm, dm);
  for (const auto& t : enumerate_blocks(d, n - 1))
    out.action.rep.psi.set(t, delta * X.action.rep.eval(apply_all(gi, basis_args(t, d))) * di);
  out.boundary = gamma * X.boundary * di;
  return out;
}

/// Ladder check for (δ, γ): X → X2 inducing the identity on n and p.
inline Report elementary_equivalent(const CrossedModule& X, const CrossedModule& X2, const Matrix& delta,
                                    const Matrix& gamma) {
  if (!(X.R.base == X2.R.base)) throw DimensionError("equivalence: base algebras differ");
  const KernelCokernel k1 = kernel_cokernel(X);
  const KernelCokernel k2 = kernel_cokernel(X2);
  if (k1.n.dim() != k2.n.dim() || k1.p.algebra.dim() != k2.p.algebra.dim())
    throw DimensionError("equivalence: kernels or cokernels have different dimensions");
  if (delta.rows() != X2.m_dim() || delta.cols() != X.m_dim() || gamma.rows() != X2.R.dim() || gamma.cols() != X.R.dim())
    throw DimensionError("equivalence: maps have wrong shape");
  Report r("equivalence");
  r.record("delta_bracket_morphism", morphism_witness(delta, X.action.m_lie, X2.action.m_lie));
  std::optional<Witness> w;
  for (std::size_t k = 0; k < X.R.base.dim && !w; ++k)
    if (delta * X.action.rep.a_action[k] != X2.action.rep.a_action[k] * delta) w = Witness{{"a", std::to_string(k)}};
  r.record("delta_a_linear", w);
  r.merge(check_rinehart_morphism(Matrix::identity(X.R.base.dim), gamma, X.R, X2.R), "gamma_");
  const Matrix lhs = X2.boundary * delta;
  const Matrix rhs = gamma * X.boundary;
  r.record("square_commutes",
           lhs == rhs ? std::nullopt : std::optional<Witness>(Witness{{"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}}));
  w.reset();
  for (const auto& t : enumerate_blocks(X.R.dim(), X.R.n() - 1)) {
    const auto xs = basis_args(t, X.R.dim());
    Matrix a = delta * X.action.rep.eval(xs);
    Matrix b = X2.action.rep.eval(apply_all(gamma, xs)) * delta;
    if (a != b) {
      w = Witness{{"x", to_string(t)}, {"lhs", to_string(a)}, {"rhs", to_string(b)}};
      break;
    }
  }
  r.record("action_compatible", w);
  const Matrix on_n = delta * k1.n.matrix();
  r.record("identity_on_n", on_n == k2.n.matrix() ? std::nullopt
                                                   : std::optional<Witness>(Witness{{"delta_n", to_string(on_n)}}));
  const Matrix on_p = k2.p.projection * gamma * k1.p.section;
  r.record("identity_on_p", on_p == Matrix::identity(k1.p.algebra.dim())
                                ? std::nullopt
                                : std::optional<Witness>(Witness{{"induced", to_string(on_p)}}));
  return r;
}

/// Certificate that two crossed modules with the same n and p have the same class.
inline Report class_transport(const CrossedModule& X, const CrossedModule& X2) {
  const CrossedInvariantTrace t1 = h_class(X);
  const CrossedInvariantTrace t2 = h_class(X2);
  Report r("class_transport");
  r.merge(t1.report, "first_");
  r.merge(t2.report, "second_");
  const KernelCokernel kc = kernel_cokernel(X);
  const CochainSpace n3(kc.p.algebra, Coefficients::of(kc.n_rep), 3);
  if (t1.h.size() != t2.h.size()) {
    r.fail("certificate", {{"reason", "cochain spaces differ"}});
    return r;
  }
  const std::optional<Vector> g = is_coboundary(n3, sub(t1.h, t2.h));
  r.record("certificate", g ? std::nullopt : std::optional<Witness>(Witness{{"difference", "not a coboundary"}}));
  return r;
}

}  // namespace nlr
