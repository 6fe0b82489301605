#pragma once

// Named example structures used by the tests, the acceptance run and the
// fixture dumper.

#include <string>
#include <vector>

#include "nlr/crossed.hpp"
#include "nlr/exact.hpp"
#include "nlr/ext.hpp"
#include "nlr/nlie.hpp"
#include "nlr/rep.hpp"
#include "nlr/rinehart.hpp"

namespace nlr::fixtures {

inline NLieAlgebra abel4_lie() { return NLieAlgebra::abelian(4, 3); }

/// [e1,e2,e3] = e4.
inline NLieAlgebra nilp4_lie() {
  NLieAlgebra l = NLieAlgebra::abelian(4, 3);
  l.bracket.set({0, 1, 2}, unit_vector(4, 3));
  return l;
}

/// [e_i,e_j,e_k] = ε_{ijkl} e_l.
inline NLieAlgebra a4_lie() {
  NLieAlgebra l = NLieAlgebra::abelian(4, 3);
  l.bracket.set({0, 1, 2}, unit_vector(4, 3));
  l.bracket.set({0, 1, 3}, scaled(-1, unit_vector(4, 2)));
  l.bracket.set({0, 2, 3}, unit_vector(4, 1));
  l.bracket.set({1, 2, 3}, scaled(-1, unit_vector(4, 0)));
  return l;
}

inline NLieRinehart abel4() { return NLieRinehart::over_field(abel4_lie()); }
inline NLieRinehart nilp4() { return NLieRinehart::over_field(nilp4_lie()); }
inline NLieRinehart a4() { return NLieRinehart::over_field(a4_lie()); }

/// A = ℚ[t]/(t²), L free on u, v with ℚ-basis (u, tu, v, tv), n = 3,
/// ρ(u∧v) = t·d/dt, [u,v,tu] = tu, [u,v,tv] = tv.
inline NLieRinehart dual() {
  NLieRinehart r;
  r.base = CommAlgebra::truncated_polynomial(2);
  Matrix t(4, 4);
  t(1, 0) = 1;
  t(3, 2) = 1;
  r.a_action = {Matrix::identity(4), t};
  r.lie = NLieAlgebra::abelian(4, 3);
  r.lie.bracket.set({0, 2, 1}, unit_vector(4, 1));
  r.lie.bracket.set({0, 2, 3}, unit_vector(4, 3));
  r.anchor = make_matrix_map(2, 4, 2, 2);
  r.anchor.set({0, 2}, Matrix{{0, 0}, {0, 1}});
  return r;
}

/// Classical Lie–Rinehart pair: A = ℚ[t]/(t³), L = Der(A) on D1 = t·d/dt,
/// D2 = t²·d/dt with [D1,D2] = D2 and the identity as anchor.
inline NLieRinehart der2() {
  NLieRinehart r;
  r.base = CommAlgebra::truncated_polynomial(3);
  Matrix t(2, 2);
  t(1, 0) = 1;
  r.a_action = {Matrix::identity(2), t, Matrix(2, 2)};
  r.lie = NLieAlgebra::abelian(2, 2);
  r.lie.bracket.set({0, 1}, unit_vector(2, 1));
  r.anchor = make_matrix_map(1, 2, 3, 3);
  r.anchor.set({0}, Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  r.anchor.set({1}, Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 0}});
  return r;
}

/// FIX-NILP4 over A = ℚ[t]/(t²) with t acting by zero and zero anchor.
inline NLieRinehart nilp4_over_dual_numbers() {
  NLieRinehart r;
  r.base = CommAlgebra::truncated_polynomial(2);
  r.lie = nilp4_lie();
  r.a_action = {Matrix::identity(4), Matrix(4, 4)};
  r.anchor = make_matrix_map(2, 4, 2, 2);
  return r;
}

/// span(e4) ⊂ FIX-NILP4 with the restricted adjoint action and the inclusion.
inline CrossedModule xm_incl() { return ideal_crossed(nilp4(), Subspace{4, {unit_vector(4, 3)}}); }

/// ∂ = 0 from M = ℚ into FIX-NILP4 with ψ = 0.
inline CrossedModule xm_zero() {
  CrossedModule x;
  x.R = nilp4();
  x.action.m_lie = NLieAlgebra::abelian(1, 3);
  x.action.rep.dim = 1;
  x.action.rep.a_action = {Matrix::identity(1)};
  x.action.rep.psi = make_matrix_map(2, 4, 1, 1);
  x.boundary = Matrix(4, 1);
  return x;
}

/// span(tu, tv) ⊂ FIX-DUAL; the inherited bracket is zero.
inline CrossedModule xm_dual() { return ideal_crossed(dual(), Subspace{4, {unit_vector(4, 1), unit_vector(4, 3)}}); }

/// The kernel of FIX-NILP4 → FIX-NILP4/span(e4).
inline CrossedModule xm_kernel() {
  const Quotient q = quotient(nilp4_lie(), Subspace{4, {unit_vector(4, 3)}});
  return kernel_crossed(nilp4(), q.projection);
}

/// The identity of FIX-NILP4 as a crossed module with zero cokernel.
inline CrossedModule xm_whole() { return ideal_crossed(nilp4(), Subspace::whole(4)); }

/// M = span(e4) ⊕ V over FIX-NILP4 with V the adjoint module, M abelian,
/// ∂ the inclusion on the first summand and zero on V. Here n = V and p is
/// abelian of dimension 3.
inline CrossedModule xm_mixed() { return mixed_crossed(nilp4(), Subspace{4, {unit_vector(4, 3)}}); }

/// The same construction over FIX-NILP4 ⊕ ℚe5, so that p has dimension 4.
inline CrossedModule xm_mixed5() {
  NLieAlgebra l = NLieAlgebra::abelian(5, 3);
  l.bracket.set({0, 1, 2}, unit_vector(5, 3));
  return mixed_crossed(NLieRinehart::over_field(l), Subspace{5, {unit_vector(5, 3)}});
}

/// A4 ⊕ ℚe5 with [x] = [x]_A4 + f([x]) e5 for f = e^1, crossed over span(e5)
/// by the mixed construction; p = A4 acts nontrivially on n.
inline CrossedModule xm_skew() {
  const NLieRinehart base = a4();
  Matrix f(1, 4);
  f(0, 0) = 1;
  const NLieRinehart l = central_extend(base, theta_from_cochain(base, trivial_representation(base), f));
  return mixed_crossed(l, Subspace{5, {unit_vector(5, 4)}});
}

struct NamedCrossed {
  std::string name;
  CrossedModule module;
};

inline std::vector<NamedCrossed> all_crossed() {
  return {{"XM-INCL", xm_incl()},     {"XM-ZERO", xm_zero()},   {"XM-DUAL", xm_dual()},
          {"XM-KERNEL", xm_kernel()}, {"XM-WHOLE", xm_whole()}, {"XM-MIXED", xm_mixed()}, {"XM-MIXED5", xm_mixed5()}, {"XM-SKEW", xm_skew()}};
}

struct Named {
  std::string name;
  NLieRinehart algebra;
};

inline std::vector<Named> all() {
  return {{"ABEL4", abel4()}, {"NILP4", nilp4()}, {"A4", a4()}, {"DUAL", dual()}, {"DER2", der2()}};
}

}  // namespace nlr::fixtures
