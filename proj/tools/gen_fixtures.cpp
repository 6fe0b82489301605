// Writes the JSON bundle corpus under fixtures/ (argument: output directory).

#include <fstream>
#include <iostream>
#include <string>

#include "nlr/crossed.hpp"
#include "nlr/ext.hpp"
#include "nlr/fixtures.hpp"
#include "nlr/io.hpp"
#include "nlr/rep.hpp"

namespace {

using namespace nlr;

std::string dir;

void write(const std::string& name, const Bundle& b) {
  std::ofstream out(dir + "/" + name);
  out << dump_bundle(b);
}

void write_text(const std::string& name, const std::string& text) {
  std::ofstream out(dir + "/" + name);
  out << text;
}

VectorMap scalar_form(std::size_t d, std::size_t n, const Index& t) {
  VectorMap f = make_vector_map(n, d, 1);
  f.set(t, Vector{Scalar(1)});
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_fixtures <output-dir>\n";
    return 2;
  }
  dir = argv[1];
  for (const auto& f : fixtures::all()) {
    std::string name = f.name;
    for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    write(name + ".json", bundle_of(f.algebra));
  }

  // [u, v, tu] = 2 tu breaks the compatibility rule
  NLieRinehart corrupt = fixtures::dual();
  corrupt.lie.bracket.set({0, 2, 1}, scaled(2, unit_vector(4, 1)));
  write("dual_corrupt.json", bundle_of(corrupt));
  const std::string dual_text = dump_bundle(bundle_of(fixtures::dual()));
  write_text("truncated.json", dual_text.substr(0, dual_text.size() / 2));

  Bundle phi = bundle_of(fixtures::nilp4());
  phi.phi = scalar_form(4, 3, {0, 1, 2});
  write("nilp4_phi.json", phi);
  // first sum of at most two unit forms on FIX-DUAL failing the cocycle identity itself
  {
    const auto blocks = enumerate_blocks(4, 3);
    bool found = false;
    for (std::size_t i = 0; i < blocks.size() && !found; ++i)
      for (std::size_t j = i; j < blocks.size() && !found; ++j) {
        Bundle bad = bundle_of(fixtures::dual());
        bad.phi = scalar_form(4, 3, blocks[i]);
        if (j != i) bad.phi->add(blocks[j], 1, Vector{Scalar(1)});
        const Report r = check_central_cocycle(fixtures::dual(), *bad.phi);
        if (!r.passed("central_cocycle")) {
          write("dual_phi_noncocycle.json", bad);
          found = true;
        }
      }
  }
  Bundle a4phi = bundle_of(fixtures::a4());
  a4phi.phi = scalar_form(4, 3, {0, 1, 2});
  write("a4_phi.json", a4phi);

  const NLieRinehart nilp = fixtures::nilp4();
  Bundle adj = bundle_of(nilp);
  adj.representation = adjoint_on_kernel(nilp);
  write("nilp4_adjoint.json", adj);
  adj.theta = theta_from_cochain(nilp, *adj.representation, Matrix::identity(4));
  write("nilp4_adjoint_theta.json", adj);
  VectorMap broken = *adj.theta;
  broken.set({0, 1, 3}, unit_vector(4, 0));
  adj.theta = broken;
  if (!check_2cocycle_module(nilp, *adj.representation, broken).ok()) write("nilp4_adjoint_theta_broken.json", adj);

  write("xm_incl.json", bundle_of(fixtures::xm_incl()));
  write("xm_zero.json", bundle_of(fixtures::xm_zero()));
  write("xm_dual.json", bundle_of(fixtures::xm_dual()));
  write("xm_mixed.json", bundle_of(fixtures::xm_mixed()));
  write("xm_skew.json", bundle_of(fixtures::xm_skew()));

  // M-basis permuted to [v1, …, v4, m_I]
  const CrossedModule mixed = fixtures::xm_mixed();
  Matrix perm(5, 5);
  perm(4, 0) = 1;
  for (std::size_t i = 1; i < 5; ++i) perm(i - 1, i) = 1;
  Bundle moved = bundle_of(transport(mixed, perm, Matrix::identity(4)));
  moved.equivalence = EquivalenceBlock{perm, Matrix::identity(4)};
  write("xm_mixed_permuted.json", moved);
  Matrix skew = Matrix::identity(4);
  skew(1, 0) = 1;
  moved.equivalence = EquivalenceBlock{perm, skew};
  write("xm_mixed_bad_ladder.json", moved);

  CrossedModule quaternary;
  quaternary.R = NLieRinehart::over_field(NLieAlgebra::abelian(4, 4));
  quaternary.action.m_lie = NLieAlgebra::abelian(1, 4);
  quaternary.action.rep.dim = 1;
  quaternary.action.rep.a_action = {Matrix::identity(1)};
  quaternary.action.rep.psi = make_matrix_map(3, 4, 1, 1);
  quaternary.boundary = Matrix(4, 1);
  write("xm_quaternary.json", bundle_of(quaternary));
  return 0;
}
