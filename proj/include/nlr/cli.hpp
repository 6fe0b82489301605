#pragma once

// Command implementations behind tools/nlr. Each command returns a report, an
// exit code (0 pass, 1 failed check, 2 input error) and optional payloads.

#include <cstdint>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlr/cohomology.hpp"
#include "nlr/crossed.hpp"
#include "nlr/ext.hpp"
#include "nlr/fixtures.hpp"
#include "nlr/io.hpp"
#include "nlr/rep.hpp"
#include "nlr/report.hpp"
#include "nlr/rinehart.hpp"

namespace nlr::cli {

struct Outcome {
  Report report;
  int exit_code = 0;
  json data = json::object();
  std::optional<json> emitted;
  std::string error;
};

inline int exit_code_of(const Report& r) { return r.ok() ? 0 : 1; }

inline Outcome finish(Report r, json data = json::object()) {
  Outcome o;
  o.exit_code = exit_code_of(r);
  o.report = std::move(r);
  o.data = std::move(data);
  return o;
}

inline Outcome input_error(const std::string& command, const std::string& what) {
  Outcome o;
  o.report = Report(command);
  o.exit_code = 2;
  o.error = what;
  return o;
}

template <class F>
Outcome guarded(const std::string& command, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return input_error(command, e.what());
  } catch (const DimensionError& e) {
    return input_error(command, e.what());
  } catch (const nlohmann::json::exception& e) {
    return input_error(command, e.what());
  } catch (const Error& e) {
    return input_error(command, e.what());
  }
}

inline Bundle load_valid(const std::string& path) {
  Bundle b = load_bundle(path);
  b.algebra.validate();
  if (b.representation) b.representation->validate(b.algebra);
  return b;
}

inline json cochain_json(const CochainSpace& cs, const Vector& raw) {
  json out = json::array();
  const std::size_t m = cs.m();
  for (std::size_t id = 0; id < cs.tuple_count(); ++id) {
    auto [pos, z] = cs.decode(id);
    for (std::size_t t = 0; t < m; ++t) {
      const Scalar& c = raw[id * m + t];
      if (sgn(c) == 0) continue;
      json blocks = json::array();
      for (auto b : pos) blocks.push_back(cs.blocks()[b]);
      out.push_back(json::array({blocks, z, t, to_string(c)}));
    }
  }
  return out;
}

inline Outcome cmd_verify(const std::string& path, bool weak) {
  return guarded("verify", [&] {
    const Bundle b = load_valid(path);
    Report r("verify");
    r.merge(verify_rinehart(b.algebra, weak));
    if (b.representation) r.merge(verify_representation(b.algebra, *b.representation), "representation_");
    return finish(std::move(r));
  });
}

inline Outcome cmd_cohomology(const std::string& path, std::size_t p, const std::string& coefficients, bool strict,
                              bool with_representatives) {
  return guarded("cohomology", [&]() -> Outcome {
    if (p < 1 || p > 3) return input_error("cohomology", "--p must be 1, 2 or 3");
    const Bundle b = load_valid(path);
    const NLieRinehart& R = b.algebra;
    Representation rep;
    if (coefficients == "trivial") {
      rep = trivial_representation(R);
    } else if (coefficients == "anchor") {
      rep = anchor_representation(R);
    } else if (coefficients == "adjoint-kernel") {
      rep = adjoint_on_kernel(R);
    } else if (coefficients == "file") {
      if (!b.representation) return input_error("cohomology", "bundle has no representation block");
      rep = *b.representation;
    } else {
      return input_error("cohomology", "unknown coefficients '" + coefficients + "'");
    }
    const Coefficients c = Coefficients::of(rep);
    const CohomologyReport h = cohomology(R, c, p, strict);
    Report r("cohomology");
    r.merge(h.report);
    json data = json::object();
    data["coefficients"] = coefficients;
    data["strict_alternation"] = strict;
    if (with_representatives) {
      const CochainSpace cs(R, c, p, strict);
      json reps = json::array();
      for (const auto& v : h.representatives) reps.push_back(cochain_json(cs, v));
      data["representatives"] = reps;
    }
    return finish(std::move(r), data);
  });
}

inline Outcome cmd_extend(const std::string& path, const std::string& mode) {
  return guarded("extend", [&]() -> Outcome {
    const Bundle b = load_valid(path);
    const NLieRinehart& R = b.algebra;
    Report r("extend");
    std::optional<NLieRinehart> out;
    if (mode == "central") {
      if (!b.phi) return input_error("extend", "central mode needs a phi block");
      const Report c = check_central_cocycle(R, *b.phi);
      r.merge(c);
      if (c.ok()) out = central_extend(R, *b.phi);
    } else if (mode == "ttheta") {
      if (!b.representation || !b.theta) return input_error("extend", "ttheta mode needs representation and theta");
      const Report c = check_2cocycle_module(R, *b.representation, *b.theta);
      r.merge(c);
      if (c.ok()) out = t_theta_extend(R, *b.representation, *b.theta);
    } else if (mode == "semidirect") {
      if (!b.representation) return input_error("extend", "semidirect mode needs a representation");
      r.merge(verify_representation(R, *b.representation), "representation_");
      out = semidirect(R, *b.representation);
    } else if (mode == "tensor") {
      out = tensor_extend(R);
    } else if (mode == "append_a") {
      out = append_a(R);
    } else {
      return input_error("extend", "unknown mode '" + mode + "'");
    }
    Outcome o;
    if (out) {
      r.merge(verify_rinehart(*out), "result_");
      r.set_number("result_dim", static_cast<std::int64_t>(out->dim()));
      o = finish(std::move(r));
      o.emitted = bundle_json(bundle_of(*out));
    } else {
      r.skip("result_constructed");
      o = finish(std::move(r));
    }
    return o;
  });
}

inline json vector_table(const VectorMap& f) { return io::vector_map_json(f); }

inline Outcome cmd_crossed(const std::string& path, const std::string& action, const std::string& aux_path,
                           std::optional<std::uint64_t> seed) {
  return guarded("crossed", [&]() -> Outcome {
    const Bundle b = load_valid(path);
    const CrossedModule X = b.crossed_module();
    if (action == "verify") {
      Report r("crossed");
      r.merge(verify_crossed(X));
      return finish(std::move(r));
    }
    if (action == "h3") {
      if (X.R.n() != 3) return input_error("crossed", "h3 requires a ternary bracket");
      Report r("crossed");
      const Report v = verify_crossed(X);
      r.merge(v, "verify_");
      if (!v.ok()) return finish(std::move(r));
      std::optional<Matrix> s;
      std::optional<Matrix> sigma;
      if (seed) {
        const SectionPair sp = random_sections(X, *seed);
        s = sp.s;
        sigma = sp.sigma;
      }
      const CrossedInvariantTrace tr = h_class(X, s, sigma);
      r.merge(tr.report);
      const KernelCokernel kc = kernel_cokernel(X);
      const Coefficients cm = Coefficients::of(kc.n_rep);
      json data = json::object();
      data["section_s"] = io::matrix_json(tr.section_s);
      data["section_sigma"] = io::matrix_json(tr.section_sigma);
      data["alpha"] = vector_table(tr.alpha);
      data["beta"] = vector_table(tr.beta);
      data["h"] = cochain_json(CochainSpace(kc.p.algebra, cm, 3), tr.h);
      data["class_zero"] = tr.class_zero;
      if (tr.preimage) data["preimage"] = cochain_json(CochainSpace(kc.p.algebra, cm, 2), *tr.preimage);
      return finish(std::move(r), data);
    }
    if (action == "equivalence") {
      if (aux_path.empty()) return input_error("crossed", "equivalence needs --aux");
      const Bundle b2 = load_valid(aux_path);
      if (!b2.equivalence) return input_error("crossed", "aux bundle has no equivalence block");
      const CrossedModule X2 = b2.crossed_module();
      Report r("crossed");
      const Report e = elementary_equivalent(X, X2, b2.equivalence->delta, b2.equivalence->gamma);
      r.merge(e);
      if (e.ok() && X.R.n() == 3) r.merge(class_transport(X, X2), "class_");
      return finish(std::move(r));
    }
    return input_error("crossed", "unknown action '" + action + "'");
  });
}

inline Outcome cmd_fixture(const std::string& name) {
  Outcome o;
  o.report = Report("fixture");
  for (const auto& f : fixtures::all())
    if (f.name == name) o.emitted = bundle_json(bundle_of(f.algebra));
  for (const auto& f : fixtures::all_crossed())
    if (f.name == name) o.emitted = bundle_json(bundle_of(f.module));
  if (!o.emitted) return input_error("fixture", "unknown fixture '" + name + "'");
  o.report.pass("fixture_found");
  return o;
}

inline json report_json(const Outcome& o) {
  json checks = json::array();
  for (const auto& c : o.report.checks()) {
    json cj{{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) {
      json w = json::object();
      for (const auto& [k, v] : c.witness) w[k] = v;
      cj["witness"] = w;
    }
    checks.push_back(cj);
  }
  json numbers = json::object();
  for (const auto& [k, v] : o.report.numbers()) numbers[k] = v;
  json out{{"command", o.report.command()}, {"checks", checks}, {"numbers", numbers}, {"exit_code", o.exit_code}};
  if (!o.error.empty()) out["error"] = o.error;
  if (!o.data.empty()) out["data"] = o.data;
  return out;
}

inline std::string report_text(const Outcome& o) {
  std::ostringstream s;
  s << o.report.command() << "\n";
  if (!o.error.empty()) s << "  error: " << o.error << "\n";
  for (const auto& c : o.report.checks()) {
    s << "  " << to_string(c.status) << "  " << c.name;
    for (const auto& [k, v] : c.witness) s << "  " << k << "=" << v;
    s << "\n";
  }
  for (const auto& [k, v] : o.report.numbers()) s << "  " << k << " = " << v << "\n";
  s << "exit " << o.exit_code << "\n";
  return s.str();
}

/// Writes the report (and any emitted bundle) and returns the exit code.
inline int emit(const Outcome& o, bool as_json, const std::string& emit_path, std::ostream& out, std::ostream& err) {
  if (o.emitted && !emit_path.empty()) {
    std::ofstream f(emit_path);
    if (!f) {
      err << "error: cannot write " << emit_path << "\n";
      return 2;
    }
    f << o.emitted->dump(2) << "\n";
  }
  if (o.report.command() == "fixture" && o.emitted && emit_path.empty()) {
    out << o.emitted->dump(2) << "\n";
    return o.exit_code;
  }
  if (as_json) {
    json j = report_json(o);
    if (o.emitted && emit_path.empty()) j["bundle"] = *o.emitted;
    out << j.dump(2) << "\n";
  } else {
    out << report_text(o);
    if (o.emitted && emit_path.empty()) out << o.emitted->dump(2) << "\n";
  }
  if (!o.error.empty()) err << "error: " << o.error << "\n";
  return o.exit_code;
}

/// Full command line, without the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact checks and constructions for n-Lie Rinehart algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string emit_path;
  app.add_flag("--json", as_json, "machine-readable report");
  app.add_option("--emit", emit_path, "write the constructed bundle to this path");

  std::string path;
  bool weak = false;
  auto* verify = app.add_subcommand("verify", "check every axiom on basis data");
  verify->add_option("bundle", path)->required();
  verify->add_flag("--weak", weak, "skip the A-linearity of the anchor");

  std::size_t p = 2;
  std::string coefficients = "trivial";
  bool strict = false;
  bool reps = false;
  auto* coh = app.add_subcommand("cohomology", "dimensions of C^p, Z^p, B^p, H^p");
  coh->add_option("bundle", path)->required();
  coh->add_option("--p", p, "cochain degree (1, 2 or 3)");
  coh->add_option("--coefficients", coefficients, "trivial | anchor | adjoint-kernel | file");
  coh->add_flag("--strict-alternation", strict, "alternate across blocks as well");
  coh->add_flag("--representatives", reps, "include cohomology representatives");

  std::string mode;
  auto* ext = app.add_subcommand("extend", "build an enlarged algebra and verify it");
  ext->add_option("bundle", path)->required();
  ext->add_option("--mode", mode, "central | ttheta | semidirect | tensor | append_a")->required();

  std::string action;
  std::string aux;
  std::optional<std::uint64_t> seed;
  auto* crossed = app.add_subcommand("crossed", "crossed-module checks and the h3 class");
  crossed->add_option("bundle", path)->required();
  crossed->add_option("action", action, "verify | h3 | equivalence")->required();
  crossed->add_option("--aux", aux, "second bundle with an equivalence block");
  crossed->add_option("--seed", seed, "draw random sections from this seed");

  std::string name;
  auto* fixture = app.add_subcommand("fixture", "print a built-in fixture as a bundle");
  fixture->add_option("name", name)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Outcome o;
  if (*verify) o = cmd_verify(path, weak);
  if (*coh) o = cmd_cohomology(path, p, coefficients, strict, reps);
  if (*ext) o = cmd_extend(path, mode);
  if (*crossed) o = cmd_crossed(path, action, aux, seed);
  if (*fixture) o = cmd_fixture(name);
  return emit(o, as_json, emit_path, out, err);
}

}  // namespace nlr::cli
