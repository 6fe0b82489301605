#pragma once

// JSON bundles: a Rinehart algebra plus optional representation, cocycles,
// crossed-module block and equivalence maps. Scalars are "p/q" strings,
// indices are 0-based. Errors carry a JSON-pointer location.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlr/alternating_map.hpp"
#include "nlr/crossed.hpp"
#include "nlr/exact.hpp"
#include "nlr/nlie.hpp"
#include "nlr/rep.hpp"
#include "nlr/rinehart.hpp"

namespace nlr {

using json = nlohmann::ordered_json;

struct CrossedBlock {
  LieAAlgebraModule action;
  Matrix boundary;

  friend bool operator==(const CrossedBlock& a, const CrossedBlock& b) {
    return a.action.m_lie == b.action.m_lie && a.action.rep == b.action.rep && a.boundary == b.boundary;
  }
};

struct EquivalenceBlock {
  Matrix delta;
  Matrix gamma;
  friend bool operator==(const EquivalenceBlock&, const EquivalenceBlock&) = default;
};

struct Bundle {
  NLieRinehart algebra;
  std::optional<Representation> representation;
  std::optional<VectorMap> theta;
  std::optional<VectorMap> phi;
  std::optional<CrossedBlock> crossed;
  std::optional<EquivalenceBlock> equivalence;

  CrossedModule crossed_module() const {
    if (!crossed) throw ParseError("bundle has no crossed block");
    return {algebra, crossed->action, crossed->boundary};
  }

  friend bool operator==(const Bundle& a, const Bundle& b) {
    return a.algebra.base == b.algebra.base && a.algebra.lie == b.algebra.lie &&
           a.algebra.a_action == b.algebra.a_action && a.algebra.anchor == b.algebra.anchor &&
           a.representation == b.representation && a.theta == b.theta && a.phi == b.phi && a.crossed == b.crossed &&
           a.equivalence == b.equivalence;
  }
};

namespace io {

[[noreturn]] inline void fail_at(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

inline const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail_at(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail_at(path, "missing field '" + key + "'");
  return *it;
}

inline std::size_t to_index(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail_at(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline Scalar to_scalar(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail_at(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail_at(path, e.what());
  }
}

inline const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array");
  return j;
}

inline Vector to_vector(const json& j, std::size_t len, const std::string& path) {
  array_at(j, path);
  if (j.size() != len) fail_at(path, "expected " + std::to_string(len) + " entries");
  Vector v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = to_scalar(j[i], path + "/" + std::to_string(i));
  return v;
}

inline Matrix to_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  array_at(j, path);
  if (j.size() != rows) fail_at(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = to_vector(j[r], cols, path + "/" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

inline std::vector<Matrix> to_matrices(const json& j, std::size_t count, std::size_t dim, const std::string& path) {
  array_at(j, path);
  if (j.size() != count) fail_at(path, "expected " + std::to_string(count) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(to_matrix(j[i], dim, dim, path + "/" + std::to_string(i)));
  return out;
}

inline Index to_multi_index(const json& j, std::size_t arity, std::size_t dim, const std::string& path) {
  array_at(j, path);
  if (j.size() != arity) fail_at(path, "expected " + std::to_string(arity) + " indices");
  Index t;
  for (std::size_t i = 0; i < arity; ++i) {
    const std::size_t k = to_index(j[i], path + "/" + std::to_string(i));
    if (k >= dim) fail_at(path + "/" + std::to_string(i), "index out of range");
    t.push_back(k);
  }
  return t;
}

/// Sparse entries [i_1, …, i_k, target, "p/q"].
inline VectorMap to_vector_map(const json& j, std::size_t arity, std::size_t dim, std::size_t target_dim,
                               const std::string& path) {
  array_at(j, path);
  VectorMap out = make_vector_map(arity, dim, target_dim);
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "/" + std::to_string(e);
    const json& row = array_at(j[e], p);
    if (row.size() != arity + 2) fail_at(p, "expected " + std::to_string(arity + 2) + " fields");
    Index t;
    for (std::size_t i = 0; i < arity; ++i) {
      const std::size_t k = to_index(row[i], p + "/" + std::to_string(i));
      if (k >= dim) fail_at(p + "/" + std::to_string(i), "index out of range");
      t.push_back(k);
    }
    const std::size_t target = to_index(row[arity], p + "/" + std::to_string(arity));
    if (target >= target_dim) fail_at(p + "/" + std::to_string(arity), "target out of range");
    const Scalar c = to_scalar(row[arity + 1], p + "/" + std::to_string(arity + 1));
    try {
      out.add(t, 1, scaled(c, unit_vector(target_dim, target)));
    } catch (const Error& err) {
      fail_at(p, err.what());
    }
    if (canonical_index(t, dim).sign == 0 && sgn(c) != 0) fail_at(p, "repeated index");
  }
  return out;
}

/// Pairs [[i_1, …, i_k], matrix].
inline MatrixMap to_matrix_map(const json& j, std::size_t arity, std::size_t dim, std::size_t rows,
                               std::size_t cols, const std::string& path) {
  array_at(j, path);
  MatrixMap out = make_matrix_map(arity, dim, rows, cols);
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string p = path + "/" + std::to_string(e);
    const json& pair = array_at(j[e], p);
    if (pair.size() != 2) fail_at(p, "expected [multi-index, matrix]");
    const Index t = to_multi_index(pair[0], arity, dim, p + "/0");
    const Matrix m = to_matrix(pair[1], rows, cols, p + "/1");
    if (canonical_index(t, dim).sign == 0) {
      if (!m.is_zero()) fail_at(p, "repeated index");
      continue;
    }
    out.add(t, 1, m);
  }
  return out;
}

inline json scalar_json(const Scalar& s) { return to_string(s); }

inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

inline json matrices_json(const std::vector<Matrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(matrix_json(m));
  return out;
}

inline json vector_map_json(const VectorMap& f) {
  json out = json::array();
  for (const auto& [t, v] : f.entries())
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0) continue;
      json row = json::array();
      for (auto i : t) row.push_back(i);
      row.push_back(k);
      row.push_back(scalar_json(v[k]));
      out.push_back(row);
    }
  return out;
}

inline json matrix_map_json(const MatrixMap& f) {
  json out = json::array();
  for (const auto& [t, m] : f.entries()) out.push_back(json::array({json(t), matrix_json(m)}));
  return out;
}

}  // namespace io

inline CommAlgebra parse_base_algebra(const json& j, const std::string& path = "/base_algebra") {
  using namespace io;
  CommAlgebra a;
  a.dim = to_index(member(j, "dim", path), path + "/dim");
  if (a.dim == 0) fail_at(path + "/dim", "dimension must be positive");
  a.unit = to_vector(member(j, "unit", path), a.dim, path + "/unit");
  a.product.assign(a.dim, std::vector<Vector>(a.dim, Vector(a.dim)));
  const json& prod = array_at(member(j, "product", path), path + "/product");
  for (std::size_t e = 0; e < prod.size(); ++e) {
    const std::string p = path + "/product/" + std::to_string(e);
    const json& row = array_at(prod[e], p);
    if (row.size() != 3) fail_at(p, "expected [i, j, coordinates]");
    const std::size_t i = to_index(row[0], p + "/0");
    const std::size_t k = to_index(row[1], p + "/1");
    if (i >= a.dim || k >= a.dim) fail_at(p, "index out of range");
    const Vector c = to_vector(row[2], a.dim, p + "/2");
    a.product[i][k] = c;
    a.product[k][i] = c;
  }
  return a;
}

inline NLieRinehart parse_rinehart(const json& j) {
  using namespace io;
  NLieRinehart R;
  R.base = parse_base_algebra(member(j, "base_algebra", ""));
  const json& mod = member(j, "module", "");
  const std::size_t d = to_index(member(mod, "dim", "/module"), "/module/dim");
  const std::size_t n = to_index(member(mod, "n", "/module"), "/module/n");
  if (n < 2) fail_at("/module/n", "arity must be at least 2");
  R.a_action = to_matrices(member(mod, "a_action", "/module"), R.base.dim, d, "/module/a_action");
  R.lie = NLieAlgebra::abelian(d, n);
  R.lie.bracket = to_vector_map(member(j, "bracket", ""), n, d, d, "/bracket");
  R.anchor = to_matrix_map(member(j, "anchor", ""), n - 1, d, R.base.dim, R.base.dim, "/anchor");
  return R;
}

inline Representation parse_representation(const json& j, const NLieRinehart& R,
                                           const std::string& path = "/representation") {
  using namespace io;
  Representation rep;
  rep.dim = to_index(member(j, "carrier_dim", path), path + "/carrier_dim");
  rep.a_action = to_matrices(member(j, "a_action", path), R.base.dim, rep.dim, path + "/a_action");
  rep.psi = to_matrix_map(member(j, "psi", path), R.n() - 1, R.dim(), rep.dim, rep.dim, path + "/psi");
  return rep;
}

inline Bundle parse_bundle(const json& j) {
  using namespace io;
  if (!j.is_object()) fail_at("", "expected a JSON object");
  Bundle b;
  b.algebra = parse_rinehart(j);
  const NLieRinehart& R = b.algebra;
  const std::size_t d = R.dim();
  const std::size_t n = R.n();
  if (j.contains("representation")) b.representation = parse_representation(j["representation"], R);
  if (j.contains("theta")) {
    if (!b.representation) fail_at("/theta", "theta requires a representation");
    b.theta = to_vector_map(j["theta"], n, d, b.representation->dim, "/theta");
  }
  if (j.contains("phi")) b.phi = to_vector_map(j["phi"], n, d, 1, "/phi");
  if (j.contains("crossed")) {
    const json& c = j["crossed"];
    const json& ma = member(c, "m_algebra", "/crossed");
    CrossedBlock cb;
    const std::size_t dm = to_index(member(ma, "dim", "/crossed/m_algebra"), "/crossed/m_algebra/dim");
    cb.action.m_lie = NLieAlgebra::abelian(dm, n);
    cb.action.m_lie.bracket = to_vector_map(member(ma, "bracket", "/crossed/m_algebra"), n, dm, dm,
                                            "/crossed/m_algebra/bracket");
    cb.action.rep.dim = dm;
    cb.action.rep.a_action =
        to_matrices(member(ma, "a_action", "/crossed/m_algebra"), R.base.dim, dm, "/crossed/m_algebra/a_action");
    cb.action.rep.psi = to_matrix_map(member(c, "psi", "/crossed"), n - 1, d, dm, dm, "/crossed/psi");
    cb.boundary = to_matrix(member(c, "boundary", "/crossed"), d, dm, "/crossed/boundary");
    b.crossed = cb;
  }
  if (j.contains("equivalence")) {
    const json& e = j["equivalence"];
    const json& dj = array_at(member(e, "delta", "/equivalence"), "/equivalence/delta");
    const json& gj = array_at(member(e, "gamma", "/equivalence"), "/equivalence/gamma");
    const std::size_t dr = dj.size();
    const std::size_t dc = dr ? array_at(dj[0], "/equivalence/delta/0").size() : 0;
    const std::size_t gr = gj.size();
    const std::size_t gc = gr ? array_at(gj[0], "/equivalence/gamma/0").size() : 0;
    b.equivalence = EquivalenceBlock{to_matrix(dj, dr, dc, "/equivalence/delta"), to_matrix(gj, gr, gc, "/equivalence/gamma")};
  }
  return b;
}

inline Bundle parse_bundle_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_bundle(j);
}

inline Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_bundle_text(ss.str());
}

inline json base_algebra_json(const CommAlgebra& a) {
  using namespace io;
  json prod = json::array();
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = i; k < a.dim; ++k)
      if (!is_zero(a.product[i][k])) {
        json c = json::array();
        for (const auto& s : a.product[i][k]) c.push_back(scalar_json(s));
        prod.push_back(json::array({i, k, c}));
      }
  json unit = json::array();
  for (const auto& s : a.unit) unit.push_back(scalar_json(s));
  return json{{"dim", a.dim}, {"unit", unit}, {"product", prod}};
}

inline json representation_json(const Representation& rep) {
  using namespace io;
  return json{{"carrier_dim", rep.dim}, {"a_action", matrices_json(rep.a_action)}, {"psi", matrix_map_json(rep.psi)}};
}

inline json bundle_json(const Bundle& b) {
  using namespace io;
  const NLieRinehart& R = b.algebra;
  json j;
  j["base_algebra"] = base_algebra_json(R.base);
  j["module"] = json{{"dim", R.dim()}, {"n", R.n()}, {"a_action", matrices_json(R.a_action)}};
  j["bracket"] = vector_map_json(R.lie.bracket);
  j["anchor"] = matrix_map_json(R.anchor);
  if (b.representation) j["representation"] = representation_json(*b.representation);
  if (b.theta) j["theta"] = vector_map_json(*b.theta);
  if (b.phi) j["phi"] = vector_map_json(*b.phi);
  if (b.crossed) {
    const auto& c = *b.crossed;
    j["crossed"] = json{{"m_algebra",
                         {{"dim", c.action.m_lie.dim},
                          {"bracket", vector_map_json(c.action.m_lie.bracket)},
                          {"a_action", matrices_json(c.action.rep.a_action)}}},
                        {"psi", matrix_map_json(c.action.rep.psi)},
                        {"boundary", matrix_json(c.boundary)}};
  }
  if (b.equivalence) j["equivalence"] = json{{"delta", matrix_json(b.equivalence->delta)}, {"gamma", matrix_json(b.equivalence->gamma)}};
  return j;
}

inline Bundle bundle_of(const NLieRinehart& R) { return Bundle{R, {}, {}, {}, {}, {}}; }

inline Bundle bundle_of(const CrossedModule& X) {
  Bundle b = bundle_of(X.R);
  b.crossed = CrossedBlock{X.action, X.boundary};
  return b;
}

inline std::string dump_bundle(const Bundle& b) { return bundle_json(b).dump(2) + "\n"; }

}  // namespace nlr
