#pragma once

// Cochains C^p(L, M), the coboundary δ and cohomology dimensions.
//
// A p-cochain is stored as a raw vector over the tuples (b_1, …, b_{p-1}, z)
// of canonical (n-1)-blocks b_j and a final basis index z, with raw index
// ((b_1 … b_{p-1} in base N)·dim L + z)·dim M + t, N = C(dim L, n-1).
// Alternation inside each block holds by storage; A-multilinearity (and, in
// strict mode, alternation across all arguments) is imposed as linear
// constraints whose solution space is C^p.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlr/exact.hpp"
#include "nlr/nlie.hpp"
#include "nlr/report.hpp"
#include "nlr/rep.hpp"
#include "nlr/rinehart.hpp"
#include "nlr/wedge.hpp"

namespace nlr {

/// Carrier data for cochains. ψ may be any alternating function of n-1
/// basis indices, so pseudo-representations can be fed through δ as well.
struct Coefficients {
  std::size_t dim = 0;
  std::vector<Matrix> a_action;
  std::function<Matrix(const Index&)> psi;

  static Coefficients of(const Representation& rep) {
    return {rep.dim, rep.a_action, [psi = rep.psi](const Index& t) { return psi.at(t); }};
  }
};

/// Thrown when δ of a cochain breaks the constraints of the next degree.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, Witness w) : Error(what), witness_(std::move(w)) {}
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

class CochainSpace {
 public:
  CochainSpace(const NLieRinehart& R, Coefficients c, std::size_t p, bool strict = false)
      : R_(R), c_(std::move(c)), p_(p), strict_(strict), blocks_(R.dim(), R.n() - 1), constraints_(0) {
    if (p == 0) throw DimensionError("cochains start in degree 1");
    if (c_.a_action.size() != R.base.dim) throw DimensionError("coefficients: need one action matrix per basis vector of A");
    tuples_ = R.dim();
    for (std::size_t j = 0; j + 1 < p; ++j) tuples_ *= blocks_.size();
    constraints_ = RowEchelon(raw_dim());
    build_constraints();
    constraints_.finish();
    free_ = constraints_.free_columns();
    free_pos_.assign(raw_dim(), kNone);
    for (std::size_t i = 0; i < free_.size(); ++i) free_pos_[free_[i]] = i;
  }

  const NLieRinehart& algebra() const { return R_; }
  const Coefficients& coefficients() const { return c_; }
  const BlockBasis& blocks() const { return blocks_; }
  std::size_t p() const { return p_; }
  bool strict() const { return strict_; }
  std::size_t m() const { return c_.dim; }
  std::size_t tuple_count() const { return tuples_; }
  std::size_t raw_dim() const { return tuples_ * c_.dim; }
  std::size_t dim() const { return free_.size(); }

  /// Tuple id from block positions and the final index.
  std::size_t tuple_id(const std::vector<std::size_t>& block_pos, std::size_t z) const {
    std::size_t id = 0;
    for (auto b : block_pos) id = id * blocks_.size() + b;
    return id * R_.dim() + z;
  }

  std::pair<std::vector<std::size_t>, std::size_t> decode(std::size_t id) const {
    const std::size_t z = id % R_.dim();
    id /= R_.dim();
    std::vector<std::size_t> pos(p_ - 1);
    for (std::size_t j = p_ - 1; j-- > 0;) {
      pos[j] = id % blocks_.size();
      id /= blocks_.size();
    }
    return {pos, z};
  }

  /// Sign and tuple id of arbitrary blocks; sign 0 when a block repeats an index.
  std::pair<int, std::size_t> locate(const std::vector<Index>& blocks, std::size_t z) const {
    if (blocks.size() + 1 != p_) throw DimensionError("cochain: expected " + std::to_string(p_ - 1) + " blocks");
    int sign = 1;
    std::vector<std::size_t> pos;
    for (const auto& b : blocks) {
      auto [s, q] = blocks_.locate(b);
      if (s == 0) return {0, 0};
      sign *= s;
      pos.push_back(q);
    }
    if (z >= R_.dim()) throw DimensionError("cochain: final index out of range");
    return {sign, tuple_id(pos, z)};
  }

  Vector value(const Vector& raw, const std::vector<Index>& blocks, std::size_t z) const {
    Vector out(m());
    auto [sign, id] = locate(blocks, z);
    if (sign == 0) return out;
    for (std::size_t t = 0; t < m(); ++t) out[t] = sign * raw[id * m() + t];
    return out;
  }

  /// Writes a value on a tuple (sign-adjusted). Does not enforce the constraints.
  void set(Vector& raw, const std::vector<Index>& blocks, std::size_t z, const Vector& v) const {
    auto [sign, id] = locate(blocks, z);
    if (sign == 0) {
      if (!is_zero(v)) throw Error("cochain: nonzero value on repeated block index");
      return;
    }
    for (std::size_t t = 0; t < m(); ++t) raw[id * m() + t] = sign * v[t];
  }

  /// j-th canonical basis cochain, as a raw vector.
  Vector basis_vector(std::size_t j) const {
    Vector v(raw_dim());
    const std::size_t f = free_.at(j);
    v[f] = 1;
    for (const auto& r : constraints_.rows()) {
      auto it = std::lower_bound(r.begin(), r.end(), f, [](const auto& e, std::size_t c) { return e.first < c; });
      if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
    }
    return v;
  }

  std::vector<Vector> basis() const {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < dim(); ++j) out.push_back(basis_vector(j));
    return out;
  }

  /// First constraint broken by a raw vector, if any.
  std::optional<Witness> violation(const Vector& raw) const {
    if (raw.size() != raw_dim()) throw DimensionError("cochain: raw vector has wrong length");
    for (const auto& r : constraints_.rows()) {
      Scalar s = 0;
      for (const auto& [c, v] : r) s += v * raw[c];
      if (sgn(s) != 0) {
        const std::size_t col = r.front().first;
        auto [pos, z] = decode(col / m());
        std::string blocks;
        for (auto b : pos) blocks += to_string(blocks_[b]);
        return Witness{{"degree", std::to_string(p_)}, {"blocks", blocks}, {"z", std::to_string(z)},
                       {"target", std::to_string(col % m())}, {"residual", to_string(s)}};
      }
    }
    return std::nullopt;
  }

  bool contains(const Vector& raw) const { return !violation(raw); }

  /// Coordinates in the canonical basis; the vector must lie in the space.
  Vector coordinates(const Vector& raw) const {
    if (auto w = violation(raw)) throw LeakageError("cochain violates the constraints of C^" + std::to_string(p_), *w);
    Vector c(dim());
    for (std::size_t i = 0; i < free_.size(); ++i) c[i] = raw[free_[i]];
    return c;
  }

  Vector from_coordinates(const Vector& c) const {
    if (c.size() != dim()) throw DimensionError("cochain: coordinate vector has wrong length");
    Vector raw(raw_dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (sgn(c[j]) != 0) axpy(raw, c[j], basis_vector(j));
    return raw;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Index> args_of(std::size_t id, std::size_t& z) const {
    auto [pos, zz] = decode(id);
    z = zz;
    std::vector<Index> out;
    for (auto b : pos) out.push_back(blocks_[b]);
    return out;
  }

  void build_constraints() {
    const std::size_t d = R_.dim();
    const std::size_t mm = m();
    for (std::size_t id = 0; id < tuples_; ++id) {
      std::size_t z = 0;
      const std::vector<Index> args = args_of(id, z);
      // f(…, a_k x, …) - a_k f(…) = 0, slot by slot
      for (std::size_t k = 0; k < R_.base.dim; ++k) {
        const Matrix& lk = R_.a_action[k];
        const Matrix& mk = c_.a_action[k];
        for (std::size_t j = 0; j <= args.size(); ++j) {
          const std::size_t width = j < args.size() ? args[j].size() : 1;
          for (std::size_t s = 0; s < width; ++s) {
            const std::size_t x = j < args.size() ? args[j][s] : z;
            std::map<std::size_t, Scalar> base;  // tuple id -> coefficient
            for (std::size_t r = 0; r < d; ++r) {
              if (sgn(lk(r, x)) == 0) continue;
              auto moved = args;
              std::size_t zz = z;
              if (j < args.size())
                moved[j][s] = r;
              else
                zz = r;
              auto [sign, tid] = locate(moved, zz);
              if (sign != 0) base[tid] += sign * lk(r, x);
            }
            for (std::size_t t = 0; t < mm; ++t) {
              std::map<std::size_t, Scalar> row;
              for (const auto& [tid, c] : base) row[tid * mm + t] += c;
              for (std::size_t u = 0; u < mm; ++u)
                if (sgn(mk(t, u)) != 0) row[id * mm + u] -= mk(t, u);
              add_row(row);
            }
          }
        }
      }
      if (strict_) add_strict(id, args, z);
    }
  }

  void add_strict(std::size_t id, const std::vector<Index>& args, std::size_t z) {
    Index flat;
    for (const auto& b : args) flat.insert(flat.end(), b.begin(), b.end());
    flat.push_back(z);
    SignedIndex s = canonical_index(flat, R_.dim());
    const std::size_t mm = m();
    if (s.sign == 0) {
      for (std::size_t t = 0; t < mm; ++t) add_row({{id * mm + t, Scalar(1)}});
      return;
    }
    std::vector<Index> rep;
    const std::size_t w = R_.n() - 1;
    for (std::size_t j = 0; j < args.size(); ++j) rep.emplace_back(s.canonical.begin() + j * w, s.canonical.begin() + (j + 1) * w);
    const std::size_t rz = s.canonical.back();
    auto [sign, rid] = locate(rep, rz);
    if (rid == id) return;
    for (std::size_t t = 0; t < mm; ++t) {
      std::map<std::size_t, Scalar> row;
      row[id * mm + t] += 1;
      row[rid * mm + t] -= s.sign * sign;
      add_row(row);
    }
  }

  void add_row(const std::map<std::size_t, Scalar>& row) {
    SparseRow r;
    for (const auto& [c, v] : row)
      if (sgn(v) != 0) r.emplace_back(c, v);
    if (!r.empty()) constraints_.add(std::move(r));
  }

  NLieRinehart R_;
  Coefficients c_;
  std::size_t p_;
  bool strict_;
  BlockBasis blocks_;
  std::size_t tuples_ = 0;
  RowEchelon constraints_;
  std::vector<std::size_t> free_;
  std::vector<std::size_t> free_pos_;
};

/// δ: raw C^p → raw C^{p+1}, one sparse row per raw output coordinate.
class RawCoboundary {
 public:
  RawCoboundary(const CochainSpace& from, const CochainSpace& to) : in_cols_(from.raw_dim()) {
    if (to.p() != from.p() + 1) throw DimensionError("coboundary: degrees must be consecutive");
    const NLieRinehart& R = from.algebra();
    const std::size_t n = R.n();
    const std::size_t p = from.p();
    const std::size_t m = from.m();
    const BlockBasis& bb = from.blocks();
    const LeibnizAlgebra F = fundamental_bracket(R.lie);
    const auto& psi = from.coefficients().psi;
    const auto sgn_pow = [](std::size_t e) { return e % 2 == 0 ? 1 : -1; };
    rows_.resize(to.raw_dim());

    for (std::size_t out = 0; out < to.tuple_count(); ++out) {
      auto [xs, z] = to.decode(out);  // p blocks
      std::map<std::size_t, Matrix> terms;
      const auto add = [&](const std::vector<std::size_t>& pos, std::size_t zz, const Matrix& coef) {
        const std::size_t id = from.tuple_id(pos, zz);
        auto it = terms.find(id);
        if (it == terms.end())
          terms.emplace(id, coef);
        else
          it->second += coef;
      };
      const auto without = [&](std::size_t i) {
        std::vector<std::size_t> out_pos;
        for (std::size_t j = 0; j < xs.size(); ++j)
          if (j != i) out_pos.push_back(xs[j]);
        return out_pos;
      };
      const Matrix id_m = Matrix::identity(m);
      for (std::size_t i = 0; i < p; ++i) {
        const int si = sgn_pow(i + 1);
        // [X_i, X_k]_F in slot k
        for (std::size_t k = i + 1; k < p; ++k) {
          const Vector& fb = F.table[xs[i]][xs[k]];
          for (std::size_t b = 0; b < fb.size(); ++b) {
            if (sgn(fb[b]) == 0) continue;
            auto pos = xs;
            pos[k] = b;
            pos.erase(pos.begin() + static_cast<std::ptrdiff_t>(i));
            add(pos, z, (si * fb[b]) * id_m);
          }
        }
        // ad(X_i)(z)
        Index full = bb[xs[i]];
        full.push_back(z);
        const Vector adz = R.lie.at(full);
        for (std::size_t r = 0; r < adz.size(); ++r)
          if (sgn(adz[r]) != 0) add(without(i), r, (si * adz[r]) * id_m);
        // ψ(X_i) f(…, X̂_i, …, z)
        const Matrix px = psi(bb[xs[i]]);
        if (!px.is_zero()) add(without(i), z, Scalar(-si) * px);
      }
      // ψ(x_p^1, …, x̂_p^i, …, z) f(X_1, …, X_{p-1}, x_p^i)
      const Index& last = bb[xs[p - 1]];
      auto head = xs;
      head.pop_back();
      for (std::size_t i = 0; i + 1 < n; ++i) {
        Index hat;
        for (std::size_t j = 0; j + 1 < n; ++j)
          if (j != i) hat.push_back(last[j]);
        hat.push_back(z);
        const Matrix ph = psi(hat);
        if (ph.is_zero()) continue;
        add(head, last[i], Scalar(sgn_pow(n + p - (i + 1) + 1)) * ph);
      }
      for (std::size_t t = 0; t < m; ++t) {
        SparseRow row;
        for (const auto& [id, coef] : terms)
          for (std::size_t s = 0; s < m; ++s)
            if (sgn(coef(t, s)) != 0) row.emplace_back(id * m + s, coef(t, s));
        rows_[out * m + t] = std::move(row);
      }
    }
  }

  Vector apply(const Vector& raw) const {
    if (raw.size() != in_cols_) throw DimensionError("coboundary: raw vector has wrong length");
    Vector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) out[r] += v * raw[c];
    return out;
  }

 private:
  std::size_t in_cols_;
  std::vector<SparseRow> rows_;
};

/// δ^p in the canonical bases of C^p and C^{p+1}, stored by columns.
struct CoboundaryMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Vector> columns;

  Matrix dense() const { return Matrix::from_columns(columns, rows); }

  Vector apply(const Vector& v) const {
    Vector out(rows);
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(v[j]) != 0) axpy(out, v[j], columns[j]);
    return out;
  }
};

inline CoboundaryMatrix coboundary_columns(const CochainSpace& from, const CochainSpace& to) {
  const RawCoboundary op(from, to);
  CoboundaryMatrix out{to.dim(), from.dim(), {}};
  for (std::size_t j = 0; j < from.dim(); ++j) {
    const Vector image = op.apply(from.basis_vector(j));
    if (auto w = to.violation(image)) {
      (*w)["source_basis_cochain"] = std::to_string(j);
      throw LeakageError("δ leaves the A-multilinear cochains", *w);
    }
    out.columns.push_back(to.coordinates(image));
  }
  return out;
}

inline Matrix coboundary_matrix(const NLieRinehart& R, const Coefficients& c, std::size_t p, bool strict = false) {
  return coboundary_columns(CochainSpace(R, c, p, strict), CochainSpace(R, c, p + 1, strict)).dense();
}

/// δf for a raw cochain f of degree p.
inline Vector coboundary(const CochainSpace& from, const CochainSpace& to, const Vector& f) {
  return RawCoboundary(from, to).apply(f);
}

struct CohomologyReport {
  std::size_t p = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_H = 0;
  std::vector<Vector> representatives;  // raw cochains spanning a complement of B^p in Z^p
  Report report;
};

namespace detail {

inline std::vector<Vector> column_kernel(const CoboundaryMatrix& d) {
  std::vector<SparseRow> rows(d.rows);
  for (std::size_t c = 0; c < d.cols; ++c)
    for (std::size_t r = 0; r < d.rows; ++r)
      if (sgn(d.columns[c][r]) != 0) rows[r].emplace_back(c, d.columns[c][r]);
  RowEchelon e(d.cols);
  for (auto& r : rows) e.add(std::move(r));
  return e.null_space();
}

}  // namespace detail

inline CohomologyReport cohomology(const NLieRinehart& R, const Coefficients& c, std::size_t p, bool strict = false) {
  CohomologyReport out;
  out.p = p;
  out.report = Report("cohomology");
  const CochainSpace cp(R, c, p, strict);
  out.dim_cochains = cp.dim();
  out.report.set_number("C" + std::to_string(p) + "_dim", static_cast<std::int64_t>(cp.dim()));
  try {
    const CochainSpace next(R, c, p + 1, strict);
    const CoboundaryMatrix dp = coboundary_columns(cp, next);
    const std::vector<Vector> z = detail::column_kernel(dp);
    out.dim_cocycles = z.size();
    RowEchelon span(cp.dim());
    if (p >= 2) {
      const CochainSpace prev(R, c, p - 1, strict);
      const CoboundaryMatrix dq = coboundary_columns(prev, cp);
      std::optional<Witness> w;
      for (std::size_t j = 0; j < dq.cols && !w; ++j) {
        const Vector image = dp.apply(dq.columns[j]);
        if (!is_zero(image)) w = Witness{{"degree", std::to_string(p - 1)}, {"basis_cochain", std::to_string(j)}};
        span.add(dq.columns[j]);
      }
      out.report.record("delta_squared_zero", w);
      if (w) throw InconsistentComplex("δ∘δ ≠ 0 in degree " + std::to_string(p - 1));
    } else {
      out.report.skip("delta_squared_zero");
    }
    out.dim_coboundaries = span.rank();
    for (const auto& v : z)
      if (span.add(v)) out.representatives.push_back(cp.from_coordinates(v));
    out.dim_H = out.representatives.size();
    out.report.pass("a_multilinearity");
  } catch (const LeakageError& e) {
    out.report.fail("a_multilinearity", e.witness());
    return out;
  }
  const std::string s = std::to_string(p);
  out.report.set_number("Z" + s + "_dim", static_cast<std::int64_t>(out.dim_cocycles));
  out.report.set_number("B" + s + "_dim", static_cast<std::int64_t>(out.dim_coboundaries));
  out.report.set_number("H" + s + "_dim", static_cast<std::int64_t>(out.dim_H));
  return out;
}

inline bool is_cocycle(const CochainSpace& cp, const Vector& f) {
  const CochainSpace next(cp.algebra(), cp.coefficients(), cp.p() + 1, cp.strict());
  return is_zero(coboundary(cp, next, f));
}

/// A raw preimage g with δg = f, or nullopt. In degree 1 only f = 0 qualifies,
/// with an empty preimage.
inline std::optional<Vector> is_coboundary(const CochainSpace& cp, const Vector& f) {
  if (cp.p() == 1) {
    if (is_zero(f)) return Vector{};
    return std::nullopt;
  }
  const CochainSpace prev(cp.algebra(), cp.coefficients(), cp.p() - 1, cp.strict());
  if (!cp.contains(f)) return std::nullopt;
  const Matrix d = coboundary_columns(prev, cp).dense();
  auto coeffs = solve_in_span(d, cp.coordinates(f));
  if (!coeffs) return std::nullopt;
  return prev.from_coordinates(*coeffs);
}

}  // namespace nlr
