#pragma once

// Alternating k-linear maps stored by their values on canonical basis tuples.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nlr/exact.hpp"
#include "nlr/wedge.hpp"

namespace nlr {

inline void accumulate(Vector& acc, const Scalar& c, const Vector& v) { axpy(acc, c, v); }

inline void accumulate(Matrix& acc, const Scalar& c, const Matrix& m) {
  if (sgn(c) == 0) return;
  if (acc.rows() != m.rows() || acc.cols() != m.cols()) throw DimensionError("accumulate: shape mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (sgn(m(r, k)) != 0) acc(r, k) += c * m(r, k);
}

inline bool is_zero_value(const Vector& v) { return is_zero(v); }
inline bool is_zero_value(const Matrix& m) { return m.is_zero(); }

template <class Value>
class AlternatingMap {
 public:
  AlternatingMap() = default;
  AlternatingMap(std::size_t arity, std::size_t domain_dim, Value zero)
      : arity_(arity), dim_(domain_dim), zero_(std::move(zero)) {}

  std::size_t arity() const { return arity_; }
  std::size_t domain_dim() const { return dim_; }
  const Value& zero() const { return zero_; }
  const std::map<Index, Value>& entries() const { return values_; }

  /// Stores the value on an arbitrary tuple; alternation fixes every other ordering.
  void set(const Index& tuple, Value v) {
    check_arity(tuple);
    SignedIndex s = canonical_index(tuple, dim_);
    if (s.sign == 0) {
      if (!is_zero_value(v)) throw Error("alternating map: nonzero value on repeated index " + to_string(tuple));
      return;
    }
    if (s.sign < 0) accumulate_neg(v);
    if (is_zero_value(v))
      values_.erase(s.canonical);
    else
      values_[s.canonical] = std::move(v);
  }

  /// Adds c·v to the value at tuple.
  void add(const Index& tuple, const Scalar& c, const Value& v) {
    check_arity(tuple);
    SignedIndex s = canonical_index(tuple, dim_);
    if (s.sign == 0 || sgn(c) == 0) return;
    auto it = values_.find(s.canonical);
    if (it == values_.end()) it = values_.emplace(s.canonical, zero_).first;
    accumulate(it->second, s.sign * c, v);
    if (is_zero_value(it->second)) values_.erase(it);
  }

  /// Value on an arbitrary basis tuple.
  Value at(const Index& tuple) const {
    check_arity(tuple);
    SignedIndex s = canonical_index(tuple, dim_);
    if (s.sign == 0) return zero_;
    auto it = values_.find(s.canonical);
    if (it == values_.end()) return zero_;
    if (s.sign > 0) return it->second;
    Value out = zero_;
    accumulate(out, -1, it->second);
    return out;
  }

  /// Multilinear evaluation on coordinate vectors.
  Value eval(const std::vector<Vector>& args) const {
    if (args.size() != arity_) throw DimensionError("alternating map: wrong number of arguments");
    for (const auto& a : args)
      if (a.size() != dim_) throw DimensionError("alternating map: argument length mismatch");
    Value out = zero_;
    Index tuple(arity_);
    eval_rec(args, 0, Scalar(1), tuple, out);
    return out;
  }

  friend bool operator==(const AlternatingMap& a, const AlternatingMap& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  void check_arity(const Index& tuple) const {
    if (tuple.size() != arity_)
      throw DimensionError("alternating map: tuple " + to_string(tuple) + " has wrong length");
  }

  void accumulate_neg(Value& v) const {
    Value out = zero_;
    accumulate(out, -1, v);
    v = std::move(out);
  }

  void eval_rec(const std::vector<Vector>& args, std::size_t slot, const Scalar& coef, Index& tuple,
                Value& out) const {
    if (slot == arity_) {
      SignedIndex s = canonical_index(tuple, dim_);
      if (s.sign == 0) return;
      auto it = values_.find(s.canonical);
      if (it != values_.end()) accumulate(out, s.sign * coef, it->second);
      return;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(args[slot][i]) == 0) continue;
      tuple[slot] = i;
      eval_rec(args, slot + 1, coef * args[slot][i], tuple, out);
    }
  }

  std::size_t arity_ = 0;
  std::size_t dim_ = 0;
  Value zero_{};
  std::map<Index, Value> values_;
};

using VectorMap = AlternatingMap<Vector>;
using MatrixMap = AlternatingMap<Matrix>;

inline VectorMap make_vector_map(std::size_t arity, std::size_t domain_dim, std::size_t target_dim) {
  return VectorMap(arity, domain_dim, Vector(target_dim));
}

inline MatrixMap make_matrix_map(std::size_t arity, std::size_t domain_dim, std::size_t rows,
                                 std::size_t cols) {
  return MatrixMap(arity, domain_dim, Matrix(rows, cols));
}

/// Unit vectors for the entries of a basis tuple.
inline std::vector<Vector> basis_args(const Index& tuple, std::size_t dim) {
  std::vector<Vector> out;
  out.reserve(tuple.size());
  for (auto i : tuple) out.push_back(unit_vector(dim, i));
  return out;
}

}  // namespace nlr
