#pragma once

// Exact rational scalars, dense matrices and the elimination routines that
// every other module builds on. Elimination works on sparse rows internally;
// the public surface is dense.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nlr {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a complex is inconsistent (a boundary escapes the cycles).
class InconsistentComplex : public Error {
 public:
  using Error::Error;
};

/// Parses `[+-]digits[/digits]` into canonical form.
inline Scalar parse_rational(std::string_view text) {
  std::size_t pos = 0;
  std::string num;
  std::string den;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') num.push_back('-');
    ++pos;
  }
  const auto digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    return pos > start;
  };
  if (!digits(num)) throw ParseError("malformed rational '" + std::string(text) + "'");
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  if (pos != text.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
  Scalar value;
  if (den.empty()) {
    value = Scalar(mpz_class(num), 1);
  } else {
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Scalar(mpz_class(num), d);
  }
  value.canonicalize();
  return value;
}

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Scalar& x) { return x.get_str(); }

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

/// y += a * x
inline void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += a * x[i];
  }
}

inline Vector scaled(const Scalar& a, Vector v) {
  for (auto& x : v) x *= a;
  return v;
}

inline Vector add(Vector a, const Vector& b) {
  axpy(a, 1, b);
  return a;
}

inline Vector sub(Vector a, const Vector& b) {
  axpy(a, -1, b);
  return a;
}

inline std::string to_string(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionError("from_columns: column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::vector<Vector> columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return sgn(x) == 0; });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& a) {
    for (auto& x : data_) x *= a;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& a, Matrix m) { return m *= a; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: length mismatch");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (sgn(v[k]) != 0 && sgn(a(i, k)) != 0) out[i] += a(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ", ";
    out += to_string(m.row(r));
  }
  return out + "]";
}

/// Horizontal concatenation [a | b].
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row count mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

/// Block-diagonal sum diag(a, b).
inline Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) r.emplace_back(i, v[i]);
  return r;
}

namespace detail {

// r -= factor * p, both sorted by column.
inline void sparse_axpy(SparseRow& r, const Scalar& factor, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -factor * p[j].second);
      ++j;
    } else {
      Scalar v = r[i].second - factor * p[j].second;
      if (sgn(v) != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

}  // namespace detail

/// Incremental reduced row echelon form over the rationals.
///
/// Rows are added one at a time; each is reduced against the existing pivots
/// and kept if it is independent. `finish()` back-substitutes to RREF, which
/// is unique, so everything derived from it is canonical.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols), pivot_row_(cols, kNone) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row was independent of those already present.
  bool add(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    const Scalar inv = 1 / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    pivot_row_[row.front().first] = rows_.size();
    rows_.push_back(std::move(row));
    reduced_ = false;
    return true;
  }

  bool add(const Vector& v) { return add(to_sparse(v)); }

  /// Reduces a row against the current pivots (without storing it).
  void reduce(SparseRow& row) const {
    std::size_t pos = 0;
    while (pos < row.size()) {
      const std::size_t c = row[pos].first;
      if (c >= cols_) throw DimensionError("RowEchelon: column out of range");
      const std::size_t p = pivot_row_[c];
      if (p == kNone) {
        ++pos;
        continue;
      }
      const Scalar factor = row[pos].second;
      detail::sparse_axpy(row, factor, rows_[p]);
    }
  }

  bool in_span(const Vector& v) const {
    SparseRow r = to_sparse(v);
    reduce(r);
    return r.empty();
  }

  void finish() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
    std::vector<SparseRow> sorted;
    sorted.reserve(rows_.size());
    for (auto i : order) sorted.push_back(std::move(rows_[i]));
    rows_ = std::move(sorted);
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = i;
    for (std::size_t i = rows_.size(); i-- > 0;) {
      SparseRow& r = rows_[i];
      std::size_t pos = 1;
      while (pos < r.size()) {
        const std::size_t p = pivot_row_[r[pos].first];
        if (p == kNone || p == i) {
          ++pos;
          continue;
        }
        const Scalar factor = r[pos].second;
        detail::sparse_axpy(r, factor, rows_[p]);
      }
    }
    reduced_ = true;
  }

  /// RREF rows, sorted by pivot column; only valid after finish().
  const std::vector<SparseRow>& rows() const { return rows_; }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    for (const auto& r : rows_) out.push_back(r.front().first);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] == kNone) out.push_back(c);
    return out;
  }

  /// Null space basis of the row space: one vector per free column, with a 1
  /// there and zeros on every other free column.
  std::vector<Vector> null_space() {
    finish();
    std::vector<Vector> basis;
    for (std::size_t f : free_columns()) {
      Vector v(cols_);
      v[f] = 1;
      for (const auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), f,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t cols_;
  std::vector<std::size_t> pivot_row_;
  std::vector<SparseRow> rows_;
  bool reduced_ = true;
};

inline RowEchelon row_reduce(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.add(m.row(r));
  e.finish();
  return e;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

/// Rank by fraction-free (Bareiss) elimination over the integers, after
/// clearing denominators row by row. Independent of RowEchelon.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) l = lcm(l, m(r, c).get_den());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[rank][c] * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[r][j] = std::move(v);
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Canonical basis of {v : m v = 0}, derived from the RREF of m.
inline std::vector<Vector> kernel_basis(const Matrix& m) { return row_reduce(m).null_space(); }

/// Coefficients c with b c = v, or nullopt when v is outside the column span.
inline std::optional<Vector> solve_in_span(const Matrix& b, const Vector& v) {
  if (b.rows() != v.size()) throw DimensionError("solve_in_span: B.rows != v.length");
  RowEchelon e(b.cols() + 1);
  for (std::size_t r = 0; r < b.rows(); ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (sgn(b(r, c)) != 0) row.emplace_back(c, b(r, c));
    if (sgn(v[r]) != 0) row.emplace_back(b.cols(), v[r]);
    e.add(std::move(row));
  }
  e.finish();
  Vector coeffs(b.cols());
  for (const auto& row : e.rows()) {
    const std::size_t p = row.front().first;
    if (p == b.cols()) return std::nullopt;
    if (row.back().first == b.cols()) coeffs[p] = row.back().second;
  }
  return coeffs;
}

/// dim span(Z) - dim span(B), after checking span(B) is inside span(Z).
inline std::size_t quotient_dim(const Matrix& z, const Matrix& b) {
  if (b.cols() > 0 && z.rows() != b.rows()) throw DimensionError("quotient_dim: ambient mismatch");
  RowEchelon ez(z.rows());
  for (std::size_t c = 0; c < z.cols(); ++c) ez.add(z.column(c));
  for (std::size_t c = 0; c < b.cols(); ++c) {
    if (!ez.in_span(b.column(c)))
      throw InconsistentComplex("boundary column " + std::to_string(c) + " is not a cycle");
  }
  return ez.rank() - rank(b.transpose());
}

/// Columns of m that form a basis of its column space (greedy, index order).
inline std::vector<std::size_t> independent_columns(const Matrix& m) {
  RowEchelon e(m.rows());
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (e.add(m.column(c))) out.push_back(c);
  return out;
}

/// Inverse of a square matrix; throws when singular.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  RowEchelon e(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(m(r, c)) != 0) row.emplace_back(c, m(r, c));
    row.emplace_back(n + r, Scalar(1));
    e.add(std::move(row));
  }
  e.finish();
  if (e.rows().size() != n || e.rows().back().front().first >= n) throw Error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (e.rows()[i].front().first != i) throw Error("inverse: singular matrix");
    for (const auto& [c, v] : e.rows()[i])
      if (c >= n) inv(i, c - n) = v;
  }
  return inv;
}

}  // namespace nlr
