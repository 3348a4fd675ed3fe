#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nijenhuis/error.hpp"
#include "nijenhuis/scalar.hpp"

namespace nijenhuis {

/// Coordinate column in a fixed basis.
using Vector = std::vector<Scalar>;

/// Dense matrix over Scalar, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()) {
    cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Scalar> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
  }

  /// Builds a matrix whose columns are the given vectors.
  static Matrix from_columns(std::span<const Vector> cols) {
    if (cols.empty()) return {};
    Matrix m(cols.front().size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != m.rows_) throw DimensionError("columns of unequal length");
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  static Matrix from_rows(std::span<const Vector> rows) { return from_columns(rows).transpose(); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  Vector row(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }

  void set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
  }
  bool is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_real(); });
  }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
  }

  Scalar trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    Scalar t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& ark = a(r, k);
        if (ark.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) p(r, c) += ark * b(k, c);
      }
    return p;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!v[c].is_zero()) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Raised by inverse() on singular input; carries a nonzero kernel vector.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, Vector kernel) : Error(what), kernel_(std::move(kernel)) {}
  const Vector& kernel_vector() const { return kernel_; }

 private:
  Vector kernel_;
};

// ---------------------------------------------------------------------------
// Vector helpers

inline Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = 1;
  return v;
}

/// Standard symmetric bilinear pairing (no conjugation).
inline Scalar dot(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) throw DimensionError("vector length mismatch");
  Scalar s;
  for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * w[k];
  return s;
}

/// (v2 w3 - v3 w2, v3 w1 - v1 w3, v1 w2 - v2 w1).
inline Vector cross(const Vector& v, const Vector& w) {
  if (v.size() != 3 || w.size() != 3) throw DimensionError("cross product needs 3-vectors");
  return {v[1] * w[2] - v[2] * w[1], v[2] * w[0] - v[0] * w[2], v[0] * w[1] - v[1] * w[0]};
}

/// Scales v so its first nonzero coordinate is 1. The zero vector is returned unchanged.
inline Vector normalize_leading(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) return v;
  const Scalar lead = *it;
  for (auto& x : v) x /= lead;
  return v;
}

// ---------------------------------------------------------------------------
// 3x3 closed forms

inline Scalar det3(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("det3 needs a 3x3 matrix");
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// Transposed cofactor matrix; m * adjugate(m) == det3(m) * Id for every 3x3 m.
inline Matrix adjugate(const Matrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw DimensionError("adjugate needs a 3x3 matrix");
  Matrix a(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r1 = (r + 1) % 3, r2 = (r + 2) % 3;
      const std::size_t c1 = (c + 1) % 3, c2 = (c + 2) % 3;
      // cyclic minors carry the cofactor sign already
      a(c, r) = m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1);
    }
  return a;
}

// ---------------------------------------------------------------------------
// Gaussian elimination

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

inline RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Scalar inv = Scalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Basis of the right null space, one vector per free column.
inline std::vector<Vector> kernel(const Matrix& m) {
  const auto [r, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 3) return det3(m);
  Matrix a = m;
  Scalar det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col).is_zero()) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

/// Exact inverse. Throws SingularMatrixError with a kernel vector when det = 0.
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, pivots] = row_reduce(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] >= n) {
    auto ker = kernel(m);
    throw SingularMatrixError("singular matrix", ker.empty() ? Vector(n) : ker.front());
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

/// Some solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [red, pivots] = row_reduce(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = red(k, m.cols());
  return x;
}

/// True iff v lies in the span of the given vectors.
inline bool in_span(std::span<const Vector> vectors, const Vector& v) {
  if (vectors.empty()) return is_zero(v);
  return solve(Matrix::from_columns(vectors), v).has_value();
}

}  // namespace nijenhuis
