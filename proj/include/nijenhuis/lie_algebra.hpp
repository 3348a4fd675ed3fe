#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nijenhuis/error.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/scalar.hpp"

namespace nijenhuis {

/// One bracket relation [e_i, e_j] = out, with 0-based indices.
struct BracketRelation {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector out;
};

/// Result of a Jacobi sweep; `failing` names the first basis triple (i, j, k)
/// whose Jacobiator is nonzero.
struct JacobiCheck {
  bool ok = true;
  std::optional<std::array<std::size_t, 3>> failing;
  explicit operator bool() const { return ok; }
};

/// Finite-dimensional Lie algebra given by structure constants in a fixed
/// basis: [e_i, e_j] = sum_k c^k_{ij} e_k.
///
/// The full tensor is stored, so c(k, i, j) = -c(k, j, i) is an invariant
/// checked at construction, as is realness of the constants when the field
/// tag is Real. The Jacobi identity is verified unless the unchecked factory
/// is used.
class LieAlgebra {
 public:
  /// `constants[(i * dim + j) * dim + k]` holds c^k_{ij}.
  LieAlgebra(std::size_t dim, Field field, std::vector<Scalar> constants)
      : LieAlgebra(dim, field, std::move(constants), true) {}

  static LieAlgebra unchecked(std::size_t dim, Field field, std::vector<Scalar> constants) {
    return LieAlgebra(dim, field, std::move(constants), false);
  }

  static LieAlgebra abelian(std::size_t dim, Field field) {
    return LieAlgebra(dim, field, std::vector<Scalar>(dim * dim * dim), false);
  }

  /// Builds the tensor from relations with i < j; omitted pairs are zero.
  static LieAlgebra from_brackets(std::size_t dim, Field field, const std::vector<BracketRelation>& relations,
                                  bool verify_jacobi = true) {
    std::vector<Scalar> c(dim * dim * dim);
    for (const auto& rel : relations) {
      if (rel.i >= dim || rel.j >= dim || rel.out.size() != dim)
        throw DimensionError("bracket relation does not fit dimension " + std::to_string(dim));
      if (rel.i == rel.j) throw InvalidAlgebraError("bracket relation [e_i, e_i] must be zero");
      for (std::size_t k = 0; k < dim; ++k) {
        c[(rel.i * dim + rel.j) * dim + k] = rel.out[k];
        c[(rel.j * dim + rel.i) * dim + k] = -rel.out[k];
      }
    }
    return LieAlgebra(dim, field, std::move(c), verify_jacobi);
  }

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }

  const Scalar& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Scalar>& constants() const { return c_; }

  /// [e_i, e_j] as a coordinate vector.
  Vector basis_bracket(std::size_t i, std::size_t j) const {
    return {c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_),
            c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j + 1) * dim_)};
  }

  /// Same structure constants, different field tag. Moving to Real requires real constants.
  LieAlgebra with_field(Field field) const { return LieAlgebra(dim_, field, c_, false); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  LieAlgebra(std::size_t dim, Field field, std::vector<Scalar> constants, bool verify_jacobi);

  std::size_t dim_;
  Field field_;
  std::vector<Scalar> c_;
};

// ---------------------------------------------------------------------------

inline Vector bracket(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n) throw DimensionError("vector does not conform to the algebra");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& ck = alg.c(k, i, j);
        if (!ck.is_zero()) out[k] += w * ck;
      }
    }
  }
  return out;
}

inline JacobiCheck check_jacobi(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector jac = bracket(alg, alg.basis_bracket(i, j), ek) + bracket(alg, alg.basis_bracket(j, k), ei) +
                           bracket(alg, alg.basis_bracket(k, i), ej);
        if (!is_zero(jac)) return {false, std::array<std::size_t, 3>{i, j, k}};
      }
  return {};
}

inline LieAlgebra::LieAlgebra(std::size_t dim, Field field, std::vector<Scalar> constants, bool verify_jacobi)
    : dim_(dim), field_(field), c_(std::move(constants)) {
  if (dim_ == 0) throw DimensionError("Lie algebra dimension must be positive");
  if (c_.size() != dim_ * dim_ * dim_) throw DimensionError("structure tensor size does not match dimension");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& v = c(k, i, j);
        if (!(v == -c(k, j, i)))
          throw InvalidAlgebraError("structure constants are not antisymmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
        if (field_ == Field::Real && !v.is_real())
          throw InvalidAlgebraError("non-real structure constant in a real algebra");
      }
  if (verify_jacobi) {
    if (auto jac = check_jacobi(*this); !jac) {
      const auto& t = *jac.failing;
      throw InvalidAlgebraError("Jacobi identity fails on basis triple (" + std::to_string(t[0] + 1) + "," +
                                std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")");
    }
  }
}

/// Structure constants in the basis given by the columns of z.
inline LieAlgebra change_basis(const LieAlgebra& alg, const Matrix& z) {
  const std::size_t n = alg.dim();
  if (z.rows() != n || z.cols() != n) throw DimensionError("basis matrix does not match the algebra");
  const Matrix zinv = inverse(z);
  std::vector<Scalar> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector coords = zinv * bracket(alg, z.column(i), z.column(j));
      for (std::size_t k = 0; k < n; ++k) {
        c[(i * n + j) * n + k] = coords[k];
        c[(j * n + i) * n + k] = -coords[k];
      }
    }
  return LieAlgebra::unchecked(n, alg.field(), std::move(c));
}

/// Whether x, y span a 2-dimensional subalgebra of a 3-dimensional algebra,
/// decided by det(x, y, [x, y]) = 0. Dependent input is a DomainError.
inline bool is_subalgebra_pair(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  if (alg.dim() != 3) throw DimensionError("subalgebra pair test is defined for dimension 3");
  if (is_zero(cross(x, y))) throw DomainError("vectors are linearly dependent; they span at most a line");
  const std::array<Vector, 3> cols{x, y, bracket(alg, x, y)};
  return det3(Matrix::from_columns(cols)).is_zero();
}

/// Dimension-independent variant: [x, y] in span(x, y).
inline bool brackets_into_span(const LieAlgebra& alg, const Vector& x, const Vector& y) {
  const std::array<Vector, 2> span{x, y};
  return in_span(span, bracket(alg, x, y));
}

/// Span of the vectors [e_i, e_j], i < j, as columns of a matrix.
inline Matrix bracket_span(const LieAlgebra& alg) {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) cols.push_back(alg.basis_bracket(i, j));
  if (cols.empty()) return Matrix(alg.dim(), 0);
  return Matrix::from_columns(cols);
}

/// dim [g, g].
inline std::size_t derived_subalgebra_dim(const LieAlgebra& alg) {
  const Matrix m = bracket_span(alg);
  return m.cols() == 0 ? 0 : rank(m);
}

inline bool is_abelian(const LieAlgebra& alg) {
  for (const auto& s : alg.constants())
    if (!s.is_zero()) return false;
  return true;
}

/// Lower central series g, [g, g], [g, [g, g]], ... reaches zero.
inline bool is_nilpotent(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> term;
  for (std::size_t k = 0; k < n; ++k) term.push_back(unit_vector(n, k));
  std::size_t current = n;
  while (current > 0) {
    std::vector<Vector> next;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& v : term) {
        Vector b = bracket(alg, unit_vector(n, k), v);
        if (!is_zero(b)) next.push_back(std::move(b));
      }
    if (next.empty()) return true;
    const Matrix m = Matrix::from_columns(next);
    const auto [red, pivots] = row_reduce(m.transpose());
    if (pivots.size() >= current) return false;  // series stalled
    current = pivots.size();
    term.clear();
    for (std::size_t r = 0; r < current; ++r) term.push_back(red.row(r));
  }
  return true;
}

}  // namespace nijenhuis
