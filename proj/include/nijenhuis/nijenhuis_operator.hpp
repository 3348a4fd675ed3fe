#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/polynomial.hpp"

namespace nijenhuis {

/// Linear map g -> g in the algebra's fixed basis.
class LinearOperator {
 public:
  explicit LinearOperator(Matrix m) : m_(std::move(m)) {
    if (!m_.is_square()) throw DimensionError("operator matrix must be square");
  }

  static LinearOperator identity(std::size_t n) { return LinearOperator(Matrix::identity(n)); }

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

  Vector operator()(const Vector& v) const { return m_ * v; }

  friend LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) {
    return LinearOperator(a.m_ * b.m_);
  }
  friend bool operator==(const LinearOperator&, const LinearOperator&) = default;

 private:
  Matrix m_;
};

/// Components N^k_{ij} of the algebraic Nijenhuis torsion.
class TorsionTensor {
 public:
  explicit TorsionTensor(std::size_t dim) : dim_(dim), n_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) const { return n_[(i * dim_ + j) * dim_ + k]; }
  Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) { return n_[(i * dim_ + j) * dim_ + k]; }

  bool is_zero() const {
    return std::all_of(n_.begin(), n_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  /// First nonzero component as (k, i, j), if any.
  std::optional<std::array<std::size_t, 3>> first_nonzero() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!(*this)(k, i, j).is_zero()) return std::array<std::size_t, 3>{k, i, j};
    return std::nullopt;
  }

 private:
  std::size_t dim_;
  std::vector<Scalar> n_;
};

inline void require_conforming(const LieAlgebra& alg, const LinearOperator& op) {
  if (op.dim() != alg.dim()) throw DimensionError("operator dimension does not match the algebra");
}

/// N(x, y) = L[Lx, y] + L[x, Ly] - [Lx, Ly] - L^2[x, y] on the basis.
inline Vector torsion_on(const LieAlgebra& alg, const LinearOperator& op, const Vector& x, const Vector& y) {
  const Vector lx = op(x), ly = op(y);
  const Vector xy = bracket(alg, x, y);
  return op(bracket(alg, lx, y) + bracket(alg, x, ly)) - bracket(alg, lx, ly) - op(op(xy));
}

inline TorsionTensor torsion(const LieAlgebra& alg, const LinearOperator& op) {
  require_conforming(alg, op);
  const std::size_t n = alg.dim();
  TorsionTensor t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vector v = torsion_on(alg, op, unit_vector(n, i), unit_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) t(k, i, j) = v[k];
    }
  return t;
}

inline bool is_algebraic_nijenhuis(const LieAlgebra& alg, const LinearOperator& op) {
  return torsion(alg, op).is_zero();
}

/// Pairwise distinct eigenvalues, all inside the algebra's field: a squarefree
/// characteristic polynomial, plus a full count of real roots when the field is Real.
inline bool is_regular_semisimple(const LieAlgebra& alg, const LinearOperator& op) {
  require_conforming(alg, op);
  const Polynomial p = char_poly(op.matrix());
  if (!is_squarefree(p)) return false;
  if (alg.field() == Field::Complex) return true;
  if (!p.is_real()) return false;
  return count_real_roots(p) == p.degree();
}

/// L = Z diag(lambda) Z^{-1}: the operator whose eigenvectors are the columns of Z.
inline LinearOperator operator_from_eigenbasis(const Matrix& basis, const std::vector<Scalar>& eigenvalues) {
  if (!basis.is_square() || basis.cols() != eigenvalues.size())
    throw DimensionError("need one eigenvalue per basis column");
  for (std::size_t a = 0; a < eigenvalues.size(); ++a)
    for (std::size_t b = a + 1; b < eigenvalues.size(); ++b)
      if (eigenvalues[a] == eigenvalues[b])
        throw SpectrumError("eigenvalues must be pairwise distinct (repeated " + eigenvalues[a].str() + ")");
  return LinearOperator(basis * Matrix::diagonal(eigenvalues) * inverse(basis));
}

/// [z_i, z_j] = alpha z_i + beta z_j.
struct PairCoefficients {
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar alpha;
  Scalar beta;
  friend bool operator==(const PairCoefficients&, const PairCoefficients&) = default;
};

/// A basis (columns of `basis`) every pair of which closes under the bracket,
/// with the closing coefficients for each i < j.
struct EigenbasisCertificate {
  Matrix basis;
  std::vector<PairCoefficients> pairs;

  const PairCoefficients& pair(std::size_t i, std::size_t j) const {
    for (const auto& p : pairs)
      if (p.i == i && p.j == j) return p;
    throw DomainError("no coefficients recorded for this pair");
  }
};

/// Either a certificate, or the first pair (i, j) whose bracket leaves span(z_i, z_j).
struct EigenbasisCheck {
  std::optional<EigenbasisCertificate> certificate;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  explicit operator bool() const { return certificate.has_value(); }
};

inline EigenbasisCheck verify_nijenhuis_eigenbasis(const LieAlgebra& alg, const Matrix& basis) {
  const std::size_t n = alg.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionError("basis matrix does not match the algebra");
  if (determinant(basis).is_zero()) throw SingularMatrixError("basis matrix is singular", kernel(basis).front());
  EigenbasisCertificate cert{basis, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector zi = basis.column(i), zj = basis.column(j);
      const std::array<Vector, 2> span{zi, zj};
      const auto coeffs = solve(Matrix::from_columns(span), bracket(alg, zi, zj));
      if (!coeffs) return {std::nullopt, std::pair{i, j}};
      cert.pairs.push_back({i, j, (*coeffs)[0], (*coeffs)[1]});
    }
  return {std::move(cert), std::nullopt};
}

/// Rescales each column so its first nonzero entry is 1.
inline Matrix canonical_columns(const Matrix& z) {
  Matrix out = z;
  for (std::size_t c = 0; c < z.cols(); ++c) out.set_column(c, normalize_leading(z.column(c)));
  return out;
}

/// Eigenvalues of an operator, all of which must lie in Q(i), sorted by (real, imaginary).
inline std::vector<Scalar> field_spectrum(const LinearOperator& op) {
  const Polynomial p = char_poly(op.matrix());
  auto roots = gaussian_rational_roots(p);
  if (!is_squarefree(p)) throw SpectrumError("repeated eigenvalues");
  if (roots.size() != op.dim()) throw SpectrumError("irrational spectrum: eigenvalues lie outside the scalar field");
  return roots;
}

/// Eigenvector columns of a regular semisimple Nijenhuis operator, canonically
/// scaled and ordered by eigenvalue, certified as a Nijenhuis eigenbasis.
inline EigenbasisCertificate eigenbasis_of(const LieAlgebra& alg, const LinearOperator& op) {
  require_conforming(alg, op);
  if (!is_regular_semisimple(alg, op))
    throw SpectrumError("operator is not regular semisimple over " + std::string(to_string(alg.field())) +
                        " (irrational spectrum or repeated eigenvalues)");
  if (!is_algebraic_nijenhuis(alg, op)) throw DomainError("operator is not an algebraic Nijenhuis operator");
  const auto spectrum = field_spectrum(op);
  const std::size_t n = alg.dim();
  Matrix z(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto ker = kernel(op.matrix() - spectrum[c] * Matrix::identity(n));
    if (ker.size() != 1) throw SpectrumError("eigenspace is not one-dimensional");
    z.set_column(c, normalize_leading(ker.front()));
  }
  auto check = verify_nijenhuis_eigenbasis(alg, z);
  if (!check) throw InvariantError("eigenbasis failed certification; torsion check and certificate disagree");
  return std::move(*check.certificate);
}

}  // namespace nijenhuis
