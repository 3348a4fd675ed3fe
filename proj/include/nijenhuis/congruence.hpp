#pragma once

#include <cstddef>
#include <utility>

#include "nijenhuis/error.hpp"
#include "nijenhuis/matrix.hpp"

namespace nijenhuis {

struct Congruence {
  Matrix diagonal;   ///< D
  Matrix transform;  ///< S, invertible, with S^T Q S == D
};

/// Counts of positive, negative, and zero diagonal entries of a real form.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t rank() const { return positive + negative; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Symmetric Gaussian elimination: returns D diagonal and S invertible with
/// S^T Q S = D. Works over any field of characteristic 0. When the pivot is
/// zero, a later nonzero diagonal entry is swapped in; failing that, a
/// nonzero off-diagonal entry q_kj is folded into position k via the
/// substitution e_k -> e_k + e_j, which makes the pivot 2 q_kj.
inline Congruence congruence_diagonalize(const Matrix& q) {
  if (!q.is_symmetric()) throw DomainError("congruence diagonalization needs a symmetric matrix");
  const std::size_t n = q.rows();
  Matrix a = q;
  Matrix s = Matrix::identity(n);

  // a <- T^T a T for T = Id + f E_{src,dst}, i.e. column/row dst += f * column/row src
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Scalar& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += f * a(r, src);
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (std::size_t r = 0; r < n; ++r) s(r, dst) += f * s(r, src);
  };
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(s(r, i), s(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t j = k + 1;
      while (j < n && a(j, j).is_zero()) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) continue;  // row k already zero
        add_multiple(k, j, 1);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      add_multiple(i, k, -(a(i, k) / a(k, k)));
    }
  }
  return {std::move(a), std::move(s)};
}

/// Sign counts of a real diagonal matrix.
inline Signature signature_of_diagonal(const Matrix& d) {
  if (!d.is_real()) throw DomainError("signature is only defined for real forms");
  Signature sig;
  for (std::size_t k = 0; k < d.rows(); ++k) {
    const int s = d(k, k).sign();
    if (s > 0)
      ++sig.positive;
    else if (s < 0)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

inline Signature signature(const Matrix& q) { return signature_of_diagonal(congruence_diagonalize(q).diagonal); }

}  // namespace nijenhuis
