#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"

namespace nijenhuis {

/// Closing coefficients of a 3-dimensional eigenbasis in the cyclic pair
/// order (1,2), (2,3), (3,1): [z_i, z_j] = alpha z_i + beta z_j.
struct PairPattern {
  std::array<std::pair<Scalar, Scalar>, 3> coeffs;

  friend bool operator==(const PairPattern&, const PairPattern&) = default;
};

/// The sl(2) shape
///   [z1,z2] = B z1 + A z2,  [z2,z3] = C z2 + B z3,  [z3,z1] = A z3 + C z1.
struct Sl2Triple {
  Scalar a, b, c;
  friend bool operator==(const Sl2Triple&, const Sl2Triple&) = default;
};

struct Sl2PatternCheck {
  std::optional<Sl2Triple> triple;
  std::string violation;  ///< empty on success
  explicit operator bool() const { return triple.has_value(); }
};

inline PairPattern eigenbasis_pattern(const LieAlgebra& alg, const Matrix& basis) {
  if (alg.dim() != 3) throw DimensionError("pair patterns are defined for dimension 3");
  auto check = verify_nijenhuis_eigenbasis(alg, basis);
  if (!check) throw DomainError("basis is not a Nijenhuis eigenbasis");
  const auto& cert = *check.certificate;
  const auto& p12 = cert.pair(0, 1);
  const auto& p23 = cert.pair(1, 2);
  // certificate stores [z1,z3] = alpha z1 + beta z3; flip to [z3,z1]
  const auto& p13 = cert.pair(0, 2);
  return {{{{p12.alpha, p12.beta}, {p23.alpha, p23.beta}, {-p13.beta, -p13.alpha}}}};
}

inline Sl2PatternCheck sl2_pattern(const LieAlgebra& alg, const Matrix& basis) {
  const PairPattern p = eigenbasis_pattern(alg, basis);
  const auto& [b12, a12] = p.coeffs[0];
  const auto& [c23, b23] = p.coeffs[1];
  const auto& [a31, c31] = p.coeffs[2];
  auto mismatch = [](const char* name, const Scalar& x, const Scalar& y) {
    return std::string(name) + " differs between pairs: " + x.str() + " vs " + y.str();
  };
  if (!(b12 == b23)) return {std::nullopt, mismatch("B", b12, b23)};
  if (!(c23 == c31)) return {std::nullopt, mismatch("C", c23, c31)};
  if (!(a12 == a31)) return {std::nullopt, mismatch("A", a12, a31)};
  if (a12.is_zero() || b12.is_zero() || c23.is_zero())
    return {std::nullopt, "zero coefficient in (A,B,C) = (" + a12.str() + "," + b12.str() + "," + c23.str() + ")"};
  return {Sl2Triple{a12, b12, c23}, {}};
}

/// Column scalings (A'/A, B'/B, C'/C) that carry pattern `from` to `to`.
inline std::array<Scalar, 3> sl2_rescale_to(const Sl2Triple& from, const Sl2Triple& to) {
  for (const Scalar* s : {&from.a, &from.b, &from.c, &to.a, &to.b, &to.c})
    if (s->is_zero()) throw DomainError("sl(2) rescaling needs nonzero A, B, C");
  return {to.a / from.a, to.b / from.b, to.c / from.c};
}

inline Matrix scale_columns(const Matrix& z, const std::array<Scalar, 3>& mu) {
  Matrix out = z;
  for (std::size_t c = 0; c < z.cols(); ++c) out.set_column(c, mu.at(c) * z.column(c));
  return out;
}

/// Phi invertible and Phi[x, y] = [Phi x, Phi y] on all basis pairs.
inline bool is_automorphism(const LieAlgebra& alg, const Matrix& phi) {
  const std::size_t n = alg.dim();
  if (phi.rows() != n || phi.cols() != n) throw DimensionError("automorphism matrix does not match the algebra");
  if (determinant(phi).is_zero()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(phi * alg.basis_bracket(i, j) == bracket(alg, phi.column(i), phi.column(j)))) return false;
  return true;
}

/// Linear map `phi` from `source` coordinates to `target` coordinates respects brackets.
inline bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim()) throw DimensionError("map shape mismatch");
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = i + 1; j < source.dim(); ++j)
      if (!(phi * source.basis_bracket(i, j) == bracket(target, phi.column(i), phi.column(j)))) return false;
  return true;
}

/// Z' column i equals mu_i Phi (Z column i) for all i, with Phi an automorphism.
inline bool check_equivalence_certificate(const LieAlgebra& alg, const Matrix& z, const Matrix& z_prime,
                                          const Matrix& phi, const std::array<Scalar, 3>& mu) {
  for (const auto& m : mu)
    if (m.is_zero()) throw DomainError("equivalence multipliers must be nonzero");
  if (z.cols() != 3 || z_prime.cols() != 3) throw DimensionError("equivalence certificates are 3-dimensional");
  if (!is_automorphism(alg, phi)) return false;
  const Matrix image = phi * z;
  for (std::size_t c = 0; c < 3; ++c)
    if (!(z_prime.column(c) == mu[c] * image.column(c))) return false;
  return true;
}

/// [g, g] is a proper subspace.
inline bool commutant_obstruction(const LieAlgebra& alg) { return derived_subalgebra_dim(alg) < alg.dim(); }

/// Number of basis columns inside [g, g]. Automorphisms preserve [g, g] and
/// rescaling preserves membership, so equivalent eigenbases share this count.
inline std::size_t basis_vectors_in_commutant(const LieAlgebra& alg, const Matrix& basis) {
  std::vector<Vector> span;
  const Matrix m = bracket_span(alg);
  for (std::size_t c = 0; c < m.cols(); ++c) span.push_back(m.column(c));
  std::size_t count = 0;
  for (std::size_t c = 0; c < basis.cols(); ++c)
    if (in_span(span, basis.column(c))) ++count;
  return count;
}

}  // namespace nijenhuis
