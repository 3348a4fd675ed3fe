#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nijenhuis/congruence.hpp"
#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"

namespace nijenhuis {

/// Symmetric 3x3 matrix Q of the subalgebra form: a pair (x, y) spans a
/// subalgebra iff Q(x × y) = 0.
struct QuadraticForm3 {
  Matrix q;

  Scalar operator()(const Vector& m) const { return dot(m, q * m); }
  friend bool operator==(const QuadraticForm3&, const QuadraticForm3&) = default;
};

/// Shape of the isotropic cone {M : Q(M) = 0}.
enum class QuadricShape {
  ZeroForm,   ///< every vector
  Plane,      ///< rank 1: a double plane
  Line,       ///< real rank 2 definite: a single line
  TwoPlanes,  ///< rank 2 split: two distinct planes
  Cone,       ///< rank 3 isotropic: a proper cone
  Definite,   ///< real rank 3 definite: only the origin
};

inline const char* to_string(QuadricShape s) {
  switch (s) {
    case QuadricShape::ZeroForm: return "zero-form";
    case QuadricShape::Plane: return "plane";
    case QuadricShape::Line: return "line";
    case QuadricShape::TwoPlanes: return "two-planes";
    case QuadricShape::Cone: return "cone";
    case QuadricShape::Definite: return "definite";
  }
  return "?";
}

struct QuadricClassification {
  std::size_t rank = 0;
  std::optional<Signature> signature;  ///< real field only
  bool admits = false;
  QuadricShape reason = QuadricShape::ZeroForm;
};

/// Q with diagonal (c^1_23, c^2_31, c^3_12) and off-diagonal halves of
/// (c^1_31 + c^2_23), (c^2_12 + c^3_31), (c^1_12 + c^3_23), so that
/// M^T Q M = det(x, y, [x, y]) for M = x × y.
inline QuadraticForm3 subalgebra_form(const LieAlgebra& alg) {
  if (alg.dim() != 3) throw DimensionError("subalgebra form is defined for dimension 3");
  auto c = [&](std::size_t k, std::size_t i, std::size_t j) { return alg.c(k - 1, i - 1, j - 1); };
  const Scalar half = Scalar::fraction(1, 2);
  Matrix q(3, 3);
  q(0, 0) = c(1, 2, 3);
  q(1, 1) = c(2, 3, 1);
  q(2, 2) = c(3, 1, 2);
  q(0, 1) = q(1, 0) = half * (c(1, 3, 1) + c(2, 2, 3));
  q(1, 2) = q(2, 1) = half * (c(2, 1, 2) + c(3, 3, 1));
  q(0, 2) = q(2, 0) = half * (c(1, 1, 2) + c(3, 2, 3));
  return {std::move(q)};
}

/// Existence of three linearly independent isotropic vectors, read off the
/// rank (and over R the signature) of the form.
inline QuadricClassification classify_form(const QuadraticForm3& form, Field field) {
  if (!form.q.is_symmetric()) throw DomainError("quadratic form matrix must be symmetric");
  const Matrix d = congruence_diagonalize(form.q).diagonal;
  QuadricClassification out;
  out.rank = rank(d);
  if (field == Field::Real) {
    out.signature = signature_of_diagonal(d);
    const auto& s = *out.signature;
    const bool split = s.positive > 0 && s.negative > 0;
    switch (out.rank) {
      case 0: out.reason = QuadricShape::ZeroForm; break;
      case 1: out.reason = QuadricShape::Plane; break;
      case 2: out.reason = split ? QuadricShape::TwoPlanes : QuadricShape::Line; break;
      default: out.reason = split ? QuadricShape::Cone : QuadricShape::Definite; break;
    }
  } else {
    static constexpr QuadricShape by_rank[] = {QuadricShape::ZeroForm, QuadricShape::Plane, QuadricShape::TwoPlanes,
                                               QuadricShape::Cone};
    out.reason = by_rank[out.rank];
  }
  out.admits = out.reason == QuadricShape::ZeroForm || out.reason == QuadricShape::TwoPlanes ||
               out.reason == QuadricShape::Cone;
  return out;
}

/// Whether a 3-dimensional algebra admits a regular semisimple algebraic Nijenhuis operator.
inline QuadricClassification admits_regular_semisimple(const LieAlgebra& alg) {
  if (alg.dim() != 3) throw DimensionError("existence criterion is defined for dimension 3");
  if (is_abelian(alg)) {
    QuadricClassification out;
    if (alg.field() == Field::Real) out.signature = Signature{0, 0, 3};
    out.admits = true;
    return out;
  }
  return classify_form(subalgebra_form(alg), alg.field());
}

// ---------------------------------------------------------------------------
// Isotropic witness search

using Triple = std::array<Vector, 3>;

inline Matrix rows_of(const Triple& t) { return Matrix::from_rows(t); }

enum class SearchStatus { Found, Impossible, NotFound };

struct IsotropicSearch {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Triple> triple;
  QuadricClassification classification;
  std::size_t height = 0;
};

namespace detail {

/// 0, 1, -1, 2, -2, ..., h, -h.
inline std::vector<long long> coordinate_order(long long h) {
  std::vector<long long> out{0};
  for (long long v = 1; v <= h; ++v) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

/// Integer (real field) or Gaussian-integer (complex field) 3-vectors whose
/// largest absolute part is exactly `shell`, in lexicographic order over the
/// coordinate order above. Only one representative per unit multiple is kept:
/// the first nonzero coordinate is positive (real) or has positive real part
/// and nonnegative imaginary part (complex).
inline std::vector<Vector> shell_vectors(long long shell, Field field) {
  const auto order = coordinate_order(shell);
  std::vector<Scalar> values;
  if (field == Field::Real) {
    for (auto v : order) values.emplace_back(v);
  } else {
    for (auto re : order)
      for (auto im : order) values.emplace_back(Rational(re), Rational(im));
  }
  auto max_part = [](const Scalar& s) {
    using boost::multiprecision::abs;
    const Rational a = abs(s.real()), b = abs(s.imag());
    return a > b ? a : b;
  };
  std::vector<Vector> out;
  for (const auto& x : values)
    for (const auto& y : values)
      for (const auto& z : values) {
        Vector v{x, y, z};
        if (max_part(x) != shell && max_part(y) != shell && max_part(z) != shell) continue;
        const auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == v.end()) continue;
        if (!(lead->real() > 0 && lead->imag() >= 0)) continue;
        out.push_back(std::move(v));
      }
  return out;
}

}  // namespace detail

/// Three linearly independent isotropic vectors of bounded height.
///
/// Vectors are visited shell by shell (largest absolute coordinate part
/// 1, 2, ..., height) and lexicographically within a shell. The result is
/// the triple completed earliest in that order, with the lexicographically
/// smallest earlier pair; it therefore does not depend on `height` once
/// found. Forms that cannot have such a triple are reported without search.
inline IsotropicSearch isotropic_triple(const QuadraticForm3& form, Field field, std::size_t height) {
  if (height == 0) throw DomainError("search height must be positive");
  IsotropicSearch out;
  out.classification = classify_form(form, field);
  out.height = height;
  if (!out.classification.admits) {
    out.status = SearchStatus::Impossible;
    return out;
  }
  std::vector<Vector> found;
  for (std::size_t shell = 1; shell <= height; ++shell) {
    for (auto& v : detail::shell_vectors(static_cast<long long>(shell), field)) {
      if (!form(v).is_zero()) continue;
      for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = i + 1; j < found.size(); ++j) {
          const Triple t{found[i], found[j], v};
          if (!det3(rows_of(t)).is_zero()) {
            out.status = SearchStatus::Found;
            out.triple = t;
            return out;
          }
        }
      found.push_back(std::move(v));
    }
  }
  return out;
}

/// Basis whose pairs (z1, z2), (z2, z3), (z3, z1) have normals M^3, M^1, M^2:
/// the adjugate of the matrix with rows M^1, M^2, M^3, columns canonically scaled.
inline Matrix eigenbasis_from_isotropic_triple(const Triple& normals) {
  const Matrix rows = rows_of(normals);
  if (det3(rows).is_zero()) throw DomainError("isotropic vectors are linearly dependent");
  return canonical_columns(adjugate(rows));
}

/// Normals of the coordinate planes of the pairs (1,2), (2,3), (3,1).
inline Triple pair_normals(const Matrix& basis) {
  const Vector z1 = basis.column(0), z2 = basis.column(1), z3 = basis.column(2);
  return {cross(z2, z3), cross(z3, z1), cross(z1, z2)};
}

/// Three projective points, pairwise distinct and not on one projective line.
inline bool noncollinear_triple_check(const Triple& points) {
  for (const auto& p : points)
    if (is_zero(p)) throw DomainError("zero vector is not a projective point");
  return !det3(rows_of(points)).is_zero();
}

enum class FindStatus { Certified, DoesNotAdmit, NoWitness };

inline const char* to_string(FindStatus s) {
  switch (s) {
    case FindStatus::Certified: return "certified";
    case FindStatus::DoesNotAdmit: return "does-not-admit";
    case FindStatus::NoWitness: return "no-witness";
  }
  return "?";
}

struct FindResult {
  FindStatus status = FindStatus::NoWitness;
  QuadricClassification classification;
  QuadraticForm3 form;
  std::optional<Triple> witness;
  std::optional<EigenbasisCertificate> certificate;
  std::size_t height = 0;
};

/// Existence verdict plus, when possible, a certified Nijenhuis eigenbasis.
inline FindResult find_eigenbasis(const LieAlgebra& alg, std::size_t height) {
  if (alg.dim() != 3) throw DimensionError("eigenbasis search is defined for dimension 3");
  FindResult out;
  out.height = height;
  out.form = subalgebra_form(alg);
  out.classification = admits_regular_semisimple(alg);
  if (!out.classification.admits) {
    out.status = FindStatus::DoesNotAdmit;
    return out;
  }
  Triple triple;
  if (out.classification.reason == QuadricShape::ZeroForm) {
    triple = {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
  } else {
    auto search = isotropic_triple(out.form, alg.field(), height);
    if (search.status != SearchStatus::Found) {
      out.status = FindStatus::NoWitness;
      return out;
    }
    triple = *search.triple;
  }
  out.witness = triple;
  auto check = verify_nijenhuis_eigenbasis(alg, eigenbasis_from_isotropic_triple(triple));
  if (!check) throw InvariantError("isotropic witness did not yield an eigenbasis");
  out.certificate = std::move(*check.certificate);
  out.status = FindStatus::Certified;
  return out;
}

}  // namespace nijenhuis
