#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nijenhuis/error.hpp"
#include "nijenhuis/lie_algebra.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/nijenhuis_operator.hpp"

/// Three-dimensional real (a3.*) and complex (b3.*) Lie algebras in their
/// standard Bianchi-type presentations, reference eigenbases, and the gl(n)
/// and central-extension operator fixtures.
namespace nijenhuis::catalog {

enum class Family { A31, A32, A33, A34, A35, A36, A37, A38, B31, B32, B33, B34, B35, B36 };

inline constexpr std::array<Family, 8> kRealFamilies{Family::A31, Family::A32, Family::A33, Family::A34,
                                                     Family::A35, Family::A36, Family::A37, Family::A38};
inline constexpr std::array<Family, 6> kComplexFamilies{Family::B31, Family::B32, Family::B33,
                                                        Family::B34, Family::B35, Family::B36};

struct FamilyInfo {
  Family family;
  const char* name;
  const char* bianchi;
  Field field;
  bool parametric;
};

inline constexpr std::array<FamilyInfo, 14> kFamilyInfo{{
    {Family::A31, "a3.1", "I", Field::Real, false},
    {Family::A32, "a3.2", "II", Field::Real, false},
    {Family::A33, "a3.3", "IX", Field::Real, false},
    {Family::A34, "a3.4", "VIII", Field::Real, false},
    {Family::A35, "a3.5", "V", Field::Real, false},
    {Family::A36, "a3.6", "IV", Field::Real, false},
    {Family::A37, "a3.7", "VII", Field::Real, true},
    {Family::A38, "a3.8", "VI", Field::Real, true},
    {Family::B31, "b3.1", "I", Field::Complex, false},
    {Family::B32, "b3.2", "II", Field::Complex, false},
    {Family::B33, "b3.3", "IX~VIII", Field::Complex, false},
    {Family::B34, "b3.4", "V", Field::Complex, false},
    {Family::B35, "b3.5", "IV", Field::Complex, false},
    {Family::B36, "b3.6", "VII,VI", Field::Complex, true},
}};

inline const FamilyInfo& info(Family f) { return kFamilyInfo[static_cast<std::size_t>(f)]; }

/// Catalog entry: family plus the parameter of the one-parameter families
/// (a for a3.7 and b3.6, b for a3.8).
class CatalogId {
 public:
  explicit CatalogId(Family family, std::optional<Scalar> parameter = std::nullopt)
      : family_(family), parameter_(std::move(parameter)) {
    const auto& fi = info(family_);
    if (fi.parametric && !parameter_) throw DomainError(std::string(fi.name) + " needs a parameter");
    if (!fi.parametric && parameter_) throw DomainError(std::string(fi.name) + " takes no parameter");
    if (parameter_ && fi.field == Field::Real && !parameter_->is_real())
      throw DomainError(std::string(fi.name) + " needs a real parameter");
  }

  /// Parses `a3.1` .. `a3.8`, `b3.1` .. `b3.6`.
  static CatalogId parse(std::string_view name, std::optional<Scalar> parameter = std::nullopt) {
    for (const auto& fi : kFamilyInfo)
      if (name == fi.name) return CatalogId(fi.family, std::move(parameter));
    throw DomainError("unknown catalog id '" + std::string(name) + "'");
  }

  Family family() const { return family_; }
  const std::optional<Scalar>& parameter() const { return parameter_; }
  Field field() const { return info(family_).field; }
  const char* bianchi() const { return info(family_).bianchi; }

  std::string name() const { return info(family_).name; }
  /// Name with the parameter, e.g. `a3.8[b=2]`.
  std::string label() const {
    if (!parameter_) return name();
    const char* p = family_ == Family::A38 ? "b" : "a";
    return name() + "[" + p + "=" + parameter_->str() + "]";
  }

 private:
  Family family_;
  std::optional<Scalar> parameter_;
};

namespace detail {

inline Vector v3(Scalar a, Scalar b, Scalar c) { return {std::move(a), std::move(b), std::move(c)}; }

/// Relations written as [e1,e2], [e2,e3], [e3,e1].
inline LieAlgebra cyclic(Field field, Vector e12, Vector e23, Vector e31) {
  return LieAlgebra::from_brackets(
      3, field, {{0, 1, std::move(e12)}, {1, 2, std::move(e23)}, {0, 2, Scalar(-1) * std::move(e31)}});
}

inline LieAlgebra build(Family f, const std::optional<Scalar>& param, Field field) {
  const Vector zero = v3(0, 0, 0);
  const Scalar p = param.value_or(Scalar(0));
  switch (f) {
    case Family::A31:
    case Family::B31: return LieAlgebra::abelian(3, field);
    case Family::A32:
    case Family::B32: return cyclic(field, zero, v3(1, 0, 0), zero);
    case Family::A33:
    case Family::B33: return cyclic(field, v3(0, 0, 1), v3(1, 0, 0), v3(0, 1, 0));
    case Family::A34: return cyclic(field, v3(0, 0, -1), v3(1, 0, 0), v3(0, 1, 0));
    case Family::A35:
    case Family::B34: return cyclic(field, v3(0, 1, 0), zero, v3(0, 0, -1));
    case Family::A36:
    case Family::B35: return cyclic(field, v3(0, 1, 1), zero, v3(0, 0, -1));
    case Family::A37:
    case Family::B36: return cyclic(field, v3(0, p, 1), zero, v3(0, 1, -p));
    case Family::A38: return cyclic(field, v3(0, p, -1), zero, v3(0, 1, -p));
  }
  throw DomainError("unknown family");
}

}  // namespace detail

inline LieAlgebra real_algebra(const CatalogId& id) {
  if (id.field() != Field::Real) throw DomainError(id.name() + " is not in the real list");
  return detail::build(id.family(), id.parameter(), Field::Real);
}

inline LieAlgebra complex_algebra(const CatalogId& id) {
  if (id.field() != Field::Complex) throw DomainError(id.name() + " is not in the complex list");
  return detail::build(id.family(), id.parameter(), Field::Complex);
}

inline LieAlgebra algebra(const CatalogId& id) {
  return id.field() == Field::Real ? real_algebra(id) : complex_algebra(id);
}

/// sl(2) in the a3.4 presentation ([e1,e2] = -e3, [e2,e3] = e1, [e3,e1] = e2), over either field.
inline LieAlgebra sl2_split_presentation(Field field) { return detail::build(Family::A34, std::nullopt, field); }

/// The a3.8 presentation with parameter b over either field.
inline LieAlgebra type_vi_presentation(const Scalar& b, Field field) { return detail::build(Family::A38, b, field); }

/// Complex isomorphism from the sl(2) presentation onto b3.3:
/// e1 -> i e1, e2 -> i e2, e3 -> e3.
inline Matrix sl2_to_so3_isomorphism() {
  const Scalar i = Scalar::i();
  return Matrix{{i, 0, 0}, {0, i, 0}, {0, 0, 1}};
}

/// Complex isomorphism from the a3.8 presentation with b = -i a onto b3.6 with
/// parameter a: e1 -> -i e1, e2 -> e2, e3 -> i e3.
inline Matrix type_vi_to_b36_isomorphism() {
  const Scalar i = Scalar::i();
  return Matrix{{-i, 0, 0}, {0, 1, 0}, {0, 0, i}};
}

/// Parameter of the a3.8 presentation isomorphic to b3.6 with parameter a.
inline Scalar type_vi_parameter_for_b36(const Scalar& a) { return -(Scalar::i() * a); }

/// Standard example eigenbases (columns) in the split presentations.
inline Matrix sl2_example_basis() { return Matrix{{-1, 1, 2}, {1, 1, 0}, {1, -1, 0}}; }
inline Matrix type_vi_example_basis() { return Matrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}; }

/// A Nijenhuis eigenbasis of the catalog algebra, as columns.
///
/// a3.4 and a3.8 use the example bases directly. b3.3 and b3.6 carry the
/// same bases through the complex isomorphisms above, since their catalog
/// presentations are the so(3) and type VII forms. a3.5 and b3.4 admit every
/// basis and return the identity. Other entries have none.
inline Matrix reference_eigenbasis(const CatalogId& id) {
  switch (id.family()) {
    case Family::A34: return sl2_example_basis();
    case Family::A38: return type_vi_example_basis();
    case Family::B33: return sl2_to_so3_isomorphism() * sl2_example_basis();
    case Family::B36: return type_vi_to_b36_isomorphism() * type_vi_example_basis();
    case Family::A35:
    case Family::B34: return Matrix::identity(3);
    default: throw DomainError(id.name() + " has no reference eigenbasis");
  }
}

// ---------------------------------------------------------------------------
// gl(n)

/// gl(n) with basis E_11, E_12, ..., E_nn (row-major), [X, Y] = XY - YX.
inline LieAlgebra gl(std::size_t n, Field field = Field::Real) {
  if (n == 0) throw DimensionError("gl(n) needs n >= 1");
  const std::size_t dim = n * n;
  std::vector<Scalar> c(dim * dim * dim);
  auto idx = [n](std::size_t a, std::size_t b) { return a * n + b; };
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d) {
          const std::size_t i = idx(a, b), j = idx(cc, d);
          if (b == cc) c[(i * dim + j) * dim + idx(a, d)] += 1;
          if (d == a) c[(i * dim + j) * dim + idx(cc, b)] -= 1;
        }
  return LieAlgebra::unchecked(dim, field, std::move(c));
}

struct OperatorFixture {
  LieAlgebra algebra;
  LinearOperator op;
};

inline bool is_involution(const Matrix& m) { return m.is_square() && m * m == Matrix::identity(m.rows()); }

/// X -> AXB + BAX + BX - XB on gl(n), for involutions A and B.
inline OperatorFixture gl_n_example_operator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DimensionError("A and B must be n x n");
  const std::size_t n = a.rows();
  if (n < 2) throw DimensionError("gl(n) fixture needs n >= 2");
  if (!is_involution(a)) throw DomainError("A is not an involution");
  if (!is_involution(b)) throw DomainError("B is not an involution");
  const Field field = a.is_real() && b.is_real() ? Field::Real : Field::Complex;
  const Matrix ba = b * a;
  Matrix l(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      Matrix x(n, n);
      x(r, s) = 1;
      const Matrix image = a * x * b + ba * x + b * x - x * b;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) l(p * n + q, r * n + s) = image(p, q);
    }
  return {gl(n, field), LinearOperator(std::move(l))};
}

/// g + C eta with eta central, and L xi = scale * a(xi) eta, L eta = 0.
inline OperatorFixture central_extension_operator(const LieAlgebra& alg, const Vector& covector, const Scalar& scale) {
  const std::size_t n = alg.dim();
  if (covector.size() != n) throw DimensionError("covector length must equal the algebra dimension");
  if (scale.is_zero()) throw DomainError("scale must be nonzero");
  const std::size_t m = n + 1;
  std::vector<Scalar> c(m * m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[(i * m + j) * m + k] = alg.c(k, i, j);
  Matrix l(m, m);
  for (std::size_t j = 0; j < n; ++j) l(n, j) = scale * covector[j];
  return {LieAlgebra::unchecked(m, alg.field(), std::move(c)), LinearOperator(std::move(l))};
}

}  // namespace nijenhuis::catalog
