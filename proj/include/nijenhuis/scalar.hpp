#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "nijenhuis/error.hpp"

namespace nijenhuis {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ground field of a Lie algebra.
enum class Field { Real, Complex };

inline const char* to_string(Field f) { return f == Field::Real ? "R" : "C"; }

/// Exact element of Q(i): a pair of reduced arbitrary-precision fractions.
///
/// Real numbers are the values with a zero imaginary part; there is no
/// separate real type. Arithmetic never rounds and equality is exact.
class Scalar {
 public:
  Scalar() = default;

  template <std::integral T>
  Scalar(T v) : re_(static_cast<long long>(v)) {}  // NOLINT(google-explicit-constructor)

  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)

  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  static Scalar fraction(long long num, long long den) {
    if (den == 0) throw DomainError("zero denominator");
    return Scalar(Rational(Integer(num), Integer(den)));
  }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  Scalar conj() const { return {re_, -im_}; }

  /// |z|^2 as an exact rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  /// Sign of a real value; complex input is a domain error.
  int sign() const {
    if (!is_real()) throw DomainError("sign of a non-real scalar");
    return re_ < 0 ? -1 : (re_ > 0 ? 1 : 0);
  }

  Scalar operator-() const { return {-re_, -im_}; }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    if (o.im_ == 0) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  /// Canonical text: `p`, `p/q`, or `p/q+r/si` / `p/q-r/si`.
  std::string str() const {
    if (im_ == 0) return re_.str();
    std::string out = re_.str();
    out += im_ < 0 ? '-' : '+';
    out += Rational(boost::multiprecision::abs(im_)).str();
    out += 'i';
    return out;
  }

  /// Parses the canonical text format. Also accepts a bare imaginary part
  /// (`2i`, `-i`) and an implicit unit coefficient (`1+i`).
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

/// Total order by (real, imaginary); used for deterministic sorting only.
inline bool lex_less(const Scalar& a, const Scalar& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Rational parse_rational(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed scalar '" + std::string(whole) + "'");
  const Integer n{std::string(num)};
  const Integer d = den.empty() ? Integer(1) : Integer{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  const std::string_view s = compact;
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(detail::parse_rational(s, text));

  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  const std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);

  Rational re = real_text.empty() ? Rational(0) : detail::parse_rational(real_text, text);
  Rational im;
  if (imag_text.empty() || imag_text == "+")
    im = 1;
  else if (imag_text == "-")
    im = -1;
  else
    im = detail::parse_rational(imag_text, text);
  return {std::move(re), std::move(im)};
}

}  // namespace nijenhuis
