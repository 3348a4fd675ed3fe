#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nijenhuis/error.hpp"
#include "nijenhuis/matrix.hpp"
#include "nijenhuis/scalar.hpp"

namespace nijenhuis {

/// Univariate polynomial over Scalar; coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  /// The monomial t.
  static Polynomial t() { return Polynomial({Scalar(0), Scalar(1)}); }
  static Polynomial constant(Scalar s) { return Polynomial({std::move(s)}); }

  /// Product of (t - r) over the given roots.
  static Polynomial from_roots(const std::vector<Scalar>& roots) {
    Polynomial p = constant(1);
    for (const auto& r : roots) p = p * Polynomial({-r, Scalar(1)});
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  bool is_real() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long long>(k)) * c_[k]);
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const Scalar lead = leading();
    std::vector<Scalar> m = c_;
    for (auto& x : m) x /= lead;
    return Polynomial(std::move(m));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(s));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Scalar> s(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = a.coefficient(k) - b.coefficient(k);
    return Polynomial(std::move(s));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> p(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(p));
  }

  /// Euclidean division: returns (quotient, remainder).
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Scalar> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db + 1));
    const Scalar lead = b.leading();
    for (int k = a.degree(); k >= db; --k) {
      const Scalar q = rem[static_cast<std::size_t>(k)] / lead;
      quot[static_cast<std::size_t>(k - db)] = q;
      if (q.is_zero()) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Scalar& x = c_[static_cast<std::size_t>(k)];
      if (x.is_zero()) continue;
      const bool negative = x.is_real() && x.real() < 0;
      const Scalar mag = negative ? Scalar(0) - x : x;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      const bool unit = mag == Scalar(1) && k > 0;
      if (!unit) out += mag.is_real() ? mag.str() : "(" + mag.str() + ")";
      if (k > 0) out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// det(t Id - M) by the Faddeev-LeVerrier recurrence (exact in characteristic 0).
inline Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix aux(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    for (std::size_t d = 0; d < n; ++d) aux(d, d) += c[n - k + 1];
    c[n - k] = -(m * aux).trace() / Scalar(static_cast<long long>(k));
  }
  return Polynomial(std::move(c));
}

inline bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree test on the zero polynomial");
  return gcd(p, p.derivative()).degree() == 0;
}

/// Sturm chain p, p', -rem(p, p'), ... ending at the last nonzero remainder.
inline std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(Polynomial() - r);
  }
  chain.pop_back();
  return chain;
}

/// Number of distinct real roots of a polynomial with rational coefficients.
inline int count_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("real root count of the zero polynomial");
  if (!p.is_real()) throw DomainError("real root count needs real coefficients");
  const auto chain = sturm_chain(p);
  auto variations = [&](bool at_plus_infinity) {
    int count = 0;
    int last = 0;
    for (const auto& q : chain) {
      int s = q.leading().sign();
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace detail {

struct GaussInt {
  Integer re, im;
};

inline std::vector<Integer> divisors(Integer n) {
  // trial division; inputs here are desk-scale norms
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [prime, exp] : factors) {
    const std::size_t base = out.size();
    Integer pw = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * pw);
    }
  }
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace detail

/// All distinct roots of p lying in Q(i).
///
/// The monic polynomial is rescaled to q(s) = D^n p(s / D) with Gaussian
/// integer coefficients; its roots in Q(i) are Gaussian integers dividing
/// the constant term, so they are enumerated through norm divisors.
inline std::vector<Scalar> gaussian_rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<Scalar> roots;
  Polynomial rest = p.monic();

  while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
    if (roots.empty()) roots.push_back(0);
    rest = divmod(rest, Polynomial::t()).first;
  }
  if (rest.degree() <= 0) return roots;

  Integer den = 1;
  for (const auto& c : rest.coefficients()) {
    den = detail::lcm(den, denominator(c.real()));
    den = detail::lcm(den, denominator(c.imag()));
  }
  const std::size_t n = static_cast<std::size_t>(rest.degree());
  std::vector<Scalar> q(n + 1);
  Rational scale = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    q[k] = rest.coefficient(k) * Scalar(scale);
    scale *= Rational(den);
  }
  const Polynomial scaled(std::move(q));
  const Scalar q0 = scaled.coefficient(0);
  const Integer norm = numerator(q0.norm());

  auto try_root = [&](const Integer& re, const Integer& im) {
    const Scalar s{Rational(re), Rational(im)};
    if (!scaled(s).is_zero()) return;
    const Scalar r = s / Scalar(Rational(den));
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  };

  for (const Integer& m : detail::divisors(norm)) {
    for (Integer x = 0; x * x <= m; ++x) {
      const Integer y2 = m - x * x;
      const Integer y = boost::multiprecision::sqrt(y2);
      if (y * y != y2) continue;
      try_root(x, y);
      try_root(-x, y);
      try_root(x, -y);
      try_root(-x, -y);
    }
  }
  std::sort(roots.begin(), roots.end(), lex_less);
  return roots;
}

}  // namespace nijenhuis
