#pragma once

// Univariate polynomials over Q and the quadratic fields Q(sqrt d).

#include <string>
#include <utility>
#include <vector>

#include "lievf/linalg.hpp"
#include "lievf/rational.hpp"

namespace lievf {

class Terms;
enum class Axis : int;

/// Dense coefficients, lowest degree first; no trailing zeros (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }
  /// Terms depending on at most `axis` viewed as a polynomial in that variable.
  static UPoly from_terms(const Terms& t, Axis axis);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  UPoly monic() const;

  Rational eval(const Rational& t) const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  /// (quotient, remainder).
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);

/// Distinct rational roots (rational root theorem on the integer-scaled polynomial).
std::vector<Rational> rational_roots(const UPoly& p);

/// p = prod (t - r_i)^{m_i} * rest, with rest free of rational roots.
struct RationalFactorization {
  std::vector<std::pair<Rational, int>> roots;
  UPoly rest;
};
RationalFactorization split_rational_roots(const UPoly& p);

/// Characteristic polynomial det(t I - M) (Faddeev-LeVerrier).
UPoly characteristic_polynomial(const QMatrix& m);

/// Squarefree integer part used as the radicand of Q(sqrt d) for a rational discriminant.
/// Returns (d, s) with disc = s^2 * d, d a squarefree integer.
std::pair<Integer, Rational> squarefree_part(const Rational& disc);

/// a + b sqrt(d) with d a fixed non-square integer (d = 0 encodes plain rationals).
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(int v) : a_(v) {}  // NOLINT(implicit)
  QuadNumber(const Rational& a) : a_(a) {}  // NOLINT(implicit)
  QuadNumber(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  QuadNumber& operator+=(const QuadNumber& o);
  QuadNumber& operator-=(const QuadNumber& o);
  QuadNumber& operator*=(const QuadNumber& o);
  QuadNumber& operator/=(const QuadNumber& o);
  friend QuadNumber operator+(QuadNumber x, const QuadNumber& y) { return x += y; }
  friend QuadNumber operator-(QuadNumber x, const QuadNumber& y) { return x -= y; }
  friend QuadNumber operator*(QuadNumber x, const QuadNumber& y) { return x *= y; }
  friend QuadNumber operator/(QuadNumber x, const QuadNumber& y) { return x /= y; }
  friend QuadNumber operator-(const QuadNumber& x) { return QuadNumber(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator==(const QuadNumber& x, int v) { return x.b_ == 0 && x.a_ == v; }
  friend bool operator!=(const QuadNumber& x, int v) { return !(x == v); }

  std::string to_string() const;

 private:
  const Integer& common_d(const QuadNumber& o) const;
  Rational a_;
  Rational b_;
  Integer d_;
};

}  // namespace lievf
