#pragma once

// Exact coefficient functions: Q-linear combinations of
// x^a y^b z^c * exp(l1*x + l2*y + l3*z) over a polynomial denominator.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "lievf/errors.hpp"
#include "lievf/rational.hpp"

namespace lievf {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

using Point = std::array<Rational, 3>;

/// x^a y^b z^c * e^{w1 x + w2 y + w3 z}.
struct ExpMonomial {
  std::array<int, 3> exps{0, 0, 0};
  std::array<Rational, 3> weight{};

  int degree() const { return exps[0] + exps[1] + exps[2]; }
  bool is_polynomial() const;
  bool is_one() const { return degree() == 0 && is_polynomial(); }

  friend ExpMonomial operator*(const ExpMonomial& a, const ExpMonomial& b);
  friend bool operator==(const ExpMonomial& a, const ExpMonomial& b);
  /// Canonical order: weight (lexicographic), then exponents (graded lexicographic).
  friend std::strong_ordering operator<=>(const ExpMonomial& a, const ExpMonomial& b);
};

/// Sparse Q-linear combination of ExpMonomials; never stores a zero coefficient.
class Terms {
 public:
  using Map = std::map<ExpMonomial, Rational>;

  Terms() = default;
  explicit Terms(const Rational& constant);
  static Terms monomial(const ExpMonomial& m, const Rational& c = 1);
  static Terms variable(Axis a);

  const Map& map() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  bool is_constant() const;
  /// Coefficient of the constant monomial 1.
  Rational constant_term() const;
  Rational coeff(const ExpMonomial& m) const;

  /// Greatest key in canonical order. Precondition: nonzero.
  const ExpMonomial& leading_key() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const ExpMonomial& m, const Rational& c);

  Terms& operator+=(const Terms& o);
  Terms& operator-=(const Terms& o);
  Terms& operator*=(const Rational& c);
  friend Terms operator+(Terms a, const Terms& b) { return a += b; }
  friend Terms operator-(Terms a, const Terms& b) { return a -= b; }
  friend Terms operator-(Terms a) { return a *= Rational(-1); }
  friend Terms operator*(Terms a, const Rational& c) { return a *= c; }
  friend Terms operator*(const Rational& c, Terms a) { return a *= c; }
  friend Terms operator*(const Terms& a, const Terms& b);
  friend bool operator==(const Terms& a, const Terms& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const Terms& a, const Terms& b);

  Terms pow(unsigned e) const;
  Terms partial(Axis a) const;

  /// Quotient when `divisor` (a nonzero polynomial) divides this exactly.
  std::optional<Terms> divide_exact(const Terms& divisor) const;

  /// Throws NonRationalExponential when some weight pairs nonzero with the point.
  Rational eval(const Point& pt) const;

 private:
  Map terms_;
};

/// numerator / prod(base_i ^ power_i) with monic, non-constant, pairwise distinct bases.
/// The expanded denominator is a monic polynomial; the zero function has no factors.
class CoeffFn {
 public:
  struct Factor {
    Terms base;
    int power = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  CoeffFn() = default;
  CoeffFn(const Rational& c) : num_(c) {}  // NOLINT(implicit)
  CoeffFn(int c) : num_(Rational(c)) {}    // NOLINT(implicit)
  explicit CoeffFn(Terms numerator) : num_(std::move(numerator)) {}

  /// num / den; `den` must be a nonzero polynomial.
  static CoeffFn fraction(Terms num, const Terms& den);
  static CoeffFn variable(Axis a) { return CoeffFn(Terms::variable(a)); }
  static CoeffFn exponential(const std::array<Rational, 3>& weight);

  const Terms& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  /// Expanded (monic) denominator polynomial; 1 when there are no factors.
  Terms denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool has_denominator() const { return !den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  /// True when the value is a pure polynomial (no exponential weight, no denominator).
  bool is_polynomial() const { return den_.empty() && num_.is_polynomial(); }

  CoeffFn& operator+=(const CoeffFn& o);
  CoeffFn& operator-=(const CoeffFn& o);
  CoeffFn& operator*=(const CoeffFn& o);
  friend CoeffFn operator+(CoeffFn a, const CoeffFn& b) { return a += b; }
  friend CoeffFn operator-(CoeffFn a, const CoeffFn& b) { return a -= b; }
  friend CoeffFn operator-(const CoeffFn& a);
  friend CoeffFn operator*(CoeffFn a, const CoeffFn& b) { return a *= b; }
  /// Division by a function whose numerator is a nonzero polynomial.
  friend CoeffFn operator/(const CoeffFn& a, const CoeffFn& b);
  friend bool operator==(const CoeffFn& a, const CoeffFn& b);

  CoeffFn pow(unsigned e) const;
  CoeffFn partial(Axis a) const;
  Rational eval(const Point& pt) const;

  /// Numerator rescaled to sit over the expanded product of `common` factors.
  /// Precondition: every factor of this function divides `common` factor-wise.
  Terms numerator_over(const std::vector<Factor>& common) const;

 private:
  void insert_factor(Terms base, int power);
  void normalize();

  Terms num_;
  std::vector<Factor> den_;
};

/// Factor-wise maximum of all denominators: a common multiple of every denominator.
std::vector<CoeffFn::Factor> common_denominator(const std::vector<const CoeffFn*>& fns);

// Named operations.
CoeffFn cf_mul(const CoeffFn& f, const CoeffFn& g);
CoeffFn cf_partial(const CoeffFn& f, Axis a);
Rational cf_eval(const CoeffFn& f, const Point& pt);
bool cf_equal(const CoeffFn& f, const CoeffFn& g);

}  // namespace lievf
