#include "lievf/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lievf/coeffring.hpp"

namespace lievf {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_terms(const Terms& t, Axis axis) {
  const auto i = static_cast<std::size_t>(axis);
  std::vector<Rational> c;
  for (const auto& [m, v] : t.map()) {
    if (!m.is_polynomial()) throw std::invalid_argument("exponential term in a univariate polynomial");
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i && m.exps[j] != 0) throw std::invalid_argument("polynomial depends on another variable");
    auto e = static_cast<std::size_t>(m.exps[i]);
    if (c.size() <= e) c.resize(e + 1, Rational(0));
    c[e] += v;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = c_;
  Rational inv = 1 / leading();
  for (auto& v : c) v *= inv;
  return UPoly(std::move(c));
}

Rational UPoly::eval(const Rational& t) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quot(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, Rational(0));
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    Rational f = rem[static_cast<std::size_t>(k)] / b.leading();
    if (f == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty())
      out += lievf::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += lievf::to_string(a) + "*" + mono;
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  // Catalog polynomials have small coefficients; trial division suffices.
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  // Strip zero roots, then scale to integer coefficients.
  int low = 0;
  while (p.coeff(low) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<Integer> ic;
  for (std::size_t i = static_cast<std::size_t>(low); i < p.coeffs().size(); ++i) ic.push_back(Integer(p.coeffs()[i] * l));
  if (ic.size() < 2) return roots;
  std::set<Rational> found;
  for (const auto& num : divisors(ic.front()))
    for (const auto& den : divisors(ic.back()))
      for (int sign : {1, -1}) {
        Rational cand(num * sign, den);
        cand.canonicalize();
        if (p.eval(cand) == 0) found.insert(cand);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

RationalFactorization split_rational_roots(const UPoly& p) {
  RationalFactorization f;
  UPoly rest = p;
  for (const auto& r : rational_roots(p)) {
    UPoly lin({-r, Rational(1)});
    int mult = 0;
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult;
    }
    f.roots.emplace_back(r, mult);
  }
  f.rest = rest.monic();
  return f;
}

UPoly characteristic_polynomial(const QMatrix& m) {
  const int n = m.rows();
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  QMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    QMatrix next = m * mk + c[static_cast<std::size_t>(n - k + 1)] * QMatrix::identity(n);
    mk = std::move(next);
    c[static_cast<std::size_t>(n - k)] = -trace(m * mk) / k;
  }
  return UPoly(std::move(c));
}

std::pair<Integer, Rational> squarefree_part(const Rational& disc) {
  // disc = N / D = N D / D^2
  Integer n = disc.get_num() * disc.get_den();
  Rational scale(1, disc.get_den());
  scale.canonicalize();
  int sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  Integer d = 1;
  Integer s = 1;
  for (Integer f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s *= f;
    }
    if (n % f == 0) {
      d *= f;
      n /= f;
    }
  }
  d *= n;
  return {d * sign, Rational(s) * scale};
}

// ----------------------------------------------------------------- QuadNumber

const Integer& QuadNumber::common_d(const QuadNumber& o) const {
  if (b_ == 0) return o.d_;
  if (o.b_ != 0 && o.d_ != d_) throw std::domain_error("mixing different quadratic fields");
  return d_;
}

QuadNumber& QuadNumber::operator+=(const QuadNumber& o) {
  d_ = common_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator-=(const QuadNumber& o) {
  d_ = common_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNumber& QuadNumber::operator*=(const QuadNumber& o) {
  Integer d = common_d(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = std::move(d);
  return *this;
}

QuadNumber& QuadNumber::operator/=(const QuadNumber& o) {
  Integer d = common_d(o);
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * d;
  if (norm == 0) throw std::domain_error("division by zero in a quadratic field");
  QuadNumber conj(o.a_ / norm, -o.b_ / norm, d);
  return *this *= conj;
}

std::string QuadNumber::to_string() const {
  if (b_ == 0) return lievf::to_string(a_);
  std::string s = a_ == 0 ? "" : lievf::to_string(a_) + (b_ < 0 ? " - " : " + ");
  Rational b = a_ == 0 ? b_ : abs(b_);
  s += (b == 1 ? "" : (b == -1 ? "-" : lievf::to_string(b) + "*")) + "sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace lievf
