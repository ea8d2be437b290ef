#include "lievf/coeffring.hpp"

#include <algorithm>
#include <cassert>

namespace lievf {

namespace {

std::strong_ordering cmp(const Rational& a, const Rational& b) {
  int c = ::cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

// ---------------------------------------------------------------- ExpMonomial

bool ExpMonomial::is_polynomial() const {
  return weight[0] == 0 && weight[1] == 0 && weight[2] == 0;
}

ExpMonomial operator*(const ExpMonomial& a, const ExpMonomial& b) {
  ExpMonomial r;
  for (int i = 0; i < 3; ++i) {
    r.exps[i] = a.exps[i] + b.exps[i];
    r.weight[i] = a.weight[i] + b.weight[i];
  }
  return r;
}

bool operator==(const ExpMonomial& a, const ExpMonomial& b) {
  return a.exps == b.exps && a.weight == b.weight;
}

std::strong_ordering operator<=>(const ExpMonomial& a, const ExpMonomial& b) {
  for (int i = 0; i < 3; ++i)
    if (auto c = cmp(a.weight[i], b.weight[i]); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps <=> b.exps;
}

// ---------------------------------------------------------------------- Terms

Terms::Terms(const Rational& constant) {
  if (constant != 0) terms_.emplace(ExpMonomial{}, constant);
}

Terms Terms::monomial(const ExpMonomial& m, const Rational& c) {
  Terms t;
  t.add_term(m, c);
  return t;
}

Terms Terms::variable(Axis a) {
  ExpMonomial m;
  m.exps[static_cast<int>(a)] = 1;
  return monomial(m);
}

bool Terms::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.is_polynomial(); });
}

bool Terms::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Terms::constant_term() const { return coeff(ExpMonomial{}); }

Rational Terms::coeff(const ExpMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Terms::add_term(const ExpMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Terms& Terms::operator+=(const Terms& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Terms& Terms::operator-=(const Terms& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Terms& Terms::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

Terms operator*(const Terms& a, const Terms& b) {
  Terms r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

std::strong_ordering operator<=>(const Terms& a, const Terms& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (auto c = ia->first <=> ib->first; c != 0) return c;
    if (auto c = cmp(ia->second, ib->second); c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Terms Terms::pow(unsigned e) const {
  Terms result(Rational(1));
  Terms base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Terms Terms::partial(Axis a) const {
  const int i = static_cast<int>(a);
  Terms r;
  for (const auto& [m, c] : terms_) {
    if (m.exps[i] > 0) {
      ExpMonomial d = m;
      d.exps[i] -= 1;
      r.add_term(d, c * m.exps[i]);
    }
    if (m.weight[i] != 0) r.add_term(m, c * m.weight[i]);
  }
  return r;
}

std::optional<Terms> Terms::divide_exact(const Terms& divisor) const {
  assert(!divisor.is_zero() && divisor.is_polynomial());
  Terms rem = *this;
  Terms quot;
  const ExpMonomial& lead = divisor.leading_key();
  const Rational& lc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const ExpMonomial& top = rem.leading_key();
    ExpMonomial q;
    for (int i = 0; i < 3; ++i) {
      q.exps[i] = top.exps[i] - lead.exps[i];
      if (q.exps[i] < 0) return std::nullopt;
      q.weight[i] = top.weight[i];
    }
    Rational c = rem.leading_coeff() / lc;
    quot.add_term(q, c);
    rem -= Terms::monomial(q, c) * divisor;
  }
  return quot;
}

Rational Terms::eval(const Point& pt) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational pairing = m.weight[0] * pt[0] + m.weight[1] * pt[1] + m.weight[2] * pt[2];
    if (pairing != 0)
      throw NonRationalExponential("exponential weight pairs to " + to_string(pairing) +
                                   " at the evaluation point");
    Rational v = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < m.exps[i]; ++k) v *= pt[i];
    total += v;
  }
  return total;
}

// -------------------------------------------------------------------- CoeffFn

CoeffFn CoeffFn::fraction(Terms num, const Terms& den) {
  if (den.is_zero()) throw DenominatorVanishes("zero denominator");
  if (!den.is_polynomial()) throw Error("denominator must be a polynomial");
  CoeffFn f(std::move(num));
  Rational lc = den.leading_coeff();
  f.num_ *= 1 / lc;
  Terms monic = den * (1 / lc);
  f.insert_factor(std::move(monic), 1);
  f.normalize();
  return f;
}

CoeffFn CoeffFn::exponential(const std::array<Rational, 3>& weight) {
  ExpMonomial m;
  m.weight = weight;
  return CoeffFn(Terms::monomial(m));
}

Terms CoeffFn::denominator() const {
  Terms d(Rational(1));
  for (const auto& f : den_) d = d * f.base.pow(static_cast<unsigned>(f.power));
  return d;
}

void CoeffFn::insert_factor(Terms base, int power) {
  if (power == 0 || base.is_constant()) return;
  // base is monic; split against existing bases so that no base divides another.
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (den_[i].base == base) {
      den_[i].power += power;
      return;
    }
    if (auto q = base.divide_exact(den_[i].base)) {
      Terms existing = den_[i].base;
      insert_factor(std::move(existing), power);
      insert_factor(std::move(*q), power);
      return;
    }
    if (auto q = den_[i].base.divide_exact(base)) {
      Factor old = den_[i];
      den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
      insert_factor(base, old.power + power);
      insert_factor(std::move(*q), old.power);
      return;
    }
  }
  den_.push_back({std::move(base), power});
  std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
}

void CoeffFn::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& f : den_) {
    while (f.power > 0) {
      auto q = num_.divide_exact(f.base);
      if (!q) break;
      num_ = std::move(*q);
      --f.power;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.power == 0; });
}

std::vector<CoeffFn::Factor> common_denominator(const std::vector<const CoeffFn*>& fns) {
  std::vector<CoeffFn::Factor> common;
  for (const CoeffFn* f : fns) {
    for (const auto& fac : f->denominator_factors()) {
      auto it = std::find_if(common.begin(), common.end(),
                             [&](const CoeffFn::Factor& c) { return c.base == fac.base; });
      if (it == common.end())
        common.push_back(fac);
      else
        it->power = std::max(it->power, fac.power);
    }
  }
  std::sort(common.begin(), common.end(),
            [](const CoeffFn::Factor& a, const CoeffFn::Factor& b) { return a.base < b.base; });
  return common;
}

Terms CoeffFn::numerator_over(const std::vector<Factor>& common) const {
  Terms n = num_;
  for (const auto& c : common) {
    int have = 0;
    for (const auto& f : den_)
      if (f.base == c.base) have = f.power;
    assert(have <= c.power);
    for (int k = have; k < c.power; ++k) n = n * c.base;
  }
  return n;
}

CoeffFn& CoeffFn::operator+=(const CoeffFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    auto common = common_denominator({this, &o});
    Terms n = numerator_over(common) + o.numerator_over(common);
    num_ = std::move(n);
    den_ = std::move(common);
  }
  normalize();
  return *this;
}

CoeffFn& CoeffFn::operator-=(const CoeffFn& o) { return *this += -o; }

CoeffFn operator-(const CoeffFn& a) {
  CoeffFn r = a;
  r.num_ *= Rational(-1);
  return r;
}

CoeffFn& CoeffFn::operator*=(const CoeffFn& o) {
  if (is_zero() || o.is_zero()) return *this = CoeffFn();
  num_ = num_ * o.num_;
  for (const auto& f : o.den_) insert_factor(f.base, f.power);
  normalize();
  return *this;
}

CoeffFn operator/(const CoeffFn& a, const CoeffFn& b) {
  if (b.is_zero()) throw DenominatorVanishes("division by the zero function");
  if (!b.num_.is_polynomial()) throw Error("division by a non-polynomial numerator");
  CoeffFn r = a;
  Rational lc = b.num_.leading_coeff();
  r.num_ *= 1 / lc;
  for (const auto& f : b.den_) {
    Terms scaled = f.base.pow(static_cast<unsigned>(f.power));
    r.num_ = r.num_ * scaled;
  }
  r.insert_factor(b.num_ * (1 / lc), 1);
  r.normalize();
  return r;
}

bool operator==(const CoeffFn& a, const CoeffFn& b) { return (a - b).is_zero(); }

CoeffFn CoeffFn::pow(unsigned e) const {
  CoeffFn r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

CoeffFn CoeffFn::partial(Axis a) const {
  // d(N / prod B_i^k_i) = (N' prod_{I} B_i - N sum_{i in I} k_i B_i' prod_{j in I, j != i} B_j)
  //                       / prod B_i^(k_i + [i in I]),  I = factors with B_i' != 0.
  std::vector<Terms> dB(den_.size());
  std::vector<std::size_t> moving;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    dB[i] = den_[i].base.partial(a);
    if (!dB[i].is_zero()) moving.push_back(i);
  }
  CoeffFn r;
  if (moving.empty()) {
    r.num_ = num_.partial(a);
    r.den_ = den_;
    r.normalize();
    return r;
  }
  Terms prod_all(Rational(1));
  for (auto i : moving) prod_all = prod_all * den_[i].base;
  Terms n = num_.partial(a) * prod_all;
  for (auto i : moving) {
    Terms others(Rational(1));
    for (auto j : moving)
      if (j != i) others = others * den_[j].base;
    n -= num_ * dB[i] * others * Rational(den_[i].power);
  }
  r.num_ = std::move(n);
  r.den_ = den_;
  for (auto i : moving) r.den_[i].power += 1;
  r.normalize();
  return r;
}

Rational CoeffFn::eval(const Point& pt) const {
  Rational d = 1;
  for (const auto& f : den_) {
    Rational b = f.base.eval(pt);
    if (b == 0)
      throw DenominatorVanishes("denominator vanishes at (" + to_string(pt[0]) + "," + to_string(pt[1]) + "," +
                                to_string(pt[2]) + ")");
    for (int k = 0; k < f.power; ++k) d *= b;
  }
  return num_.eval(pt) / d;
}

CoeffFn cf_mul(const CoeffFn& f, const CoeffFn& g) { return f * g; }
CoeffFn cf_partial(const CoeffFn& f, Axis a) { return f.partial(a); }
Rational cf_eval(const CoeffFn& f, const Point& pt) { return f.eval(pt); }
bool cf_equal(const CoeffFn& f, const CoeffFn& g) { return f == g; }

}  // namespace lievf
