#include "lievf/dsl.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace lievf {

namespace {

constexpr int kMaxExponent = 1000;

/// scalar + sum_i sym[i] * d_i
struct Value {
  CoeffFn scalar;
  std::array<CoeffFn, 3> sym{};

  bool has_symbols() const { return !sym[0].is_zero() || !sym[1].is_zero() || !sym[2].is_zero(); }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse_all() {
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "operator or end of input");
    return v;
  }

  int max_index() const { return max_index_; }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  Value expr() {
    Value v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        add(v, term(), Rational(1));
      } else if (peek('-')) {
        ++pos_;
        add(v, term(), Rational(-1));
      } else {
        return v;
      }
    }
  }

  static void add(Value& a, const Value& b, const Rational& sign) {
    a.scalar += CoeffFn(sign) * b.scalar;
    for (int i = 0; i < 3; ++i) a.sym[static_cast<std::size_t>(i)] += CoeffFn(sign) * b.sym[static_cast<std::size_t>(i)];
  }

  Value term() {
    Value v = unary();
    while (true) {
      if (peek('*')) {
        std::size_t at = pos_++;
        v = multiply(v, unary(), at);
      } else if (peek('/')) {
        std::size_t at = pos_++;
        v = divide(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  static Value multiply(const Value& a, const Value& b, std::size_t at) {
    if (a.has_symbols() && b.has_symbols()) throw SemanticError(at, "product of two derivation symbols");
    Value r;
    if (a.has_symbols() && !a.scalar.is_zero()) throw SemanticError(at, "operator with zero-order part used as a factor");
    if (b.has_symbols() && !b.scalar.is_zero()) throw SemanticError(at, "operator with zero-order part used as a factor");
    const Value& s = a.has_symbols() ? b : a;
    const Value& o = a.has_symbols() ? a : b;
    if (o.has_symbols()) {
      for (std::size_t i = 0; i < 3; ++i) r.sym[i] = s.scalar * o.sym[i];
    } else {
      r.scalar = a.scalar * b.scalar;
    }
    return r;
  }

  static Value divide(const Value& a, const Value& b, std::size_t at) {
    if (b.has_symbols()) throw SemanticError(at, "division by a derivation symbol");
    if (b.scalar.is_zero()) throw SemanticError(at, "division by zero");
    if (!b.scalar.numerator().is_polynomial()) throw SemanticError(at, "denominator must be a polynomial");
    Value r;
    r.scalar = a.scalar / b.scalar;
    for (std::size_t i = 0; i < 3; ++i) r.sym[i] = a.sym[i] / b.scalar;
    return r;
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      Value v = unary();
      Value r;
      add(r, v, Rational(-1));
      return r;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    std::size_t start = (skip_ws(), pos_);
    Value base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') throw SemanticError(at, "negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(at, "non-negative integer exponent");
    Integer e = digits();
    if (e > kMaxExponent) throw SemanticError(at, "exponent too large");
    if (base.has_symbols()) throw SemanticError(start, "power of a derivation symbol");
    Value r;
    r.scalar = base.scalar.pow(static_cast<unsigned>(e.get_ui()));
    return r;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Value atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "operand");
    const char c = text_[pos_];
    Value v;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      v.scalar = CoeffFn(Rational(digits()));
      return v;
    }
    if (c == '(') {
      ++pos_;
      v = expr();
      expect(')');
      return v;
    }
    if (text_.substr(pos_, 3) == "exp") {
      pos_ += 3;
      expect('(');
      std::size_t arg_at = (skip_ws(), pos_);
      Value arg = expr();
      expect(')');
      v.scalar = exponential_of(arg, arg_at);
      return v;
    }
    static constexpr std::string_view vars = "xyz";
    static constexpr std::string_view syms = "pqr";
    if (auto i = vars.find(c); i != std::string_view::npos && !ident_continues()) {
      ++pos_;
      v.scalar = CoeffFn::variable(static_cast<Axis>(i));
      max_index_ = std::max(max_index_, static_cast<int>(i));
      return v;
    }
    if (auto i = syms.find(c); i != std::string_view::npos && !ident_continues()) {
      ++pos_;
      v.sym[i] = CoeffFn(1);
      max_index_ = std::max(max_index_, static_cast<int>(i));
      return v;
    }
    throw SyntaxError(pos_, "number, variable, symbol, exp or '('");
  }

  bool ident_continues() const {
    return pos_ + 1 < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  static CoeffFn exponential_of(const Value& arg, std::size_t at) {
    if (arg.has_symbols()) throw SemanticError(at, "derivation symbol inside exp");
    if (arg.scalar.has_denominator() || !arg.scalar.numerator().is_polynomial())
      throw SemanticError(at, "exp argument must be a linear form in x, y, z");
    std::array<Rational, 3> w{};
    for (const auto& [m, c] : arg.scalar.numerator().map()) {
      if (m.degree() != 1) throw SemanticError(at, "exp argument must be a linear form without constant term");
      for (int i = 0; i < 3; ++i)
        if (m.exps[static_cast<std::size_t>(i)] == 1) w[static_cast<std::size_t>(i)] = c;
    }
    return CoeffFn::exponential(w);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int max_index_ = -1;
};

// ------------------------------------------------------------------- printing

std::string linear_form(const std::array<Rational, 3>& w) {
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  for (int i = 0; i < 3; ++i) {
    const Rational& c = w[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += to_string(a) + "*";
    out += names[i];
  }
  return out;
}

/// Factors of a monomial without coefficient, joined by '*'; empty for 1.
std::string monomial_text(const ExpMonomial& m) {
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += "*";
    out += f;
  };
  for (int i = 0; i < 3; ++i) {
    int e = m.exps[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    append(e == 1 ? std::string(names[i]) : std::string(names[i]) + "^" + std::to_string(e));
  }
  if (!m.is_polynomial()) append("exp(" + linear_form(m.weight) + ")");
  return out;
}

/// Appends signed terms `coef*monomial*suffix` in descending canonical order.
void append_terms(std::string& out, const Terms& t, const std::string& suffix) {
  for (auto it = t.map().rbegin(); it != t.map().rend(); ++it) {
    const Rational& c = it->second;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string body = monomial_text(it->first);
    if (!suffix.empty()) body = body.empty() ? suffix : body + "*" + suffix;
    if (body.empty())
      out += to_string(a);
    else if (a == 1)
      out += body;
    else
      out += to_string(a) + "*" + body;
  }
}

std::string terms_text(const Terms& t) {
  std::string s;
  append_terms(s, t, "");
  return s.empty() ? "0" : s;
}

/// One component (or scalar part) multiplied by `suffix`, appended with sign handling.
void append_component(std::string& out, const CoeffFn& f, const std::string& suffix) {
  if (f.is_zero()) return;
  if (!f.has_denominator()) {
    append_terms(out, f.numerator(), suffix);
    return;
  }
  if (!out.empty()) out += " + ";
  out += "(" + terms_text(f.numerator()) + ")/(" + terms_text(f.denominator()) + ")";
  if (!suffix.empty()) out += "*" + suffix;
}

}  // namespace

ParsedValue parse(std::string_view text, int min_dim) {
  Parser p(text);
  Value v = p.parse_all();
  if (!v.has_symbols()) return v.scalar;
  int dim = std::max(min_dim, p.max_index() + 1);
  VectorField f(dim);
  for (int i = 0; i < 3; ++i) {
    if (v.sym[static_cast<std::size_t>(i)].is_zero()) continue;
    f[i] = v.sym[static_cast<std::size_t>(i)];
  }
  if (v.scalar.is_zero()) return f;
  return LiftedOperator(std::move(f), v.scalar);
}

VectorField parse_field(std::string_view text, int dim) {
  ParsedValue v = parse(text, dim);
  if (auto* f = std::get_if<VectorField>(&v)) {
    if (f->dim() != dim) throw SemanticError(0, "field uses coordinates beyond dimension " + std::to_string(dim));
    return *f;
  }
  if (auto* c = std::get_if<CoeffFn>(&v); c && c->is_zero()) return VectorField(dim);
  throw SemanticError(0, "expected a vector field");
}

LiftedOperator parse_operator(std::string_view text, int dim) {
  ParsedValue v = parse(text, dim);
  if (auto* op = std::get_if<LiftedOperator>(&v)) {
    if (op->dim() != dim) throw SemanticError(0, "operator uses coordinates beyond dimension " + std::to_string(dim));
    return *op;
  }
  if (auto* f = std::get_if<VectorField>(&v)) {
    if (f->dim() != dim) throw SemanticError(0, "operator uses coordinates beyond dimension " + std::to_string(dim));
    return LiftedOperator(*f);
  }
  return LiftedOperator(VectorField(dim), std::get<CoeffFn>(v));
}

CoeffFn parse_function(std::string_view text) {
  ParsedValue v = parse(text);
  if (auto* c = std::get_if<CoeffFn>(&v)) return *c;
  throw SemanticError(0, "expected a function without derivation symbols");
}

std::string print(const CoeffFn& f) {
  std::string out;
  append_component(out, f, "");
  return out.empty() ? "0" : out;
}

std::string print(const VectorField& v) {
  static const char* syms[] = {"p", "q", "r"};
  std::string out;
  for (int i = 0; i < v.dim(); ++i) append_component(out, v[i], syms[i]);
  return out.empty() ? "0" : out;
}

std::string print(const LiftedOperator& op) {
  static const char* syms[] = {"p", "q", "r"};
  std::string out;
  for (int i = 0; i < op.dim(); ++i) append_component(out, op.field[i], syms[i]);
  append_component(out, op.scalar, "");
  return out.empty() ? "0" : out;
}

std::string print(const ParsedValue& v) {
  return std::visit([](const auto& x) { return print(x); }, v);
}

}  // namespace lievf
