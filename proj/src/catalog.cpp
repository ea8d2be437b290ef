#include "lievf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fmt/format.h>
#include <set>

#include "lievf/dsl.hpp"
#include "lievf/linspan.hpp"

namespace lievf {

// ------------------------------------------------------------------ RootPoly

int RootPoly::degree() const {
  int d = 0;
  for (const auto& r : roots) d += r.second;
  return d;
}

UPoly RootPoly::expand() const {
  UPoly out = UPoly::constant(1);
  for (const auto& [r, mult] : roots)
    for (int i = 0; i < mult; ++i) out = out * UPoly({-r, Rational(1)});
  return out;
}

std::string RootPoly::to_string() const {
  if (roots.empty()) return "1";
  std::string out;
  for (const auto& [r, mult] : roots) {
    std::string f;
    if (r == 0)
      f = "t";
    else if (r > 0)
      f = "(t-" + lievf::to_string(r) + ")";
    else
      f = "(t+" + lievf::to_string(Rational(-r)) + ")";
    if (mult > 1) f += "^" + std::to_string(mult);
    out += f;
  }
  return out;
}

RootPoly RootPoly::parse(std::string_view text) {
  std::map<Rational, int> acc;
  std::size_t i = 0;
  auto bad = [&](const std::string& why) {
    return BadParams("polynomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(i));
  };
  auto read_int = [&]() {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw bad("expected an integer");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  while (i < text.size()) {
    Rational root;
    if (text[i] == 't') {
      ++i;
    } else if (text[i] == '(') {
      ++i;
      if (i >= text.size() || text[i] != 't') throw bad("expected 't'");
      ++i;
      if (i >= text.size() || (text[i] != '-' && text[i] != '+')) throw bad("expected '-' or '+'");
      const bool minus = text[i] == '-';
      ++i;
      std::size_t start = i;
      while (i < text.size() && text[i] != ')') ++i;
      if (i >= text.size()) throw bad("expected ')'");
      try {
        root = parse_rational(text.substr(start, i - start));
      } catch (const std::invalid_argument&) {
        throw bad("bad root");
      }
      if (!minus) root = -root;
      ++i;
    } else {
      throw bad("expected 't' or '('");
    }
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = read_int();
      if (mult < 1) throw bad("exponent must be positive");
    }
    acc[root] += mult;
  }
  if (acc.empty()) throw bad("empty polynomial");
  RootPoly p;
  for (const auto& [r, m] : acc) p.roots.emplace_back(r, m);
  return p;
}

// ------------------------------------------------------------------ Params

const Rational& Params::at(const std::string& name) const {
  auto it = num.find(name);
  if (it == num.end()) throw BadParams("missing parameter " + name);
  return it->second;
}

long Params::integer(const std::string& name) const {
  const Rational& v = at(name);
  if (!is_integer(v)) throw BadParams("parameter " + name + " must be an integer, got " + lievf::to_string(v));
  return to_long(v);
}

std::string Params::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [k, v] : num) parts.push_back(k + "=" + lievf::to_string(v));
  if (!ms.empty()) {
    std::string s = "ms=";
    for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ";" : "") + std::to_string(ms[i]);
    parts.push_back(s);
  }
  if (pt) parts.push_back("pt=" + pt->to_string());
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

Params Params::parse(std::string_view text) {
  Params p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw BadParams("expected name=value, got '" + std::string(item) + "'");
    std::string name(item.substr(0, eq));
    std::string_view value = item.substr(eq + 1);
    if (name == "ms") {
      std::size_t q = 0;
      while (q <= value.size()) {
        std::size_t e = value.find(';', q);
        if (e == std::string_view::npos) e = value.size();
        std::string v(value.substr(q, e - q));
        try {
          p.ms.push_back(std::stoi(v));
        } catch (const std::exception&) {
          throw BadParams("bad ms element '" + v + "'");
        }
        q = e + 1;
      }
    } else if (name == "pt") {
      p.pt = RootPoly::parse(value);
    } else {
      try {
        p.num[name] = parse_rational(value);
      } catch (const std::invalid_argument&) {
        throw BadParams("bad value for " + name + ": '" + std::string(value) + "'");
      }
    }
  }
  return p;
}

std::string to_string(Series s) {
  switch (s) {
    case Series::Planar: return "planar";
    case Series::P: return "P";
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
  }
  return "?";
}

std::string to_string(Shape s) {
  switch (s) {
    case Shape::Planar: return "planar";
    case Shape::NoInvariantLine: return "no-invariant-line";
    case Shape::B: return "B";
    case Shape::C1: return "C1";
    case Shape::C2: return "C2";
    case Shape::D: return "D";
  }
  return "?";
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Vm: return "V_m";
    case FamilyKind::Vnm: return "V_{n,m}";
    case FamilyKind::Valpha: return "V_{alpha,m}";
    case FamilyKind::ValphaDual: return "V_{alpha,m}^dual";
    case FamilyKind::Vpt: return "V_{p(t)}";
    case FamilyKind::XiVpt: return "x^i V_{p(t)}(y)";
    case FamilyKind::Vnmp: return "V_{n,m,p}";
    case FamilyKind::Case18: return "case18-V_p";
    case FamilyKind::TotalDegree: return "V_m(total degree)";
    case FamilyKind::LegendrePlus: return "Legendre+";
    case FamilyKind::LegendreMinus: return "Legendre-";
    case FamilyKind::Ball: return "8'-ball";
  }
  return "?";
}

// ------------------------------------------------------------------ Legendre

UPoly legendre(int n) {
  if (n < 0) throw BadParams("Legendre degree must be non-negative");
  UPoly base({Rational(1), Rational(0), Rational(-1)});  // 1 - z^2
  UPoly f = UPoly::constant(1);
  for (int i = 0; i < n; ++i) f = f * base;
  for (int i = 0; i < n; ++i) f = f.derivative();
  Rational scale = (n % 2 ? -1 : 1);
  for (int i = 1; i <= n; ++i) scale /= 2 * i;
  return UPoly::constant(scale) * f;
}

// ------------------------------------------------------------------ families

namespace {

CoeffFn mono(int a, int b, int c = 0, const Rational& wx = 0, const Rational& wy = 0) {
  ExpMonomial m;
  m.exps = {a, b, c};
  m.weight = {wx, wy, Rational(0)};
  return CoeffFn(Terms::monomial(m));
}

CoeffFn fn(const std::string& text) { return parse_function(text); }

long nat(const Params& p, const std::string& name, long min = 0) {
  long v = p.integer(name);
  if (v < min) throw BadParams(fmt::format("parameter {} must be >= {}, got {}", name, min, v));
  return v;
}

const RootPoly& poly(const Params& p) {
  if (!p.pt) throw BadParams("missing polynomial parameter pt");
  if (p.pt->degree() < 1) throw BadParams("pt must have degree >= 1");
  return *p.pt;
}

std::vector<CoeffFn> vpt_basis(const RootPoly& rp, Axis axis) {
  std::vector<CoeffFn> out;
  for (const auto& [root, mult] : rp.roots)
    for (int j = 0; j < mult; ++j)
      out.push_back(axis == Axis::X ? mono(j, 0, 0, root, 0) : mono(0, j, 0, 0, root));
  return out;
}

CoeffFn compose(const UPoly& p, const CoeffFn& z) {
  CoeffFn r;
  for (int i = p.degree(); i >= 0; --i) r = r * z + CoeffFn(p.coeff(i));
  return r;
}

/// Fields of the planar algebra preserving the Legendre family (sign +1 compact, -1 hyperbolic).
std::vector<VectorField> legendre_fields(int sign) {
  if (sign > 0)
    return {parse_field("x*q - y*p", 2), parse_field("(1 + x^2 - y^2)*p + 2*x*y*q", 2),
            parse_field("2*x*y*p + (1 - x^2 + y^2)*q", 2)};
  return {parse_field("x*q - y*p", 2), parse_field("(1 - x^2 + y^2)*p - 2*x*y*q", 2),
          parse_field("-2*x*y*p + (1 + x^2 - y^2)*q", 2)};
}

std::vector<CoeffFn> saturate(const CoeffFn& seed, const std::vector<VectorField>& fields, int cap) {
  FunctionSpan span;
  std::vector<CoeffFn> pending{seed};
  span.add(seed);
  while (!pending.empty()) {
    std::vector<CoeffFn> next;
    for (const auto& f : pending)
      for (const auto& x : fields) {
        CoeffFn g = x.apply(f);
        if (span.add(g)) {
          next.push_back(g);
          if (span.dim() > cap) throw Error("submodule saturation exceeded dimension " + std::to_string(cap));
        }
      }
    pending = std::move(next);
  }
  return span.basis();
}

std::vector<CoeffFn> independent(const std::vector<CoeffFn>& fns) {
  FunctionSpan span;
  for (const auto& f : fns) span.add(f);
  return span.basis();
}

}  // namespace

int family_dim(FamilyKind kind, const Params& p) {
  switch (kind) {
    case FamilyKind::Vm:
    case FamilyKind::Valpha:
    case FamilyKind::ValphaDual: return static_cast<int>(nat(p, "m")) + 1;
    case FamilyKind::Vnm: return static_cast<int>(nat(p, "n") + 2 * nat(p, "m") + 1);
    case FamilyKind::Vpt: return poly(p).degree();
    case FamilyKind::XiVpt: return static_cast<int>(nat(p, "m") + 1) * poly(p).degree();
    case FamilyKind::Vnmp: {
      long n = nat(p, "n", 1), m = nat(p, "m"), q = nat(p, "p");
      int d = 0;
      for (long j = 0; j <= q; ++j) d += static_cast<int>(m - j * n + 1);
      return d;
    }
    case FamilyKind::Case18: {
      long n = nat(p, "n"), q = nat(p, "p");
      Rational top = p.at("alpha") + n * p.at("beta");
      int d = 0;
      for (long j = 0; j <= q; ++j) d += static_cast<int>(to_long(top - n * j) + 1);
      return d;
    }
    case FamilyKind::TotalDegree: {
      long m = nat(p, "m");
      return static_cast<int>((m + 1) * (m + 2) / 2);
    }
    case FamilyKind::LegendrePlus:
    case FamilyKind::LegendreMinus: return static_cast<int>(2 * nat(p, "n") + 1);
    case FamilyKind::Ball: {
      long a = nat(p, "alpha");
      return static_cast<int>((a + 1) * (a + 1));
    }
  }
  return 0;
}

SubmoduleFamily submodule_family(FamilyKind kind, const Params& p) {
  SubmoduleFamily out{kind, p, {}};
  auto& b = out.basis;
  switch (kind) {
    case FamilyKind::Vm: {
      long m = nat(p, "m");
      for (long i = 0; i <= m; ++i) b.push_back(mono(static_cast<int>(i), 0, 0, 0, Rational(m)));
      break;
    }
    case FamilyKind::Valpha:
    case FamilyKind::ValphaDual: {
      long m = nat(p, "m");
      Rational w = kind == FamilyKind::Valpha ? Rational(m + p.at("alpha")) : Rational(m - p.at("alpha"));
      for (long i = 0; i <= m; ++i) b.push_back(mono(static_cast<int>(i), 0, 0, 0, w));
      break;
    }
    case FamilyKind::Vnm: {
      long n = nat(p, "n"), m = nat(p, "m");
      CoeffFn g = mono(static_cast<int>(n + m), 0) * fn("1 + x*y").pow(static_cast<unsigned>(m));
      for (long i = 0; i <= n + 2 * m; ++i) {
        b.push_back(g);
        g = g.partial(Axis::X);
      }
      break;
    }
    case FamilyKind::Vpt: {
      Axis axis = p.has("axis") && p.integer("axis") == 1 ? Axis::Y : Axis::X;
      b = vpt_basis(poly(p), axis);
      break;
    }
    case FamilyKind::XiVpt: {
      long m = nat(p, "m");
      for (long i = 0; i <= m; ++i)
        for (const auto& f : vpt_basis(poly(p), Axis::Y)) b.push_back(mono(static_cast<int>(i), 0) * f);
      break;
    }
    case FamilyKind::Vnmp: {
      long n = nat(p, "n", 1), m = nat(p, "m"), q = nat(p, "p");
      if (q * n > m) throw BadParams("V_{n,m,p} needs p <= m/n");
      for (long j = 0; j <= q; ++j)
        for (long i = 0; i <= m - j * n; ++i) b.push_back(mono(static_cast<int>(i), static_cast<int>(j)));
      break;
    }
    case FamilyKind::Case18: {
      long n = nat(p, "n"), q = nat(p, "p");
      Rational top = p.at("alpha") + n * p.at("beta");
      if (!is_integer(top) || top < 0) throw BadParams("case-18 family needs alpha + n beta in N");
      if (n * q > top) throw BadParams("case-18 family needs n p <= alpha + n beta");
      for (long j = 0; j <= q; ++j)
        for (long i = 0; i <= to_long(top) - n * j; ++i) b.push_back(mono(static_cast<int>(i), static_cast<int>(j)));
      break;
    }
    case FamilyKind::TotalDegree: {
      long m = nat(p, "m");
      for (long d = 0; d <= m; ++d)
        for (long j = 0; j <= d; ++j) b.push_back(mono(static_cast<int>(d - j), static_cast<int>(j)));
      break;
    }
    case FamilyKind::LegendrePlus:
    case FamilyKind::LegendreMinus: {
      long n = nat(p, "n");
      const int sign = kind == FamilyKind::LegendrePlus ? 1 : -1;
      CoeffFn z = sign > 0 ? fn("(x^2 + y^2 - 1)/(x^2 + y^2 + 1)") : fn("(x^2 + y^2 + 1)/(x^2 + y^2 - 1)");
      b = saturate(compose(legendre(static_cast<int>(n)), z), legendre_fields(sign), static_cast<int>(4 * n + 8));
      break;
    }
    case FamilyKind::Ball: {
      long a = nat(p, "alpha");
      std::vector<CoeffFn> all;
      CoeffFn rho = fn("x^2 + y^2");
      for (long k = 0; k <= a; ++k)
        for (long i = 0; i + k <= a; ++i)
          for (long j = 0; i + j + k <= a; ++j)
            all.push_back(mono(static_cast<int>(i), static_cast<int>(j)) * rho.pow(static_cast<unsigned>(k)));
      b = independent(all);
      break;
    }
  }
  return out;
}

std::vector<CoeffFn> family_sum(FamilyKind kind, const Params& params) {
  if (params.ms.empty()) throw BadParams("empty list ms");
  for (std::size_t i = 0; i < params.ms.size(); ++i) {
    if (params.ms[i] < 0) throw BadParams("ms entries must be non-negative");
    if (i > 0 && params.ms[i] <= params.ms[i - 1]) throw BadParams("ms must be strictly increasing");
  }
  const bool legendre_kind = kind == FamilyKind::LegendrePlus || kind == FamilyKind::LegendreMinus;
  std::vector<CoeffFn> out;
  for (int m : params.ms) {
    Params q = params;
    q.ms.clear();
    q.num[legendre_kind ? "n" : "m"] = m;
    auto f = submodule_family(kind, q);
    out.insert(out.end(), f.basis.begin(), f.basis.end());
  }
  return out;
}

int family_sum_dim(FamilyKind kind, const Params& params) {
  const bool legendre_kind = kind == FamilyKind::LegendrePlus || kind == FamilyKind::LegendreMinus;
  int d = 0;
  for (int m : params.ms) {
    Params q = params;
    q.ms.clear();
    q.num[legendre_kind ? "n" : "m"] = m;
    d += family_dim(kind, q);
  }
  return d;
}

// ------------------------------------------------------------------ grids

std::vector<RootPoly> grid_polys() {
  return {RootPoly::parse("t"), RootPoly::parse("t^2"), RootPoly::parse("t(t-1)"), RootPoly::parse("(t-1)(t-2)")};
}

std::vector<Rational> grid_alphas() {
  return {Rational(0), Rational(1), Rational(2), make_rational(1, 2), Rational(-2)};
}

std::vector<std::vector<int>> grid_mlists(Grid g) {
  std::vector<std::vector<int>> out;
  const int top = g == Grid::Small ? 4 : 6;
  for (int a = 0; a <= top; ++a) out.push_back({a});
  for (int a = 0; a <= top; ++a)
    for (int b = a + 1; b <= top; ++b) out.push_back({a, b});
  out.push_back({0, 2, 4});
  out.push_back({1, 2, 3});
  if (g == Grid::Full) {
    out.push_back({0, 1, 2, 3});
    out.push_back({2, 5, 8});
  }
  return out;
}

namespace {

// ------------------------------------------------------------------ builders

using Gens = std::vector<VectorField>;

std::string Q(const Rational& r) { return "(" + to_string(r) + ")"; }
std::string Q(long v) { return "(" + std::to_string(v) + ")"; }

struct G {
  int dim;
  Gens out;
  explicit G(int d) : dim(d) {}
  G& operator()(const std::string& text) {
    out.push_back(parse_field(text, dim));
    return *this;
  }
  /// f * d/dx_axis for each f.
  G& times(const std::vector<CoeffFn>& fs, int axis) {
    for (const auto& f : fs) out.push_back(f * VectorField::coordinate(dim, axis));
    return *this;
  }
};

std::vector<CoeffFn> monomials(long imax_base, long slope, long jmax) {
  // x^i y^j for 0 <= j <= jmax, 0 <= i <= imax_base - slope*j
  std::vector<CoeffFn> out;
  for (long j = 0; j <= jmax; ++j)
    for (long i = 0; i <= imax_base - slope * j; ++i) out.push_back(mono(static_cast<int>(i), static_cast<int>(j)));
  return out;
}

std::vector<CoeffFn> total_degree(long n) {
  Params p;
  p.num["m"] = n;
  return submodule_family(FamilyKind::TotalDegree, p).basis;
}

std::vector<CoeffFn> ball(long n) {
  Params p;
  p.num["alpha"] = n;
  return submodule_family(FamilyKind::Ball, p).basis;
}

long tri(long n) { return (n + 1) * (n + 2) / 2; }

/// Sum_{j=0}^{jmax} (top - n j + 1).
long layered(long top, long n, long jmax) {
  long d = 0;
  for (long j = 0; j <= jmax; ++j) d += top - n * j + 1;
  return d;
}

// ------------------------------------------------------------------ validators and grids

using Validator = std::function<void(const Params&)>;

void check_mlist(const Params& p) {
  if (p.ms.empty()) throw BadParams("missing list ms");
  for (std::size_t i = 0; i < p.ms.size(); ++i) {
    if (p.ms[i] < 0) throw BadParams("ms entries must be non-negative");
    if (i > 0 && p.ms[i] <= p.ms[i - 1]) throw BadParams("ms must be strictly increasing");
  }
}

void check_circle(const Params& p) {
  const Rational& c = p.at("c");
  const Rational& s = p.at("s");
  if (c * c + s * s != 1) throw BadParams("circle point (c,s) must satisfy c^2 + s^2 = 1");
}

void check_sign(const Params& p) {
  long e = p.integer("sign");
  if (e != 1 && e != -1) throw BadParams("sign must be 1 or -1");
}

std::vector<Rational> nat_values(Grid g, long min) {
  std::vector<Rational> v;
  for (long i = min; i <= (g == Grid::Small ? 4 : 8); ++i) v.emplace_back(i);
  return v;
}

struct GridSpec {
  std::vector<std::pair<std::string, std::function<std::vector<Rational>(Grid)>>> nums;
  bool mlist = false;
  int mlist_cap = -1;  // keep lists with every entry <= cap
  bool pt = false;
  bool circle = false;
};

std::function<std::vector<Rational>(Grid)> nats(long min = 0) {
  return [min](Grid g) { return nat_values(g, min); };
}
std::function<std::vector<Rational>(Grid)> alphas() {
  return [](Grid) { return grid_alphas(); };
}
std::function<std::vector<Rational>(Grid)> values(std::vector<Rational> v) {
  return [v](Grid) { return v; };
}

std::vector<Params> expand(const GridSpec& spec, Grid g, const Validator& validate) {
  std::vector<Params> acc{Params{}};
  for (const auto& [name, gen] : spec.nums) {
    std::vector<Params> next;
    for (const auto& base : acc)
      for (const auto& v : gen(g)) {
        Params q = base;
        q.num[name] = v;
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  if (spec.mlist) {
    std::vector<Params> next;
    for (const auto& base : acc)
      for (const auto& ms : grid_mlists(g)) {
        if (spec.mlist_cap >= 0 && ms.back() > spec.mlist_cap) continue;
        Params q = base;
        q.ms = ms;
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  if (spec.pt) {
    std::vector<Params> next;
    for (const auto& base : acc)
      for (const auto& rp : grid_polys()) {
        Params q = base;
        q.pt = rp;
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  if (spec.circle) {
    std::vector<Params> next;
    for (const auto& base : acc)
      for (auto [c, s] : {std::pair{Rational(1), Rational(0)}, std::pair{make_rational(3, 5), make_rational(4, 5)}}) {
        Params q = base;
        q.num["c"] = c;
        q.num["s"] = s;
        next.push_back(std::move(q));
      }
    acc = std::move(next);
  }
  std::vector<Params> out;
  for (auto& q : acc) {
    try {
      validate(q);
      out.push_back(std::move(q));
    } catch (const BadParams&) {
    }
  }
  return out;
}

struct Builder {
  std::vector<CatalogEntry> entries;

  CatalogEntry& add(std::string id, Series series, int space_dim, Shape shape, bool solvable, std::string doc,
                    GridSpec spec, Validator validate,
                    std::function<Gens(const Params&, bool)> build, std::function<int(const Params&)> dim) {
    CatalogEntry e;
    e.id = std::move(id);
    e.series = series;
    e.space_dim = space_dim;
    e.shape = shape;
    e.solvable = solvable;
    e.params_doc = std::move(doc);
    e.validate = validate;
    e.build = std::move(build);
    e.expected_dim = std::move(dim);
    e.grid = [spec, validate](Grid g) { return expand(spec, g, validate); };
    entries.push_back(std::move(e));
    return entries.back();
  }

  /// Entry without parameters.
  CatalogEntry& fixed(std::string id, Series series, int space_dim, Shape shape, bool solvable,
                      std::vector<std::string> gens, std::vector<std::string> verbatim = {}) {
    auto build = [space_dim, gens, verbatim](const Params&, bool verb) {
      G g(space_dim);
      for (const auto& t : (verb && !verbatim.empty()) ? verbatim : gens) g(t);
      return g.out;
    };
    const int d = static_cast<int>(gens.size());
    return add(std::move(id), series, space_dim, shape, solvable, "", GridSpec{}, [](const Params&) {}, build,
               [d](const Params&) { return d; });
  }
};

void add_planar(Builder& b) {
  auto vx = [](const Params& P) {
    Params q;
    q.pt = poly(P);
    return submodule_family(FamilyKind::Vpt, q).basis;
  };
  b.add("planar-1", Series::Planar, 2, Shape::Planar, true, "pt: p(t) with rational roots, deg >= 1",
        GridSpec{{}, false, -1, true}, [](const Params& P) { poly(P); },
        [vx](const Params& P, bool) { return G(2)("p").times(vx(P), 1).out; },
        [](const Params& P) { return 1 + poly(P).degree(); });
  b.add("planar-2", Series::Planar, 2, Shape::Planar, true, "pt: p(t) with rational roots, deg >= 1",
        GridSpec{{}, false, -1, true}, [](const Params& P) { poly(P); },
        [vx](const Params& P, bool) { return G(2)("p")("y*q").times(vx(P), 1).out; },
        [](const Params& P) { return 2 + poly(P).degree(); });
  b.add("planar-3", Series::Planar, 2, Shape::Planar, true, "n >= 0, alpha rational",
        GridSpec{{{"n", nats()}, {"alpha", alphas()}}}, [](const Params& P) { nat(P, "n"); P.at("alpha"); },
        [](const Params& P, bool) {
          G g(2);
          g("p")("x*p + " + Q(P.at("alpha")) + "*y*q");
          for (long i = 0; i <= P.integer("n"); ++i) g(fmt::format("x^{}*q", i));
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 3); });
  b.add("planar-4", Series::Planar, 2, Shape::Planar, true, "n >= 0", GridSpec{{{"n", nats()}}},
        [](const Params& P) { nat(P, "n"); },
        [](const Params& P, bool) {
          long n = P.integer("n");
          G g(2);
          g("p")(fmt::format("x*p + {}*y*q + x^{}*q", n + 1, n + 1));
          for (long i = 0; i <= n; ++i) g(fmt::format("x^{}*q", i));
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 3); });
  b.add("planar-5", Series::Planar, 2, Shape::Planar, true, "n >= 0", GridSpec{{{"n", nats()}}},
        [](const Params& P) { nat(P, "n"); },
        [](const Params& P, bool) {
          G g(2);
          g("p")("x*p")("y*q");
          for (long i = 0; i <= P.integer("n"); ++i) g(fmt::format("x^{}*q", i));
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 4); });
  b.fixed("planar-6", Series::Planar, 2, Shape::Planar, false, {"p", "2*x*p - q", "x^2*p - x*q"});
  b.fixed("planar-7", Series::Planar, 2, Shape::Planar, false, {"p", "x*p - y*q", "x^2*p - (1 + 2*x*y)*q"});
  b.fixed("planar-8", Series::Planar, 2, Shape::Planar, false, {"p", "q", "x*p", "y*q", "x^2*p", "y^2*q"});
  b.fixed("planar-9", Series::Planar, 2, Shape::Planar, false,
          {"p", "q", "x*p", "x*q", "y*p", "y*q", "x^2*p + x*y*q", "x*y*p + y^2*q"});
  b.fixed("planar-10", Series::Planar, 2, Shape::Planar, false, {"p", "q", "x*p - y*q", "x*q", "y*p"});
  b.fixed("planar-11", Series::Planar, 2, Shape::Planar, false, {"p", "q", "x*p", "x*q", "y*q", "y*p"});
  b.fixed("planar-12", Series::Planar, 2, Shape::Planar, false, {"p", "q", "x*p", "x^2*p - x*q"});
  b.add("planar-13", Series::Planar, 2, Shape::Planar, false, "n >= 0", GridSpec{{{"n", nats()}}},
        [](const Params& P) { nat(P, "n"); },
        [](const Params& P, bool) {
          long n = P.integer("n");
          G g(2);
          g("p")(fmt::format("2*x*p + {}*y*q", n))(fmt::format("x^2*p + {}*x*y*q", n));
          for (long i = 0; i <= n; ++i) g(fmt::format("x^{}*q", i));
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 4); });
  b.add("planar-14", Series::Planar, 2, Shape::Planar, false, "n >= 0", GridSpec{{{"n", nats()}}},
        [](const Params& P) { nat(P, "n"); },
        [](const Params& P, bool) {
          long n = P.integer("n");
          G g(2);
          g("p")("x*p")("y*q")(fmt::format("x^2*p + {}*x*y*q", n));
          for (long i = 0; i <= n; ++i) g(fmt::format("x^{}*q", i));
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 5); });
  b.fixed("planar-7'", Series::Planar, 2, Shape::Planar, false,
          {"x*q - y*p", "(1 + x^2 - y^2)*p + 2*x*y*q", "2*x*y*p + (1 - x^2 + y^2)*q"});
  b.fixed("planar-7''", Series::Planar, 2, Shape::Planar, false,
          {"x*q - y*p", "(1 - x^2 + y^2)*p - 2*x*y*q", "-2*x*y*p + (1 + x^2 - y^2)*q"});
  b.fixed("planar-8'", Series::Planar, 2, Shape::Planar, false,
          {"p", "q", "x*p + y*q", "x*q - y*p", "(x^2 - y^2)*p + 2*x*y*q", "-2*x*y*p + (x^2 - y^2)*q"});
}

void add_primitive(Builder& b) {
  const std::string U = "(x*p + y*q + z*r)";
  b.fixed("P1", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*p", "x*q", "x*r", "y*p", "y*q", "y*r", "z*p", "z*q", "z*r", "x*" + U, "y*" + U,
           "z*" + U});
  b.fixed("P2", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*p", "x*q", "x*r", "y*p", "y*q", "y*r", "z*p", "z*q", "z*r"});
  b.fixed("P3", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*p - z*r", "x*q", "x*r", "y*p", "y*q - z*r", "y*r", "z*p", "z*q"});
  {
    const std::string S = "(x^2 + y^2 + z^2)";
    b.fixed("P4", Series::P, 3, Shape::NoInvariantLine, false,
            {"p", "q", "r", "x*q - y*p", "x*r - z*p", "y*r - z*q", "x*p + y*q + z*r", "2*x*" + U + " - " + S + "*p",
             "2*y*" + U + " - " + S + "*q", "2*z*" + U + " - " + S + "*r"});
  }
  b.fixed("P5", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*q - y*p", "x*r - z*p", "y*r - z*q", "x*p + y*q + z*r"});
  {
    const std::string S = "(1 - x^2 - y^2 - z^2)";
    b.fixed("P6", Series::P, 3, Shape::NoInvariantLine, false,
            {"x*q - y*p", "x*r - z*p", "y*r - z*q", S + "*p + 2*x*" + U, S + "*q + 2*y*" + U,
             S + "*r + 2*z*" + U});
  }
  b.fixed("P7", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*q - y*p", "x*r - z*p", "y*r - z*q"});
  b.fixed("P8", Series::P, 3, Shape::NoInvariantLine, false,
          {"2*p - y*r", "2*q + x*r", "r", "x*p - y*q", "x*q", "y*p", "x*p + y*q + 2*z*r",
           "x*(x*p + z*r) + (x*y + 2*z)*q", "(x*y - 2*z)*p + y*(y*q + z*r)", "z*(x*p + y*q + z*r)"},
          {"2*p - y*r", "2*q + x*r", "r", "x*p - y*q", "x*q", "y*p", "x*p + y*q + 2*z*r",
           "x*(x*p + z*r) + (x*y + 2*z)*q", "(x*y - 2*z)*p + y*(y*p + z*r)", "z*(x*p + y*q + z*r)"})
      .erratum = Erratum{"(x*y - 2*z)*p + y*(y*p + z*r)", "(x*y - 2*z)*p + y*(y*q + z*r)", false, "[2*p - y*r, x*y*p + y^2*p - 2*z*p + y*z*r] = 4*y*p - y^2*r not in span", ""};
  {
    const std::string S = "(y^2 - 2*x*z)";
    b.fixed("P4'", Series::P, 3, Shape::NoInvariantLine, false,
            {"p", "q", "r", "x*p - z*r", "x*q + y*r", "y*p + z*q", "x*p + y*q + z*r", "2*z*" + U + " + " + S + "*p",
             "2*y*" + U + " - " + S + "*q", "2*x*" + U + " + " + S + "*r"});
  }
  b.fixed("P5'", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*p - z*r", "x*q + y*r", "y*p + z*q", "x*p + y*q + z*r"});
  {
    const std::string S = "(1 + x^2 + y^2 + z^2)";
    b.fixed("P6'", Series::P, 3, Shape::NoInvariantLine, false,
            {"x*q - y*p", "x*r - z*p", "y*r - z*q", S + "*p - 2*x*" + U, S + "*q - 2*y*" + U,
             S + "*r - 2*z*" + U});
  }
  for (auto [id, S] : {std::pair<const char*, const char*>{"P6''", "(y^2 - 2*x*z + 1)"},
                       std::pair<const char*, const char*>{"P6'''", "(y^2 - 2*x*z - 1)"}}) {
    const std::string s = S;
    b.fixed(id, Series::P, 3, Shape::NoInvariantLine, false,
            {"x*p - z*r", "x*q + y*r", "y*p + z*q", "2*z*" + U + " + " + s + "*p", "2*y*" + U + " - " + s + "*q",
             "2*x*" + U + " + " + s + "*r"});
  }
  b.fixed("P7'", Series::P, 3, Shape::NoInvariantLine, false,
          {"p", "q", "r", "x*p - z*r", "x*q + y*r", "y*p + z*q"});
}

// With deg p = 1 or n = 0 the x-lines form an invariant foliation.
void a_poly(const Params& P) {
  if (poly(P).degree() < 2) throw BadParams("A1, A2 need deg p >= 2");
}
void a_nat(const Params& P) { nat(P, "n", 1); }

void add_a_series(Builder& b) {
  auto vx = [](const Params& P) {
    Params q;
    q.pt = poly(P);
    return submodule_family(FamilyKind::Vpt, q).basis;
  };
  b.add("A1", Series::A, 3, Shape::NoInvariantLine, false, "pt: p(t) with rational roots, deg >= 2",
        GridSpec{{}, false, -1, true}, a_poly,
        [vx](const Params& P, bool) { return G(3)("p")("y*q - z*r")("y*r")("z*q").times(vx(P), 1).times(vx(P), 2).out; },
        [](const Params& P) { return 4 + 2 * poly(P).degree(); });
  b.add("A2", Series::A, 3, Shape::NoInvariantLine, false, "pt: p(t) with rational roots, deg >= 2",
        GridSpec{{}, false, -1, true}, a_poly,
        [vx](const Params& P, bool) {
          return G(3)("p")("y*q")("y*r")("z*q")("z*r").times(vx(P), 1).times(vx(P), 2).out;
        },
        [](const Params& P) { return 5 + 2 * poly(P).degree(); });

  // Printed with x^i p, x^i q; the C^2 factor is spanned by q and r.
  auto tail = [](G& g, long n, bool verbatim) {
    for (long i = 0; i <= n; ++i) {
      g(fmt::format(fmt::runtime(verbatim ? "x^{}*p" : "x^{}*q"), i));
      g(fmt::format(fmt::runtime(verbatim ? "x^{}*q" : "x^{}*r"), i));
    }
  };
  Erratum a_err{"x^i*p, x^i*q (i = 0..n)", "x^i*q, x^i*r (i = 0..n)", false, "[y*r, q] = -r not in span", "n=1"};
  b.add("A3", Series::A, 3, Shape::NoInvariantLine, false, "n >= 1, alpha rational",
        GridSpec{{{"n", nats(1)}, {"alpha", alphas()}}},
        [](const Params& P) {
          a_nat(P);
          P.at("alpha");
        },
        [tail](const Params& P, bool v) {
          G g(3);
          g("p")("x*p + " + Q(P.at("alpha")) + "*(y*q + z*r)")("y*q - z*r")("y*r")("z*q");
          tail(g, P.integer("n"), v);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(5 + 2 * (P.integer("n") + 1)); })
      .erratum = Erratum{a_err.verbatim, a_err.corrected, false, a_err.witness, "alpha=0,n=1"};
  b.add("A4", Series::A, 3, Shape::NoInvariantLine, false, "n >= 1", GridSpec{{{"n", nats(1)}}}, a_nat,
        [tail](const Params& P, bool v) {
          G g(3);
          g("p")("x*p")("y*q")("y*r")("z*q")("z*r");
          tail(g, P.integer("n"), v);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(6 + 2 * (P.integer("n") + 1)); })
      .erratum = a_err;
  b.add("A5", Series::A, 3, Shape::NoInvariantLine, false, "n >= 1", GridSpec{{{"n", nats(1)}}}, a_nat,
        [tail](const Params& P, bool v) {
          long n = P.integer("n");
          G g(3);
          g("p")(fmt::format("2*x*p + {}*(y*q + z*r)", n))(fmt::format("x^2*p + {}*x*(y*q + z*r)", n))("y*q - z*r")(
              "y*r")("z*q");
          tail(g, n, v);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(6 + 2 * (P.integer("n") + 1)); })
      .erratum = a_err;
  b.add("A6", Series::A, 3, Shape::NoInvariantLine, false, "n >= 1", GridSpec{{{"n", nats(1)}}}, a_nat,
        [tail](const Params& P, bool v) {
          long n = P.integer("n");
          G g(3);
          g("p")("x*p")(fmt::format("x^2*p + {}*x*(y*q + z*r)", n))("y*q")("y*r")("z*q")("z*r");
          tail(g, n, v);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(7 + 2 * (P.integer("n") + 1)); })
      .erratum = a_err;
}

void add_b_series(Builder& b) {
  b.fixed("B1", Series::B, 3, Shape::B, false, {"p", "2*x*p - q", "x^2*p - x*q + exp(-2*y)*r"},
          {"p", "2*p - q", "x^2*p - x*q + exp(-2*y)*r"})
      .erratum = Erratum{"2*p - q", "2*x*p - q", false, "[p, x^2*p - x*q + exp(-2*y)*r] = 2*x*p - q not in span", ""};
  b.add("B2", Series::B, 3, Shape::B, false, "alpha rational, alpha != 0",
        GridSpec{{{"alpha", alphas()}}},
        [](const Params& P) {
          if (P.at("alpha") == 0) throw BadParams("B2 needs alpha != 0");
        },
        [](const Params& P, bool) {
          const std::string a = Q(P.at("alpha"));
          return G(3)("p")("2*x*p + r")("x^2*p + x*r")("q")("2*y*q - " + a + "*r")("y^2*q - " + a + "*y*r").out;
        },
        [](const Params&) { return 6; });
  b.fixed("B3", Series::B, 3, Shape::B, false,
          {"p", "q", "r + x*p + 2*y*q", "x*p - y*q", "y*p", "x*q", "x^2*p + x*y*q + x*r", "x*y*p + y^2*q + y*r"});
  b.fixed("B4", Series::B, 3, Shape::B, false,
          {"p", "q", "r - x*q", "2*x*p + y*q - z*r", "x*p - y*q - 2*z*r", "x^2*p + x*y*q - (x*z + y)*r",
           "x*y*p + y^2*q + z*(y + x*z)*r", "y*p + z^2*r"},
          {"p", "q", "r - x*q", "2*x*p + y*q - z*r", "x*p - y*q - 2*z*r", "x^2*p + x*y*q + (x*z + y)*r",
           "x*y*p + y^2*q + z*(y + x*z)*r", "y*p + z^2*r"})
      .erratum = Erratum{"x^2*p + x*y*q + (x*z + y)*r", "x^2*p + x*y*q - (x*z + y)*r", false, "[p, x^2*p + x*y*q + x*z*r + y*r] = 2*x*p + y*q + z*r not in span", ""};
  b.fixed("B5", Series::B, 3, Shape::B, false, {"p", "q", "x*q", "x*p - y*q", "y*p", "x*p + y*q + r"});
  auto b6tail = [](G& g, long n) {
    g("q");
    for (long i = 1; i <= n; ++i) g(fmt::format("x^{}*q + {}*x^{}*r", i, i, i - 1));
  };
  b.add("B6", Series::B, 3, Shape::B, false, "n >= 1", GridSpec{{{"n", nats(1)}}},
        [](const Params& P) { nat(P, "n", 1); },
        [b6tail](const Params& P, bool) {
          long n = P.integer("n");
          G g(3);
          g("p")(fmt::format("2*x*p + {}*y*q + {}*z*r", n, Q(n - 2)))(
              fmt::format("x^2*p + {}*x*y*q + ({}*x*z + {}*y)*r", n, Q(n - 2), n));
          b6tail(g, n);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 4); });
  b.fixed("B7", Series::B, 3, Shape::B, false,
          {"p", "2*x*p + 2*y*q + r", "x^2*p + 2*x*y*q + (x + 2*y)*r", "q", "x*q + r", "x^2*q + 2*x*r"},
          {"p", "x*p + y*q + r", "x^2*p + (x + 2*y)*r", "q", "x*q + r", "x^2*q + 2*x*r"})
      .erratum = Erratum{"x*p + y*q + r; x^2*p + (x + 2*y)*r", "2*x*p + 2*y*q + r; x^2*p + 2*x*y*q + (x + 2*y)*r",
                         false, "[p, x^2*p + x*r + 2*y*r] = 2*x*p + r not in span", ""};
  b.add("B8", Series::B, 3, Shape::B, false, "n >= 1", GridSpec{{{"n", nats(1)}}},
        [](const Params& P) { nat(P, "n", 1); },
        [b6tail](const Params& P, bool) {
          long n = P.integer("n");
          G g(3);
          g("p")("x*p - z*r")("y*q + z*r")(fmt::format("x^2*p + {}*x*y*q + ({}*x*z + {}*y)*r", n, Q(n - 2), n));
          b6tail(g, n);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(P.integer("n") + 5); });
  b.fixed("B1'", Series::B, 3, Shape::B, false,
          {"x*q - y*p + r", "(1 + x^2 - y^2)*p + 2*x*y*q + 2*y*r", "2*x*y*p + (1 - x^2 + y^2)*q - 2*x*r"},
          {"x*p - y*q + r", "(1 + x^2 - y^2)*p + 2*x*y*q + 2*y*r", "2*x*y*p + (1 - x^2 + y^2)*q - 2*x*r"})
      .erratum = Erratum{"x*p - y*q + r", "x*q - y*p + r", false,
                         "[x*p - y*q + r, x^2*p - y^2*p + p + 2*x*y*q + 2*y*r] = x^2*p + 3*y^2*p - p + 2*x*y*q - 2*y*r "
                         "not in span",
                         ""};
  b.add("B2'", Series::B, 3, Shape::B, false, "circle point c, s with c^2 + s^2 = 1",
        GridSpec{{}, false, -1, false, true}, check_circle,
        [](const Params& P, bool) {
          const std::string c = Q(P.at("c")), s = Q(P.at("s"));
          return G(3)("p")("q")("x*p + y*q + " + c + "*r")("x*q - y*p + " + s + "*r")(
                     "(x^2 - y^2)*p + 2*x*y*q + 2*(" + c + "*x + " + s + "*y)*r")(
                     "-2*x*y*p + (x^2 - y^2)*q + 2*(" + s + "*x - " + c + "*y)*r")
              .out;
        },
        [](const Params&) { return 6; });
}

/// Generators x^i q + i x^{i-1} y^{k-1} r for i = from..to (i = 0 gives q).
void twisted_q(G& g, long from, long to, long k) {
  for (long i = from; i <= to; ++i) {
    if (i == 0)
      g("q");
    else
      g(fmt::format("x^{}*q + {}*x^{}*y^{}*r", i, i, i - 1, k - 1));
  }
}

void plain_q(G& g, long from, long to) {
  for (long i = from; i <= to; ++i) g(fmt::format("x^{}*q", i));
}

void add_c_series(Builder& b) {
  const auto r_of = [](G& g, const std::vector<CoeffFn>& fs) { g.times(fs, 2); };
  const GridSpec ms_only{{}, true};
  const GridSpec n_ms{{{"n", nats()}}, true};

  auto vm = [](FamilyKind k) {
    return [k](const Params& P) { return family_sum(k, P); };
  };
  auto vm_dim = [](FamilyKind k) {
    return [k](const Params& P) { return family_sum_dim(k, P); };
  };

  // C1: planar 6 with V_m.
  {
    auto fam = vm(FamilyKind::Vm);
    auto fd = vm_dim(FamilyKind::Vm);
    b.add("C1a", Series::C, 3, Shape::C1, false, "ms: 0 <= m_1 < ... < m_k", ms_only, check_mlist,
          [=](const Params& P, bool) {
            G g(3);
            g("p")("2*x*p - q")("x^2*p - x*q");
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 3 + fd(P); });
    b.add("C1b", Series::C, 3, Shape::C2, false, "ms: 0 <= m_1 < ... < m_k", ms_only, check_mlist,
          [=](const Params& P, bool) {
            G g(3);
            g("p")("2*x*p - q")("x^2*p - x*q")("z*r");
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 4 + fd(P); });
    b.add("C1c", Series::C, 3, Shape::C1, false, "ms: 0 <= m_1 < ... < m_k", ms_only, check_mlist,
          [=](const Params& P, bool) {
            G g(3);
            g("p")("2*x*p - q")("x^2*p - x*q + exp(-2*y)*r");
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 3 + fd(P); });
  }
  // C2: planar 7 with V_{n,m}.
  {
    auto fam = vm(FamilyKind::Vnm);
    auto fd = vm_dim(FamilyKind::Vnm);
    auto val = [](const Params& P) {
      nat(P, "n");
      check_mlist(P);
    };
    GridSpec spec{{{"n", nats()}}, true, 3};
    b.add("C2a", Series::C, 3, Shape::C1, false, "n >= 0, ms", spec, val,
          [=](const Params& P, bool) {
            long n = P.integer("n");
            G g(3);
            g("p")(fmt::format("2*x*p - 2*y*q + {}*z*r", n))(fmt::format("x^2*p - (1 + 2*x*y)*q + {}*x*z*r", n));
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 3 + fd(P); });
    b.add("C2b", Series::C, 3, Shape::C2, false, "n >= 0, ms", spec, val,
          [=](const Params& P, bool) {
            long n = P.integer("n");
            G g(3);
            g("p")("x*p - y*q")("z*r")(fmt::format("x^2*p - (1 + 2*x*y)*q + {}*x*z*r", n));
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 4 + fd(P); });
    b.add("C2c", Series::C, 3, Shape::C1, false, "ms", GridSpec{{}, true, 3}, check_mlist,
          [=](const Params& P, bool) {
            Params q = P;
            q.num["n"] = 0;
            G g(3);
            g("p")("x*p - y*q + r")("x^2*p - (1 + 2*x*y)*q + 2*x*r");
            r_of(g, fam(q));
            return g.out;
          },
          [=](const Params& P) {
            Params q = P;
            q.num["n"] = 0;
            return 3 + fd(q);
          });
  }
  // C3: planar 8.
  {
    auto val = [](const Params& P) {
      nat(P, "n");
      nat(P, "m");
    };
    GridSpec spec{{{"n", nats()}, {"m", nats()}}};
    auto dim = [](long extra) {
      return [extra](const Params& P) { return static_cast<int>(extra + (P.integer("n") + 1) * (P.integer("m") + 1)); };
    };
    const Erratum err{"x^2*p + n*x*z*x ... x^i*y^j", "x^2*p + n*x*z*r ... x^i*y^j*r", false, "expected a vector field",
                      "m=0,n=0"};
    b.add("C3a", Series::C, 3, Shape::C1, false, "n, m >= 0", spec, val,
          [](const Params& P, bool v) {
            long n = P.integer("n"), m = P.integer("m");
            G g(3);
            g("p")(fmt::format("2*x*p + {}*z*r", n))(fmt::format(fmt::runtime(v ? "x^2*p + {}*x*z*x" : "x^2*p + {}*x*z*r"), n))("q")(
                fmt::format("2*y*q + {}*z*r", m))(fmt::format("y^2*q + {}*y*z*r", m));
            for (long i = 0; i <= n; ++i)
              for (long j = 0; j <= m; ++j) g(fmt::format(fmt::runtime(v ? "x^{}*y^{}" : "x^{}*y^{}*r"), i, j));
            return g.out;
          },
          dim(6))
        .erratum = err;
    b.add("C3b", Series::C, 3, Shape::C2, false, "n, m >= 0", spec, val,
          [](const Params& P, bool v) {
            long n = P.integer("n"), m = P.integer("m");
            G g(3);
            g("p")("x*p")(fmt::format(fmt::runtime(v ? "x^2*p + {}*x*z*x" : "x^2*p + {}*x*z*r"), n))("q")("y*q")(
                fmt::format("y^2*q + {}*y*z*r", m))("z*r");
            for (long i = 0; i <= n; ++i)
              for (long j = 0; j <= m; ++j) g(fmt::format(fmt::runtime(v ? "x^{}*y^{}" : "x^{}*y^{}*r"), i, j));
            return g.out;
          },
          dim(7))
        .erratum = err;
    b.fixed("C3c", Series::C, 3, Shape::C1, false, {"p", "x*p", "x^2*p + x*r", "q", "y*q", "y^2*q + y*r", "r"});
  }
  // C4: planar 9.
  {
    GridSpec spec{{{"n", nats()}}};
    auto val = [](const Params& P) { nat(P, "n"); };
    b.add("C4a", Series::C, 3, Shape::C1, false, "n >= 0", spec, val,
          [](const Params& P, bool) {
            long n = P.integer("n");
            G g(3);
            const std::string U = fmt::format("(x*p + y*q + {}*z*r)", n);
            g("p")("q")("x*p + y*q + " + Q(make_rational(2 * n, 3)) + "*z*r")("x*p - y*q")("y*p")("x*q")("x*" + U)(
                "y*" + U);
            g.times(total_degree(n), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(8 + tri(P.integer("n"))); });
    b.add("C4b", Series::C, 3, Shape::C2, false, "n >= 0", spec, val,
          [](const Params& P, bool v) {
            long n = P.integer("n");
            G g(3);
            const std::string U = fmt::format("(x*p + y*q + {}*z*r)", n);
            g("p")("q")("x*p")("x*q")("y*p")("y*q");
            if (!v) g("z*r");
            g("x*" + U)("y*" + U);
            g.times(total_degree(n), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(9 + tri(P.integer("n"))); })
        .erratum = Erratum{"p, q, xp, xq, yp, yq, x(xp+yq+nzr), y(xp+yq+nzr), ...", "adds z*r", false,
                           "[p, x^2*p + x*y*q + x*z*r] = 2*x*p + y*q + z*r not in span", "n=1"};
    b.fixed("C4c", Series::C, 3, Shape::C1, false,
            {"p", "q", "x*p", "y*p", "x*q", "y*q", "x*(x*p + y*q + r)", "y*(x*p + y*q + r)", "r"});
  }
  // C5, C6: planar 10, 11.
  {
    GridSpec spec{{{"n", nats()}}};
    auto val = [](const Params& P) { nat(P, "n"); };
    const Erratum bars{"x^iy^jr | | 0 <= i+j <= n", "x^iy^jr | 0 <= i+j <= n", true, "", ""};
    b.add("C5a", Series::C, 3, Shape::C1, false, "n >= 0", spec, val,
          [](const Params& P, bool) {
            G g(3);
            g("p")("q")("x*p - y*q")("y*p")("x*q");
            g.times(total_degree(P.integer("n")), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(5 + tri(P.integer("n"))); })
        .erratum = bars;
    b.add("C5b", Series::C, 3, Shape::C2, false, "n >= 0", spec, val,
          [](const Params& P, bool) {
            G g(3);
            g("p")("q")("x*p - y*q")("y*p")("x*q")("z*r");
            g.times(total_degree(P.integer("n")), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(6 + tri(P.integer("n"))); })
        .erratum = bars;
    b.fixed("C5c", Series::C, 3, Shape::C1, false, {"p", "q + 2*x*r", "x*q + x^2*r", "y*p + y^2*r", "x*p - y*q", "r"});
    b.add("C6a", Series::C, 3, Shape::C1, false, "n >= 0, alpha rational", GridSpec{{{"n", nats()}, {"alpha", alphas()}}},
          [](const Params& P) {
            nat(P, "n");
            P.at("alpha");
          },
          [](const Params& P, bool) {
            G g(3);
            g("p")("q")("x*p - y*q")("x*p + y*q + " + Q(P.at("alpha")) + "*z*r")("y*p")("x*q");
            g.times(total_degree(P.integer("n")), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(6 + tri(P.integer("n"))); })
        .erratum = bars;
    b.add("C6b", Series::C, 3, Shape::C2, false, "n >= 0", spec, val,
          [](const Params& P, bool) {
            G g(3);
            g("p")("q")("x*p - y*q")("x*p + y*q")("y*p")("x*q")("z*r");
            g.times(total_degree(P.integer("n")), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(7 + tri(P.integer("n"))); })
        .erratum = bars;
    b.fixed("C6c", Series::C, 3, Shape::C1, false,
            {"p", "q + 2*x*r", "x*q + x^2*r", "y*p + y^2*r", "x*p - y*q", "x*p + y*q + 2*z*r", "r"},
            {"p", "q + 2*x*r", "x*q + x^2*r", "y*p + y^2*r", "x*p - y*p", "x*p + y*q + 2*z*r", "r"})
        .erratum = Erratum{"x*p - y*p", "x*p - y*q", false,
                           "[q + 2*x*r, x*p - y*p] = -p - 2*x*r + 2*y*r not in span", ""};
  }
  // C7: planar 12 with V_{alpha,m} in the field-realization convention.
  {
    auto fam = vm(FamilyKind::ValphaDual);
    auto fd = vm_dim(FamilyKind::ValphaDual);
    GridSpec spec{{{"alpha", alphas()}}, true};
    auto val = [](const Params& P) {
      P.at("alpha");
      check_mlist(P);
    };
    b.add("C7a", Series::C, 3, Shape::C1, false, "alpha rational, ms", spec, val,
          [=](const Params& P, bool) {
            const std::string a = Q(P.at("alpha"));
            G g(3);
            g("p")("q")("2*x*p + " + a + "*z*r")("x^2*p - x*q + " + a + "*x*z*r");
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 4 + fd(P); });
    b.add("C7b", Series::C, 3, Shape::C2, false, "alpha rational, ms", spec, val,
          [=](const Params& P, bool) {
            const std::string a = Q(P.at("alpha"));
            G g(3);
            g("p")("q")("x*p")("x^2*p - x*q + " + a + "*x*z*r")("z*r");
            r_of(g, fam(P));
            return g.out;
          },
          [=](const Params& P) { return 5 + fd(P); });
    auto with_alpha = [](const Params& P, long a) {
      Params q = P;
      q.num["alpha"] = a;
      return q;
    };
    b.add("C7c", Series::C, 3, Shape::C1, false, "ms with m_1 > 0", ms_only,
          [](const Params& P) {
            check_mlist(P);
            if (P.ms.front() == 0) throw BadParams("C7c needs m_1 > 0");
          },
          [=](const Params& P, bool) {
            G g(3);
            g("p")("q")("2*x*p + r")("x^2*p - x*q + x*r");
            r_of(g, fam(with_alpha(P, 0)));
            return g.out;
          },
          [=](const Params& P) { return 4 + fd(with_alpha(P, 0)); });
    // Printed V_{2,m} reads e^{(m-2)y} under the field convention; closure needs e^{(m+2)y}.
    b.add("C7d", Series::C, 3, Shape::C1, false, "ms", ms_only, check_mlist,
          [=](const Params& P, bool v) {
            G g(3);
            g("p")("q")("x*p - z*r")("x^2*p - x*q - (1 + 2*x*z)*r");
            r_of(g, fam(with_alpha(P, v ? 2 : -2)));
            return g.out;
          },
          [=](const Params& P) { return 4 + fd(with_alpha(P, -2)); })
        .erratum = Erratum{"f in V_{2,m} = <x^i e^{(m-2)y}>", "f in <x^i e^{(m+2)y}>", false,
                           "[x^2*p - x*q - 2*x*z*r - r, exp(-2*y)*r] = 4*x*exp(-2*y)*r not in span", "ms=0"};
  }
  // C8: planar 13 with n = 0.
  {
    auto fam = [](const Params& P) {
      Params q;
      q.num["m"] = P.at("m");
      q.pt = P.pt;
      return submodule_family(FamilyKind::XiVpt, q).basis;
    };
    GridSpec spec{{{"m", nats()}}, false, -1, true};
    auto val = [](const Params& P) {
      nat(P, "m");
      poly(P);
    };
    b.add("C8a", Series::C, 3, Shape::C1, false, "m >= 0, pt", spec, val,
          [=](const Params& P, bool) {
            long m = P.integer("m");
            G g(3);
            g("p")(fmt::format("2*x*p + {}*z*r", m))(fmt::format("x^2*p + {}*x*z*r", m))("q");
            g.times(fam(P), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(4 + (P.integer("m") + 1) * poly(P).degree()); });
    b.add("C8b", Series::C, 3, Shape::C2, false, "m >= 0, pt", spec, val,
          [=](const Params& P, bool) {
            long m = P.integer("m");
            G g(3);
            g("p")("x*p")(fmt::format("x^2*p + {}*x*z*r", m))("q")("z*r");
            g.times(fam(P), 2);
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(5 + (P.integer("m") + 1) * poly(P).degree()); });
    b.add("C8c", Series::C, 3, Shape::C1, false, "pt", GridSpec{{}, false, -1, true}, [](const Params& P) { poly(P); },
          [](const Params& P, bool) {
            Params q;
            q.pt = poly(P);
            q.num["axis"] = 1;
            G g(3);
            g("p")("2*x*p + r")("x^2*p + x*r")("q");
            g.times(submodule_family(FamilyKind::Vpt, q).basis, 2);
            return g.out;
          },
          [](const Params& P) { return 4 + poly(P).degree(); });
  }
  // C9: planar 13 with n >= 1.
  {
    auto val_nmp = [](const Params& P) {
      long n = nat(P, "n", 1), m = nat(P, "m"), p = nat(P, "p");
      if (p * n > m) throw BadParams("needs p <= m/n");
    };
    GridSpec spec{{{"n", nats(1)}, {"m", nats()}, {"p", nats()}}};
    b.add("C9a", Series::C, 3, Shape::C1, false, "n >= 1, m >= 0, 0 <= p <= m/n", spec, val_nmp,
          [](const Params& P, bool) {
            long n = P.integer("n"), m = P.integer("m"), p = P.integer("p");
            G g(3);
            g("p")(fmt::format("2*x*p + {}*y*q + {}*z*r", n, m))(fmt::format("x^2*p + {}*x*y*q + {}*x*z*r", n, m));
            plain_q(g, 0, n);
            g.times(monomials(m, n, p), 2);
            return g.out;
          },
          [](const Params& P) {
            long n = P.integer("n");
            return static_cast<int>(3 + (n + 1) + layered(P.integer("m"), n, P.integer("p")));
          });
    b.add("C9b", Series::C, 3, Shape::C2, false, "n >= 1, m >= 0, 0 <= p <= m/n", spec, val_nmp,
          [](const Params& P, bool) {
            long n = P.integer("n"), m = P.integer("m"), p = P.integer("p");
            G g(3);
            g("p")(fmt::format("2*x*p + {}*y*q", n))(fmt::format("x^2*p + {}*x*y*q + {}*x*z*r", n, m));
            plain_q(g, 0, n);
            g("z*r");
            g.times(monomials(m, n, p), 2);
            return g.out;
          },
          [](const Params& P) {
            long n = P.integer("n");
            return static_cast<int>(4 + (n + 1) + layered(P.integer("m"), n, P.integer("p")));
          });
    b.add("C9c", Series::C, 3, Shape::C1, false, "n >= 1", GridSpec{{{"n", nats(1)}}},
          [](const Params& P) { nat(P, "n", 1); },
          [](const Params& P, bool) {
            long n = P.integer("n");
            G g(3);
            g("p")(fmt::format("2*x*p + {}*y*q", n))(fmt::format("x^2*p + {}*x*y*q + x*r", n));
            plain_q(g, 0, n);
            g("r");
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(P.integer("n") + 5); });

    // Printed index ranges keep only the top layer of V_{n,m,p} with m = kn - 2.
    auto head = [](G& g, long n, long k) {
      g("p")(fmt::format("2*x*p + {}*y*q + {}*z*r", n, Q(k * n - 2)))(
          fmt::format("x^2*p + {}*x*y*q + ({}*x*z + {}*y^{})*r", n, Q(k * n - 2), Q(make_rational(n, k)), k));
    };
    auto body = [](G& g, long n, long k, long jmax, bool v, long verbatim_imax) {
      if (v) {
        for (long j = 0; j <= jmax; ++j)
          for (long i = 0; i <= verbatim_imax; ++i) g(fmt::format("x^{}*y^{}*r", i, j));
      } else {
        g.times(monomials(k * n - 2, n, jmax), 2);
      }
    };
    auto body_dim = [](long n, long k, long jmax) { return layered(k * n - 2, n, jmax); };
    b.add("C9d", Series::C, 3, Shape::C1, false, "n >= 1, k >= 2", GridSpec{{{"n", nats(1)}, {"k", nats(2)}}},
          [](const Params& P) {
            nat(P, "n", 1);
            nat(P, "k", 2);
          },
          [=](const Params& P, bool v) {
            long n = P.integer("n"), k = P.integer("k");
            G g(3);
            head(g, n, k);
            twisted_q(g, 0, n, k);
            body(g, n, k, k - 2, v, 2 * n - 2);
            return g.out;
          },
          [=](const Params& P) {
            long n = P.integer("n"), k = P.integer("k");
            return static_cast<int>(3 + (n + 1) + body_dim(n, k, k - 2));
          })
        .erratum = Erratum{"x^iy^jr, 0 <= i <= 2n-2, 0 <= j <= k-2", "x^iy^jr, 0 <= j <= k-2, 0 <= i <= (k-j)n-2",
                           false, "[x^2*p + x*y*q + 1/3*y^3*r + x*z*r, r] = -x*r not in span", "k=3,n=1"};
    b.add("C9e", Series::C, 3, Shape::C1, false, "n >= 2, k >= 1", GridSpec{{{"n", nats(2)}, {"k", nats(1)}}},
          [](const Params& P) {
            nat(P, "n", 2);
            nat(P, "k", 1);
          },
          [=](const Params& P, bool v) {
            long n = P.integer("n"), k = P.integer("k");
            G g(3);
            head(g, n, k);
            plain_q(g, 0, n - 1);
            twisted_q(g, n, n, k);
            body(g, n, k, k - 1, v, n - 2);
            return g.out;
          },
          [=](const Params& P) {
            long n = P.integer("n"), k = P.integer("k");
            return static_cast<int>(3 + (n + 1) + body_dim(n, k, k - 1));
          })
        .erratum = Erratum{"x^iy^jr, 0 <= i <= n-2, 0 <= j <= k-1", "x^iy^jr, 0 <= j <= k-1, 0 <= i <= (k-j)n-2",
                           false, "[x^2*p + 2*x*y*q + 2*x*z*r + y^2*r, r] = -2*x*r not in span", "k=2,n=2"};
    b.fixed("C9f", Series::C, 3, Shape::C1, false,
            {"p", "2*x*p + y*q", "x^2*p + x*y*q + (x + 1/2*y^2)*r", "q", "x*q + y*r", "r"});
    b.fixed("C9g", Series::C, 3, Shape::C1, false,
            {"p", "x*p + y*q", "x^2*p + 2*x*y*q + (x + y)*r", "q", "x*q", "x^2*q + x*r", "r"});

    // C10: planar 14.
    auto val_10 = [](const Params& P) {
      long n = nat(P, "n"), m = nat(P, "m"), k = nat(P, "k");
      P.at("beta");
      if (n * k > m) throw BadParams("needs k <= m/n");
    };
    GridSpec spec10{{{"n", nats()}, {"m", nats()}, {"k", nats()}, {"beta", values({Rational(0), Rational(1), make_rational(1, 2)})}}};
    b.add("C10a", Series::C, 3, Shape::C1, false, "n, m >= 0, 0 <= k <= m/n, beta rational", spec10, val_10,
          [](const Params& P, bool) {
            long n = P.integer("n"), m = P.integer("m"), k = P.integer("k");
            const Rational& beta = P.at("beta");
            G g(3);
            g("p")("2*x*p + " + Q(m - n * beta) + "*z*r")("y*q + " + Q(beta) + "*z*r")(
                fmt::format("x^2*p + {}*x*y*q + {}*x*z*r", n, m));
            plain_q(g, 0, n);
            g.times(monomials(m, n, k), 2);
            return g.out;
          },
          [](const Params& P) {
            long n = P.integer("n");
            return static_cast<int>(4 + (n + 1) + layered(P.integer("m"), n, P.integer("k")));
          });
    auto val_10b = [](const Params& P) {
      long n = nat(P, "n"), m = nat(P, "m"), k = nat(P, "k");
      if (n * k > m) throw BadParams("needs k <= m/n");
    };
    b.add("C10b", Series::C, 3, Shape::C2, false, "n, m >= 0, 0 <= k <= m/n",
          GridSpec{{{"n", nats()}, {"m", nats()}, {"k", nats()}}}, val_10b,
          [](const Params& P, bool) {
            long n = P.integer("n"), m = P.integer("m"), k = P.integer("k");
            G g(3);
            g("p")("x*p")("y*q")(fmt::format("x^2*p + {}*x*y*q + {}*x*z*r", n, m));
            plain_q(g, 0, n);
            g("z*r");
            g.times(monomials(m, n, k), 2);
            return g.out;
          },
          [](const Params& P) {
            long n = P.integer("n");
            return static_cast<int>(5 + (n + 1) + layered(P.integer("m"), n, P.integer("k")));
          });
    b.add("C10c", Series::C, 3, Shape::C1, false, "n >= 0", GridSpec{{{"n", nats()}}},
          [](const Params& P) { nat(P, "n"); },
          [](const Params& P, bool) {
            long n = P.integer("n");
            G g(3);
            g("p")("x*p")("y*q")(fmt::format("x^2*p + {}*x*y*q + x*r", n));
            plain_q(g, 0, n);
            g("r");
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(P.integer("n") + 6); });
    b.add("C10d", Series::C, 3, Shape::C1, false, "k >= 1", GridSpec{{{"k", nats(1)}}},
          [](const Params& P) { nat(P, "k", 1); },
          [](const Params& P, bool) {
            long k = P.integer("k");
            G g(3);
            g("p")("x*p")("y*q")("x^2*p + x*r")("q")("r");
            for (long j = 1; j <= k; ++j) g(fmt::format("y^{}*r", j));
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(P.integer("k") + 6); });
    b.add("C10e", Series::C, 3, Shape::C1, false, "k >= 0", GridSpec{{{"k", nats()}}},
          [](const Params& P) { nat(P, "k"); },
          [](const Params& P, bool) {
            long k = P.integer("k");
            G g(3);
            g("p")("x*p")(fmt::format("y*q + {}*z*r + y^{}*r", k + 1, k + 1))("x^2*p")("q")("r");
            for (long j = 1; j <= k; ++j) g(fmt::format("y^{}*r", j));
            return g.out;
          },
          [](const Params& P) { return static_cast<int>(P.integer("k") + 6); });
    b.add("C10f", Series::C, 3, Shape::C1, false, "n >= 1, k >= 2", GridSpec{{{"n", nats(1)}, {"k", nats(2)}}},
          [](const Params& P) {
            nat(P, "n", 1);
            nat(P, "k", 2);
          },
          [=](const Params& P, bool v) {
            long n = P.integer("n"), k = P.integer("k");
            G g(3);
            g("p")(v ? "x*p - y*q" : "x*p - z*r")(fmt::format("y*q + {}*z*r", k))(
                fmt::format("x^2*p + {}*x*y*q + ({}*x*z + {}*y^{})*r", n, Q(k * n - 2), Q(make_rational(n, k)), k));
            twisted_q(g, 0, n, k);
            body(g, n, k, k - 2, v, 2 * n - 2);
            return g.out;
          },
          [=](const Params& P) {
            long n = P.integer("n"), k = P.integer("k");
            return static_cast<int>(4 + (n + 1) + body_dim(n, k, k - 2));
          })
        .erratum = Erratum{"x*p - y*q; x^iy^jr, 0 <= i <= 2n-2, 0 <= j <= k-2",
                           "x*p - z*r; x^iy^jr, 0 <= j <= k-2, 0 <= i <= (k-j)n-2", false, "[p, x^2*p + x*y*q + 1/2*y^2*r] = 2*x*p + y*q not in span", "k=2,n=1"};
    b.add("C10g", Series::C, 3, Shape::C1, false, "n >= 2, k >= 1", GridSpec{{{"n", nats(2)}, {"k", nats(1)}}},
          [](const Params& P) {
            nat(P, "n", 2);
            nat(P, "k", 1);
          },
          [=](const Params& P, bool v) {
            long n = P.integer("n"), k = P.integer("k");
            G g(3);
            g("p")(v ? "x*p - y*q" : "x*p - z*r")(fmt::format("y*q + {}*z*r", k))(
                fmt::format("x^2*p + {}*x*y*q + ({}*x*z + {}*y^{})*r", n, Q(k * n - 2), Q(make_rational(n, k)), k));
            plain_q(g, 0, n - 1);
            twisted_q(g, n, n, k);
            body(g, n, k, k - 1, v, n - 2);
            return g.out;
          },
          [=](const Params& P) {
            long n = P.integer("n"), k = P.integer("k");
            return static_cast<int>(4 + (n + 1) + body_dim(n, k, k - 1));
          })
        .erratum = Erratum{"x*p - y*q; x^iy^jr, 0 <= i <= n-2, 0 <= j <= k-1",
                           "x*p - z*r; x^iy^jr, 0 <= j <= k-1, 0 <= i <= (k-j)n-2", false, "[p, x^2*p + 2*x*y*q + 2*y*r] = 2*x*p + 2*y*q not in span", "k=1,n=2"};
  }
}

void add_real_c(Builder& b) {
  auto fam = [](const Params& P) {
    return family_sum(P.integer("sign") > 0 ? FamilyKind::LegendrePlus : FamilyKind::LegendreMinus, P);
  };
  auto fd = [](const Params& P) {
    return family_sum_dim(P.integer("sign") > 0 ? FamilyKind::LegendrePlus : FamilyKind::LegendreMinus, P);
  };
  GridSpec spec{{{"sign", values({Rational(1), Rational(-1)})}}, true, 2};
  auto val = [](const Params& P) {
    check_sign(P);
    check_mlist(P);
  };
  auto head = [](G& g, long e, bool twisted) {
    const std::string s = Q(e);
    g(twisted ? "x*q - y*p + r" : "x*q - y*p");
    g("(" + s + " + x^2 - y^2)*p + 2*x*y*q" + (twisted ? " + 2*y*r" : ""));
    g("2*x*y*p + (" + s + " - x^2 + y^2)*q" + (twisted ? " - 2*x*r" : ""));
  };
  b.add("C2a'", Series::C, 3, Shape::C1, false, "sign = +-1, ms (Legendre degrees)", spec, val,
        [=](const Params& P, bool) {
          G g(3);
          head(g, P.integer("sign"), false);
          g.times(fam(P), 2);
          return g.out;
        },
        [=](const Params& P) { return 3 + fd(P); });
  b.add("C2b'", Series::C, 3, Shape::C2, false, "sign = +-1, ms (Legendre degrees)", spec, val,
        [=](const Params& P, bool) {
          G g(3);
          head(g, P.integer("sign"), false);
          g("z*r");
          g.times(fam(P), 2);
          return g.out;
        },
        [=](const Params& P) { return 4 + fd(P); })
      .erratum = Erratum{"zr f(x,y)r", "zr, f(x,y)r", true, "", ""};
  b.add("C2c'", Series::C, 3, Shape::C1, false, "sign = +-1, ms (Legendre degrees)", spec, val,
        [=](const Params& P, bool) {
          G g(3);
          head(g, P.integer("sign"), true);
          g.times(fam(P), 2);
          return g.out;
        },
        [=](const Params& P) { return 3 + fd(P); });
  GridSpec nspec{{{"n", nats()}}};
  auto nval = [](const Params& P) { nat(P, "n"); };
  b.add("C3a'", Series::C, 3, Shape::C1, false, "n >= 0", nspec, nval,
        [](const Params& P, bool) {
          long n = P.integer("n");
          G g(3);
          g("p")("q")(fmt::format("x*p + y*q + {}*z*r", n))("x*q - y*p")(
              fmt::format("(x^2 - y^2)*p + 2*x*y*q + {}*x*z*r", 2 * n))(
              fmt::format("-2*x*y*p + (x^2 - y^2)*q - {}*y*z*r", 2 * n));
          g.times(ball(n), 2);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(6 + (P.integer("n") + 1) * (P.integer("n") + 1)); })
      .erratum = Erratum{"x^iy^j(x^2+y^2)^k", "x^iy^j(x^2+y^2)^k r", true, "", ""};
  b.add("C3b'", Series::C, 3, Shape::C2, false, "n >= 0", nspec, nval,
        [](const Params& P, bool) {
          long n = P.integer("n");
          G g(3);
          g("p")("q")("x*p + y*q")("x*q - y*p")(fmt::format("(x^2 - y^2)*p + 2*x*y*q + {}*x*z*r", 2 * n))(
              fmt::format("-2*x*y*p + (x^2 - y^2)*q - {}*y*z*r", 2 * n))("z*r");
          g.times(ball(n), 2);
          return g.out;
        },
        [](const Params& P) { return static_cast<int>(7 + (P.integer("n") + 1) * (P.integer("n") + 1)); })
      .erratum = Erratum{"x^iy^j(x^2+y^2)^k", "x^iy^j(x^2+y^2)^k r", true, "", ""};
  b.add("C3c'", Series::C, 3, Shape::C1, false, "circle point c, s", GridSpec{{}, false, -1, false, true},
        check_circle,
        [](const Params& P, bool) {
          const std::string c = Q(P.at("c")), s = Q(P.at("s"));
          return G(3)("p")("q")("r")("x*p + y*q")("x*q - y*p")(
                     "(x^2 - y^2)*p + 2*x*y*q + 2*(" + c + "*x + " + s + "*y)*r")(
                     "-2*x*y*p + (x^2 - y^2)*q + 2*(" + s + "*x - " + c + "*y)*r")
              .out;
        },
        [](const Params&) { return 7; });
}

void add_d_series(Builder& b) {
  std::vector<CatalogEntry> planar;
  for (const auto& e : b.entries)
    if (e.series == Series::Planar) planar.push_back(e);
  for (const auto& p : planar) {
    CatalogEntry d = p;
    d.id = "D" + p.id.substr(std::string("planar-").size());
    d.series = Series::D;
    d.space_dim = 3;
    d.shape = Shape::D;
    d.solvable = false;
    d.erratum.reset();
    auto inner = p.build;
    d.build = [inner](const Params& P, bool v) {
      Gens out;
      for (const auto& x : inner(P, v)) out.push_back(x.embedded(3));
      G g(3);
      g("r")("z*r")("z^2*r");
      out.insert(out.end(), g.out.begin(), g.out.end());
      return out;
    };
    auto pd = p.expected_dim;
    d.expected_dim = [pd](const Params& P) { return pd(P) + 3; };
    b.entries.push_back(std::move(d));
  }
}

std::vector<CatalogEntry> make_catalog() {
  Builder b;
  add_planar(b);
  add_primitive(b);
  add_a_series(b);
  add_b_series(b);
  add_c_series(b);
  add_real_c(b);
  add_d_series(b);
  return std::move(b.entries);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& find_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UnknownEntry("unknown catalog entry '" + std::string(id) + "'");
}

std::vector<VectorField> construct_entry(std::string_view id, const Params& params, bool verbatim) {
  const CatalogEntry& e = find_entry(id);
  e.validate(params);
  return e.build(params, verbatim);
}

std::vector<VectorField> dseries_lift(std::string_view planar_id, const Params& params) {
  const CatalogEntry& e = find_entry(planar_id);
  if (e.series != Series::Planar) throw UnknownEntry("'" + std::string(planar_id) + "' is not a planar entry");
  return construct_entry("D" + std::string(planar_id.substr(std::string("planar-").size())), params);
}

}  // namespace lievf
