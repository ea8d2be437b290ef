#include "lievf/rational.hpp"

#include <climits>
#include <stdexcept>

namespace lievf {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer dn{std::string(den)};
  if (dn == 0) throw bad();
  Rational q{Integer(n), dn};
  q.canonicalize();
  return q;
}

long to_long(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::domain_error("not a machine integer: " + to_string(q));
  return q.get_num().get_si();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace lievf
