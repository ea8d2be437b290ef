#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lievf {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational make_rational(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Lowest-terms text: "a" for integers, "a/b" with b > 0 otherwise.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Integer value of q; throws std::domain_error if q is not an integer that fits in a long.
long to_long(const Rational& q);

Integer binomial(long n, long k);

using RationalVector = std::vector<Rational>;

}  // namespace lievf
