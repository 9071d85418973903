#pragma once
// Big integers and rationals come straight from GMP's C++ layer.
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

// thrown for violated preconditions; the C layer maps it to SKEIN_E_DOMAIN
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("division by zero");
  return Rational(1) / q;
}
inline std::string to_str(const Integer& z) { return z.get_str(); }
inline std::string to_str(const Rational& q) { return q.get_str(); }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long lcm_long(long a, long b);
long gcd_long(long a, long b);

}  // namespace skein
