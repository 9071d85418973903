#pragma once
#include <string>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// Phi_n as an integer polynomial in x, by dividing x^n - 1 by Phi_d, d | n, d < n.
IntPoly cyclotomic_poly(long n);
long euler_phi(long n);

// Element of Q(zeta_N) in the power basis of Q[x]/Phi_N.  Stored as integer
// numerators over one positive common denominator, reduced.
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(long order);  // zero of Q(zeta_order)
  CycNum(long order, const Rational& q);
  static CycNum rational(const Rational& q, long order = 1) { return CycNum(order, q); }
  // zeta_order^k, any integer k
  static CycNum zeta(long order, long k = 1);
  static CycNum from_coords(long order, const std::vector<Rational>& coords);

  long order() const { return n_; }
  std::vector<Rational> coords() const;
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // re-express in Q(zeta_m), m a multiple of order()
  CycNum lift(long m) const;
  // the automorphism zeta -> zeta^j, gcd(j, order) = 1
  CycNum galois(long j) const;
  CycNum inv() const;
  CycNum pow(long e) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o) { return *this *= o.inv(); }
  CycNum operator-() const;
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  // "z^k" power-basis sum, e.g. "1/2 + z^3" (z = zeta_N)
  std::string str() const;

 private:
  void normalize();
  static CycNum mul_same(const CycNum& a, const CycNum& b);

  long n_;
  std::vector<Integer> num_;  // length phi(n_)
  Integer den_;
};

inline bool is_zero(const CycNum& c) { return c.is_zero(); }
inline CycNum inverse(const CycNum& c) { return c.inv(); }
inline std::string to_str(const CycNum& c) { return c.str(); }

// A := zeta
CycNum laurent_eval(const LaurentPoly& p, const CycNum& zeta);
CycNum laurent_eval(const QLaurent& p, const CycNum& zeta);

}  // namespace skein
