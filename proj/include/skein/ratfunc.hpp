#pragma once
#include <string>
#include <vector>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

// Element of Q(A).  num is a Laurent polynomial over Q, den an ordinary
// polynomial in A with constant term 1, and gcd(num, den) = 1 after clearing
// the monomial part.  Polynomial values (den == 1) take a cheap path.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const QLaurent& num) : num_(num), den_(1) {}  // NOLINT
  RatFunc(QLaurent&& num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(const LaurentPoly& num) : num_(to_q(num)), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(Rational(c)), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(const QLaurent& num, const QLaurent& den);

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero_fn() const { return num_.is_zero_poly(); }
  bool is_laurent() const {
    if (!den_.is_monomial()) return false;
    auto& [e, c] = *den_.terms().begin();
    return e == 0 && c == 1;
  }

  RatFunc inv() const;
  RatFunc operator-() const { RatFunc r = *this; r.num_ = -r.num_; return r; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  RatFunc& operator+=(const RatFunc& o) {
    if (is_laurent() && o.is_laurent()) {
      num_ += o.num_;
      return *this;
    }
    return *this = *this + o;
  }
  RatFunc& operator-=(const RatFunc& o) {
    if (is_laurent() && o.is_laurent()) {
      num_ -= o.num_;
      return *this;
    }
    return *this = *this - o;
  }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // A := r; throws DomainError if the denominator vanishes there
  Rational eval(const Rational& r) const;

  // "A^2 - A^-2", or "(num)/(den)" when there is a real denominator
  std::string str() const;

 private:
  void assemble(std::vector<Rational> N, long ns, std::vector<Rational> D, long ds);
  QLaurent num_, den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero_fn(); }
inline RatFunc inverse(const RatFunc& r) { return r.inv(); }

// Parses sums/products of integers, rationals, A, A^k, parentheses and '/'.
RatFunc parse_ratfunc(const std::string& text);
// Same grammar; rejects non-integral or genuinely rational results.
LaurentPoly parse_laurent(const std::string& text);

Rational eval_at(const QLaurent& p, const Rational& r);

}  // namespace skein
