#pragma once
#include <string>

#include "skein/scalar.hpp"

namespace skein {

// re + im*i with i^2 = -1
struct GaussRat {
  Rational re, im;

  GaussRat() = default;
  GaussRat(const Rational& r, const Rational& i = 0) : re(r), im(i) {}  // NOLINT
  GaussRat(long r) : re(r), im(0) {}                                    // NOLINT
  static GaussRat I() { return {0, 1}; }
  // i^k for any integer k
  static GaussRat ipow(long k);

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  GaussRat operator-() const { return {-re, -im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const;
};

inline bool is_zero(const GaussRat& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
GaussRat inverse(const GaussRat& g);
inline std::string to_str(const GaussRat& g) { return g.str(); }

}  // namespace skein
