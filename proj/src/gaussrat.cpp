#include "skein/gaussrat.hpp"

namespace skein {

GaussRat GaussRat::ipow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussRat inverse(const GaussRat& g) {
  Rational n = g.re * g.re + g.im * g.im;
  if (sgn(n) == 0) throw DomainError("division by zero in Q(i)");
  return {g.re / n, -g.im / n};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * inverse(b); }

std::string GaussRat::str() const {
  if (sgn(im) == 0) return re.get_str();
  std::string ims;
  Rational a = abs(im);
  ims = (a == 1 ? std::string() : a.get_str() + "*") + "i";
  if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + ims;
  return re.get_str() + (sgn(im) < 0 ? " - " : " + ") + ims;
}

}  // namespace skein
