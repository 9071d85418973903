#pragma once
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "skein/laurent.hpp"

namespace skein {

IntPoly chebyshev_T(long n);
IntPoly chebyshev_S(long n);  // n >= -1, S_{-1} = 0

// (p,q) ~ (-p,-q); canonical representative has p > 0, or p == 0 and q >= 0
struct FGLabel {
  long p = 0, q = 0;
  friend bool operator==(const FGLabel&, const FGLabel&) = default;
  // descending lexicographic: the print order
  friend bool operator<(const FGLabel& a, const FGLabel& b) {
    return a.p != b.p ? a.p > b.p : a.q > b.q;
  }
};

struct FGNormalized {
  std::optional<FGLabel> label;
  std::optional<LaurentPoly> trivial_scalar;  // set only for (0,0): the scalar 2
};
FGNormalized fg_normalize(long p, long q);
FGLabel fg_canonical(long p, long q);  // (0,0) stays (0,0)

// Linear combination of Frohman-Gelca basis curves plus a multiple of the
// empty multicurve (kept apart from the label map).
class FGElement {
 public:
  FGElement() = default;
  FGElement(const LaurentPoly& scalar) : scalar_(scalar) {}  // NOLINT
  static FGElement curve(long p, long q, const LaurentPoly& c = LaurentPoly(1));

  const std::map<FGLabel, LaurentPoly>& terms() const { return t_; }
  const LaurentPoly& scalar() const { return scalar_; }
  LaurentPoly coeff(long p, long q) const;
  bool is_zero() const { return t_.empty() && scalar_.is_zero_poly(); }

  void add(const FGLabel& l, const LaurentPoly& c);
  FGElement& operator+=(const FGElement& o);
  FGElement& operator-=(const FGElement& o);
  friend FGElement operator+(FGElement a, const FGElement& b) { return a += b; }
  friend FGElement operator-(FGElement a, const FGElement& b) { return a -= b; }
  FGElement scaled(const LaurentPoly& c) const;
  friend bool operator==(const FGElement&, const FGElement&) = default;

  std::string str() const;

 private:
  std::map<FGLabel, LaurentPoly> t_;
  LaurentPoly scalar_;
};

FGElement fg_multiply(const FGElement& a, const FGElement& b);
FGElement fg_power(const FGElement& a, unsigned n);
// T_d evaluated on the curve (p/d, q/d), expanded in the basis
FGElement fg_power_as_chebyshev(long p, long q, long d);
// evaluate an integer polynomial on an element
FGElement fg_poly_eval(const IntPoly& f, const FGElement& x);

FGElement parse_fg(const std::string& text);

}  // namespace skein
