#include "skein/torus_skein.hpp"

#include <numeric>

#include "expr.hpp"
#include "textfmt.hpp"

namespace skein {

namespace {
IntPoly X() { return IntPoly::var(1); }
}  // namespace

IntPoly chebyshev_T(long n) {
  if (n < 0) throw DomainError("chebyshev_T: n must be >= 0");
  IntPoly a(2), b = X();
  if (n == 0) return a;
  for (long k = 1; k < n; ++k) {
    IntPoly c = X() * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

IntPoly chebyshev_S(long n) {
  if (n < -1) throw DomainError("chebyshev_S: n must be >= -1");
  IntPoly a(0), b(1);  // S_{-1}, S_0
  for (long k = 0; k < n + 1; ++k) {
    IntPoly c = X() * b - a;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

FGLabel fg_canonical(long p, long q) {
  if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
  return {p, q};
}

FGNormalized fg_normalize(long p, long q) {
  FGNormalized r;
  if (p == 0 && q == 0) r.trivial_scalar = LaurentPoly(2);
  else r.label = fg_canonical(p, q);
  return r;
}

FGElement FGElement::curve(long p, long q, const LaurentPoly& c) {
  FGElement e;
  auto n = fg_normalize(p, q);
  if (n.label) e.add(*n.label, c);
  else e.scalar_ = c * *n.trivial_scalar;
  return e;
}

LaurentPoly FGElement::coeff(long p, long q) const {
  if (p == 0 && q == 0) return scalar_;
  auto it = t_.find(fg_canonical(p, q));
  return it == t_.end() ? LaurentPoly() : it->second;
}

void FGElement::add(const FGLabel& l, const LaurentPoly& c) {
  if (c.is_zero_poly()) return;
  if (l.p == 0 && l.q == 0) {
    scalar_ += c * LaurentPoly(2);
    return;
  }
  FGLabel k = fg_canonical(l.p, l.q);
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero_poly()) t_.erase(it);
  }
}

FGElement& FGElement::operator+=(const FGElement& o) {
  for (auto& [l, c] : o.t_) add(l, c);
  scalar_ += o.scalar_;
  return *this;
}
FGElement& FGElement::operator-=(const FGElement& o) {
  for (auto& [l, c] : o.t_) add(l, -c);
  scalar_ -= o.scalar_;
  return *this;
}
FGElement FGElement::scaled(const LaurentPoly& c) const {
  FGElement r;
  if (c.is_zero_poly()) return r;
  for (auto& [l, v] : t_) r.t_[l] = v * c;
  r.scalar_ = scalar_ * c;
  return r;
}

std::string FGElement::str() const {
  textfmt::Sum s;
  for (auto& [l, c] : t_)
    s.add(c.str(), c.is_monomial(), "(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")");
  if (!scalar_.is_zero_poly()) s.add(scalar_.str(), scalar_.is_monomial(), "");
  return s.str();
}

FGElement fg_multiply(const FGElement& a, const FGElement& b) {
  FGElement r = b.scaled(a.scalar());
  for (auto& [l, c] : a.terms()) r += FGElement::curve(l.p, l.q, c * b.scalar());
  for (auto& [l1, c1] : a.terms())
    for (auto& [l2, c2] : b.terms()) {
      long p = l1.p, q = l1.q, rr = l2.p, s = l2.q;
      long w = p * s - q * rr;
      LaurentPoly c = c1 * c2;
      r += FGElement::curve(p + rr, q + s, c.shift(w));
      r += FGElement::curve(p - rr, q - s, c.shift(-w));
    }
  return r;
}

FGElement fg_power(const FGElement& a, unsigned n) {
  FGElement r(LaurentPoly(1));
  for (unsigned k = 0; k < n; ++k) r = fg_multiply(r, a);
  return r;
}

FGElement fg_poly_eval(const IntPoly& f, const FGElement& x) {
  FGElement r;
  if (f.is_zero_poly()) return r;
  if (f.min_exp() < 0) throw DomainError("fg_poly_eval: negative exponent");
  for (long e = f.max_exp(); e >= 0; --e) {
    r = fg_multiply(r, x);
    r += FGElement(LaurentPoly(f.coeff(e)));
  }
  return r;
}

FGElement fg_power_as_chebyshev(long p, long q, long d) {
  if (p == 0 && q == 0) throw DomainError("fg_power_as_chebyshev: (0,0) has no primitive curve");
  if (d < 1) throw DomainError("fg_power_as_chebyshev: d must be positive");
  long g = std::gcd(std::labs(p), std::labs(q));
  if (g % d != 0) throw DomainError("fg_power_as_chebyshev: d must divide gcd(p,q)");
  return fg_poly_eval(chebyshev_T(d), FGElement::curve(p / d, q / d));
}

FGElement parse_fg(const std::string& text) {
  FGElement r;
  for (auto& [k, c] : expr::parse(text)) {
    if (k.gen != expr::kNone) throw ParseError("generator symbol in a torus element");
    if (!c.is_laurent()) throw ParseError("torus coefficients must be Laurent polynomials");
    LaurentPoly lc;
    try {
      lc = to_z(c.num());
    } catch (const DomainError&) {
      throw ParseError("torus coefficients must be integral");
    }
    if (k.label.empty()) r += FGElement(lc);
    else if (k.label.size() == 2) r += FGElement::curve(k.label[0], k.label[1], lc);
    else throw ParseError("torus labels are pairs (p,q)");
  }
  return r;
}

}  // namespace skein
