#pragma once
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

// Sparse Laurent polynomial in one variable. No zero coefficients are stored,
// so the zero polynomial is the empty map and == is structural.
template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Map = std::map<long, C>;

  Laurent() = default;
  Laurent(const C& c) {  // NOLINT: scalars embed implicitly
    if (!is_zero(c)) t_[0] = c;
  }
  template <class I, class = std::enable_if_t<std::is_integral_v<I>>>
  Laurent(I c) : Laurent(C(static_cast<long>(c))) {}  // NOLINT

  static Laurent monomial(const C& c, long e) {
    Laurent r;
    if (!is_zero(c)) r.t_[e] = c;
    return r;
  }
  static Laurent var(long e = 1) { return monomial(C(1), e); }

  const Map& terms() const { return t_; }
  bool is_zero_poly() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }
  long min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
  long max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  C coeff(long e) const {
    auto it = t_.find(e);
    return it == t_.end() ? C(0) : it->second;
  }
  void add_term(long e, const C& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (auto& [e, c] : o.t_) add_term(e, C(-c));
    return *this;
  }
  Laurent operator-() const {
    Laurent r;
    for (auto& [e, c] : t_) r.t_[e] = -c;
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.t_.empty() || b.t_.empty()) return r;
    if (a.is_monomial() || b.is_monomial()) {  // shift and scale, no collisions
      const Laurent& m = a.is_monomial() ? a : b;
      const Laurent& o = a.is_monomial() ? b : a;
      auto& [e, c] = *m.t_.begin();
      bool one = c == 1, minus_one = c == -1;
      for (auto& [e2, c2] : o.t_) {
        auto it = r.t_.emplace_hint(r.t_.end(), e + e2, c2);
        if (minus_one)
          it->second = -it->second;
        else if (!one)
          it->second *= c;
      }
      return r;
    }
    long lo = a.min_exp() + b.min_exp(), hi = a.max_exp() + b.max_exp();
    unsigned long span = static_cast<unsigned long>(hi - lo) + 1;
    std::size_t work = a.t_.size() * b.t_.size();
    if (work < 64 || span > 4 * work + 64) {  // small or very sparse: stay sparse
      for (auto& [e1, c1] : a.t_)
        for (auto& [e2, c2] : b.t_) r.add_term(e1 + e2, C(c1 * c2));
      return r;
    }
    std::vector<C> acc(span, C(0));
    C tmp;
    for (auto& [e1, c1] : a.t_)
      for (auto& [e2, c2] : b.t_) {
        tmp = c1;
        tmp *= c2;
        acc[e1 + e2 - lo] += tmp;
      }
    for (unsigned long i = 0; i < span; ++i)
      if (!is_zero(acc[i])) r.t_.emplace_hint(r.t_.end(), lo + static_cast<long>(i), std::move(acc[i]));
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }

  Laurent shift(long k) const {
    Laurent r;
    for (auto& [e, c] : t_) r.t_[e + k] = c;
    return r;
  }
  Laurent scaled(const C& s) const {
    Laurent r;
    if (is_zero(s)) return r;
    for (auto& [e, c] : t_) r.t_[e] = c * s;
    return r;
  }
  Laurent pow(unsigned n) const {
    Laurent r(C(1)), b = *this;
    for (; n; n >>= 1, b = b * b)
      if (n & 1) r = r * b;
    return r;
  }
  // substitute var -> var^-1
  Laurent bar() const {
    Laurent r;
    for (auto& [e, c] : t_) r.t_[-e] = c;
    return r;
  }

  // descending exponents, "c*A^k" summands: "A^2 - A^-2", "-A^-1", "x^2 - 2"
  std::string str(const char* var = "A") const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      C c = it->second;
      bool neg = sgn(c) < 0;
      if (neg) c = -c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;
      long e = it->first;
      if (e == 0) {
        out += to_str(c);
        continue;
      }
      if (c != 1) out += to_str(c) + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  Map t_;
};

template <class C>
bool is_zero(const Laurent<C>& p) {
  return p.is_zero_poly();
}
template <class C>
std::string to_str(const Laurent<C>& p) {
  return p.str();
}

using LaurentPoly = Laurent<Integer>;
using QLaurent = Laurent<Rational>;
// integer polynomial in one variable (nonnegative exponents by convention)
using IntPoly = Laurent<Integer>;

QLaurent to_q(const LaurentPoly& p);
// throws DomainError when some coefficient is not integral
LaurentPoly to_z(const QLaurent& p);

}  // namespace skein
