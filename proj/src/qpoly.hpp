#pragma once
// Dense univariate polynomials over Q, index = degree. Internal helpers only.
#include <tuple>
#include <vector>

#include "skein/scalar.hpp"

namespace skein::qpoly {

using QP = std::vector<Rational>;

inline void trim(QP& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}
inline long deg(const QP& p) { return static_cast<long>(p.size()) - 1; }

inline QP mul(const QP& a, const QP& b) {
  if (a.empty() || b.empty()) return {};
  QP r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QP sub(QP a, const QP& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q*b + r
inline std::pair<QP, QP> divmod(QP a, const QP& b) {
  trim(a);
  QP q;
  if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    long shift = deg(a) - deg(b);
    Rational c = a.back() / lead;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline QP monic(QP p) {
  trim(p);
  if (p.empty()) return p;
  Rational l = p.back();
  for (auto& c : p) c /= l;
  return p;
}

inline QP gcd(QP a, QP b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// returns (g, s) with s*a = g mod m, g monic gcd
inline std::pair<QP, QP> half_ext_gcd(QP a, QP m) {
  trim(a);
  trim(m);
  QP r0 = m, r1 = a, s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QP s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational l = r0.back();
  for (auto& c : r0) c /= l;
  for (auto& c : s0) c /= l;
  return {r0, s0};
}

}  // namespace skein::qpoly
