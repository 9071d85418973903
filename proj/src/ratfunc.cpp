#include "skein/ratfunc.hpp"

#include "qpoly.hpp"

namespace skein {

namespace {

qpoly::QP dense(const QLaurent& p, long shift) {
  qpoly::QP v;
  for (auto& [e, c] : p.terms()) {
    long i = e - shift;
    if (static_cast<long>(v.size()) <= i) v.resize(i + 1);
    v[i] = c;
  }
  return v;
}
QLaurent sparse(const qpoly::QP& v, long shift) {
  QLaurent r;
  for (size_t i = 0; i < v.size(); ++i) r.add_term(static_cast<long>(i) + shift, v[i]);
  return r;
}

}  // namespace

void RatFunc::assemble(qpoly::QP N, long ns, qpoly::QP D, long ds) {
  // denominator gets constant term 1
  Rational c0 = D[0];
  if (c0 != 1) {
    for (auto& c : N) c /= c0;
    for (auto& c : D) c /= c0;
  }
  num_ = sparse(N, ns - ds);
  den_ = sparse(D, 0);
}

RatFunc::RatFunc(const QLaurent& num, const QLaurent& den) {
  if (den.is_zero_poly()) throw DomainError("zero denominator");
  if (num.is_zero_poly()) {
    den_ = QLaurent(1);
    return;
  }
  long ns = num.min_exp(), ds = den.min_exp();
  auto N = dense(num, ns), D = dense(den, ds);
  auto g = qpoly::gcd(N, D);
  if (g.size() > 1) {
    N = qpoly::divmod(N, g).first;
    D = qpoly::divmod(D, g).first;
  }
  assemble(std::move(N), ns, std::move(D), ds);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_laurent() && b.is_laurent()) return RatFunc(a.num_ * b.num_);
  if (a.num_.is_zero_poly() || b.num_.is_zero_poly()) return RatFunc();
  // both inputs are reduced, so only cross factors can cancel
  long s1 = a.num_.min_exp(), s2 = b.num_.min_exp();
  auto n1 = dense(a.num_, s1), n2 = dense(b.num_, s2);
  auto d1 = dense(a.den_, 0), d2 = dense(b.den_, 0);
  auto cancel = [](qpoly::QP& n, qpoly::QP& d) {
    if (n.size() < 2 || d.size() < 2) return;
    auto g = qpoly::gcd(n, d);
    if (g.size() < 2) return;
    n = qpoly::divmod(n, g).first;
    d = qpoly::divmod(d, g).first;
  };
  cancel(n1, d2);
  cancel(n2, d1);
  RatFunc r;
  r.assemble(qpoly::mul(n1, n2), s1 + s2, qpoly::mul(d1, d2), 0);
  return r;
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero_poly()) throw DomainError("division by zero in Q(A)");
  if (num_.is_monomial()) {
    auto [e, c] = *num_.terms().begin();
    RatFunc r;
    r.num_ = den_.shift(-e).scaled(Rational(1) / c);
    r.den_ = QLaurent(1);
    return r;
  }
  return RatFunc(den_, num_);
}

Rational eval_at(const QLaurent& p, const Rational& r) {
  Rational acc = 0;
  if (p.is_zero_poly()) return acc;
  if (sgn(r) == 0 && p.min_exp() < 0) throw DomainError("negative power of zero");
  for (auto& [e, c] : p.terms()) {
    Rational t = c;
    Rational base = e < 0 ? Rational(1) / r : r;
    for (long k = 0; k < std::labs(e); ++k) t *= base;
    acc += t;
  }
  return acc;
}

Rational RatFunc::eval(const Rational& r) const {
  Rational d = eval_at(den_, r);
  if (sgn(d) == 0) throw DomainError("pole at evaluation point");
  return eval_at(num_, r) / d;
}

std::string RatFunc::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace skein
