#include "skein/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qpoly.hpp"

namespace skein {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}
Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}
long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return std::lcm(a, b); }

QLaurent to_q(const LaurentPoly& p) {
  QLaurent r;
  for (auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
  return r;
}
LaurentPoly to_z(const QLaurent& p) {
  LaurentPoly r;
  for (auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw DomainError("non-integral coefficient " + c.get_str());
    r.add_term(e, c.get_num());
  }
  return r;
}

long euler_phi(long n) {
  if (n < 1) throw DomainError("euler_phi: n must be positive");
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

std::mutex g_phi_mu;
std::map<long, std::vector<Integer>> g_phi;  // dense coefficients, monic

// exact division of integer polynomials with monic divisor
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  size_t db = b.size() - 1;
  std::vector<Integer> q(a.size() - db);
  for (size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

const std::vector<Integer>& phi_dense(long n) {
  {
    std::lock_guard lk(g_phi_mu);
    auto it = g_phi.find(n);
    if (it != g_phi.end()) return it->second;
  }
  std::vector<Integer> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, phi_dense(d));
  std::lock_guard lk(g_phi_mu);
  return g_phi.emplace(n, std::move(p)).first->second;
}

void reduce_mod_phi(std::vector<Integer>& p, long n) {
  const auto& f = phi_dense(n);
  size_t d = f.size() - 1;
  for (size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    Integer c = p[i];
    for (size_t j = 0; j < d; ++j)
      if (f[j] != 0) p[i - d + j] -= c * f[j];
    p[i] = 0;
  }
  p.resize(d);
}

}  // namespace

IntPoly cyclotomic_poly(long n) {
  if (n < 1) throw DomainError("cyclotomic_poly: n must be >= 1");
  IntPoly r;
  const auto& f = phi_dense(n);
  for (size_t i = 0; i < f.size(); ++i) r.add_term(static_cast<long>(i), f[i]);
  return r;
}

CycNum::CycNum(long order) : n_(order), num_(euler_phi(order)), den_(1) {}

CycNum::CycNum(long order, const Rational& q) : CycNum(order) {
  num_[0] = q.get_num();
  den_ = q.get_den();
}

CycNum CycNum::zeta(long order, long k) {
  CycNum r(order);
  k %= order;
  if (k < 0) k += order;
  std::vector<Integer> p(std::max<size_t>(r.num_.size(), k + 1));
  p[k] = 1;
  reduce_mod_phi(p, order);
  r.num_ = std::move(p);
  return r;
}

CycNum CycNum::from_coords(long order, const std::vector<Rational>& coords) {
  CycNum r(order);
  if (coords.size() != r.num_.size()) throw DomainError("coordinate vector length must be phi(order)");
  Integer den = 1;
  for (auto& c : coords) den = lcm(den, c.get_den());
  for (size_t i = 0; i < coords.size(); ++i) r.num_[i] = coords[i].get_num() * (den / coords[i].get_den());
  r.den_ = den;
  r.normalize();
  return r;
}

void CycNum::normalize() {
  Integer g = den_;
  for (auto& c : num_) {
    if (g == 1) break;
    if (c != 0) g = skein::gcd(g, c);
  }
  if (g != 1) {
    for (auto& c : num_) c /= g;
    den_ /= g;
  }
  bool all_zero = true;
  for (auto& c : num_)
    if (c != 0) { all_zero = false; break; }
  if (all_zero) den_ = 1;
}

std::vector<Rational> CycNum::coords() const {
  std::vector<Rational> r;
  r.reserve(num_.size());
  for (auto& c : num_) {
    Rational q(c, den_);
    q.canonicalize();
    r.push_back(q);
  }
  return r;
}

bool CycNum::is_zero() const {
  for (auto& c : num_)
    if (c != 0) return false;
  return true;
}
bool CycNum::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}
Rational CycNum::rational_value() const {
  if (!is_rational()) throw DomainError("not a rational element");
  Rational q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycNum CycNum::lift(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw DomainError("lift: target order must be a multiple");
  long s = m / n_;
  CycNum r(m);
  std::vector<Integer> p(std::max<size_t>((num_.size() - 1) * s + 1, r.num_.size()));
  for (size_t i = 0; i < num_.size(); ++i) p[i * s] = num_[i];
  reduce_mod_phi(p, m);
  r.num_ = std::move(p);
  r.den_ = den_;
  r.normalize();
  return r;
}

CycNum CycNum::galois(long j) const {
  if (gcd_long(((j % n_) + n_) % n_, n_) != 1 && n_ > 1) throw DomainError("galois: exponent not a unit");
  std::vector<Integer> p(std::max<size_t>(n_, num_.size()));
  long jj = ((j % n_) + n_) % n_;
  for (size_t i = 0; i < num_.size(); ++i) p[(i * jj) % n_] += num_[i];
  reduce_mod_phi(p, n_);
  CycNum r(n_);
  r.num_ = std::move(p);
  r.den_ = den_;
  r.normalize();
  return r;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  if (is_rational()) {
    Rational q(den_, num_[0]);
    q.canonicalize();
    return CycNum(n_, q);
  }
  qpoly::QP a(num_.size()), m;
  for (size_t i = 0; i < num_.size(); ++i) a[i] = Rational(num_[i]);
  for (auto& c : phi_dense(n_)) m.push_back(Rational(c));
  auto [g, s] = qpoly::half_ext_gcd(a, m);
  if (g.size() != 1) throw DomainError("element not invertible");  // cannot happen in a field
  std::vector<Rational> coords(num_.size());
  for (size_t i = 0; i < s.size() && i < coords.size(); ++i) coords[i] = s[i] * Rational(den_);
  for (auto& c : coords) c.canonicalize();
  return from_coords(n_, coords);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycNum r(n_, 1), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  if (o.n_ != n_) {
    long m = lcm_long(n_, o.n_);
    CycNum a = lift(m);
    a += o.lift(m);
    return *this = a;
  }
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}
CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }
CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNum CycNum::mul_same(const CycNum& a, const CycNum& b) {
  size_t d = a.num_.size();
  std::vector<Integer> p(2 * d - 1);
  for (size_t i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (size_t j = 0; j < d; ++j)
      if (b.num_[j] != 0) mpz_addmul(p[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
  }
  reduce_mod_phi(p, a.n_);
  CycNum r(a.n_);
  r.num_ = std::move(p);
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  if (o.n_ != n_) {
    long m = lcm_long(n_, o.n_);
    return *this = mul_same(lift(m), o.lift(m));
  }
  return *this = mul_same(*this, o);
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.n_ != b.n_) {
    long m = lcm_long(a.n_, b.n_);
    return a.lift(m) == b.lift(m);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string CycNum::str() const {
  auto cs = coords();
  std::string out;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (sgn(cs[i]) == 0) continue;
    Rational c = cs[i];
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (i == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += "z";
    if (i != 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {
template <class P>
CycNum eval_impl(const P& p, const CycNum& zeta) {
  CycNum r(zeta.order());
  if (p.is_zero_poly()) return r;
  long lo = p.min_exp(), hi = p.max_exp();
  for (long e = hi; e >= lo; --e) {
    r *= zeta;
    r += CycNum(zeta.order(), Rational(p.coeff(e)));
  }
  // r = sum c_e zeta^(e-lo)
  return r * zeta.pow(lo);
}
}  // namespace

CycNum laurent_eval(const LaurentPoly& p, const CycNum& zeta) { return eval_impl(p, zeta); }
CycNum laurent_eval(const QLaurent& p, const CycNum& zeta) { return eval_impl(p, zeta); }

}  // namespace skein
