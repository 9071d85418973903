#include "skein/matrix_rep.hpp"

#include <map>

#include "skein/linalg.hpp"

namespace skein {

namespace {

CycNum cone() { return CycNum(1, Rational(1)); }

FieldMatrix<CycNum> rows_of(const std::vector<Mat2>& ms) {
  FieldMatrix<CycNum> f(ms.size(), 4, CycNum());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto e = ms[i].entries();
    for (std::size_t j = 0; j < 4; ++j) f.at(i, j) = e[j];
  }
  return f;
}

bool independent_of(const std::vector<Mat2>& span, const Mat2& m) {
  if (span.size() >= 4) return false;
  auto all = span;
  all.push_back(m);
  return field_rank(rows_of(all)) == all.size();
}

std::vector<Mat2> canonical_basis(AlgTag t) {
  switch (t) {
    case AlgTag::D: return {Mat2::unit(1, 1), Mat2::unit(2, 2)};
    case AlgTag::U: return {Mat2::unit(1, 1), Mat2::unit(1, 2), Mat2::unit(2, 2)};
    case AlgTag::L: return {Mat2::unit(1, 1), Mat2::unit(2, 1), Mat2::unit(2, 2)};
    case AlgTag::J: return {Mat2::identity(), Mat2::unit(1, 2)};
    case AlgTag::M2: return {Mat2::unit(1, 1), Mat2::unit(1, 2), Mat2::unit(2, 1), Mat2::unit(2, 2)};
    default: return {};
  }
}

long legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  long r = 1, b = a, e = (p - 1) / 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// sqrt of a positive prime
CycNum prime_sqrt(long p) {
  if (p == 2) return CycNum::zeta(8, 1) + CycNum::zeta(8, -1);
  CycNum g(p);
  for (long k = 1; k < p; ++k) g += CycNum(p, Rational(legendre(k, p))) * CycNum::zeta(p, k);
  if (p % 4 == 1) return g;
  return -(CycNum::zeta(4, 1) * g);
}

}  // namespace

Mat2 Mat2::unit(int i, int j) {
  Mat2 m = {CycNum(), CycNum(), CycNum(), CycNum()};
  CycNum& e = i == 1 ? (j == 1 ? m.a : m.b) : (j == 1 ? m.c : m.d);
  e = cone();
  return m;
}

Mat2 Mat2::inv() const {
  CycNum dt = det();
  if (dt.is_zero()) throw DomainError("singular matrix");
  CycNum r = dt.inv();
  return {r * d, -(r * b), -(r * c), r * a};
}

Mat2 Mat2::pow(long e) const {
  Mat2 base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Mat2 r = identity();
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

long Mat2::order() const {
  return lcm_long(lcm_long(a.order(), b.order()), lcm_long(c.order(), d.order()));
}

std::string Mat2::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

Mat2& Mat2::operator*=(const Mat2& o) {
  Mat2 r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  return *this = r;
}

std::string tag_str(AlgTag t) {
  switch (t) {
    case AlgTag::D: return "D";
    case AlgTag::U: return "U";
    case AlgTag::L: return "L";
    case AlgTag::J: return "J";
    case AlgTag::M2: return "M2";
    default: return "OTHER";
  }
}

bool SubalgebraClass::contains(const Mat2& m) const { return !independent_of(basis, m); }

SubalgebraClass classify_span(const std::vector<Mat2>& span) {
  bool upper = true, lower = true, equal_diag = true;
  for (auto& m : span) {
    if (!m.c.is_zero()) upper = false;
    if (!m.b.is_zero()) lower = false;
    if (!(m.a == m.d)) equal_diag = false;
  }
  std::size_t n = field_rank(rows_of(span));
  AlgTag t = AlgTag::OTHER;
  if (n == 4) t = AlgTag::M2;
  else if (n == 3 && upper) t = AlgTag::U;
  else if (n == 3 && lower) t = AlgTag::L;
  else if (n == 2 && upper && lower) t = AlgTag::D;
  else if (n == 2 && upper && equal_diag) t = AlgTag::J;
  SubalgebraClass out;
  out.tag = t;
  if (t != AlgTag::OTHER) {
    out.basis = canonical_basis(t);
    return out;
  }
  auto f = rows_of(span);
  auto piv = rref(f);
  for (std::size_t i = 0; i < piv.size(); ++i) out.basis.push_back({f.at(i, 0), f.at(i, 1), f.at(i, 2), f.at(i, 3)});
  return out;
}

SubalgebraClass algebra_closure(const std::vector<Mat2>& gens) {
  if (gens.empty()) throw DomainError("algebra_closure needs at least one generator");
  std::vector<Mat2> span{Mat2::identity()};
  // left multiplication by generators reaches every word
  for (std::size_t i = 0; i < span.size() && span.size() < 4; ++i)
    for (auto& g : gens) {
      Mat2 p = g * span[i];
      if (independent_of(span, p)) span.push_back(p);
      if (span.size() == 4) break;
    }
  return classify_span(span);
}

std::optional<Witness> separating_witness(const SubalgebraClass& c1, const SubalgebraClass& c2,
                                          const SubalgebraClass& ct) {
  for (auto& x : c1.basis)
    for (auto& y : c2.basis)
      for (auto& z : ct.basis) {
        CycNum t1 = (x * y * z).trace(), t2 = (x * z * y).trace();
        if (t1 != t2) return Witness{x, y, z, t1, t2};
      }
  return std::nullopt;
}

std::optional<CycNum> rational_sqrt(const Rational& q) {
  if (q == 0) return CycNum();
  Integer n = q.get_num() * q.get_den();
  bool neg = n < 0;
  if (neg) n = -n;
  // n = sq^2 * free
  Integer sq = 1, free = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      sq *= p;
    }
    if (n % p == 0) {
      n /= p;
      free *= p;
    }
  }
  free *= n;
  Rational scale(sq, q.get_den());
  scale.canonicalize();
  CycNum r(1, scale);
  if (neg) r *= CycNum::zeta(4, 1);
  Integer f = free;
  for (long p = 2; f > 1; ++p) {
    if (f % p != 0) continue;
    if (p > 100000) throw DomainError("square root of a large prime is out of range");
    f /= p;
    r *= prime_sqrt(p);
  }
  return r;
}

std::optional<CycNum> cyclotomic_sqrt(const CycNum& x) {
  if (x.is_rational()) return rational_sqrt(x.rational_value());
  long m = lcm_long(2, x.order());
  CycNum two(1, Rational(2));
  for (long k = 0; k < m; ++k) {
    CycNum w = CycNum::zeta(m, k), wi = CycNum::zeta(m, -k);
    if (w + wi + two == x) {
      CycNum s = CycNum::zeta(2 * m, k) + CycNum::zeta(2 * m, -k);
      if (s * s == x) return s;
    }
    CycNum rest = x * wi;
    if (rest.is_rational()) {
      auto r = rational_sqrt(rest.rational_value());
      if (r) {
        CycNum s = *r * CycNum::zeta(2 * m, k);
        if (s * s == x) return s;
      }
    }
  }
  return std::nullopt;
}

Mat2 sl2_sqrt(const Mat2& m) {
  if (m.det() != cone()) throw DomainError("sl2_sqrt needs det = 1");
  if (m == Mat2::identity()) return m;
  if (m == -Mat2::identity()) return Mat2::diag(CycNum::zeta(4, 1), CycNum::zeta(4, -1));
  CycNum t = m.trace();
  if (t == CycNum(1, Rational(-2)))
    throw DomainError("no square root in SL2: m is minus a nontrivial unipotent");
  auto s = cyclotomic_sqrt(t + CycNum(1, Rational(2)));
  if (!s) throw DomainError("sqrt(tr + 2) not found in a cyclotomic field: " + t.str());
  Mat2 r = s->inv() * (m + Mat2::identity());
  if (!(r * r == m)) throw std::logic_error("sl2_sqrt self-check failed");
  return r;
}

bool is_irreducible(const Mat2& a, const Mat2& b) {
  return (a * b * a.inv() * b.inv()).trace() != CycNum(1, Rational(2));
}

std::pair<Mat2, Mat2> trace_triple_realize(const CycNum& eta1, const CycNum& eta2, const CycNum& s) {
  Mat2 q1{eta1, cone(), CycNum(), eta1.inv()};
  Mat2 q2{eta2, CycNum(), s, eta2.inv()};
  return {q1, q2};
}

std::optional<CycNum> field_eigenvalue(const Mat2& m) {
  CycNum t = m.trace(), dt = m.det();
  long n = lcm_long(2, m.order());
  if (dt == cone())
    for (long k = 0; k < n; ++k) {
      CycNum w = CycNum::zeta(n, k);
      if (w + CycNum::zeta(n, -k) == t) return w;
    }
  auto root = cyclotomic_sqrt(t * t - CycNum(1, Rational(4)) * dt);
  if (!root) return std::nullopt;
  return CycNum(1, Rational(1, 2)) * (t + *root);
}

std::optional<Mat2> standard_position(const Mat2& m) {
  if (m.is_scalar()) return Mat2::identity();
  auto lam = field_eigenvalue(m);
  if (!lam) return std::nullopt;
  CycNum mu = m.det() / *lam;
  auto eigvec = [&](const CycNum& l) {
    FieldMatrix<CycNum> f(2, 2, CycNum());
    f.at(0, 0) = m.a - l;
    f.at(0, 1) = m.b;
    f.at(1, 0) = m.c;
    f.at(1, 1) = m.d - l;
    return kernel(f, CycNum(), cone()).front();
  };
  auto v1 = eigvec(*lam);
  std::vector<CycNum> v2;
  if (*lam != mu) {
    v2 = eigvec(mu);
  } else {
    // complete v1 by a standard vector
    v2 = v1[0].is_zero() ? std::vector<CycNum>{cone(), CycNum()} : std::vector<CycNum>{CycNum(), cone()};
  }
  Mat2 p{v1[0], v2[0], v1[1], v2[1]};
  return p;
}

}  // namespace skein
