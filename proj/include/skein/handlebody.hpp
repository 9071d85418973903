#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/gaussrat.hpp"
#include "skein/laurent.hpp"

namespace skein {

// x^k y^l z^n
struct Monomial3 {
  long k = 0, l = 0, n = 0;
  long degree() const { return k + l + n; }
  friend bool operator==(const Monomial3&, const Monomial3&) = default;
  friend bool operator<(const Monomial3& a, const Monomial3& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.k != b.k) return a.k > b.k;
    if (a.l != b.l) return a.l > b.l;
    return a.n > b.n;
  }
  Monomial3 operator*(const Monomial3& o) const { return {k + o.k, l + o.l, n + o.n}; }
  std::string str() const;
};

// bits (k+n mod 2, l+n mod 2)
struct Z2Grading {
  int a = 0, b = 0;
  friend bool operator==(const Z2Grading&, const Z2Grading&) = default;
  std::string str() const;  // "ee", "eo", "oe", "oo"
};
Z2Grading monomial_grading(const Monomial3& m);
std::optional<Z2Grading> parse_grading(const std::string& s);

template <class C>
class Poly3 {
 public:
  using Map = std::map<Monomial3, C>;
  Poly3() = default;
  Poly3(const C& c) { add(Monomial3{}, c); }  // NOLINT
  static Poly3 mono(const Monomial3& m, const C& c = C(1)) {
    Poly3 r;
    r.add(m, c);
    return r;
  }
  static Poly3 x() { return mono({1, 0, 0}); }
  static Poly3 y() { return mono({0, 1, 0}); }
  static Poly3 z() { return mono({0, 0, 1}); }

  const Map& terms() const { return t_; }
  bool is_zero_poly() const { return t_.empty(); }
  long degree() const {
    long d = -1;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
  }
  void add(const Monomial3& m, const C& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }
  Poly3& operator+=(const Poly3& o) {
    for (auto& [m, c] : o.t_) add(m, c);
    return *this;
  }
  Poly3& operator-=(const Poly3& o) {
    for (auto& [m, c] : o.t_) add(m, -c);
    return *this;
  }
  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  Poly3 operator-() const { return Poly3() - *this; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 r;
    for (auto& [m1, c1] : a.t_)
      for (auto& [m2, c2] : b.t_) r.add(m1 * m2, c1 * c2);
    return r;
  }
  friend bool operator==(const Poly3& a, const Poly3& b) { return a.t_ == b.t_; }

 private:
  Map t_;
};

using Poly3Z = Poly3<LaurentPoly>;
using Poly3G = Poly3<GaussRat>;

std::string str(const Poly3Z& p);
std::string str(const Poly3G& p);

// polynomial f(v) for v one of x, y, z
Poly3G poly_in(const IntPoly& f, const Poly3G& v);
// A := sqrt(-1)
Poly3G at_i(const Poly3Z& p);

Poly3Z gamma_p(long p);
Poly3Z gamma_prime_p(long p);
Poly3G gamma_closed_form(long p);        // i^(p-1) T_p(y)
Poly3G gamma_prime_closed_form(long p);  // i^p (i^-1 z S_{p-1}(y) + i x S_{p-2}(y))

struct RelationFamily {
  int family_index = 0;   // 1..8
  bool parity_k = false;  // selector: k+n (true) or l+n (false)
  std::optional<Poly3G> even_core, odd_core;
  long p = 0;
};

// the eight families, cores exactly as listed for L(2,1)#L(p,1)
std::vector<RelationFamily> relation_families(long p);

// Cores rebuilt from the gamma recurrences and the handle-slide signs.
std::vector<RelationFamily> regenerated_families(long p);
struct CoreMismatch {
  int family_index;
  bool odd_case;
  std::string listed, regenerated;
};
std::vector<CoreMismatch> cross_check_families(long p);

struct RelationGenerator {
  int family_index;
  Monomial3 multiplier;
  Poly3G poly;
};
std::vector<RelationGenerator> relation_generators(long p, long degree_bound);

long truncated_quotient_dimension(long p, long degree_bound, std::optional<Z2Grading> filter = std::nullopt);
// dim of the degree <= window monomials modulo the relations of degree <= degree_bound
long window_dimension(long p, long window, long degree_bound, std::optional<Z2Grading> filter = std::nullopt);

struct JprimeFamilyReport {
  int family_index;
  bool odd_case;
  bool lands_in_V;             // some multiplier puts this case in the (even,even) class
  bool pure_z_multipliers;     // multipliers z^n are among them
  bool ok;
  std::vector<Monomial3> offending;  // pure z^n monomials left in the core
};
struct JprimeReport {
  bool contained = false;
  std::vector<JprimeFamilyReport> families;
};
JprimeReport verify_Jprime_containment(long p);

}  // namespace skein
