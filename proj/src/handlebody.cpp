#include "skein/handlebody.hpp"

#include <algorithm>

#include "skein/torus_skein.hpp"
#include "textfmt.hpp"

namespace skein {

std::string Monomial3::str() const {
  std::string s;
  auto put = [&](const char* v, long e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e != 1) s += "^" + std::to_string(e);
  };
  put("x", k);
  put("y", l);
  put("z", n);
  return s.empty() ? "1" : s;
}

std::string Z2Grading::str() const { return std::string(a ? "o" : "e") + (b ? "o" : "e"); }

Z2Grading monomial_grading(const Monomial3& m) {
  return {static_cast<int>((m.k + m.n) % 2), static_cast<int>((m.l + m.n) % 2)};
}

std::optional<Z2Grading> parse_grading(const std::string& s) {
  if (s.size() != 2) return std::nullopt;
  auto bit = [](char c) { return c == 'e' ? 0 : c == 'o' ? 1 : -1; };
  int a = bit(s[0]), b = bit(s[1]);
  if (a < 0 || b < 0) return std::nullopt;
  return Z2Grading{a, b};
}

namespace {

template <class P, class F>
std::string str_impl(const P& p, F single) {
  textfmt::Sum s;
  auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    std::string basis = it->first.degree() == 0 ? "" : it->first.str();
    s.add(to_str(it->second), single(it->second), basis);
  }
  return s.str();
}

}  // namespace

std::string str(const Poly3Z& p) {
  return str_impl(p, [](const LaurentPoly& c) { return c.is_monomial(); });
}
std::string str(const Poly3G& p) {
  return str_impl(p, [](const GaussRat& c) { return sgn(c.re) == 0 || sgn(c.im) == 0; });
}

Poly3G poly_in(const IntPoly& f, const Poly3G& v) {
  Poly3G r;
  if (f.is_zero_poly()) return r;
  for (long e = f.max_exp(); e >= 0; --e) {
    r = r * v;
    r += Poly3G(GaussRat(Rational(f.coeff(e))));
  }
  return r;
}

Poly3G at_i(const Poly3Z& p) {
  Poly3G r;
  for (auto& [m, c] : p.terms()) {
    GaussRat v;
    for (auto& [e, a] : c.terms()) v += GaussRat::ipow(e) * GaussRat(Rational(a));
    r.add(m, v);
  }
  return r;
}

namespace {

Poly3Z Az(long e) { return Poly3Z(LaurentPoly::var(e)); }

Poly3Z recur(Poly3Z g1, Poly3Z g2, long p) {
  if (p == 1) return g1;
  for (long k = 3; k <= p; ++k) {
    Poly3Z g3 = Az(1) * Poly3Z::y() * g2 - Az(2) * g1;
    g1 = std::move(g2);
    g2 = std::move(g3);
  }
  return g2;
}

}  // namespace

Poly3Z gamma_p(long p) {
  if (p < 1) throw DomainError("gamma_p: p must be >= 1");
  Poly3Z g2 = Az(1) * Poly3Z::y() * Poly3Z::y() - Az(1) - Az(-3);
  return recur(Poly3Z::y(), g2, p);
}

Poly3Z gamma_prime_p(long p) {
  if (p < 1) throw DomainError("gamma_prime_p: p must be >= 1");
  Poly3Z g2 = Az(1) * Poly3Z::y() * Poly3Z::z() + Az(-1) * Poly3Z::x();
  return recur(Poly3Z::z(), g2, p);
}

Poly3G gamma_closed_form(long p) {
  return Poly3G(GaussRat::ipow(p - 1)) * poly_in(chebyshev_T(p), Poly3G::y());
}

Poly3G gamma_prime_closed_form(long p) {
  Poly3G y = Poly3G::y();
  Poly3G inner = Poly3G(GaussRat::ipow(-1)) * Poly3G::z() * poly_in(chebyshev_S(p - 1), y) +
                 Poly3G(GaussRat::ipow(1)) * Poly3G::x() * poly_in(chebyshev_S(p - 2), y);
  return Poly3G(GaussRat::ipow(p)) * inner;
}

namespace {

Poly3G G(long c) { return Poly3G(GaussRat(c)); }
Poly3G I(long k) { return Poly3G(GaussRat::ipow(k)); }

Poly3G swap_xy(const Poly3G& f) {
  Poly3G r;
  for (auto& [m, c] : f.terms()) r.add({m.l, m.k, m.n}, c);
  return r;
}

// items 1-4 for the slide along the curve wrapping p times, written in x,y,z
std::vector<Poly3G> listed_cores_1to4(long p) {
  Poly3G x = Poly3G::x(), y = Poly3G::y(), z = Poly3G::z();
  Poly3G Tp = poly_in(chebyshev_T(p), y), Tp1 = poly_in(chebyshev_T(p - 1), y);
  Poly3G w3 = z * poly_in(chebyshev_S(p - 1), y) - x * poly_in(chebyshev_S(p - 2), y);
  Poly3G w4 = z * poly_in(chebyshev_S(p - 2), y) - x * poly_in(chebyshev_S(p - 3), y);
  Poly3G base4 = I(1) * z - I(1) * x * y;
  return {G(2) - I(p) * Tp,  G(2) + I(p) * Tp,  y + I(p) * Tp1,  y - I(p) * Tp1,
          x - I(p) * w3,     x + I(p) * w3,     base4 + I(p - 1) * w4, base4 - I(p - 1) * w4};
}

RelationFamily fam(int idx, bool pk, long p, std::optional<Poly3G> ev, std::optional<Poly3G> od) {
  RelationFamily f;
  f.family_index = idx;
  f.parity_k = pk;
  f.p = p;
  if (ev && !ev->is_zero_poly()) f.even_core = std::move(ev);
  if (od && !od->is_zero_poly()) f.odd_core = std::move(od);
  return f;
}

}  // namespace

std::vector<RelationFamily> relation_families(long p) {
  if (p < 2) throw DomainError("relation families need p >= 2");
  Poly3G x = Poly3G::x(), y = Poly3G::y(), z = Poly3G::z();
  auto c = listed_cores_1to4(p);
  std::vector<RelationFamily> out;
  for (int j = 0; j < 4; ++j) out.push_back(fam(j + 1, false, p, c[2 * j], c[2 * j + 1]));
  out.push_back(fam(5, true, p, x * x, G(4) - x * x));
  out.push_back(fam(6, true, p, std::nullopt, G(2) * x));
  out.push_back(fam(7, true, p, z * x, G(2) * y - z * x));
  // item 8 is printed with the l+n selector; as the x<->y mirror of item 4 its selector is k+n
  out.push_back(fam(8, true, p, G(2) * I(1) * z - I(1) * x * y, I(1) * x * y));
  return out;
}

std::vector<RelationFamily> regenerated_families(long p) {
  if (p < 2) throw DomainError("relation families need p >= 2");
  auto build = [](long q) {
    Poly3G x = Poly3G::x(), y = Poly3G::y(), z = Poly3G::z();
    // slide 1: 2 m = (-1)^(l+n) (-A^3) m gamma_q
    Poly3G m3g = Poly3G(GaussRat::ipow(3) * GaussRat(-1)) * at_i(gamma_p(q));
    // slide 2: y m = (-1)^(l+n) m gamma_{q-1}
    Poly3G g1 = at_i(gamma_p(q - 1));
    // slide 3: x m = (-1)^(l+n) i m gamma'_q
    Poly3G ig = I(1) * at_i(gamma_prime_p(q));
    // slide 4: (i z - i x y) m = (-1)^(l+n) i m gamma'_{q-1}
    Poly3G ig1 = q >= 2 ? I(1) * at_i(gamma_prime_p(q - 1)) : Poly3G();
    Poly3G b4 = I(1) * z - I(1) * x * y;
    return std::vector<Poly3G>{G(2) - m3g, G(2) + m3g, y - g1, y + g1, x - ig, x + ig, b4 - ig1, b4 + ig1};
  };
  auto c = build(p), d = build(2);
  std::vector<RelationFamily> out;
  for (int j = 0; j < 4; ++j) out.push_back(fam(j + 1, false, p, c[2 * j], c[2 * j + 1]));
  for (int j = 0; j < 4; ++j) out.push_back(fam(j + 5, true, p, swap_xy(d[2 * j]), swap_xy(d[2 * j + 1])));
  return out;
}

std::vector<CoreMismatch> cross_check_families(long p) {
  auto a = relation_families(p), b = regenerated_families(p);
  std::vector<CoreMismatch> out;
  auto same_span = [](const std::optional<Poly3G>& u, const std::optional<Poly3G>& v) {
    if (!u || !v) return !u && !v;
    // the generators only matter up to a unit
    for (long k = 0; k < 4; ++k)
      if (Poly3G(GaussRat::ipow(k)) * *u == *v) return true;
    return false;
  };
  auto txt = [](const std::optional<Poly3G>& u) { return u ? str(*u) : std::string("(none)"); };
  for (size_t i = 0; i < a.size(); ++i) {
    if (!same_span(a[i].even_core, b[i].even_core))
      out.push_back({a[i].family_index, false, txt(a[i].even_core), txt(b[i].even_core)});
    if (!same_span(a[i].odd_core, b[i].odd_core))
      out.push_back({a[i].family_index, true, txt(a[i].odd_core), txt(b[i].odd_core)});
  }
  return out;
}

namespace {

std::vector<Monomial3> monomials_upto(long D) {
  std::vector<Monomial3> v;
  for (long d = 0; d <= D; ++d)
    for (long k = d; k >= 0; --k)
      for (long l = d - k; l >= 0; --l) v.push_back({k, l, d - k - l});
  std::sort(v.begin(), v.end());
  return v;
}

Z2Grading grading_of(const Poly3G& f) { return monomial_grading(f.terms().begin()->first); }

// incremental sparse echelon form, pivot = smallest column index
class Echelon {
 public:
  bool insert(std::map<long, GaussRat> row) {
    while (!row.empty()) {
      auto [col, lead] = *row.begin();
      auto it = piv_.find(col);
      if (it == piv_.end()) {
        GaussRat iv = inverse(lead);
        for (auto& [c, v] : row) v = v * iv;
        piv_.emplace(col, std::move(row));
        return true;
      }
      for (auto& [c, v] : it->second) {
        GaussRat d = lead * v;
        auto [jt, fresh] = row.try_emplace(c, -d);
        if (!fresh) {
          jt->second -= d;
          if (is_zero(jt->second)) row.erase(jt);
        }
      }
    }
    return false;
  }
  long rank() const { return static_cast<long>(piv_.size()); }

 private:
  std::map<long, std::map<long, GaussRat>> piv_;
};

}  // namespace

std::vector<RelationGenerator> relation_generators(long p, long degree_bound) {
  std::vector<RelationGenerator> out;
  for (auto& f : relation_families(p)) {
    for (auto& m : monomials_upto(degree_bound)) {
      long sel = f.parity_k ? (m.k + m.n) % 2 : (m.l + m.n) % 2;
      const auto& core = sel ? f.odd_core : f.even_core;
      if (!core || m.degree() + core->degree() > degree_bound) continue;
      out.push_back({f.family_index, m, Poly3G::mono(m) * *core});
    }
  }
  return out;
}

namespace {

struct Truncation {
  std::map<Monomial3, long> col;
  long n_monomials = 0;
  Echelon ech;
};

Truncation build(long p, long degree_bound, const std::optional<Z2Grading>& filter) {
  Truncation t;
  for (auto& m : monomials_upto(degree_bound))
    if (!filter || monomial_grading(m) == *filter) t.col.emplace(m, t.n_monomials++);
  for (auto& g : relation_generators(p, degree_bound)) {
    if (g.poly.is_zero_poly()) continue;
    if (filter) {
      Z2Grading gr = grading_of(g.poly);
      for (auto& [m, c] : g.poly.terms())
        if (monomial_grading(m) != gr)
          throw DomainError("grading filter needs homogeneous relations; family " +
                            std::to_string(g.family_index) + " is not homogeneous for p = " + std::to_string(p));
      if (gr != *filter) continue;
    }
    std::map<long, GaussRat> row;
    for (auto& [m, c] : g.poly.terms()) row.emplace(t.col.at(m), c);
    t.ech.insert(std::move(row));
  }
  return t;
}

}  // namespace

long truncated_quotient_dimension(long p, long degree_bound, std::optional<Z2Grading> filter) {
  if (p < 2) throw DomainError("truncated_quotient_dimension: p must be >= 2");
  if (degree_bound < 0) throw DomainError("degree bound must be nonnegative");
  Truncation t = build(p, degree_bound, filter);
  return t.n_monomials - t.ech.rank();
}

long window_dimension(long p, long window, long degree_bound, std::optional<Z2Grading> filter) {
  if (window > degree_bound) throw DomainError("window must not exceed the degree bound");
  Truncation t = build(p, degree_bound, filter);
  long r0 = t.ech.rank();
  // dim(J_D + V_W) - dim(J_D)
  for (auto& [m, c] : t.col)
    if (m.degree() <= window) t.ech.insert({{c, GaussRat(1)}});
  return t.ech.rank() - r0;
}

JprimeReport verify_Jprime_containment(long p) {
  if (p < 2 || p % 2) throw DomainError("verify_Jprime_containment: p must be even and >= 2");
  JprimeReport rep;
  rep.contained = true;
  for (auto& f : relation_families(p)) {
    for (int odd = 0; odd < 2; ++odd) {
      const auto& core = odd ? f.odd_core : f.even_core;
      if (!core) continue;
      JprimeFamilyReport r{f.family_index, odd == 1, false, false, true, {}};
      Z2Grading g = grading_of(*core);
      for (auto& [m, c] : core->terms())
        if (!(monomial_grading(m) == g)) r.ok = false;  // inhomogeneous core
      // multiplier grading that lands in V is g itself (xor with (0,0) target)
      int sel = f.parity_k ? g.a : g.b;
      r.lands_in_V = sel == odd;
      if (r.lands_in_V) {
        r.pure_z_multipliers = g.a == g.b;
        if (r.pure_z_multipliers)
          for (auto& [m, c] : core->terms())
            if (m.k == 0 && m.l == 0) r.offending.push_back(m);
        if (!r.offending.empty()) r.ok = false;
      }
      if (!r.ok) rep.contained = false;
      rep.families.push_back(std::move(r));
    }
  }
  return rep;
}

}  // namespace skein
