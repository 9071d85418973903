#include "skein/boundary_rewrite.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

#include "expr.hpp"
#include "skein/torus_skein.hpp"
#include "textfmt.hpp"

namespace skein {

namespace {

// gmp assumes canonical operands
Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::pair<long, long> canon_pair(long p, long q) {
  FGLabel l = fg_canonical(p, q);
  return {l.p, l.q};
}

// a torus pair as an element of the torus algebra; (0,0) is the identity
FGElement pair_element(long p, long q) {
  if (p == 0 && q == 0) return FGElement(LaurentPoly(1));
  return FGElement::curve(p, q);
}

// (pair, coefficient) terms of an FGElement, the empty part as (0,0)
std::vector<std::pair<std::pair<long, long>, LaurentPoly>> pair_terms(const FGElement& e) {
  std::vector<std::pair<std::pair<long, long>, LaurentPoly>> out;
  if (!e.scalar().is_zero_poly()) out.push_back({{0, 0}, e.scalar()});
  for (auto& [l, c] : e.terms()) out.push_back({{l.p, l.q}, c});
  return out;
}

}  // namespace

BoundaryLabel BoundaryLabel::canonical() const {
  auto [p1, q1] = canon_pair(a, b);
  auto [p2, q2] = canon_pair(c, d);
  return {p1, q1, p2, q2};
}

std::string BoundaryLabel::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
}

std::string gen_str(Gen g) {
  switch (g) {
    case Gen::Empty: return "e";
    case Gen::X1: return "x1";
    default: return "x2";
  }
}

void ModuleElement::add(const BoundaryLabel& l, Gen g, const RatFunc& c) {
  if (skein::is_zero(c)) return;
  auto [it, fresh] = t_.try_emplace({l.canonical(), g}, c);
  if (!fresh) {
    it->second += c;
    if (skein::is_zero(it->second)) t_.erase(it);
  }
}

void ModuleElement::add(const BoundaryLabel& l, Gen g, RatFunc&& c) {
  if (skein::is_zero(c)) return;
  auto [it, fresh] = t_.try_emplace({l.canonical(), g}, std::move(c));
  if (!fresh) {
    it->second += c;
    if (skein::is_zero(it->second)) t_.erase(it);
  }
}

RatFunc ModuleElement::coeff(const BoundaryLabel& l, Gen g) const {
  auto it = t_.find({l.canonical(), g});
  return it == t_.end() ? RatFunc() : it->second;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}
ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}
ModuleElement ModuleElement::scaled(const RatFunc& c) const {
  ModuleElement r;
  if (skein::is_zero(c)) return r;
  for (auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

std::string ModuleElement::str() const {
  textfmt::Sum s;
  for (auto& [k, c] : t_) {
    bool single = c.is_laurent() && c.num().is_monomial();
    s.add(c.str(), single, k.first.str() + "*{" + gen_str(k.second) + "}");
  }
  return s.str();
}

ModuleElement parse_module_element(const std::string& text) {
  ModuleElement r;
  for (auto& [k, c] : expr::parse(text)) {
    if (k.label.size() != 4) throw ParseError("module terms need a label (a,b,c,d)");
    Gen g = k.gen == expr::kNone ? Gen::Empty : static_cast<Gen>(k.gen);
    r.add({k.label[0], k.label[1], k.label[2], k.label[3]}, g, c);
  }
  return r;
}

ModuleElement boundary_multiply(const BoundaryLabel& m, const ModuleElement& e) {
  ModuleElement r;
  for (auto& [k, c] : e.terms()) {
    const BoundaryLabel& x = k.first;
    auto left = pair_terms(fg_multiply(pair_element(m.a, m.b), pair_element(x.a, x.b)));
    auto right = pair_terms(fg_multiply(pair_element(m.c, m.d), pair_element(x.c, x.d)));
    for (auto& [p1, c1] : left)
      for (auto& [p2, c2] : right)
        r.add({p1.first, p1.second, p2.first, p2.second}, k.second, c * RatFunc(c1 * c2));
  }
  return r;
}

std::vector<F12Relation> f12_relations() {
  auto term = [](long a, long b, long c, long d, Gen g, const LaurentPoly& k) {
    ModuleElement e;
    e.add({a, b, c, d}, g, RatFunc(k));
    return e;
  };
  LaurentPoly A = LaurentPoly::var(1), Ai = LaurentPoly::var(-1);
  LaurentPoly A2 = LaurentPoly::var(2), A2i = LaurentPoly::var(-2), one(1);
  std::vector<F12Relation> r;
  r.push_back({1, term(0, 0, 0, 1, Gen::Empty, one), term(0, 1, 0, 0, Gen::Empty, one)});
  r.push_back({2,
               term(1, 1, 0, 0, Gen::Empty, A) + term(0, 0, 1, -1, Gen::Empty, Ai) -
                   term(0, 0, 1, 1, Gen::Empty, A) - term(1, -1, 0, 0, Gen::Empty, Ai),
               ModuleElement()});
  r.push_back({3, term(0, 1, 0, 0, Gen::X1, one), term(0, 0, 0, 1, Gen::X1, one)});
  r.push_back({4, term(0, 1, 0, 0, Gen::X2, one), term(0, 0, 0, 1, Gen::X2, one)});
  r.push_back({5, term(1, 1, 0, 0, Gen::X1, A2) - term(1, -1, 0, 0, Gen::X1, A2i),
               term(0, 0, 0, 1, Gen::X2, A - Ai)});
  r.push_back({6, term(1, 1, 0, 0, Gen::X2, A2) - term(1, -1, 0, 0, Gen::X2, A2i),
               term(0, 0, 0, 1, Gen::X1, A - Ai)});
  return r;
}

void SlopeData::validate() const {
  if (a1 <= 0) throw DomainError("slope c1 needs a1 > 0");
  if (b1 >= 0) throw DomainError("slope c1 needs b1 < 0");
  if (a2 <= 0) throw DomainError("slope c2 needs a2 > 0 (orient c2 so that a2 is positive)");
  if (std::gcd(a1, b1) != 1 || std::gcd(a2, b2) != 1) throw DomainError("slope pairs must be primitive");
  // 1 - b1/a1 > max(|1 + b2/a2|, |1 - b2/a2|), cleared of denominators
  long lhs = (a1 - b1) * a2;
  long rhs = std::max(std::labs(a2 + b2), std::labs(a2 - b2)) * a1;
  if (lhs <= rhs) throw DomainError("slopes violate 1 - b1/a1 > max(|1 + b2/a2|, |1 - b2/a2|)");
}

std::string Complexity::str() const { return "(" + c.get_str() + ", " + neg_c1.get_str() + ")"; }

long c1_of(const BoundaryLabel& x, const SlopeData& s) { return std::labs(s.a1 * x.b - s.b1 * x.a); }
long c2_of(const BoundaryLabel& x, const SlopeData& s) { return std::labs(s.a2 * x.d - s.b2 * x.c); }

Complexity complexity(const BoundaryLabel& x, const SlopeData& s) {
  long c1 = c1_of(x, s), c2 = c2_of(x, s);
  Rational c = frac(c1, s.a1) + frac(c2, s.a2);
  return {c, Rational(-c1)};
}

bool is_reducible(const BoundaryLabel& x, const SlopeData& s) {
  return c2_of(x, s) > 2 * s.a2 || c1_of(x, s) > 2 * (s.a1 - s.b1);
}

ReduceStep reduce_step_detail(const BoundaryLabel& x0, Gen gen, const SlopeData& s) {
  BoundaryLabel x = x0;
  if (s.a1 * x.b - s.b1 * x.a < 0) x.a = -x.a, x.b = -x.b;
  if (s.a2 * x.d - s.b2 * x.c < 0) x.c = -x.c, x.d = -x.d;
  static const std::vector<ModuleElement> diffs = [] {
    std::vector<ModuleElement> d;
    for (auto& r : f12_relations()) d.push_back(r.difference());
    return d;
  }();
  ReduceStep st;
  if (c2_of(x, s) > 2 * s.a2) {
    st.rule = "c2";
    st.relation = gen == Gen::Empty ? 1 : gen == Gen::X1 ? 3 : 4;
    st.multiplier = {x.a, x.b, x.c, x.d - 1};
  } else if (c1_of(x, s) > 2 * (s.a1 - s.b1)) {
    st.rule = "c1";
    st.relation = gen == Gen::Empty ? 2 : gen == Gen::X1 ? 5 : 6;
    st.multiplier = {x.a - 1, x.b - 1, x.c, x.d};
  } else {
    throw NotReducible("not reducible: " + x0.str() + "*{" + gen_str(gen) + "} is inside the complexity box");
  }
  ModuleElement E = boundary_multiply(st.multiplier, diffs[st.relation - 1]);
  RatFunc kappa = E.coeff(x, gen);
  if (is_zero(kappa)) throw DescentFailure("target vanished from the multiplied relation at " + x0.str());
  RatFunc f = -kappa.inv();
  Complexity cx = complexity(x, s);
  for (auto& [k, c] : E.terms()) {
    if (k.first == x.canonical() && k.second == gen) continue;
    if (!(complexity(k.first, s) < cx))
      throw DescentFailure("no descent from " + x0.str() + " to " + k.first.str() + " via rule " + st.rule);
    st.terms.push_back({c * f, k.first, k.second});
  }
  return st;
}

std::vector<ReduceTerm> reduce_step(const BoundaryLabel& x, Gen gen, const SlopeData& s) {
  return reduce_step_detail(x, gen, s).terms;
}

namespace {

struct StepKey {
  long a1, b1, a2, b2;
  ModuleKey k;
  auto operator<=>(const StepKey&) const = default;
};
struct CachedStep {
  std::string rule;
  std::vector<ReduceTerm> terms;
};

// reduce steps depend only on (slopes, label, gen); shared across calls
std::shared_ptr<const CachedStep> cached_step(const ModuleKey& k, const SlopeData& s) {
  static std::mutex mu;
  static std::map<StepKey, std::shared_ptr<const CachedStep>> cache;
  StepKey key{s.a1, s.b1, s.a2, s.b2, k};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto st = reduce_step_detail(k.first, k.second, s);
  auto v = std::make_shared<const CachedStep>(CachedStep{st.rule, std::move(st.terms)});
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() > (1u << 20)) cache.clear();  // crude bound for long-lived processes
  cache.emplace(key, v);
  return v;
}

}  // namespace

NormalizeResult normalize(const ModuleElement& e, const SlopeData& s, long max_steps) {
  s.validate();
  NormalizeResult res;
  res.element = e;
  std::set<ModuleKey> seen;
  for (;;) {
    // reducible terms at the current maximal complexity, lexicographic order
    std::vector<ModuleKey> todo;
    std::pair<long, long> top;
    for (auto& [k, c] : res.element.terms()) {
      if (!is_reducible(k.first, s)) continue;
      // same order as Complexity, scaled by a1*a2 > 0
      long c1 = c1_of(k.first, s);
      std::pair<long, long> ck{c1 * s.a2 + c2_of(k.first, s) * s.a1, -c1};
      if (todo.empty() || top < ck) {
        todo.assign(1, k);
        top = ck;
      } else if (ck == top) {
        todo.push_back(k);
      }
    }
    if (todo.empty()) break;
    if (res.rounds >= max_steps) {
      res.complete = false;
      break;
    }
    ++res.rounds;
    for (auto& k : todo) {
      RatFunc c = res.element.coeff(k.first, k.second);
      auto step = cached_step(k, s);
      bool fresh = seen.insert(k).second;
      res.log.push_back({k.first, k.second, fresh ? step->rule : "memo", step->terms.size()});
      res.element.add(k.first, k.second, -c);
      for (auto& t : step->terms) res.element.add(t.label, t.gen, c * t.coeff);
    }
  }
  return res;
}

long complexity_values_below(const BoundaryLabel& x, const SlopeData& s) {
  Complexity cx = complexity(x, s);
  // c1/a1 + c2/a2 <= c bounds both ranges
  Rational c = cx.c;
  auto fl = [](const Rational& q) {
    Integer z;
    mpz_fdiv_q(z.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return z.get_si();
  };
  long m1 = fl(c * s.a1), m2 = fl(c * s.a2);
  long count = 0;
  for (long c1 = 0; c1 <= m1; ++c1)
    for (long c2 = 0; c2 <= m2; ++c2) {
      Rational v = frac(c1, s.a1) + frac(c2, s.a2);
      Complexity k{v, Rational(-c1)};
      if (k < cx) ++count;
    }
  return count;
}

ModuleElement dehn_fill_quotient(const ModuleElement& e, int boundary, long a, long b, const SlopeData& s) {
  if (boundary != 1 && boundary != 2) throw DomainError("boundary index must be 1 or 2");
  FGLabel want = fg_canonical(a, b);
  FGLabel have = boundary == 1 ? fg_canonical(s.a1, s.b1) : fg_canonical(s.a2, s.b2);
  if (!(want == have)) throw DomainError("filled slope must be the distinguished curve of that boundary");
  LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  ModuleElement r;
  for (auto& [k, c] : e.terms()) {
    BoundaryLabel l = k.first;
    long p = boundary == 1 ? l.a : l.c, q = boundary == 1 ? l.b : l.d;
    // is (p,q) = m*(want) for some m >= 1?
    long m = 0;
    if (!(p == 0 && q == 0)) {
      if (want.p != 0 && p % want.p == 0) m = p / want.p;
      else if (want.p == 0 && p == 0 && want.q != 0 && q % want.q == 0) m = q / want.q;
      if (m < 0) m = -m, p = -p, q = -q;
      if (m == 0 || p != m * want.p || q != m * want.q) m = 0;
    }
    if (m == 0) {
      r.add(l, k.second, c);
      continue;
    }
    LaurentPoly val;
    IntPoly t = chebyshev_T(m);
    for (auto& [ex, co] : t.terms()) val += delta.pow(static_cast<unsigned>(ex)).scaled(co);
    if (boundary == 1) l.a = l.b = 0;
    else l.c = l.d = 0;
    r.add(l, k.second, c * RatFunc(val));
  }
  return r;
}

}  // namespace skein
