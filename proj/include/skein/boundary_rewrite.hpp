#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein {

// ((a,b)_T, (c,d)_T) on the two boundary tori; a pair (0,0) is the empty curve
struct BoundaryLabel {
  long a = 0, b = 0, c = 0, d = 0;
  friend auto operator<=>(const BoundaryLabel&, const BoundaryLabel&) = default;
  BoundaryLabel canonical() const;
  std::string str() const;
};

enum class Gen { Empty = 0, X1 = 1, X2 = 2 };
std::string gen_str(Gen g);  // "e", "x1", "x2"

using ModuleKey = std::pair<BoundaryLabel, Gen>;

class ModuleElement {
 public:
  const std::map<ModuleKey, RatFunc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const BoundaryLabel& l, Gen g, const RatFunc& c);
  void add(const BoundaryLabel& l, Gen g, RatFunc&& c);
  RatFunc coeff(const BoundaryLabel& l, Gen g) const;
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  ModuleElement scaled(const RatFunc& c) const;
  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;
  std::string str() const;  // "coeff*(a,b,c,d)*{x1}" summands

 private:
  std::map<ModuleKey, RatFunc> t_;
};

ModuleElement parse_module_element(const std::string& text);

// left multiplication by the boundary skein element (u,v,w,z), product-to-sum on each torus
ModuleElement boundary_multiply(const BoundaryLabel& m, const ModuleElement& e);

struct F12Relation {
  int index;  // 1..6
  ModuleElement lhs, rhs;
  ModuleElement difference() const { return lhs - rhs; }
};
std::vector<F12Relation> f12_relations();

struct SlopeData {
  long a1 = 1, b1 = -1, a2 = 1, b2 = 0;
  // throws DomainError naming the violated condition
  void validate() const;
};

struct Complexity {
  Rational c, neg_c1;
  friend bool operator==(const Complexity& x, const Complexity& y) { return x.c == y.c && x.neg_c1 == y.neg_c1; }
  friend bool operator<(const Complexity& x, const Complexity& y) {
    return x.c != y.c ? x.c < y.c : x.neg_c1 < y.neg_c1;
  }
  std::string str() const;
};

long c1_of(const BoundaryLabel& x, const SlopeData& s);
long c2_of(const BoundaryLabel& x, const SlopeData& s);
Complexity complexity(const BoundaryLabel& x, const SlopeData& s);
bool is_reducible(const BoundaryLabel& x, const SlopeData& s);

struct NotReducible : DomainError {
  using DomainError::DomainError;
};
// a rewrite whose output did not descend; never expected
struct DescentFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct ReduceTerm {
  RatFunc coeff;
  BoundaryLabel label;
  Gen gen;
};
struct ReduceStep {
  std::string rule;          // "c2" or "c1"
  int relation = 0;          // which relation was multiplied
  BoundaryLabel multiplier;  // left factor, oriented
  std::vector<ReduceTerm> terms;
};
ReduceStep reduce_step_detail(const BoundaryLabel& x, Gen gen, const SlopeData& s);
std::vector<ReduceTerm> reduce_step(const BoundaryLabel& x, Gen gen, const SlopeData& s);

struct NormalizeLog {
  BoundaryLabel label;
  Gen gen;
  std::string rule;
  std::size_t n_terms;
};
struct NormalizeResult {
  ModuleElement element;
  std::vector<NormalizeLog> log;
  long rounds = 0;
  bool complete = true;  // false when max_steps ran out
};
NormalizeResult normalize(const ModuleElement& e, const SlopeData& s, long max_steps);

// Number of complexity values strictly below that of x.
long complexity_values_below(const BoundaryLabel& x, const SlopeData& s);

// Fill torus `boundary` (1 or 2) along its distinguished slope: T_m(c) -> T_m(-A^2-A^-2).
ModuleElement dehn_fill_quotient(const ModuleElement& e, int boundary, long a, long b, const SlopeData& s);

}  // namespace skein
