#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/cyclotomic.hpp"

namespace skein {

// [[a, b], [c, d]] over Q(zeta_N); entries may carry different orders, the
// arithmetic lifts to the lcm as needed
struct Mat2 {
  CycNum a, b, c, d;

  static Mat2 identity() { return scalar(CycNum(1, 1)); }
  static Mat2 scalar(const CycNum& x) { return {x, CycNum(), CycNum(), x}; }
  static Mat2 diag(const CycNum& x, const CycNum& y) { return {x, CycNum(), CycNum(), y}; }
  static Mat2 of(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return {CycNum(1, a), CycNum(1, b), CycNum(1, c), CycNum(1, d)};
  }
  // elementary E_ij, 1-based
  static Mat2 unit(int i, int j);

  CycNum trace() const { return a + d; }
  CycNum det() const { return a * d - b * c; }
  Mat2 inv() const;  // requires det != 0
  Mat2 pow(long e) const;
  long order() const;  // lcm of entry orders
  Mat2 lift(long n) const { return {a.lift(n), b.lift(n), c.lift(n), d.lift(n)}; }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  bool is_diagonal() const { return b.is_zero() && c.is_zero(); }
  std::array<CycNum, 4> entries() const { return {a, b, c, d}; }
  std::string str() const;

  Mat2& operator*=(const Mat2& o);
  friend Mat2 operator*(Mat2 x, const Mat2& y) { return x *= y; }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator*(const CycNum& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

enum class AlgTag { D, U, L, J, M2, OTHER };
std::string tag_str(AlgTag t);

struct SubalgebraClass {
  AlgTag tag = AlgTag::OTHER;
  std::vector<Mat2> basis;
  std::size_t dim() const { return basis.size(); }
  bool contains(const Mat2& m) const;
};

// span of all words in gens (the identity included), classified in standard position
SubalgebraClass algebra_closure(const std::vector<Mat2>& gens);
// classification of an already-closed span
SubalgebraClass classify_span(const std::vector<Mat2>& span);

struct Witness {
  Mat2 a1, a2, a3;
  CycNum tr_123, tr_132;  // Tr(A1 A2 A3), Tr(A1 A3 A2)
};
// first basis triple with Tr(A1A2A3) != Tr(A1A3A2)
std::optional<Witness> separating_witness(const SubalgebraClass& c1, const SubalgebraClass& c2,
                                          const SubalgebraClass& ct);

// R with R^2 = m, det R = 1. Throws DomainError when no root exists or when
// sqrt(tr m + 2) is not found in a cyclotomic field.
Mat2 sl2_sqrt(const Mat2& m);
// a square root of q in some Q(zeta_N), via Gauss sums
std::optional<CycNum> rational_sqrt(const Rational& q);
// s with s^2 = x: rational, or x = w + 2 + w^-1 for a root of unity w of the field
std::optional<CycNum> cyclotomic_sqrt(const CycNum& x);

bool is_irreducible(const Mat2& a, const Mat2& b);

// q1 = [[e1, 1], [0, e1^-1]], q2 = [[e2, 0], [s, e2^-1]]; tr(q1 q2) = e1 e2 + (e1 e2)^-1 + s
std::pair<Mat2, Mat2> trace_triple_realize(const CycNum& eta1, const CycNum& eta2, const CycNum& s);

// an eigenvalue of m in its own field (or one cyclotomic step up), if found
std::optional<CycNum> field_eigenvalue(const Mat2& m);
// P with P^-1 m P diagonal (semisimple m) or upper triangular (defective m)
std::optional<Mat2> standard_position(const Mat2& m);

}  // namespace skein
