#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "skein/linalg.hpp"
#include "skein/matrix_rep.hpp"

using namespace skein;

namespace {

CycNum Q(long n, long d = 1) { return CycNum(1, Rational(n, d)); }
Mat2 M(long a, long b, long c, long d) { return Mat2::of(a, b, c, d); }
Mat2 E(int i, int j) { return Mat2::unit(i, j); }

std::size_t span_dim(const std::vector<Mat2>& ms) {
  long n = 1;
  for (auto& m : ms) n = lcm_long(n, m.order());
  FieldMatrix<CycNum> F(ms.size(), 4, CycNum(n));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto e = ms[i].lift(n).entries();
    for (int j = 0; j < 4; ++j) F.at(i, j) = e[j];
  }
  return field_rank(F);
}

SubalgebraClass closure_of(std::vector<Mat2> g) { return algebra_closure(g); }

}  // namespace

TEST_CASE("closure examples") {
  auto d = closure_of({Mat2::of(2, 0, 0, Rational(1, 2))});
  CHECK(d.tag == AlgTag::D);
  CHECK(d.dim() == 2);
  auto m = closure_of({Mat2::of(2, 0, 0, Rational(1, 2)), M(0, 1, 1, 0)});
  CHECK(m.tag == AlgTag::M2);
  CHECK(m.dim() == 4);
  auto j = closure_of({Mat2::identity(), M(1, 1, 0, 1)});
  CHECK(j.tag == AlgTag::J);
  CHECK(j.dim() == 2);
  auto u = closure_of({Mat2::of(2, 1, 0, Rational(1, 2))});
  CHECK(u.tag == AlgTag::OTHER);  // one non-diagonal semisimple matrix: a conjugate of D
  CHECK(u.dim() == 2);
  CHECK(closure_of({Mat2::of(2, 0, 0, Rational(1, 2)), M(1, 1, 0, 1)}).tag == AlgTag::U);
  CHECK(closure_of({Mat2::of(2, 0, 0, Rational(1, 2)), M(1, 0, 1, 1)}).tag == AlgTag::L);
  CHECK(closure_of({Mat2::identity()}).dim() == 1);
  CHECK(m.contains(E(2, 1)));
  CHECK(!d.contains(E(1, 2)));
}

TEST_CASE("closure dimension matches span of short words") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<long> c(-2, 2);
  for (int t = 0; t < 100; ++t) {
    std::vector<Mat2> g{M(c(rng), c(rng), c(rng), c(rng)), M(c(rng), c(rng), c(rng), c(rng))};
    // words of length <= 3 already span the closure in dimension <= 4
    std::vector<Mat2> words{Mat2::identity()};
    std::vector<Mat2> layer{Mat2::identity()};
    for (int len = 0; len < 3; ++len) {
      std::vector<Mat2> next;
      for (auto& w : layer)
        for (auto& x : g) next.push_back(w * x);
      words.insert(words.end(), next.begin(), next.end());
      layer = next;
    }
    auto cl = algebra_closure(g);
    CHECK(cl.dim() == span_dim(words));
    for (auto& w : words) CHECK(cl.contains(w));
  }
}

TEST_CASE("separating witnesses") {
  SubalgebraClass U = closure_of({Mat2::of(2, 0, 0, Rational(1, 2)), M(1, 1, 0, 1)});
  SubalgebraClass L = closure_of({Mat2::of(2, 0, 0, Rational(1, 2)), M(1, 0, 1, 1)});
  SubalgebraClass D = closure_of({Mat2::of(3, 0, 0, Rational(1, 3))});
  SubalgebraClass J = closure_of({M(1, 1, 0, 1)});
  REQUIRE(J.tag == AlgTag::J);

  auto w1 = separating_witness(U, L, D);
  REQUIRE(w1);
  CHECK(w1->a1 == E(1, 2));
  CHECK(w1->a2 == E(2, 1));
  CHECK(w1->a3 == E(1, 1));
  CHECK(w1->tr_123 == Q(1));
  CHECK(w1->tr_132 == Q(0));

  auto w2 = separating_witness(U, L, J);
  REQUIRE(w2);
  CHECK(w2->a1 == E(1, 1));
  CHECK(w2->a2 == E(2, 1));
  CHECK(w2->a3 == E(1, 2));
  CHECK(w2->tr_123 == Q(0));
  CHECK(w2->tr_132 == Q(1));

  CHECK(!separating_witness(D, D, D));
}

TEST_CASE("square roots") {
  CHECK(sl2_sqrt(Mat2::identity()) == Mat2::identity());
  Mat2 r = sl2_sqrt(-Mat2::identity());
  CHECK(r == Mat2::diag(CycNum::zeta(4), -CycNum::zeta(4)));
  Mat2 s = sl2_sqrt(Mat2::of(4, 0, 0, Rational(1, 4)));
  CHECK((s == Mat2::of(2, 0, 0, Rational(1, 2)) || s == Mat2::of(-2, 0, 0, Rational(-1, 2))));
  // no square root of minus a nontrivial unipotent in SL2
  CHECK_THROWS_AS(sl2_sqrt(-M(1, 1, 0, 1)), DomainError);

  std::mt19937 rng(12);
  std::uniform_int_distribution<long> c(-3, 3);
  int tried = 0;
  for (int t = 0; t < 200 && tried < 40; ++t) {
    // products of elementary matrices stay in SL2(Z)
    Mat2 m = M(1, c(rng), 0, 1) * M(1, 0, c(rng), 1) * M(1, c(rng), 0, 1);
    try {
      Mat2 root = sl2_sqrt(m);
      CHECK(root * root == m);
      CHECK(root.det() == Q(1));
      ++tried;
    } catch (const DomainError&) {
      // tr m = -2 non-scalar, or sqrt(tr + 2) outside the fields we search
    }
  }
  CHECK(tried > 10);

  for (long n = -30; n <= 30; ++n) {
    auto q = rational_sqrt(Rational(n));
    REQUIRE(q);
    CHECK(*q * *q == CycNum(1, Rational(n)));
  }
  auto h = rational_sqrt(Rational(3, 8));
  REQUIRE(h);
  CHECK(*h * *h == CycNum(1, Rational(3, 8)));
}

TEST_CASE("irreducibility") {
  CHECK(!is_irreducible(Mat2::of(2, 0, 0, Rational(1, 2)), Mat2::of(3, 0, 0, Rational(1, 3))));
  CHECK(is_irreducible(M(1, 1, 0, 1), M(1, 0, 1, 1)));
  CHECK(!is_irreducible(Mat2::identity(), M(1, 0, 1, 1)));
}

TEST_CASE("trace triples") {
  CycNum z6 = CycNum::zeta(6);
  auto [q1, q2] = trace_triple_realize(z6, z6, CycNum(6));
  CHECK((q1 * q2).trace() == Q(-1));
  CHECK((q1 * q2).trace() == CycNum::zeta(3) + CycNum::zeta(3, -1));
  CHECK(q1.det() == Q(1));
  CHECK(q2.det() == Q(1));
  for (long k = 1; k <= 5; ++k) {
    CycNum s(1, Rational(k));
    auto [a, b] = trace_triple_realize(CycNum::zeta(5), CycNum::zeta(7), s);
    CHECK(is_irreducible(a, b));
    CHECK((a * b).trace() == CycNum::zeta(5) * CycNum::zeta(7) + (CycNum::zeta(5) * CycNum::zeta(7)).inv() + s);
  }
}

TEST_CASE("standard position") {
  Mat2 m = M(2, 1, 1, 1);  // eigenvalues (3 +- sqrt 5)/2
  auto P = standard_position(m);
  REQUIRE(P);
  CHECK((P->inv() * m * *P).is_diagonal());
  Mat2 u = M(3, 1, -4, -1);  // (tr 2, det 1) defective
  auto Pu = standard_position(u);
  REQUIRE(Pu);
  Mat2 c = Pu->inv() * u * *Pu;
  CHECK(c.c.is_zero());
  CHECK(!c.is_diagonal());
}

TEST_CASE("printing") {
  CHECK(M(1, 2, 3, 4).str() == "[[1, 2], [3, 4]]");
  CHECK(tag_str(AlgTag::M2) == "M2");
}
