#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith/linsolve.hpp"
#include "arith/matrix.hpp"
#include "arith/smith.hpp"

using namespace arith;

TEST_CASE("rational wire format") {
  CHECK(rat_to_string(make_rat(3, 4)) == "3/4");
  CHECK(rat_to_string(make_rat(-6, 8)) == "-3/4");
  CHECK(rat_to_string(make_rat(5, 1)) == "5");
  CHECK(rat_from_string("7/2") == make_rat(7, 2));
  CHECK(rat_from_string("-9") == make_rat(-9, 1));
  CHECK(rat_from_string("4/6") == make_rat(2, 3));
  CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
  CHECK_THROWS_AS(rat_from_string("abc"), input_error);
  CHECK_THROWS_AS(rat_from_string(""), input_error);
}

TEST_CASE("rounding and floors") {
  CHECK(floor_rat(make_rat(7, 2)) == 3);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(round_rat(make_rat(1, 2)) == 1);
  CHECK(round_rat(make_rat(-1, 2)) == 0);
  CHECK(round_rat(make_rat(2, 3)) == 1);
  CHECK(round_rat(make_rat(-2, 3)) == -1);
  // |q - round(q)| <= 1/2 on a sweep
  for (long p = -40; p <= 40; ++p) {
    Rat q = make_rat(p, 7);
    Rat d = q - Rat(round_rat(q));
    CHECK(abs_rat(d) <= make_rat(1, 2));
  }
}

TEST_CASE("squarefree decomposition") {
  auto [f, s] = squarefree_decompose(Int(12));  // 12 = 2^2 * 3
  CHECK(f == 2);
  CHECK(s == 3);
  auto [f2, s2] = squarefree_decompose(Int(1));
  CHECK(f2 == 1);
  CHECK(s2 == 1);
  auto [f3, s3] = squarefree_decompose(Int(360));  // 36 * 10
  CHECK(f3 == 6);
  CHECK(s3 == 10);
}

TEST_CASE("determinants") {
  IMat a(2, 2, {2, -3, 4, 0});
  CHECK(det(a) == 12);
  CHECK(det(IMat::identity(5)) == 1);
  IMat sing(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  CHECK(det(sing) == 0);
  CHECK(is_unimodular(IMat(2, 2, {2, 1, 1, 1})));
  CHECK_FALSE(is_unimodular(IMat(2, 2, {2, 0, 0, 1})));
}

TEST_CASE("unimodular inverse and powers") {
  IMat g(2, 2, {2, 1, 1, 1});
  IMat gi = inverse_unimodular(g);
  CHECK(g * gi == IMat::identity(2));
  CHECK(pow(g, Int(0)) == IMat::identity(2));
  CHECK(pow(g, Int(3)) == g * g * g);
  CHECK(pow(g, Int(-2)) == gi * gi);
}

TEST_CASE("smith normal form: worked example") {
  // oracle: by elementary reduction, [[2,-3],[4,0]] has d1 = gcd = 1 and
  // d1*d2 = |det| = 12, so D = diag(1, 12)
  IMat a(2, 2, {2, -3, 4, 0});
  SmithForm s = smith_normal_form(a);
  CHECK(s.d(0, 0) == 1);
  CHECK(s.d(1, 1) == 12);
  CHECK(s.u * a * s.v == s.d);
  CHECK((det(s.u) == 1 || det(s.u) == -1));
  CHECK((det(s.v) == 1 || det(s.v) == -1));
}

TEST_CASE("smith normal form: identity and zero") {
  SmithForm id = smith_normal_form(IMat::identity(3));
  CHECK(id.d == IMat::identity(3));
  CHECK(id.u == IMat::identity(3));
  CHECK(id.v == IMat::identity(3));

  IMat z(2, 3);
  SmithForm zs = smith_normal_form(z);
  CHECK(zs.d == z);
}

TEST_CASE("smith normal form: random round trips with divisibility") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(1, 8), entry(-50, 50);
  for (int trial = 0; trial < 60; ++trial) {
    size_t m = dim(rng), n = dim(rng);
    IMat a(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    Int du = det(s.u), dv = det(s.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    auto f = s.invariant_factors();
    for (size_t i = 0; i + 1 < f.size(); ++i) {
      CHECK(f[i] >= 0);
      if (f[i] != 0) {
        CHECK(divides(f[i], f[i + 1]));
      } else {
        CHECK(f[i + 1] == 0);
      }
    }
    for (size_t i = 0; i < s.d.rows(); ++i)
      for (size_t j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d(i, j) == 0);
  }
}

TEST_CASE("solve_exact: identity system") {
  QMat a = QMat::identity(3);
  QMat b(3, 1);
  b(0, 0) = make_rat(1, 2);
  b(1, 0) = 3;
  b(2, 0) = make_rat(-7, 5);
  LinearSolution s = solve_exact(a, b);
  REQUIRE(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.kernel.empty());
}

TEST_CASE("solve_exact: underdetermined with kernel") {
  // [[1,1],[1,1]] x = (1,1): one equation twice; kernel spanned by (1,-1)
  QMat a(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)});
  QMat b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 1;
  LinearSolution s = solve_exact(a, b);
  REQUIRE(s.consistent);
  REQUIRE(s.kernel.size() == 1);
  CHECK(a * s.particular == b);  // residual exactly zero
  QMat k = s.kernel[0];
  QMat zero(2, 1);
  CHECK(a * k == zero);
  CHECK_FALSE(k == zero);
}

TEST_CASE("solve_exact: inconsistent") {
  QMat a(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)});
  QMat b(2, 1);
  b(0, 0) = 1;
  b(1, 0) = 0;
  CHECK_FALSE(solve_exact(a, b).consistent);
}

TEST_CASE("solve_exact: dimension mismatch is an input error") {
  QMat a(2, 2);
  QMat b(3, 1);
  CHECK_THROWS_AS(solve_exact(a, b), input_error);
}

TEST_CASE("solve_exact: random exact residuals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), den(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    size_t m = dim(rng), n = dim(rng);
    QMat a(m, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) a(i, j) = make_rat(entry(rng), den(rng));
    // right-hand side built inside the column span, so consistency is known
    QMat x(n, 1);
    for (size_t j = 0; j < n; ++j) x(j, 0) = make_rat(entry(rng), den(rng));
    QMat b = a * x;
    LinearSolution s = solve_exact(a, b);
    REQUIRE(s.consistent);
    CHECK(a * s.particular == b);
    for (const QMat& k : s.kernel) CHECK(a * k == QMat(m, 1));
  }
}
