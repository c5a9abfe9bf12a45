#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arith/minkowski.hpp"
#include "arith/modgroup.hpp"

using namespace arith;

namespace {

// brute-force |GL_2(F_p)|: count invertible 2x2 matrices entrywise
long count_invertible_2x2(long p) {
  long count = 0;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if ((a * d - b * c) % p != 0) ++count;
  return count;
}

unsigned valuation(Int n, const Int& p) {
  unsigned v = 0;
  while (divides(p, n)) {
    n /= p;
    ++v;
  }
  return v;
}

// multiplicative order of x modulo m
long order_mod(long x, long m) {
  long v = x % m, k = 1;
  while (v != 1) {
    v = (v * x) % m;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("group orders over prime fields") {
  CHECK(gl_order_mod_p(2, Int(3)) == 48);  // (9-1)(9-3)
  CHECK(gl_order_mod_p(2, Int(2)) == 6);   // (4-1)(4-2)
  CHECK(gl_order_mod_p(1, Int(7)) == 6);   // p - 1
  CHECK(gl_order_mod_p(2, Int(3)) == count_invertible_2x2(3));
  CHECK(gl_order_mod_p(2, Int(5)) == count_invertible_2x2(5));
  CHECK_THROWS_AS(gl_order_mod_p(2, Int(4)), input_error);
  CHECK_THROWS_AS(gl_order_mod_p(0, Int(3)), input_error);
}

TEST_CASE("exponent formulas") {
  CHECK(minkowski_exponent(Int(2), 2) == 3);  // 2 + [2/2]
  CHECK(minkowski_exponent(Int(3), 2) == 1);  // [2/2] + [2/6]
  CHECK(minkowski_exponent(Int(5), 2) == 0);  // [2/4]
  CHECK(minkowski_exponent(Int(2), 4) == 7);  // 4 + 2 + 1
  CHECK(minkowski_exponent(Int(3), 4) == 2);
  CHECK(minkowski_exponent(Int(5), 4) == 1);
  CHECK_THROWS_AS(minkowski_exponent(Int(6), 2), input_error);
}

TEST_CASE("the bounds m(2), m(3), m(4)") {
  MinkowskiTable t2 = minkowski_bound(2);
  CHECK(t2.m == 24);
  CHECK(t2.factors.at(2) == 3);
  CHECK(t2.factors.at(3) == 1);
  CHECK(t2.factors.count(5) == 0);

  CHECK(minkowski_bound(3).m == 48);
  CHECK(minkowski_bound(4).m == 5760);

  // m(N) agrees with the product recomputed from the exponents
  for (unsigned n = 1; n <= 6; ++n) {
    MinkowskiTable t = minkowski_bound(n);
    Int prod(1);
    for (const auto& [p, r] : t.factors)
      for (unsigned i = 0; i < r; ++i) prod *= p;
    CHECK(prod == t.m);
  }
}

TEST_CASE("valuation of a(N,p) against the exponents") {
  // odd ell with p generating (Z/ell^2)*: the ell-valuation is exactly r(ell,N);
  // for ell = 2 only divisibility holds (e.g. v_2(a(2,3)) = 4 > 3)
  for (unsigned n = 2; n <= 4; ++n) {
    for (long ell : {3L, 5L}) {
      if (ell > n + 1) continue;
      long p = 2;
      while (true) {
        Int pp(p);
        bool prime = mpz_probab_prime_p(pp.get_mpz_t(), 30) != 0;
        if (prime && p != ell && order_mod(p, ell * ell) == ell * (ell - 1)) break;
        ++p;
      }
      unsigned r = minkowski_exponent(Int(ell), n);
      CHECK(valuation(gl_order_mod_p(n, Int(p)), Int(ell)) == r);
    }
    // ell = 2: divisibility
    unsigned r2 = minkowski_exponent(Int(2), n);
    CHECK(valuation(gl_order_mod_p(n, Int(3)), Int(2)) >= r2);
  }
  CHECK(valuation(gl_order_mod_p(2, Int(3)), Int(2)) == 4);  // the strict case
}

TEST_CASE("injectivity of finite subgroups mod p") {
  IMat minus = -IMat::identity(2);
  InjectivityVerdict v = verify_injective_mod_p({minus}, Int(3));
  CHECK(v.verified_finite);
  CHECK(v.injective_mod_p);
  CHECK(v.group_order == 2);
  CHECK(v.order_divides_bound);

  // <S> has order 4
  v = verify_injective_mod_p({SL2::inversion().to_matrix()}, Int(5));
  CHECK(v.verified_finite);
  CHECK(v.group_order == 4);
  CHECK(v.injective_mod_p);
  CHECK(v.order_divides_bound);

  // <A> has order 6
  v = verify_injective_mod_p({IMat(2, 2, {1, -1, 1, 0})}, Int(7));
  CHECK(v.verified_finite);
  CHECK(v.group_order == 6);
  CHECK(v.injective_mod_p);
  CHECK(v.order_divides_bound);

  // rotation and reflection generate the dihedral group of the square
  v = verify_injective_mod_p({SL2::inversion().to_matrix(), IMat(2, 2, {1, 0, 0, -1})},
                             Int(5), 200);
  CHECK(v.verified_finite);
  CHECK(v.group_order == 8);
  CHECK(v.injective_mod_p);
  CHECK(v.order_divides_bound);

  // infinite group trips the cap instead of looping
  v = verify_injective_mod_p({SL2::shear(1).to_matrix()}, Int(3), 100);
  CHECK_FALSE(v.verified_finite);

  CHECK_THROWS_AS(verify_injective_mod_p({}, Int(3)), input_error);
  CHECK_THROWS_AS(verify_injective_mod_p({IMat(2, 2, {2, 0, 0, 1})}, Int(3)), input_error);
}

TEST_CASE("commutator subgroup index matches m(2)/2") {
  // the torsion-free index-12 subgroup realizes m(2)/2 = 12
  CHECK(minkowski_bound(2).m / 2 == 12);
}
