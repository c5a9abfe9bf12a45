#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith/minkowski.hpp"
#include "arith/modgroup.hpp"

using namespace arith;

namespace {

HPoint two_i() { return HPoint(Rat(0), Rat(2), Int(1)); }

SL2 random_sl2(std::mt19937_64& rng, int len = 8) {
  SL2 g;
  std::uniform_int_distribution<long> shear(-3, 3);
  for (int k = 0; k < len; ++k) {
    if (rng() & 1)
      g = g * SL2::shear(shear(rng));
    else
      g = g * SL2::inversion();
  }
  return g;
}

HPoint random_point(std::mt19937_64& rng) {
  static const long radicands[] = {1, 2, 3, 7, 11};
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12), rnum(1, 20);
  return HPoint(make_rat(num(rng), den(rng)), make_rat(rnum(rng), den(rng)),
                Int(radicands[rng() % 5]));
}

}  // namespace

TEST_CASE("SL2 construction validates the determinant") {
  CHECK_THROWS_AS(SL2(1, 1, 1, 1), input_error);
  CHECK_NOTHROW(SL2(2, 1, 1, 1));
}

TEST_CASE("HPoint normalizes its radicand") {
  HPoint z(Rat(0), Rat(1), Int(12));  // sqrt(12) = 2 sqrt(3)
  CHECK(z.im_coeff == 2);
  CHECK(z.im_radicand == 3);
  CHECK_THROWS_AS(HPoint(Rat(0), Rat(0), Int(1)), input_error);
  CHECK_THROWS_AS(HPoint(Rat(0), Rat(-1), Int(2)), input_error);
}

TEST_CASE("moebius action: fixed point, translation, inversion") {
  HPoint i(Rat(0), Rat(1), Int(1));
  CHECK(moebius(SL2::inversion(), i) == i);  // S fixes i

  HPoint z(make_rat(1, 3), make_rat(2, 5), Int(7));
  HPoint tz = moebius(SL2::shear(1), z);
  CHECK(tz.re == z.re + 1);
  CHECK(tz.im_coeff == z.im_coeff);
  CHECK(tz.im_radicand == z.im_radicand);

  // S(2i) = i/2
  HPoint s2i = moebius(SL2::inversion(), two_i());
  CHECK(s2i.re == 0);
  CHECK(s2i.im_coeff == make_rat(1, 2));
  CHECK(s2i.im_radicand == 1);
}

TEST_CASE("moebius action law and radicand preservation") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    SL2 g1 = random_sl2(rng), g2 = random_sl2(rng);
    HPoint z = random_point(rng);
    CHECK(moebius(g1 * g2, z) == moebius(g1, moebius(g2, z)));
    CHECK(moebius(g1, z).im_radicand == z.im_radicand);
  }
}

TEST_CASE("reduction to the fundamental domain: worked examples") {
  DomainReduction r = reduce_to_domain(HPoint(Rat(0), Rat(1), Int(1)));
  CHECK(r.gamma == SL2());
  CHECK(r.z == HPoint(Rat(0), Rat(1), Int(1)));

  // 5 + 2i -> 2i by T^-5
  r = reduce_to_domain(HPoint(Rat(5), Rat(2), Int(1)));
  CHECK(r.z == two_i());
  CHECK(r.gamma == SL2(1, -5, 0, 1));
  CHECK(r.word.to_string() == "T^-1 T^-1 T^-1 T^-1 T^-1");

  // i/2 -> 2i by S
  r = reduce_to_domain(HPoint(Rat(0), make_rat(1, 2), Int(1)));
  CHECK(r.z == two_i());
  CHECK(r.gamma == SL2::inversion());
  CHECK(r.word.to_string() == "S");
}

TEST_CASE("reduction invariants on random points") {
  std::mt19937_64 rng(29);
  Rat half = make_rat(1, 2);
  for (int t = 0; t < 200; ++t) {
    HPoint z = random_point(rng);
    DomainReduction r = reduce_to_domain(z);
    CHECK(abs_rat(r.z.re) <= half);
    CHECK(r.z.norm_squared() >= 1);
    CHECK(moebius(r.gamma, z) == r.z);
    CHECK(r.word.evaluate() == r.gamma);
  }
}

TEST_CASE("imaginary part is maximal over small matrices at the reduced point") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 10; ++t) {
    DomainReduction r = reduce_to_domain(random_point(rng));
    // Im(g z) = Im(z)/|cz+d|^2: compare Im^2 exactly over all |entries| <= 2
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        for (long c = -2; c <= 2; ++c)
          for (long d = -2; d <= 2; ++d) {
            if (a * d - b * c != 1) continue;
            HPoint gz = moebius(SL2(a, b, c, d), r.z);
            CHECK(gz.im_squared() <= r.z.im_squared());
          }
  }
}

TEST_CASE("word decomposition in S and T") {
  GeneratorWord w = decompose_st(SL2::inversion());
  CHECK(w.to_string() == "S");

  SL2 t3 = SL2::shear(3);
  w = decompose_st(t3);
  CHECK(w.to_string() == "T T T");

  SL2 g(2, 1, 1, 1);
  w = decompose_st(g);
  SL2 v = w.evaluate();
  CHECK((v == g || v == g.negated()));

  // identity and the center
  CHECK(decompose_st(SL2()).tokens.empty());
  CHECK(decompose_st(SL2(-1, 0, 0, -1)).tokens.empty());
}

TEST_CASE("word decomposition round-trips on random matrices") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    SL2 g = random_sl2(rng, 10);
    SL2 v = decompose_st(g).evaluate();
    CHECK((v == g || v == g.negated()));
  }
}

TEST_CASE("congruence subgroup membership") {
  CHECK(in_congruence_subgroup(IMat::identity(3), Int(5)));
  CHECK_FALSE(in_congruence_subgroup(SL2::shear(1).to_matrix(), Int(2)));
  IMat g(2, 2, {4, 3, 5, 4});  // det 1
  CHECK_FALSE(in_congruence_subgroup(g, Int(3)));
  CHECK(in_congruence_subgroup(g, Int(1)));
  CHECK_THROWS_AS(in_congruence_subgroup(g, Int(0)), input_error);
}

TEST_CASE("element orders") {
  CHECK(element_order(SL2::inversion().to_matrix()) == Int(4));   // S^2 = -I
  CHECK(element_order(IMat(2, 2, {1, -1, 1, 0})) == Int(6));      // A^6 = I
  CHECK_FALSE(element_order(SL2::shear(1).to_matrix()).has_value());
  CHECK(element_order(IMat::identity(2)) == Int(1));
  IMat minus = -IMat::identity(2);
  CHECK(element_order(minus) == Int(2));
  CHECK_THROWS_AS(element_order(IMat(2, 2, {2, 0, 0, 1})), input_error);
}

TEST_CASE("orders found by direct powering agree") {
  // independent oracle: increment k until gamma^k = I (bounded sweep)
  auto brute_order = [](const IMat& g, long cap) -> std::optional<Int> {
    IMat p = g;
    for (long k = 1; k <= cap; ++k) {
      if (p == IMat::identity(g.rows())) return Int(k);
      p = p * g;
    }
    return std::nullopt;
  };
  std::vector<IMat> samples = {SL2::inversion().to_matrix(), IMat(2, 2, {1, -1, 1, 0}),
                               IMat(2, 2, {0, -1, 1, -1}), IMat::identity(2)};
  for (const IMat& g : samples) CHECK(element_order(g) == brute_order(g, 30));
}

TEST_CASE("principal congruence subgroups mod p >= 3 are torsion free") {
  IMat u = IMat::identity(2);
  u(0, 1) = 3;  // I + 3 E12
  TorsionFreeVerdict v = verify_torsion_free_mod_p(Int(3), u);
  CHECK(v.infinite_order);

  // 50 random nontrivial products of Gamma(3) generators
  std::mt19937_64 rng(61);
  IMat t3 = IMat::identity(2);
  t3(0, 1) = 3;
  IMat l3 = IMat::identity(2);
  l3(1, 0) = 3;
  IMat t3i = inverse_unimodular(t3), l3i = inverse_unimodular(l3);
  std::vector<IMat> gens{t3, l3, t3i, l3i};
  int tested = 0;
  for (int t = 0; tested < 50 && t < 200; ++t) {
    IMat g = IMat::identity(2);
    for (int k = 0; k < 6; ++k) g = g * gens[rng() % 4];
    if (g == IMat::identity(2)) continue;
    ++tested;
    CHECK(verify_torsion_free_mod_p(Int(3), g).infinite_order);
  }
  CHECK(tested == 50);

  // p = 2 really is excluded: -I = I mod 2 has order 2
  IMat minus = -IMat::identity(2);
  CHECK(in_congruence_subgroup(minus, Int(2)));
  CHECK(element_order(minus) == Int(2));
  CHECK_THROWS_AS(verify_torsion_free_mod_p(Int(2), minus), input_error);

  // precondition errors
  CHECK_THROWS_AS(verify_torsion_free_mod_p(Int(3), SL2::shear(1).to_matrix()), input_error);
  CHECK_THROWS_AS(verify_torsion_free_mod_p(Int(3), IMat::identity(2)), input_error);
}

TEST_CASE("free word check") {
  SL2 a(2, 1, 1, 1), b(1, 1, 1, 2);
  CHECK(free_word_check({a, b}, 8));          // the commutator-subgroup generators
  CHECK(free_word_check({SL2::shear(1)}, 10));
  CHECK_FALSE(free_word_check({SL2::inversion()}, 4));  // S^4 = I
  CHECK(free_word_check({SL2::inversion()}, 3));
}

TEST_CASE("detected finite orders divide the Minkowski bound") {
  Int m2 = minkowski_bound(2).m;
  CHECK(m2 == 24);
  std::vector<IMat> torsion = {SL2::inversion().to_matrix(), IMat(2, 2, {1, -1, 1, 0}),
                               IMat(2, 2, {0, -1, 1, -1}), -IMat::identity(2)};
  for (const IMat& g : torsion) {
    auto k = element_order(g);
    REQUIRE(k.has_value());
    CHECK(divides(*k, m2));
  }
}
