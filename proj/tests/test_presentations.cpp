#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arith/presentations.hpp"

using namespace arith;

TEST_CASE("free words stay reduced") {
  FreeWord w;
  w.append(0, Int(2));
  w.append(0, Int(-2));
  CHECK(w.empty());
  w.append(0, Int(1));
  w.append(1, Int(1));
  w.append(1, Int(-1));
  w.append(0, Int(-1));
  CHECK(w.empty());  // full telescope

  FreeWord a{{0, 1}, {1, 2}};
  FreeWord inv = a.inverse();
  CHECK((a * inv).empty());
  CHECK((inv * a).empty());
}

TEST_CASE("the two-unipotent presentation of SL2(Z) holds") {
  RelationReport r = verify_relations(sl2_presentation_xy(), sl2_assignment_xy());
  CHECK(r.all_hold);
  CHECK(r.relator_holds.size() == 2);
}

TEST_CASE("the order-4/order-6 presentation of SL2(Z) holds") {
  RelationReport r = verify_relations(sl2_presentation_wa(), sl2_assignment_wa());
  CHECK(r.all_hold);
  // sanity against the matrices themselves: W^2 = A^3 = -I
  auto m = sl2_assignment_wa();
  CHECK(m[0] * m[0] == m[1] * m[1] * m[1]);
  CHECK(m[0] * m[0] * m[0] * m[0] == IMat::identity(2));
}

TEST_CASE("elementary presentations of SL_N(Z) for N = 3, 4, 5") {
  for (unsigned n : {3u, 4u, 5u}) {
    Presentation p = steinberg_presentation(n);
    RelationReport r = verify_relations(p, steinberg_assignment(n));
    CHECK(r.all_hold);
  }
  CHECK_THROWS_AS(steinberg_presentation(2), input_error);
}

TEST_CASE("a broken assignment is reported, not hidden") {
  Presentation p = sl2_presentation_wa();
  std::vector<IMat> wrong = {IMat(2, 2, {0, -1, 1, 0}), IMat(2, 2, {1, 1, 0, 1})};
  RelationReport r = verify_relations(p, wrong);
  CHECK_FALSE(r.all_hold);
  CHECK_THROWS_AS(verify_relations(p, {IMat(2, 2, {2, 0, 0, 1}), wrong[1]}), input_error);
  CHECK_THROWS_AS(verify_relations(p, {wrong[0]}), input_error);
}

TEST_CASE("abelianizations") {
  // W^2 A^-3, W^4 has exponent matrix [[2,-3],[4,0]]: invariant factors 1, 12
  std::vector<Int> wa = abelianization(sl2_presentation_wa());
  REQUIRE(wa.size() == 2);
  CHECK(wa[0] == 1);
  CHECK(wa[1] == 12);
  CHECK(abelian_order(wa) == Int(12));

  // the commutator relations kill every generator: trivial group
  std::vector<Int> st = abelianization(steinberg_presentation(3));
  for (const Int& d : st) CHECK(d == 1);
  CHECK(abelian_order(st) == Int(1));

  // free group: no relators
  Presentation free3;
  free3.generators = {"a", "b", "c"};
  std::vector<Int> fr = abelianization(free3);
  for (const Int& d : fr) CHECK(d == 0);
  CHECK_FALSE(abelian_order(fr).has_value());
}

TEST_CASE("abelianization order 12 matches the free-rank formula inputs") {
  // index e = 12 and rank 1 + e/12 = 2: the two free generators checked in
  // the modular-group tests
  std::vector<Int> wa = abelianization(sl2_presentation_wa());
  Int e = *abelian_order(wa);
  CHECK(e == 12);
  CHECK(1 + e / 12 == 2);
}

TEST_CASE("elementary decomposition: basics") {
  CHECK(elementary_decompose(IMat::identity(3)).empty());

  IMat x12_5 = elementary_matrix(3, 0, 1, Int(5));
  auto word = elementary_decompose(x12_5);
  REQUIRE(word.size() == 1);
  CHECK(std::get<0>(word[0]) == 0);
  CHECK(std::get<1>(word[0]) == 1);
  CHECK(std::get<2>(word[0]) == 5);

  CHECK_THROWS_AS(elementary_decompose(IMat(2, 2, {1, 0, 0, 1})), input_error);
  IMat detneg = IMat::identity(3);
  detneg(0, 0) = -1;
  CHECK_THROWS_AS(elementary_decompose(detneg), input_error);
}

TEST_CASE("elementary decomposition: random round trips") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> exp(-4, 4);
  size_t total_len = 0, max_len = 0;
  for (int t = 0; t < 100; ++t) {
    // random elementary word gives a random-ish SL3(Z) element
    IMat g = IMat::identity(3);
    for (int k = 0; k < 12; ++k) {
      size_t i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      g = g * elementary_matrix(3, i, j, Int(exp(rng)));
    }
    auto word = elementary_decompose(g);
    CHECK(evaluate_elementary_word(3, word) == g);
    total_len += word.size();
    max_len = std::max(max_len, word.size());
  }
  // informational only: the classical bound says 60 factors suffice for SL3(Z)
  MESSAGE("decomposition lengths: mean ", total_len / 100.0, ", max ", max_len);
}

TEST_CASE("two-generator pair") {
  for (unsigned n : {3u, 4u, 5u, 6u}) {
    auto [x21, g] = two_generator_pair(n);
    CHECK(det(x21) == 1);
    CHECK(det(g) == 1);
  }
  CHECK_THROWS_AS(two_generator_pair(2), input_error);
}

TEST_CASE("the pair generates all elementary matrices for N = 3") {
  auto [x21, g] = two_generator_pair(3);
  IMat gi = inverse_unimodular(g);
  auto conj = [&](const IMat& m) { return g * m * gi; };
  auto comm = [](const IMat& a, const IMat& b) {
    return a * b * inverse_unimodular(a) * inverse_unimodular(b);
  };
  // conjugation by the shift permutes the elementary positions (up to sign,
  // and the corner sign is +1 for odd N)
  IMat x13 = conj(x21);           // g x_21 g^-1 = x_13
  IMat x32 = inverse_unimodular(g) * x21 * g;
  CHECK(x13 == elementary_matrix(3, 0, 2, Int(1)));
  CHECK(x32 == elementary_matrix(3, 2, 1, Int(1)));
  IMat x12 = comm(x13, x32);      // [x_13, x_32] = x_12
  CHECK(x12 == elementary_matrix(3, 0, 1, Int(1)));
  IMat x23 = comm(x21, x13);      // [x_21, x_13] = x_23
  CHECK(x23 == elementary_matrix(3, 1, 2, Int(1)));
  IMat x31 = comm(x32, x21);      // [x_32, x_21] = x_31
  CHECK(x31 == elementary_matrix(3, 2, 0, Int(1)));
}

TEST_CASE("steinberg generator indexing") {
  CHECK(steinberg_generator_index(3, 1, 2) == 0);
  CHECK(steinberg_generator_index(3, 3, 2) == 5);
  CHECK_THROWS_AS(steinberg_generator_index(3, 1, 1), input_error);
  CHECK_THROWS_AS(steinberg_generator_index(3, 4, 1), input_error);
}
