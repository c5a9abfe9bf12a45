#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "arith/exterior.hpp"

using namespace arith;

namespace {

uint8_t mask_of(std::initializer_list<int> idx) {  // 1-based indices
  uint8_t m = 0;
  for (int i : idx) m |= static_cast<uint8_t>(1u << (i - 1));
  return m;
}

ExtVector e(std::initializer_list<int> idx, bool dual = false) {
  return ExtVector::basis(mask_of(idx), dual);
}

}  // namespace

TEST_CASE("wedge of basis vectors") {
  CHECK(wedge(e({1}), e({2})) == e({1, 2}));
  CHECK(wedge(e({2}), e({1})) == -e({1, 2}));      // antisymmetry
  CHECK(wedge(e({1, 2}), e({1, 3})).is_zero());    // repeated index
  CHECK(wedge(e({1, 2}), e({3, 4})) == e({1, 2, 3, 4}));
  CHECK(wedge(e({3, 4}), e({1, 2})) == e({1, 2, 3, 4}));  // even-degree factors commute
  CHECK(wedge(e({2, 3}), e({1})) == e({1, 2, 3}));        // two transpositions
  CHECK_THROWS_AS(wedge(e({1}), e({2}, true)), input_error);
}

TEST_CASE("wedge is bilinear") {
  ExtVector u = e({1}) + e({2}) * make_rat(3, 2);
  ExtVector v = e({3}) - e({4});
  ExtVector w = wedge(u, v);
  ExtVector expect = e({1, 3}) - e({1, 4}) + e({2, 3}) * make_rat(3, 2) -
                     e({2, 4}) * make_rat(3, 2);
  CHECK(w == expect);
}

TEST_CASE("degree bookkeeping") {
  CHECK(e({1, 2}).degree == 2);
  CHECK_THROWS_AS(wedge(e({1, 2, 3, 4, 5}), e({5, 6, 7, 8})), input_error);  // degree 9
  ExtVector top = wedge(e({1, 2, 3, 4}), e({5, 6, 7, 8}));
  CHECK(top.degree == 8);
  CHECK(top.coeffs.at(0xFF) == 1);
}

TEST_CASE("determinant pairing") {
  CHECK(det_pairing(e({1, 2}), e({1, 2}, true)) == 1);
  CHECK(det_pairing(e({1, 2}), e({1, 3}, true)) == 0);
  // swapped columns flip the determinant: e2* ^ e1* = -(e1* ^ e2*)
  ExtVector swapped = wedge(e({2}, true), e({1}, true));
  CHECK(det_pairing(e({1, 2}), swapped) == -1);
  CHECK_THROWS_AS(det_pairing(e({1, 2}), e({1, 2, 3}, true)), input_error);
  CHECK_THROWS_AS(det_pairing(e({1, 2}), e({1, 2})), input_error);
}

TEST_CASE("complement through the top power") {
  // e_{1234} -> +e_{5678}* (no inversions)
  ExtVector c = complement_dual(e({1, 2, 3, 4}));
  CHECK(c.dual);
  CHECK(c == e({5, 6, 7, 8}, true));
  // e_{1235}: one inversion (5 > 4), so the sign is -1
  CHECK(complement_dual(e({1, 2, 3, 5})) == -e({4, 6, 7, 8}, true));
  // consistency: wedge(x, complement(x)-as-same-variance) = top with sign +1
  for (uint8_t m = 0; m < 255; ++m) {
    if (std::popcount(static_cast<unsigned>(m)) != 4) continue;
    ExtVector x = ExtVector::basis(m);
    ExtVector cx = complement_dual(x);
    ExtVector same = ExtVector::basis(static_cast<uint8_t>(~m));
    Rat sign = cx.coeffs.at(static_cast<uint8_t>(~m));
    CHECK(wedge(x, same).coeffs.at(0xFF) == sign);
  }
}

TEST_CASE("gl8 action is a derivation") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 20; ++t) {
    QMat x(8, 8);
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = 0; j < 8; ++j) x(i, j) = entry(rng);
    ExtVector u = e({1, 3}) + e({2, 5}) * Rat(2);
    ExtVector v = e({4, 6}) - e({7, 8});
    // X(u ^ v) = Xu ^ v + u ^ Xv
    ExtVector lhs = act_gl8(x, wedge(u, v));
    ExtVector rhs = wedge(act_gl8(x, u), v) + wedge(u, act_gl8(x, v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("gl8 action matches matrix units") {
  QMat e21(8, 8);
  e21(1, 0) = 1;  // E_21: e_1 -> e_2
  CHECK(act_gl8(e21, e({1})) == e({2}));
  CHECK(act_gl8(e21, e({1, 3})) == e({2, 3}));
  CHECK(act_gl8(e21, e({1, 2})).is_zero());  // e_2 ^ e_2
  // dual action: e_i^* -> -sum_k X_ik e_k^*; E_21 kills e_1^* and maps e_2^* -> -e_1^*
  CHECK(act_gl8(e21, e({1}, true)).is_zero());
  CHECK(act_gl8(e21, e({2}, true)) == -e({1}, true));
}

TEST_CASE("duality of the actions against the pairing") {
  // <Xu, l> + <u, Xl> = 0: the dual action is minus the transpose
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int t = 0; t < 20; ++t) {
    QMat x(8, 8);
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = 0; j < 8; ++j) x(i, j) = entry(rng);
    ExtVector u = e({1, 4}) + e({2, 6}) * make_rat(-2, 3);
    ExtVector l = e({1, 4}, true) - e({3, 6}, true);
    Rat lhs = det_pairing(act_gl8(x, u), l) + det_pairing(u, act_gl8(x, l));
    CHECK(lhs == 0);
  }
}

TEST_CASE("term bookkeeping drops cancelled coefficients") {
  ExtVector u = e({1, 2}) - e({1, 2});
  CHECK(u.is_zero());
  CHECK(u.coeffs.empty());
  ExtVector v = e({1, 2});
  v.add_term(mask_of({1, 2}), Rat(-1));
  CHECK(v.is_zero());
  CHECK_THROWS_AS(v.add_term(mask_of({1, 2, 3}), Rat(1)), input_error);
}
