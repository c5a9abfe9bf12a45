#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "arith/matrix.hpp"

namespace arith {

// Freely reduced word in abstract generators: (generator index, exponent != 0)
// with adjacent entries on distinct generators.
class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<std::pair<int, long>> syllables);

  void append(int gen, const Int& exponent);  // keeps the word reduced
  const std::vector<std::pair<int, Int>>& syllables() const { return s_; }
  bool empty() const { return s_.empty(); }

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& o) const;
  static FreeWord commutator(const FreeWord& a, const FreeWord& b);
  FreeWord power(long e) const;

 private:
  std::vector<std::pair<int, Int>> s_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;  // each must evaluate to the identity
};

// SL2(Z) on the two unipotent generators x = [[1,1],[0,1]], y = [[1,0],[1,1]]:
// (x^-1 y x^-1)^4 = 1 and x y^-1 x = y^-1 x y^-1.
Presentation sl2_presentation_xy();
std::vector<IMat> sl2_assignment_xy();

// SL2(Z) on W = [[0,-1],[1,0]], A = [[1,-1],[1,0]]: W^2 = A^3, W^4 = 1.
Presentation sl2_presentation_wa();
std::vector<IMat> sl2_assignment_wa();

// Steinberg-style presentation of SL_N(Z), N >= 3, on the elementary
// matrices x_ij: commutator relations plus (x_12 x_21^-1 x_12)^4 = 1.
Presentation steinberg_presentation(unsigned n);
std::vector<IMat> steinberg_assignment(unsigned n);
// generator index of x_ij inside the Steinberg presentation (1-based i, j)
size_t steinberg_generator_index(unsigned n, unsigned i, unsigned j);

struct RelationReport {
  std::vector<bool> relator_holds;
  bool all_hold = true;
};

// Evaluates every relator as an exact matrix product against the assignment.
RelationReport verify_relations(const Presentation& pres, const std::vector<IMat>& assignment);

// Invariant factors d_1 | d_2 | ... of the abelianized presentation (Smith
// normal form of the relator exponent matrix); 0 entries are free factors.
// The list has one entry per generator.
std::vector<Int> abelianization(const Presentation& pres);

// Order of the abelianization: product of nonzero invariant factors, or
// nullopt when a factor is 0 (infinite group).
std::optional<Int> abelian_order(const std::vector<Int>& invariant_factors);

// g = prod x_{ij}^{a} as a sequence of (i, j, a), 0-based indices, for
// g in SL_N(Z), N >= 3; plain Euclidean column reduction, no length tuning.
std::vector<std::tuple<size_t, size_t, Int>> elementary_decompose(const IMat& g);

IMat elementary_matrix(size_t n, size_t i, size_t j, const Int& a);
IMat evaluate_elementary_word(size_t n, const std::vector<std::tuple<size_t, size_t, Int>>& word);

// The two-element generating pair of SL_N(Z): x_21 and the cyclic shift with
// corner (-1)^{N-1} (the sign that puts the shift inside SL_N).
std::pair<IMat, IMat> two_generator_pair(unsigned n);

}  // namespace arith
