#include "arith/presentations.hpp"

#include <optional>
#include <tuple>

#include "arith/smith.hpp"

namespace arith {

FreeWord::FreeWord(std::initializer_list<std::pair<int, long>> syllables) {
  for (const auto& [g, e] : syllables) append(g, Int(e));
}

void FreeWord::append(int gen, const Int& exponent) {
  if (exponent == 0) return;
  if (!s_.empty() && s_.back().first == gen) {
    s_.back().second += exponent;
    if (s_.back().second == 0) s_.pop_back();
    return;
  }
  s_.emplace_back(gen, exponent);
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.append(it->first, -it->second);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord w = *this;
  for (const auto& [g, e] : o.s_) w.append(g, e);
  return w;
}

FreeWord FreeWord::commutator(const FreeWord& a, const FreeWord& b) {
  return a * b * a.inverse() * b.inverse();
}

FreeWord FreeWord::power(long e) const {
  FreeWord w;
  long n = e < 0 ? -e : e;
  for (long k = 0; k < n; ++k) w = w * (e < 0 ? inverse() : *this);
  return w;
}

Presentation sl2_presentation_xy() {
  Presentation p;
  p.generators = {"x", "y"};
  FreeWord x{{0, 1}}, y{{1, 1}};
  p.relators.push_back((x.inverse() * y * x.inverse()).power(4));
  // x y^-1 x = y^-1 x y^-1, written as a relator
  p.relators.push_back(x * y.inverse() * x * (y.inverse() * x * y.inverse()).inverse());
  return p;
}

std::vector<IMat> sl2_assignment_xy() {
  return {IMat(2, 2, {1, 1, 0, 1}), IMat(2, 2, {1, 0, 1, 1})};
}

Presentation sl2_presentation_wa() {
  Presentation p;
  p.generators = {"W", "A"};
  FreeWord w{{0, 1}}, a{{1, 1}};
  p.relators.push_back(w.power(2) * a.power(-3));  // W^2 = A^3
  p.relators.push_back(w.power(4));                // W^4 = 1
  return p;
}

std::vector<IMat> sl2_assignment_wa() {
  return {IMat(2, 2, {0, -1, 1, 0}), IMat(2, 2, {1, -1, 1, 0})};
}

size_t steinberg_generator_index(unsigned n, unsigned i, unsigned j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw input_error("bad x_ij indices");
  size_t idx = 0;
  for (unsigned a = 1; a <= n; ++a)
    for (unsigned b = 1; b <= n; ++b) {
      if (a == b) continue;
      if (a == i && b == j) return idx;
      ++idx;
    }
  throw integrity_error("unreachable");
}

Presentation steinberg_presentation(unsigned n) {
  if (n < 3) throw input_error("the elementary presentation needs N >= 3");
  Presentation p;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      p.generators.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  auto x = [&](unsigned i, unsigned j) {
    FreeWord w;
    w.append(static_cast<int>(steinberg_generator_index(n, i, j)), Int(1));
    return w;
  };

  // [x_ij, x_kl] = 1 when j != k and i != l (each unordered pair once)
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (unsigned k = 1; k <= n; ++k)
        for (unsigned l = 1; l <= n; ++l) {
          if (k == l || j == k || i == l) continue;
          size_t a = steinberg_generator_index(n, i, j);
          size_t b = steinberg_generator_index(n, k, l);
          if (a >= b) continue;
          p.relators.push_back(FreeWord::commutator(x(i, j), x(k, l)));
        }
    }
  // [x_ij, x_jk] = x_ik for i, j, k distinct
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      for (unsigned k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        p.relators.push_back(FreeWord::commutator(x(i, j), x(j, k)) * x(i, k).inverse());
      }
  // (x_12 x_21^-1 x_12)^4 = 1
  p.relators.push_back((x(1, 2) * x(2, 1).inverse() * x(1, 2)).power(4));
  return p;
}

IMat elementary_matrix(size_t n, size_t i, size_t j, const Int& a) {
  if (i == j || i >= n || j >= n) throw input_error("bad elementary matrix indices");
  IMat m = IMat::identity(n);
  m(i, j) = a;
  return m;
}

std::vector<IMat> steinberg_assignment(unsigned n) {
  std::vector<IMat> gens;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      gens.push_back(elementary_matrix(n, i - 1, j - 1, Int(1)));
    }
  return gens;
}

RelationReport verify_relations(const Presentation& pres, const std::vector<IMat>& assignment) {
  if (assignment.size() != pres.generators.size())
    throw input_error("assignment must map every generator");
  size_t n = assignment.empty() ? 0 : assignment[0].rows();
  std::vector<IMat> inverses;
  for (const IMat& m : assignment) {
    if (!m.is_square() || m.rows() != n) throw input_error("assignment matrices must be square, equal size");
    inverses.push_back(inverse_unimodular(m));  // also rejects non-unimodular input
  }

  RelationReport rep;
  for (const FreeWord& w : pres.relators) {
    IMat prod = IMat::identity(n);
    for (const auto& [g, e] : w.syllables()) {
      if (g < 0 || static_cast<size_t>(g) >= assignment.size())
        throw input_error("relator references an unassigned generator");
      const IMat& base = e > 0 ? assignment[g] : inverses[g];
      for (Int k = abs(e); k > 0; --k) prod = prod * base;
    }
    bool holds = prod == IMat::identity(n);
    rep.relator_holds.push_back(holds);
    rep.all_hold = rep.all_hold && holds;
  }
  return rep;
}

std::vector<Int> abelianization(const Presentation& pres) {
  size_t g = pres.generators.size();
  size_t r = pres.relators.size();
  IMat exponents(std::max<size_t>(r, 1), g);
  for (size_t i = 0; i < r; ++i)
    for (const auto& [gen, e] : pres.relators[i].syllables()) exponents(i, gen) += e;
  SmithForm sf = smith_normal_form(exponents);
  std::vector<Int> factors(g, Int(0));
  for (size_t i = 0; i < std::min(g, sf.d.rows()); ++i) factors[i] = sf.d(i, i);
  return factors;
}

std::optional<Int> abelian_order(const std::vector<Int>& invariant_factors) {
  Int order(1);
  for (const Int& d : invariant_factors) {
    if (d == 0) return std::nullopt;
    order *= d;
  }
  return order;
}

std::vector<std::tuple<size_t, size_t, Int>> elementary_decompose(const IMat& g) {
  if (!g.is_square() || g.rows() < 3) throw input_error("elementary_decompose needs N >= 3");
  if (det(g) != 1) throw input_error("elementary_decompose needs determinant 1");
  size_t n = g.rows();
  IMat w = g;
  // row ops E w = I with E elementary; record them, emit inverses in order
  std::vector<std::tuple<size_t, size_t, Int>> ops;
  auto row_op = [&](size_t r, size_t s, const Int& q) {  // row_r += q * row_s
    if (q == 0) return;
    for (size_t k = 0; k < n; ++k) w(r, k) += q * w(s, k);
    ops.emplace_back(r, s, q);
  };

  for (size_t c = 0; c < n; ++c) {
    // gcd-reduce rows c..n-1 in column c until w(c,c) = 1
    for (;;) {
      size_t nz = 0, last = c;
      for (size_t r = c; r < n; ++r)
        if (w(r, c) != 0) {
          ++nz;
          last = r;
        }
      if (nz == 0) throw integrity_error("column collapsed to zero during reduction");
      if (nz == 1) {
        if (last != c) {
          row_op(c, last, Int(1));  // bring the value into the pivot row
          continue;
        }
        // the column gcd divides the submatrix determinant 1, so the
        // surviving entry is +-1
        if (w(c, c) == 1) break;
        if (w(c, c) == -1) {
          if (c + 1 >= n) throw integrity_error("trailing pivot -1 contradicts det = 1");
          row_op(c + 1, c, Int(1));
          row_op(c, c + 1, Int(-2));
          row_op(c + 1, c, Int(1));
          break;
        }
        throw integrity_error("column gcd is not 1");
      }
      // two or more nonzeros: reduce the larger against the smaller
      size_t best = c;
      Int best_abs(0);
      for (size_t r = c; r < n; ++r) {
        if (w(r, c) == 0) continue;
        Int a = abs(w(r, c));
        if (best_abs == 0 || a < best_abs) {
          best_abs = a;
          best = r;
        }
      }
      for (size_t r = c; r < n; ++r) {
        if (r == best || w(r, c) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), w(r, c).get_mpz_t(), w(best, c).get_mpz_t());
        row_op(r, best, -q);
      }
    }
    // clear the rest of column c against the unit pivot
    for (size_t r = 0; r < n; ++r) {
      if (r == c || w(r, c) == 0) continue;
      row_op(r, c, -w(r, c));
    }
  }
  if (!(w == IMat::identity(n))) throw integrity_error("row reduction did not reach the identity");

  // E_k ... E_1 g = I, so g = E_1^-1 ... E_k^-1; inverting x_rs^q negates q
  std::vector<std::tuple<size_t, size_t, Int>> word;
  word.reserve(ops.size());
  for (const auto& [r, s, q] : ops) word.emplace_back(r, s, -q);
  return word;
}

IMat evaluate_elementary_word(size_t n,
                              const std::vector<std::tuple<size_t, size_t, Int>>& word) {
  IMat g = IMat::identity(n);
  for (const auto& [i, j, a] : word) g = g * elementary_matrix(n, i, j, a);
  return g;
}

std::pair<IMat, IMat> two_generator_pair(unsigned n) {
  if (n < 3) throw input_error("two_generator_pair needs N >= 3");
  IMat x21 = elementary_matrix(n, 1, 0, Int(1));
  IMat shift(n, n);
  for (unsigned i = 0; i + 1 < n; ++i) shift(i, i + 1) = 1;
  shift(n - 1, 0) = (n % 2 == 1) ? 1 : -1;  // (-1)^{N-1} keeps det = 1
  return {x21, shift};
}

}  // namespace arith
