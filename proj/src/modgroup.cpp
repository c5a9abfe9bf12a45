#include "arith/modgroup.hpp"

#include <algorithm>

#include "arith/minkowski.hpp"

namespace arith {

SL2::SL2(Int a_, Int b_, Int c_, Int d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c != 1) throw input_error("matrix is not in SL2(Z)");
}

SL2 SL2::shear(const Int& n) { return SL2(1, n, 0, 1); }
SL2 SL2::inversion() { return SL2(0, -1, 1, 0); }

SL2 SL2::operator*(const SL2& o) const {
  return SL2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

IMat SL2::to_matrix() const {
  IMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

SL2 SL2::from_matrix(const IMat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw input_error("SL2 element must be 2x2");
  return SL2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

void GeneratorWord::push(Token t) {
  if (!tokens.empty()) {
    Token last = tokens.back();
    bool cancels = (last == Token::T && t == Token::TInv) ||
                   (last == Token::TInv && t == Token::T) ||
                   (last == Token::S && t == Token::S);  // S^2 = -Id, central
    if (cancels) {
      tokens.pop_back();
      return;
    }
  }
  tokens.push_back(t);
}

SL2 GeneratorWord::evaluate() const {
  SL2 g;
  for (Token t : tokens) {
    switch (t) {
      case Token::S: g = g * SL2::inversion(); break;
      case Token::T: g = g * SL2::shear(1); break;
      case Token::TInv: g = g * SL2::shear(-1); break;
    }
  }
  return g;
}

std::string GeneratorWord::to_string() const {
  std::string s;
  for (Token t : tokens) {
    if (!s.empty()) s += ' ';
    s += (t == Token::S) ? "S" : (t == Token::T) ? "T" : "T^-1";
  }
  return s;
}

HPoint moebius(const SL2& g, const HPoint& z) {
  // (a z + b)(conj(c z + d)) has imaginary part Im(z) (det = 1) and real part
  // ac|z|^2 + (ad + bc) Re(z) + bd, all rational in Re(z) and Im(z)^2.
  Rat x = z.re;
  Rat y2 = z.im_squared();
  Rat den = (Rat(g.c) * x + Rat(g.d)) * (Rat(g.c) * x + Rat(g.d)) + Rat(g.c * g.c) * y2;
  Rat re = (Rat(g.a * g.c) * (x * x + y2) + Rat(g.a * g.d + g.b * g.c) * x + Rat(g.b * g.d)) / den;
  return HPoint(re, z.im_coeff / den, z.im_radicand);
}

DomainReduction reduce_to_domain(const HPoint& z0) {
  DomainReduction r;
  r.z = z0;
  Rat half(1, 2);
  std::vector<Token> applied;  // in application order

  for (;;) {
    if (abs_rat(r.z.re) > half) {
      Int n = round_rat(r.z.re);
      r.gamma = SL2::shear(-n) * r.gamma;
      r.z.re -= Rat(n);
      Token tok = n > 0 ? Token::TInv : Token::T;
      for (Int k = abs(n); k > 0; --k) applied.push_back(tok);
    } else if (r.z.norm_squared() < 1) {
      r.gamma = SL2::inversion() * r.gamma;
      r.z = moebius(SL2::inversion(), r.z);
      applied.push_back(Token::S);
    } else {
      break;
    }
  }
  // matrices multiply left to right, with the last applied map leftmost
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) r.word.push(*it);
  return r;
}

GeneratorWord decompose_st(const SL2& gamma) {
  HPoint base(Rat(0), Rat(2), Int(1));  // 2i, interior to the domain
  DomainReduction red = reduce_to_domain(moebius(gamma, base));
  if (red.z != base)
    throw integrity_error("reduction of gamma(2i) did not return to 2i");
  // red.gamma * gamma fixes 2i, so it is +-Id and gamma = +-red.gamma^-1.
  GeneratorWord word;
  for (auto it = red.word.tokens.rbegin(); it != red.word.tokens.rend(); ++it) {
    switch (*it) {
      case Token::S: word.push(Token::S); break;  // S^-1 = -S
      case Token::T: word.push(Token::TInv); break;
      case Token::TInv: word.push(Token::T); break;
    }
  }
  SL2 value = word.evaluate();
  if (!(value == gamma) && !(value == gamma.negated()))
    throw integrity_error("S,T word does not evaluate to +-gamma");
  return word;
}

bool in_congruence_subgroup(const IMat& gamma, const Int& a) {
  if (a < 1) throw input_error("congruence level must be >= 1");
  if (!gamma.is_square()) throw input_error("congruence test needs a square matrix");
  for (size_t i = 0; i < gamma.rows(); ++i)
    for (size_t j = 0; j < gamma.cols(); ++j) {
      Int e = gamma(i, j);
      if (i == j) e -= 1;
      if (!divides(a, e)) return false;
    }
  return true;
}

std::optional<Int> element_order(const IMat& gamma) {
  if (!is_unimodular(gamma)) throw input_error("element_order needs a GL_N(Z) matrix");
  size_t n = gamma.rows();
  Int m = minkowski_bound(static_cast<unsigned>(n)).m;
  IMat id = IMat::identity(n);

  // finite order implies the order divides m(N)
  if (pow(gamma, m) != id) return std::nullopt;

  std::vector<Int> divisors;
  for (Int k(1); k * k <= m; ++k) {
    if (!divides(k, m)) continue;
    divisors.push_back(k);
    if (k * k != m) divisors.push_back(m / k);
  }
  std::sort(divisors.begin(), divisors.end());
  for (const Int& k : divisors)
    if (pow(gamma, k) == id) return k;
  throw integrity_error("gamma^m = I but no divisor of m is an order");
}

TorsionFreeVerdict verify_torsion_free_mod_p(const Int& p, const IMat& gamma) {
  if (p < 3 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
    throw input_error("need a prime p >= 3");
  if (!in_congruence_subgroup(gamma, p))
    throw input_error("matrix is not congruent to the identity mod p");
  if (gamma == IMat::identity(gamma.rows())) throw input_error("matrix is the identity");

  TorsionFreeVerdict v;
  auto order = element_order(gamma);
  v.infinite_order = !order.has_value();
  v.witness = order ? "finite order " + order->get_str() : "gamma^m(N) != I";
  return v;
}

namespace {

bool words_avoid_identity(const std::vector<IMat>& letters, const IMat& current,
                          size_t last_letter, unsigned remaining) {
  size_t m = letters.size() / 2;
  for (size_t i = 0; i < letters.size(); ++i) {
    // skip the inverse of the letter just used (free reduction)
    if (last_letter != letters.size() && (i % m) == (last_letter % m) && (i / m) != (last_letter / m))
      continue;
    IMat next = current * letters[i];
    if (next == IMat::identity(2)) return false;
    if (remaining > 1 && !words_avoid_identity(letters, next, i, remaining - 1)) return false;
  }
  return true;
}

}  // namespace

bool free_word_check(const std::vector<SL2>& generators, unsigned max_len) {
  if (generators.empty()) throw input_error("need at least one generator");
  std::vector<IMat> letters;
  for (const SL2& g : generators) letters.push_back(g.to_matrix());
  for (const SL2& g : generators) letters.push_back(g.inverse().to_matrix());
  if (max_len == 0) return true;
  return words_avoid_identity(letters, IMat::identity(2), letters.size(), max_len);
}

}  // namespace arith
