#include "arith/minkowski.hpp"

#include <set>
#include <string>

namespace arith {

namespace {

bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

}  // namespace

Int gl_order_mod_p(unsigned n, const Int& p) {
  if (n < 1) throw input_error("gl_order_mod_p needs N >= 1");
  if (!is_prime(p)) throw input_error("gl_order_mod_p needs a prime modulus");
  Int pn(1);
  for (unsigned i = 0; i < n; ++i) pn *= p;
  Int order(1), pk(1);
  for (unsigned k = 0; k < n; ++k) {
    order *= (pn - pk);
    pk *= p;
  }
  return order;
}

unsigned minkowski_exponent(const Int& ell, unsigned n) {
  if (!is_prime(ell)) throw input_error("minkowski_exponent needs a prime ell");
  if (n < 1) throw input_error("minkowski_exponent needs N >= 1");
  unsigned r = 0;
  if (ell == 2) r += n;
  // terms [N / (ell-1) ell^k], k = 0, 1, ...; for ell = 2 this is [N/2^k], k >= 1...
  Int denom = ell - 1;
  if (ell == 2) denom = 2;
  while (denom <= n) {
    r += static_cast<unsigned>(Int(n / denom).get_ui());
    denom *= ell;
  }
  return r;
}

MinkowskiTable minkowski_bound(unsigned n) {
  if (n < 1) throw input_error("minkowski_bound needs N >= 1");
  MinkowskiTable t;
  t.n = n;
  // r(ell, N) = 0 once ell - 1 > N, so only primes ell <= N + 1 contribute
  for (Int ell(2); ell <= n + 1; mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t())) {
    unsigned r = minkowski_exponent(ell, n);
    if (r == 0) continue;
    t.factors[to_ulong(ell)] = r;
    for (unsigned i = 0; i < r; ++i) t.m *= ell;
  }
  return t;
}

namespace {

std::string matrix_key(const IMat& g) {
  std::string k;
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) {
      k += g(i, j).get_str();
      k += ',';
    }
  return k;
}

IMat reduce_mod(const IMat& g, const Int& p) {
  IMat r(g.rows(), g.cols());
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) {
      mpz_mod(r(i, j).get_mpz_t(), g(i, j).get_mpz_t(), p.get_mpz_t());
    }
  return r;
}

}  // namespace

InjectivityVerdict verify_injective_mod_p(const std::vector<IMat>& generators, const Int& p,
                                          size_t cap) {
  if (generators.empty()) throw input_error("need at least one generator");
  size_t n = generators[0].rows();
  for (const IMat& g : generators)
    if (!g.is_square() || g.rows() != n || !is_unimodular(g))
      throw input_error("generators must be unimodular of equal size");
  if (!is_prime(p)) throw input_error("modulus must be prime");

  InjectivityVerdict v;

  // closure under products; cap guards against infinite subgroups
  std::map<std::string, IMat> seen;
  std::vector<IMat> frontier{IMat::identity(n)};
  seen.emplace(matrix_key(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<IMat> next;
    for (const IMat& g : frontier)
      for (const IMat& s : generators) {
        IMat h = g * s;
        auto key = matrix_key(h);
        if (seen.contains(key)) continue;
        if (seen.size() >= cap) return v;  // not verified finite
        seen.emplace(key, h);
        next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  v.verified_finite = true;
  v.group_order = seen.size();

  std::set<std::string> mod_keys;
  for (const auto& [key, g] : seen) mod_keys.insert(matrix_key(reduce_mod(g, p)));
  v.injective_mod_p = mod_keys.size() == seen.size();

  Int m = minkowski_bound(static_cast<unsigned>(n)).m;
  v.order_divides_bound = divides(Int(static_cast<unsigned long>(v.group_order)), m);
  return v;
}

}  // namespace arith
