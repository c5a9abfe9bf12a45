#pragma once

#include <map>
#include <vector>

#include "arith/matrix.hpp"

namespace arith {

// Minkowski's bound: m(N) = prod over primes ell of ell^{r(ell, N)} is the
// least common multiple of the orders of the finite subgroups of GL_N(Z).
struct MinkowskiTable {
  unsigned n = 0;
  std::map<unsigned long, unsigned> factors;  // prime -> exponent, zeros omitted
  Int m = 1;
};

// |GL_N(F_p)| = (p^N - 1)(p^N - p) ... (p^N - p^{N-1}); p must be prime.
Int gl_order_mod_p(unsigned n, const Int& p);

// r(ell, N) = [N/(ell-1)] + [N/ell(ell-1)] + ... ; for ell = 2,
// N + [N/2] + [N/4] + ...
unsigned minkowski_exponent(const Int& ell, unsigned n);

MinkowskiTable minkowski_bound(unsigned n);

struct InjectivityVerdict {
  bool verified_finite = false;  // closure enumeration stayed under the cap
  bool injective_mod_p = false;
  bool order_divides_bound = false;
  size_t group_order = 0;
};

// Enumerates the subgroup generated by `generators` (cap on the closure), maps
// it into GL_N(Z/p) and checks the orders agree and divide m(N).
InjectivityVerdict verify_injective_mod_p(const std::vector<IMat>& generators, const Int& p,
                                          size_t cap = 20160);

}  // namespace arith
