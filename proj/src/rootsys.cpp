#include "arith/rootsys.hpp"

#include <algorithm>
#include <map>

#include "arith/linsolve.hpp"
#include "arith/smith.hpp"

namespace arith {

namespace {

constexpr size_t kClosureCap = 2000;  // |Phi| <= 240 for everything we accept

Vec reflect(const Vec& beta, const Vec& alpha, const Rat& pairing) {
  Vec r = beta;
  for (size_t k = 0; k < r.size(); ++k) r[k] -= pairing * alpha[k];
  return r;
}

}  // namespace

Rat RootSystem::inner(const Vec& x, const Vec& y) const {
  if (x.size() != y.size()) throw input_error("inner product dimension mismatch");
  Rat s(0);
  for (size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s * scale_;
}

Rat RootSystem::cartan_pairing(const Vec& lambda, const Vec& alpha) const {
  return 2 * inner(lambda, alpha) / inner(alpha, alpha);
}

RootSystem RootSystem::generate(std::vector<Vec> simple_roots, Rat form_scale) {
  if (simple_roots.empty()) throw input_error("need at least one simple root");
  size_t dim = simple_roots[0].size();
  for (const Vec& v : simple_roots)
    if (v.size() != dim) throw input_error("simple roots must share a coordinate space");

  RootSystem rs;
  rs.simple_ = std::move(simple_roots);
  rs.scale_ = std::move(form_scale);

  size_t ell = rs.simple_.size();
  for (size_t i = 0; i < ell; ++i) {
    if (rs.inner(rs.simple_[i], rs.simple_[i]) <= 0)
      throw input_error("simple roots must have positive length");
    for (size_t j = 0; j < ell; ++j) {
      if (i == j) continue;
      Rat c = rs.cartan_pairing(rs.simple_[i], rs.simple_[j]);
      if (!is_integer(c) || c > 0 || c < -3)
        throw input_error("inconsistent Cartan data: pairing outside {0,-1,-2,-3}");
    }
  }

  // linear independence
  {
    QMat s(dim, ell);
    for (size_t j = 0; j < ell; ++j)
      for (size_t k = 0; k < dim; ++k) s(k, j) = rs.simple_[j][k];
    QMat zero(dim, 1);
    if (!solve_exact(s, zero).kernel.empty())
      throw input_error("inconsistent Cartan data: simple roots are dependent");
  }

  std::map<Vec, bool> seen;  // root -> processed
  for (const Vec& v : rs.simple_) seen.emplace(v, false);
  for (;;) {
    auto it = std::find_if(seen.begin(), seen.end(), [](const auto& p) { return !p.second; });
    if (it == seen.end()) break;
    Vec beta = it->first;
    it->second = true;
    for (const Vec& alpha : rs.simple_) {
      Rat p = rs.cartan_pairing(beta, alpha);
      if (!is_integer(p))
        throw input_error("inconsistent Cartan data: non-integral pairing under closure");
      seen.emplace(reflect(beta, alpha, p), false);
      if (seen.size() > kClosureCap)
        throw input_error("root closure did not terminate: not a finite root system");
    }
  }

  rs.roots_.reserve(seen.size());
  for (const auto& [v, done] : seen) rs.roots_.push_back(v);

  // deterministic order: height in the simple basis, then coordinates
  std::vector<std::pair<Rat, size_t>> keyed;
  keyed.reserve(rs.roots_.size());
  for (size_t i = 0; i < rs.roots_.size(); ++i) {
    Vec c = rs.simple_root_coordinates(rs.roots_[i]);
    Rat h(0);
    for (const Rat& x : c) h += x;
    keyed.emplace_back(h, i);
  }
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return rs.roots_[a.second] < rs.roots_[b.second];
  });
  std::vector<Vec> ordered;
  ordered.reserve(rs.roots_.size());
  for (const auto& [h, i] : keyed) ordered.push_back(rs.roots_[i]);
  rs.roots_ = std::move(ordered);
  return rs;
}

Vec RootSystem::simple_root_coordinates(const Vec& v) const {
  size_t dim = simple_[0].size();
  if (v.size() != dim) throw input_error("vector has wrong dimension");
  QMat s(dim, simple_.size());
  for (size_t j = 0; j < simple_.size(); ++j)
    for (size_t k = 0; k < dim; ++k) s(k, j) = simple_[j][k];
  QMat b(dim, 1);
  for (size_t k = 0; k < dim; ++k) b(k, 0) = v[k];
  LinearSolution sol = solve_exact(s, b);
  if (!sol.consistent) throw input_error("vector outside the span of the simple roots");
  Vec c(simple_.size());
  for (size_t j = 0; j < simple_.size(); ++j) c[j] = sol.particular(j, 0);
  return c;
}

bool RootSystem::contains_root(const Vec& v) const {
  return std::find(roots_.begin(), roots_.end(), v) != roots_.end();
}

IMat RootSystem::cartan_matrix() const {
  size_t ell = rank();
  IMat c(ell, ell);
  for (size_t i = 0; i < ell; ++i)
    for (size_t j = 0; j < ell; ++j) {
      Rat p = cartan_pairing(simple_[i], simple_[j]);
      if (!is_integer(p)) throw integrity_error("non-integral Cartan entry");
      c(i, j) = p.get_num();
    }
  return c;
}

Int RootSystem::weight_lattice_index() const { return abs(det(cartan_matrix())); }

Vec RootSystem::fundamental_weight(size_t i) const {
  size_t ell = rank();
  if (i >= ell) throw input_error("fundamental weight index out of range");
  // w_i = sum_k c_k alpha_k with sum_k c_k C_kj = delta_ij
  QMat ct(ell, ell);
  IMat c = cartan_matrix();
  for (size_t a = 0; a < ell; ++a)
    for (size_t b = 0; b < ell; ++b) ct(a, b) = Rat(c(b, a));
  QMat e(ell, 1);
  e(i, 0) = 1;
  LinearSolution sol = solve_exact(ct, e);
  if (!sol.consistent) throw integrity_error("Cartan matrix is singular");
  size_t dim = simple_[0].size();
  Vec w(dim, Rat(0));
  for (size_t k = 0; k < ell; ++k)
    for (size_t t = 0; t < dim; ++t) w[t] += sol.particular(k, 0) * simple_[k][t];
  return w;
}

namespace {

Vec unit_diff(size_t dim, size_t i, size_t j) {  // e_i - e_j
  Vec v(dim, Rat(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

}  // namespace

std::vector<Vec> simple_roots_A(unsigned n) {
  if (n < 1) throw input_error("A_n needs n >= 1");
  std::vector<Vec> s;
  for (unsigned i = 0; i < n; ++i) s.push_back(unit_diff(n + 1, i, i + 1));
  return s;
}

std::vector<Vec> simple_roots_D(unsigned n) {
  if (n < 3) throw input_error("D_n needs n >= 3");
  std::vector<Vec> s;
  for (unsigned i = 0; i + 1 < n; ++i) s.push_back(unit_diff(n, i, i + 1));
  Vec last(n, Rat(0));
  last[n - 2] = 1;
  last[n - 1] = 1;
  s.push_back(last);
  return s;
}

std::vector<Vec> simple_roots_E(unsigned n) {
  if (n == 7) return e7_simple_roots();
  if (n != 6 && n != 8) throw input_error("E_n needs n in {6, 7, 8}");
  // Bourbaki realization in Q^8
  std::vector<Vec> s;
  Vec a1(8, Rat(-1, 2));
  a1[0] = Rat(1, 2);
  a1[7] = Rat(1, 2);
  s.push_back(a1);
  Vec a2(8, Rat(0));
  a2[0] = 1;
  a2[1] = 1;
  s.push_back(a2);
  for (unsigned i = 0; i + 1 < n - 1; ++i) s.push_back(unit_diff(8, i + 1, i));
  return s;
}

std::vector<Vec> e7_simple_roots() {
  auto diff = [](size_t i, size_t j) { return unit_diff(8, i - 1, j - 1); };
  auto quad = [](std::initializer_list<size_t> idx) {
    // characteristic vector projected to mean zero: 1/2 on idx, -1/2 off
    Vec v(8, Rat(-1, 2));
    for (size_t i : idx) v[i - 1] = Rat(1, 2);
    return v;
  };
  return {diff(1, 2), quad({4, 5, 6, 7}), diff(2, 3), diff(3, 4),
          diff(4, 5), diff(5, 6),         diff(6, 7)};
}

Rat e7_killing_scale() { return Rat(1, 12); }

RootSystem root_system_by_name(const std::string& name) {
  if (name.size() < 2) throw input_error("root system name must look like A3, D4, E7");
  char family = name[0];
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(std::stoul(name.substr(1)));
  } catch (...) {
    throw input_error("bad root system rank in '" + name + "'");
  }
  switch (family) {
    case 'A':
    case 'a': return RootSystem::generate(simple_roots_A(n));
    case 'D':
    case 'd': return RootSystem::generate(simple_roots_D(n));
    case 'E':
    case 'e':
      return RootSystem::generate(simple_roots_E(n), n == 7 ? e7_killing_scale() : Rat(1));
    default: throw input_error("unsupported root system family '" + name + "'");
  }
}

}  // namespace arith
