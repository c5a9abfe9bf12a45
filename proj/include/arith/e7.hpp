#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith/exterior.hpp"
#include "arith/matrix.hpp"

namespace arith::e7 {

// Square sparse matrix over Q, row maps of column -> value.
class SpMat {
 public:
  explicit SpMat(size_t n = 56) : n_(n), rows_(n) {}
  static SpMat identity(size_t n = 56);

  size_t size() const { return n_; }
  const std::map<size_t, Rat>& row(size_t i) const { return rows_[i]; }
  Rat get(size_t i, size_t j) const;
  void add(size_t i, size_t j, const Rat& c);

  SpMat operator*(const SpMat& o) const;
  SpMat operator+(const SpMat& o) const;
  SpMat operator-(const SpMat& o) const;
  SpMat scaled(const Rat& s) const;
  SpMat transpose() const;
  bool operator==(const SpMat& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool is_zero() const;
  size_t nonzero_count() const;
  bool entries_are_integral() const;
  bool entries_in_unit_range() const;  // every entry in {-1, 0, 1}

  QMat to_dense() const;

 private:
  size_t n_;
  std::vector<std::map<size_t, Rat>> rows_;
};

// Element of the 133-dimensional algebra sl8 + Lambda^4 W acting on
// V = Lambda^2(W*) + Lambda^2(W).
struct LieElement {
  QMat lambda;       // 8x8, traceless
  ExtVector sigma;   // degree 4 over W

  LieElement();
  static LieElement from_lambda(QMat m);
  static LieElement from_sigma(ExtVector v);

  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scaled(const Rat& s) const;
  bool operator==(const LieElement& o) const;
  bool is_zero() const;
};

struct RootInfo {
  bool type_lambda = true;
  int i = -1, j = -1;            // type Lambda: eps_i - eps_j (0-based)
  uint8_t mask = 0;              // type Sigma: the 4-subset of {1..8} as a bitmask
  // Chevalley normalization of the quadrivector vectors: X_alpha =
  // sign * 1/2 e_B. The sign is forced (up to one choice per +-pair) by
  // sigma(X_alpha) = -X_-alpha; the all-plus choice fails it for the masks
  // whose complement shuffle is odd.
  int sign = 1;
  std::array<int, 8> coord{};    // 4x the mean-zero coordinate vector
  size_t negative = 0;           // index of -alpha
  std::string name;
};

// The algebra with its Chevalley-style basis {X_alpha} u {H_i}: 126 root
// vectors (56 matrix units, 70 half-quadrivectors) plus the 7 coroots of the
// simple roots. Basis of V: the 28 dual pairs e_i*^e_j* in lexicographic
// order, then the 28 direct pairs e_i^e_j.
class Algebra {
 public:
  static constexpr size_t kRepDim = 56;
  static constexpr size_t kRootCount = 126;
  static constexpr size_t kDim = 133;

  Algebra();

  // Test hook: replaces X_alpha by -X_alpha for one root and rebuilds the
  // derived data (used by the negative-control checks).
  void flip_root_sign(size_t root_index);
  int flip_of(size_t root_index) const { return flip_[root_index]; }

  const std::vector<RootInfo>& roots() const { return roots_; }
  size_t lambda_root_count() const;
  size_t sigma_root_count() const;
  size_t negative_of(size_t r) const { return roots_[r].negative; }
  std::optional<size_t> root_sum(size_t a, size_t b) const;
  // Cartan integer <alpha_r, alpha_s^v>
  int cartan_int(size_t r, size_t s) const;
  // Killing-normalized (alpha_r, alpha_s); every root has length^2 = 1/6.
  Rat root_inner(size_t r, size_t s) const;
  const std::array<size_t, 7>& simple_roots() const { return simple_; }

  LieElement root_vector(size_t r) const;
  LieElement coroot(size_t simple_idx) const;               // H_1 .. H_7
  const std::array<Rat, 8>& coroot_diag(size_t simple_idx) const;

  const SpMat& rho_basis(size_t basis_idx) const { return rho_basis_[basis_idx]; }
  const SpMat& rho_root(size_t r) const { return rho_basis_[r]; }
  SpMat rho(const LieElement& x) const;

  // Coordinates in the 133 basis; integrity error if x is outside the span.
  std::vector<Rat> coordinates(const LieElement& x) const;
  LieElement from_coordinates(const std::vector<Rat>& c) const;

  // Commutator computed in End(V) and pulled back to the basis; verifies the
  // pullback reproduces the commutator exactly (closure) before returning.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  LieElement cartan_involution(const LieElement& x) const;

  // Structure constants [b_a, b_b] = sum_c T(a,b)[c] b_c for the whole basis.
  void build_table(bool parallel = true);
  bool table_built() const { return table_built_; }
  const std::map<size_t, Rat>& table(size_t a, size_t b) const;
  // N_{alpha beta} when alpha + beta is a root (table must be built).
  Rat structure_constant(size_t ra, size_t rb) const;

  // Killing form tr(ad x . ad y), evaluated through the structure table.
  Rat killing(const LieElement& x, const LieElement& y) const;
  Rat killing_basis(size_t a, size_t b) const;

  // Trace form of the 56-dimensional representation, tr(rho(x) rho(y)).
  // On sl8 it equals 12 tr(xy) while the adjoint Killing form is 36 tr(xy);
  // the certificate suite pins both values and their exact ratio 3.
  Rat rep_trace(const LieElement& x, const LieElement& y) const;
  Rat rep_trace_basis(size_t a, size_t b) const;

  // x_alpha^{+-1} = 1 +- rho(X_alpha); rho(X_alpha)^2 = 0 makes these exact.
  SpMat group_generator(size_t r, int sign = 1) const;
  // All 252 integral symplectic generators, (x_alpha, x_alpha^-1) per root.
  std::vector<SpMat> chevalley_generators() const;
  const SpMat& symplectic_gram() const { return gram_; }

  // V-coordinate bookkeeping
  static std::pair<int, int> v_pair(size_t idx);  // 0-based (i, j), i < j
  static bool v_is_dual(size_t idx) { return idx < 28; }
  std::array<int, 8> weight_of(size_t v_idx) const;  // 4x mean-zero weight

 private:
  void build_basis();
  void rebuild_derived();
  SpMat rho_columnwise(const LieElement& x) const;
  std::vector<Rat> extract_coordinates(const SpMat& c) const;

  std::vector<RootInfo> roots_;
  std::array<size_t, 7> simple_{};
  std::vector<int> flip_;
  std::map<std::array<int, 8>, size_t> root_by_coord_;
  std::vector<SpMat> rho_basis_;                    // 133 cached matrices
  std::array<std::array<Rat, 8>, 7> coroot_diag_;   // diagonals of H_1..H_7
  QMat coroot_solver_;                              // 7x8, n = F h on the coroot span
  // probe positions: for each root, an entry of rho(X_alpha) unique to it
  std::vector<std::pair<size_t, size_t>> probe_;
  SpMat gram_;
  bool table_built_ = false;
  std::vector<std::map<size_t, Rat>> table_;        // flattened 133x133
};

// ---- certificate suite ----

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
  std::vector<size_t> roots;  // root indices the check touches
};

struct VerifyOptions {
  bool parallel = true;
  int flip_root = -1;          // negative control: flip this root's sign
  unsigned sample_pairs = 200;   // sampled root pairs for the group relations
  unsigned sample_triples = 200; // sampled basis triples for the Jacobi identity
  uint64_t seed = 0x5eed2024;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  size_t failure_count() const;
  std::vector<const CheckResult*> failures() const;
};

// Section suites. Each returns named per-check results; failures are report
// entries, never exceptions (integrity errors still throw — they mean the
// computation itself broke, not that an identity failed).
//
// Chevalley-basis identities: dimension/basis bookkeeping, bracket grading
// and closure, the coroot axioms, structure constants, the Cartan involution
// and the Killing/trace-form values.
VerificationReport verify_chevalley_basis(Algebra& algebra, const VerifyOptions& opts = {});
// Admissibility of the standard lattice: rho(X_alpha)^2 = 0, integral unit
// entries, sparsity, exp inverses, and symplectic invariance at both levels.
VerificationReport check_admissible(Algebra& algebra, const VerifyOptions& opts = {});
// Group-level relations of the generators exp(rho(X_alpha)): the sampled
// commutator identities and the degree-4 relation at every simple root.
VerificationReport verify_group_relations(Algebra& algebra, const VerifyOptions& opts = {});
// The 56 weights of V: integrality, their span inside the weight lattice
// (Smith form), and non-membership of eps1+eps2 in the root lattice.
VerificationReport weights_of_rep(Algebra& algebra);

// Runs the full certificate suite: all of the above plus the sampled Jacobi
// identities.
VerificationReport verify(const VerifyOptions& opts = {});
VerificationReport verify(Algebra& algebra, const VerifyOptions& opts);

}  // namespace arith::e7
