#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "octe8/linalg.hpp"
#include "octe8/tensor.hpp"

namespace octe8 {

/// Which pair of composition algebras the 248-dimensional algebra is built
/// over: su(3, left ⊗ right).
enum class PairKind { OO, SplitO, SplitSplit };

const char* pair_name(PairKind k);
std::optional<PairKind> pair_from_name(std::string_view name);

enum class BasisFamily : std::uint8_t { X, Y, Z, D, S, G, A };

/// One element of the canonical 248-element basis. Off-diagonal families
/// X/Y/Z carry a tensor index 0..63 (idx = 8*left + right); diagonal families
/// D/S/G/A carry a side (0 = right algebra, 1 = left algebra) and an
/// imaginary unit 1..7.
struct BasisElement {
  BasisFamily fam;
  std::uint8_t tidx = 0;
  std::uint8_t side = 0;
  std::uint8_t unit = 0;
};

struct E8Vector {
  std::array<Rat, 248> c{};

  bool is_zero() const;
  std::vector<int> support() const;
  friend bool operator==(const E8Vector&, const E8Vector&) = default;
  E8Vector& operator+=(const E8Vector& o);
  E8Vector& operator-=(const E8Vector& o);
  E8Vector& operator*=(const Rat& s);
  friend E8Vector operator+(E8Vector a, const E8Vector& b) { return a += b; }
  friend E8Vector operator-(E8Vector a, const E8Vector& b) { return a -= b; }
  friend E8Vector operator*(const Rat& s, E8Vector a) { return a *= s; }
  friend E8Vector operator-(E8Vector a) { return rat(-1) * a; }
};

/// Adjoint action of a diagonal basis element on the three 64-dimensional
/// off-diagonal blocks. This is the faithful representation used everywhere:
/// two diagonal elements are equal exactly when their action triples agree.
struct DiagAction {
  TensorOp slot[3];  // action on X, Y, Z labels
};

using SparseVec = std::vector<std::pair<std::int16_t, Rat>>;

/// Structure table compiled to a flat integer view (all coefficients times a
/// common denominator). Used by the Jacobi sweeps; tests corrupt copies of it
/// as a negative control.
struct FastTable {
  long long denom = 1;
  std::array<std::uint32_t, 248 * 248 + 1> offsets{};
  std::vector<std::pair<std::int16_t, long long>> entries;
};

struct JacobiReport {
  long long triples_checked = 0;
  long long violations = 0;
  std::optional<std::tuple<int, int, int>> first_violation;
};

struct ClosureResult {
  bool closed = false;
  int span_dim = 0;
  int closure_dim = 0;
};

struct GradingPiece {
  Rat lambda;
  int dim = 0;
};

struct GradingReport {
  std::vector<GradingPiece> pieces;
  int residual_dim = 0;
  bool law_holds = false;
};

struct BigradingReport {
  // dims of the joint (h1, h2) eigenspaces, keyed by the eigenvalue pair
  std::vector<std::tuple<Rat, Rat, int>> pieces;
  // dims grouped by the h1 eigenvalue, in increasing eigenvalue order
  std::vector<GradingPiece> grouped;
  int residual_dim = 0;
  bool law_holds = false;
};

/// The 248-dimensional Lie algebra su(3, A'⊗A) over a pair of composition
/// algebras, with its full structure-constant table.
///
/// Construction builds the canonical basis, resolves the conventional
/// normalizations of the nested G/A families, computes all brackets, and for
/// split-left pairs verifies the battery of stated eigenvalue identities.
/// Any failure during construction throws; a successfully constructed object
/// is immutable and safe to share.
class E8Algebra {
 public:
  static constexpr int kDim = 248;

  /// Cached shared instance per pair.
  static const E8Algebra& get(PairKind kind);

  PairKind kind() const { return kind_; }
  const AlgebraPair& pair() const { return pair_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  std::string basis_name(int i) const;
  int basis_index(const BasisElement& b) const;
  int off_index(BasisFamily fam, int tidx) const;
  int diag_index(BasisFamily fam, int side, int unit) const;

  E8Vector basis_vector(int i) const;
  /// All brackets are bilinear extensions of the cached basis table.
  E8Vector bracket(const E8Vector& u, const E8Vector& v) const;
  /// acc += coeff * [e_i, e_j]
  void bracket_basis_acc(int i, int j, const Rat& coeff, E8Vector& acc) const;

  const DiagAction& diag_action(int diag_ordinal) const;  // 0..55

  RatMatrix ad_matrix(const E8Vector& u) const;
  Rat killing(const E8Vector& u, const E8Vector& v) const;
  const RatMatrix& killing_matrix() const;
  Signature killing_signature() const;

  const FastTable& fast_table() const;
  JacobiReport jacobi_full() const;
  JacobiReport jacobi_sampled(long long triples, std::uint64_t seed) const;

  ClosureResult subalgebra_closure(const std::vector<E8Vector>& span) const;
  std::vector<E8Vector> centralizer(const std::vector<E8Vector>& subspace) const;

  EigenReport ad_eigen(const E8Vector& h, const std::vector<Rat>& candidates) const;
  GradingReport grading_check(const E8Vector& h,
                              const std::vector<GradingPiece>& expected,
                              const std::vector<E8Vector>* within = nullptr) const;
  BigradingReport joint_grading_check(const E8Vector& h1, const E8Vector& h2) const;

  /// Basis of the subalgebra obtained by restricting both tensor factors to
  /// closed unit subsets. A fully selected side contributes its D/S/G/A
  /// diagonals; a 4-dimensional side contributes D/S/G over its imaginary
  /// units; a 2-dimensional side only D/S.
  std::vector<E8Vector> restricted_subalgebra(std::uint8_t left_mask,
                                              std::uint8_t right_mask) const;
  std::vector<E8Vector> e7_subspace() const;  // left restricted to {1,K,KL,L}
  std::vector<E8Vector> e6_subspace() const;  // left restricted to {1,L}
  /// su(3, left ⊗ H) with the right side restricted to {1,k,kl,l}.
  std::vector<E8Vector> e7_quaternionic_right() const;

 private:
  explicit E8Algebra(PairKind kind);

  void build_basis();
  void build_diag_actions();
  void build_decomposition_systems();
  void build_table();
  void verify_split_conventions() const;

  struct PivotSystem {
    std::vector<int> keys;  // 56 coordinate keys (slot*4096 + row*64 + col)
    RatMatrix inverse;      // 56x56
  };

  std::vector<std::pair<int, Rat>> vectorize(const DiagAction& a,
                                             int slot_mask) const;
  // Decomposes an action (available slots per mask) over the 56 diagonal
  // basis elements; throws on nonzero residual.
  std::array<Rat, 56> decompose(const DiagAction& a, int slot_mask) const;

  const SparseVec& row(int i, int j) const { return rows_[i * kDim + j]; }

  PairKind kind_;
  AlgebraPair pair_;
  std::vector<BasisElement> basis_;
  std::vector<DiagAction> diag_actions_;                     // 56
  std::vector<std::vector<std::pair<int, Rat>>> diag_cols_;  // vectorized, all slots
  PivotSystem systems_[3];  // slot masks: YZ=0b110, XZ=0b101, XY=0b011
  std::vector<SparseVec> rows_;
  mutable std::optional<RatMatrix> killing_;
  mutable std::optional<FastTable> fast_;
};

JacobiReport jacobi_full_over(const FastTable& t);
JacobiReport jacobi_sampled_over(const FastTable& t, long long triples,
                                 std::uint64_t seed);

}  // namespace octe8
