#pragma once

#include <random>

#include "octe8/e8.hpp"
#include "octe8/freudenthal.hpp"
#include "octe8/report.hpp"

namespace octe8 {

/// Deterministic generator of small random rationals and algebra elements
/// (numerators and denominators bounded by 10).
struct RatRng {
  std::mt19937_64 gen;
  explicit RatRng(std::uint64_t seed) : gen(seed) {}

  Rat small() {
    long num = static_cast<long>(gen() % 19) - 9;
    long den = static_cast<long>(gen() % 9) + 1;
    return rat(num, den);
  }
  AlbertElem albert() {
    std::array<Rat, 27> v;
    for (auto& x : v) x = small();
    return AlbertElem::from_coords(v);
  }
  FTower tower() {
    FTower t;
    t.X = albert();
    t.Y = albert();
    t.p = small();
    t.q = small();
    return t;
  }
  Mat3 rotation();  // random tracefree anti-Hermitian octonionic matrix
  Mat3 boost();     // random tracefree Hermitian octonionic matrix
  Theta theta(bool with_derivation = false);
};

/// Realizes Freudenthal's e7 and its minimal representation inside the
/// (O',O) build and verifies the bracket identities connecting the two.
/// Construction resolves the trace convention for L-labeled elements and the
/// slot duality by direct probes, then freezes them.
class EmbeddingVerifier {
 public:
  explicit EmbeddingVerifier(const E8Algebra& alg);

  const E8Algebra& algebra() const { return alg_; }

  /// Q X for imaginary split Q, with the trace convention Q I -> -1/2 G_Q.
  E8Vector embed_labeled(const AlgElem& Q, const AlbertElem& X) const;
  /// L-labeled element with the footnote trace convention for "L I".
  E8Vector embed_L_labeled(const AlbertElem& X) const;
  E8Vector embed_rotation(const Mat3& m) const;
  E8Vector embed_boost(const Mat3& m) const;
  /// Any e6 operator, written exactly over the 78-dimensional e6 subalgebra.
  E8Vector embed_e6_operator(const E6Operator& phi) const;
  E8Vector embed_theta(const Theta& t) const;
  E8Vector embed_tower(const FTower& t, int sign) const;
  /// Inverse of embed_labeled on the image; throws if v is not Q-labeled.
  AlbertElem unembed_labeled(const AlgElem& Q, const E8Vector& v) const;

  AlgElem null_label(int base, int sign) const {
    return null_unit(split_, base, sign);
  }
  /// The probed coefficient c in "L I" = c G_L for the K/KL label context
  /// (the one Lemma 1 and the [K- A, K+ B] expansion use).
  const Rat& l_trace_coeff() const { return l_trace_coeff_; }
  /// The trace interpretation is label-dependent: the I/J-labeled identity
  /// [L X, I± I] needs its own coefficient, probed separately.
  const Rat& l_trace_coeff_ij() const { return l_trace_coeff_ij_; }

  Report verify_lemma1() const;
  Report verify_lemma2() const;
  Report verify_determinant(int n_random, std::uint64_t seed) const;
  Report verify_action_equivalence(int n_random, std::uint64_t seed) const;
  Report verify_e7_bracket(int n_random, std::uint64_t seed) const;
  Report verify_decomposition() const;

 private:
  void probe_trace_convention();
  void probe_duality();
  void build_e6_solver();

  E8Vector diag_vec(BasisFamily fam, int side, int unit) const;
  E8Vector null_diag(BasisFamily fam, int base, int sign) const;

  const E8Algebra& alg_;
  AlgebraSpec split_, oct_;
  Rat l_trace_coeff_;
  Rat l_trace_coeff_ij_;
  std::vector<int> e6_basis_;          // 78 basis indices of the e6 subalgebra
  std::vector<int> e6_pivot_keys_;     // 78 coordinates of vectorized operators
  RatMatrix e6_pivot_inverse_;         // 78x78
  std::vector<std::array<Rat, 729>> e6_op_columns_;
};

}  // namespace octe8
