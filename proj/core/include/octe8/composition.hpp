#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "octe8/rational.hpp"

namespace octe8 {

class RatMatrix;

enum class AlgKind : std::uint8_t { Octonion, SplitOctonion };

/// Signed entry of an 8x8 unit multiplication table: e_i e_j = sign * e_index.
struct UnitProduct {
  std::int8_t sign;
  std::uint8_t index;
};

/// One of the two 8-dimensional composition algebras, with its unit table.
///
/// Basis order is frozen to the row order of the multiplication tables:
/// octonions [1, i, j, k, kl, jl, il, l], split octonions
/// [1, I, J, K, KL, JL, IL, L]. The stored tables are literal transcriptions;
/// construction cross-checks them against a Cayley-Dickson doubling and
/// throws on any discrepancy.
class Algebra {
 public:
  static const Algebra& octonions();
  static const Algebra& split_octonions();

  AlgKind kind() const { return kind_; }
  bool split() const { return kind_ == AlgKind::SplitOctonion; }

  UnitProduct unit_product(int i, int j) const { return table_[i][j]; }
  const char* unit_name(int idx) const;
  /// -1 for an unknown name.
  int unit_index(std::string_view name) const;

 private:
  explicit Algebra(AlgKind kind);
  AlgKind kind_;
  UnitProduct table_[8][8];
};

/// A (sub)algebra selection: one of the two algebras together with a closed
/// subset of its basis. Bit b of `mask` selects basis unit b.
struct AlgebraSpec {
  AlgKind kind = AlgKind::Octonion;
  std::uint8_t mask = 0xff;

  const Algebra& algebra() const;
  int dim() const;
  bool split() const { return kind == AlgKind::SplitOctonion; }
  bool contains(int idx) const { return (mask >> idx) & 1; }
  std::vector<std::string> basis_names() const;
  /// True when the selected subset is closed under multiplication.
  bool closed() const;

  static AlgebraSpec full(AlgKind k) { return {k, 0xff}; }
  /// Quaternion subalgebra spanned by {1, K, KL, L} (or {1, k, kl, l}).
  static AlgebraSpec quaternion_kkl(AlgKind k);
  /// Split-complex / complex subalgebra spanned by {1, L} (or {1, l}).
  static AlgebraSpec complex_l(AlgKind k);

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Element of a composition algebra: 8 exact rational coefficients over the
/// canonical basis (coefficients outside the spec's mask stay zero).
struct AlgElem {
  AlgebraSpec spec;
  std::array<Rat, 8> c{};

  bool is_zero() const;
  friend bool operator==(const AlgElem&, const AlgElem&);

  AlgElem& operator+=(const AlgElem& o);
  AlgElem& operator-=(const AlgElem& o);
  AlgElem& operator*=(const Rat& s);
  friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
  friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }
  friend AlgElem operator*(const Rat& s, AlgElem a) { return a *= s; }
  friend AlgElem operator-(AlgElem a) { return rat(-1) * a; }
};

AlgElem alg_zero(const AlgebraSpec& spec);
AlgElem alg_unit(const AlgebraSpec& spec, int idx, const Rat& coeff = Rat(1));
AlgElem alg_one(const AlgebraSpec& spec);

AlgElem mul(const AlgElem& a, const AlgElem& b);
AlgElem conj(const AlgElem& a);
/// Identity component of a * conj(b); positive definite on O, (4,4) on O'.
Rat inner(const AlgElem& a, const AlgElem& b);
Rat norm(const AlgElem& a);

/// 8x8 matrix L_a with L_a * coeffs(x) = coeffs(a*x).
RatMatrix left_mult_operator(const AlgElem& a);

/// Null projectors L± = (1 ± L)/2 of the split octonions.
std::pair<AlgElem, AlgElem> null_projectors(const AlgebraSpec& spec);

/// Null sets N± = {I,J,K}·L±; base is 1 (I), 2 (J) or 3 (K).
AlgElem null_unit(const AlgebraSpec& spec, int base, int sign);

}  // namespace octe8
