#pragma once

#include <array>
#include <vector>

#include "octe8/composition.hpp"
#include "octe8/rational.hpp"

namespace octe8 {

/// An ordered pair of composition algebras A' (left) and A (right); elements
/// of A'⊗A carry 64 coefficients with the frozen index layout
/// idx = 8*(left basis index) + (right basis index).
struct AlgebraPair {
  AlgebraSpec left;
  AlgebraSpec right;
  friend bool operator==(const AlgebraPair&, const AlgebraPair&) = default;
};

struct TensorElem {
  std::array<Rat, 64> c{};

  bool is_zero() const;
  friend bool operator==(const TensorElem&, const TensorElem&) = default;
  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  TensorElem& operator*=(const Rat& s);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) {
    return a += b;
  }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) {
    return a -= b;
  }
  friend TensorElem operator*(const Rat& s, TensorElem a) { return a *= s; }
  friend TensorElem operator-(TensorElem a) { return rat(-1) * a; }
};

TensorElem tensor_zero();
TensorElem tensor_unit(int left_idx, int right_idx, const Rat& coeff = Rat(1));
TensorElem tensor_one();
/// Q⊗x for Q in the left algebra and x in the right one.
TensorElem labeled(const AlgElem& Q, const AlgElem& x);

TensorElem tmul(const AlgebraPair& p, const TensorElem& a,
                const TensorElem& b);
/// Conjugates both tensor factors.
TensorElem tconj(const TensorElem& a);
/// Product of the factor inner products; signature (32,32) on O'⊗O.
Rat tinner(const AlgebraPair& p, const TensorElem& a, const TensorElem& b);

/// Sparse exact 64x64 operator on tensor coefficients.
class TensorOp {
 public:
  struct Entry {
    std::uint8_t col;
    Rat val;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  static TensorOp identity();
  bool is_zero() const;
  void add_entry(int row, int col, const Rat& v);
  const std::vector<Entry>& row(int r) const { return rows_[r]; }

  TensorOp& operator+=(const TensorOp& o);
  TensorOp& operator-=(const TensorOp& o);
  TensorOp& operator*=(const Rat& s);
  friend TensorOp operator+(TensorOp a, const TensorOp& b) { return a += b; }
  friend TensorOp operator-(TensorOp a, const TensorOp& b) { return a -= b; }
  friend TensorOp operator*(const Rat& s, TensorOp a) { return a *= s; }
  friend bool operator==(const TensorOp&, const TensorOp&) = default;

  TensorElem apply(const TensorElem& v) const;

 private:
  std::array<std::vector<Entry>, 64> rows_;
};

/// Operator composition a∘b (apply b first).
TensorOp compose(const TensorOp& a, const TensorOp& b);
TensorOp commutator(const TensorOp& a, const TensorOp& b);

/// Left multiplication operator: toperator(x)·coeffs(y) = coeffs(tmul(x,y)).
TensorOp toperator(const AlgebraPair& p, const TensorElem& x);
/// Right multiplication operator y -> y*x.
TensorOp right_mult_op(const AlgebraPair& p, const TensorElem& x);

}  // namespace octe8
