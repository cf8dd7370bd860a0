#pragma once

#include <optional>
#include <vector>

#include "octe8/rational.hpp"

namespace octe8 {

/// Dense exact-rational matrix. Everything here is exact; results are
/// independent of row/column ordering of the input.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix diagonal(const std::vector<Rat>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  RatMatrix transposed() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rat& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  std::vector<Rat> apply(const std::vector<Rat>& v) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Exact solve of A x = b by fraction-free elimination.
/// Inconsistent systems yield nullopt; underdetermined consistent systems
/// yield one particular solution.
std::optional<std::vector<Rat>> solve(const RatMatrix& A,
                                      const std::vector<Rat>& b);

int rank(const RatMatrix& A);

/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<Rat>> kernel(const RatMatrix& A);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a symmetric matrix by exact congruence diagonalization.
Signature signature(const RatMatrix& S);

/// Leading principal minors det(A[0..k, 0..k]), k = 0..n-1.
std::vector<Rat> leading_principal_minors(const RatMatrix& A);

struct Eigenspace {
  Rat lambda;
  int multiplicity = 0;
  std::vector<std::vector<Rat>> basis;
};

struct EigenReport {
  std::vector<Eigenspace> spaces;
  int residual_dim = 0;  // dimension not captured by the candidates
};

/// Kernel ranks of A - lambda*I for each candidate eigenvalue. Candidate
/// lists are how every spectrum in this library is probed; there is no
/// general root-finding.
EigenReport integer_eigenspaces(const RatMatrix& A,
                                const std::vector<Rat>& candidates);

}  // namespace octe8
