#pragma once

#include <array>

#include "octe8/composition.hpp"
#include "octe8/linalg.hpp"

namespace octe8 {

/// A general 3x3 matrix over a composition algebra. Used for e6 generators
/// (tracefree Hermitian boosts / anti-Hermitian rotations) and scratch work.
struct Mat3 {
  AlgebraSpec spec;
  AlgElem e[3][3];

  explicit Mat3(const AlgebraSpec& s);
  static Mat3 zero(const AlgebraSpec& s);

  Mat3 dagger() const;  // conjugate transpose
  bool is_zero() const;
  AlgElem trace() const;
  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(const Rat& s);
  friend Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
  friend Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator*(const Rat& s, Mat3 a) { return a *= s; }
};

/// Element of the Albert algebra H3(O): three real diagonal entries and
/// three octonionic off-diagonal entries, stored as the fixed coordinate
/// order (z1, z2, z3, a, b, c) with a = entry(2,3), b = entry(3,1),
/// c = entry(1,2).
struct AlbertElem {
  AlgebraSpec spec = AlgebraSpec::full(AlgKind::Octonion);
  Rat z[3];
  AlgElem a, b, c;

  AlbertElem();
  explicit AlbertElem(const AlgebraSpec& s);
  static AlbertElem identity(const AlgebraSpec& s = AlgebraSpec::full(AlgKind::Octonion));
  static AlbertElem diag(const Rat& x, const Rat& y, const Rat& z);

  bool is_zero() const;
  friend bool operator==(const AlbertElem&, const AlbertElem&);
  AlbertElem& operator+=(const AlbertElem& o);
  AlbertElem& operator-=(const AlbertElem& o);
  AlbertElem& operator*=(const Rat& s);
  friend AlbertElem operator+(AlbertElem a, const AlbertElem& b) { return a += b; }
  friend AlbertElem operator-(AlbertElem a, const AlbertElem& b) { return a -= b; }
  friend AlbertElem operator*(const Rat& s, AlbertElem a) { return a *= s; }
  friend AlbertElem operator-(AlbertElem a) { return rat(-1) * a; }

  Mat3 to_mat3() const;
  /// Hermitian part check is exact; throws if m is not Hermitian with real
  /// diagonal.
  static AlbertElem from_mat3(const Mat3& m);

  std::array<Rat, 27> coords() const;
  static AlbertElem from_coords(const std::array<Rat, 27>& v,
                                const AlgebraSpec& s = AlgebraSpec::full(AlgKind::Octonion));
  /// 27-element coordinate basis in the fixed order.
  static AlbertElem basis_element(int idx,
                                  const AlgebraSpec& s = AlgebraSpec::full(AlgKind::Octonion));
};

AlbertElem jordan(const AlbertElem& x, const AlbertElem& y);
AlbertElem freudenthal(const AlbertElem& x, const AlbertElem& y);
Rat trace(const AlbertElem& x);
Rat trace_form(const AlbertElem& x, const AlbertElem& y);
Rat albert_det(const AlbertElem& x);
/// X = X0 + (tr X / 3) I with tr X0 = 0; returns (X0, tr X).
std::pair<AlbertElem, Rat> tracefree_split(const AlbertElem& x);

/// An e6 element acting on Albert coordinates, stored as a 27x27 matrix
/// together with its dual (minus the trace-form adjoint). Boosts are
/// trace-form self-adjoint so dual = -op; rotations satisfy dual = op.
struct E6Operator {
  RatMatrix op;    // 27x27
  RatMatrix dual;  // 27x27

  static E6Operator zero();
  static E6Operator from_matrix(const RatMatrix& op);

  AlbertElem apply(const AlbertElem& x) const;
  AlbertElem apply_dual(const AlbertElem& x) const;
  E6Operator& operator+=(const E6Operator& o);
  E6Operator& operator-=(const E6Operator& o);
  E6Operator& operator*=(const Rat& s);
  friend E6Operator operator+(E6Operator a, const E6Operator& b) { return a += b; }
  friend E6Operator operator-(E6Operator a, const E6Operator& b) { return a -= b; }
  friend E6Operator operator*(const Rat& s, E6Operator a) { return a *= s; }
  friend bool operator==(const E6Operator&, const E6Operator&) = default;
};

/// Generator-level action X -> phi X + X phi† for a tracefree Hermitian
/// (boost) or anti-Hermitian (rotation) matrix phi. Throws otherwise.
E6Operator e6_from_generator(const Mat3& phi);
E6Operator e6_commutator(const E6Operator& f, const E6Operator& g);
/// Gram matrix of the trace form in Albert coordinates.
const RatMatrix& albert_gram();

/// Freudenthal's <A,B> in e6, via the defining Jordan-product form.
E6Operator cross_operator(const AlbertElem& A, const AlbertElem& B);
/// The alternate Freudenthal-product form of <A,B>; agrees with
/// cross_operator on all inputs.
E6Operator cross_operator_alternate(const AlbertElem& A, const AlbertElem& B);

}  // namespace octe8
