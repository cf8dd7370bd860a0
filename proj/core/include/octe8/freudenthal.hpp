#pragma once

#include "octe8/albert.hpp"

namespace octe8 {

/// Freudenthal's e7 element (phi, rho, A, B): an e6 operator, a dilation
/// scale, and two null translations.
struct Theta {
  E6Operator phi = E6Operator::zero();
  Rat rho;
  AlbertElem A, B;

  static Theta zero() { return Theta{}; }
  Theta& operator+=(const Theta& o);
  Theta& operator*=(const Rat& s);
  friend Theta operator+(Theta a, const Theta& b) { return a += b; }
  friend Theta operator*(const Rat& s, Theta a) { return a *= s; }
  friend bool operator==(const Theta&, const Theta&) = default;
};

/// Freudenthal tower (X, Y, p, q): the 56-dimensional minimal representation.
struct FTower {
  AlbertElem X, Y;
  Rat p, q;

  static FTower zero() { return FTower{}; }
  bool is_zero() const;
  FTower& operator+=(const FTower& o);
  FTower& operator-=(const FTower& o);
  FTower& operator*=(const Rat& s);
  friend FTower operator+(FTower a, const FTower& b) { return a += b; }
  friend FTower operator-(FTower a, const FTower& b) { return a -= b; }
  friend FTower operator*(const Rat& s, FTower a) { return a *= s; }
  friend bool operator==(const FTower&, const FTower&) = default;
  /// 56-element coordinate basis: X(27), Y(27), p, q.
  static FTower basis_element(int idx);
};

/// The defining action of Theta on a tower.
FTower act(const Theta& t, const FTower& v);

/// The e7 bracket of two Theta elements.
Theta fbracket(const Theta& t1, const Theta& t2);

/// act(fbracket(t1,t2), P) == act(t1, act(t2,P)) - act(t2, act(t1,P)).
bool rep_consistency(const Theta& t1, const Theta& t2, const FTower& v);

}  // namespace octe8
