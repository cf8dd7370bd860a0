#include "octe8/freudenthal.hpp"

namespace octe8 {

Theta& Theta::operator+=(const Theta& o) {
  phi += o.phi;
  rho += o.rho;
  A += o.A;
  B += o.B;
  return *this;
}

Theta& Theta::operator*=(const Rat& s) {
  phi *= s;
  rho *= s;
  A *= s;
  B *= s;
  return *this;
}

bool FTower::is_zero() const {
  return X.is_zero() && Y.is_zero() && octe8::is_zero(p) && octe8::is_zero(q);
}

FTower& FTower::operator+=(const FTower& o) {
  X += o.X;
  Y += o.Y;
  p += o.p;
  q += o.q;
  return *this;
}

FTower& FTower::operator-=(const FTower& o) {
  X -= o.X;
  Y -= o.Y;
  p -= o.p;
  q -= o.q;
  return *this;
}

FTower& FTower::operator*=(const Rat& s) {
  X *= s;
  Y *= s;
  p *= s;
  q *= s;
  return *this;
}

FTower FTower::basis_element(int idx) {
  FTower t;
  if (idx < 27)
    t.X = AlbertElem::basis_element(idx);
  else if (idx < 54)
    t.Y = AlbertElem::basis_element(idx - 27);
  else if (idx == 54)
    t.p = 1;
  else
    t.q = 1;
  return t;
}

FTower act(const Theta& t, const FTower& v) {
  FTower out;
  out.X = t.phi.apply(v.X) + rat(1, 3) * t.rho * v.X +
          rat(2) * freudenthal(t.B, v.Y) + v.q * t.A;
  out.Y = rat(2) * freudenthal(t.A, v.X) + t.phi.apply_dual(v.Y) -
          rat(1, 3) * t.rho * v.Y + v.p * t.B;
  out.p = trace_form(t.A, v.Y) - t.rho * v.p;
  out.q = trace_form(t.B, v.X) + t.rho * v.q;
  return out;
}

Theta fbracket(const Theta& t1, const Theta& t2) {
  Theta out;
  out.phi = e6_commutator(t1.phi, t2.phi) -
            rat(2) * cross_operator(t1.A, t2.B) +
            rat(2) * cross_operator(t2.A, t1.B);
  out.rho = -trace_form(t1.A, t2.B) + trace_form(t2.A, t1.B);
  out.A = t1.phi.apply(t2.A) - rat(2, 3) * t1.rho * t2.A -
          t2.phi.apply(t1.A) + rat(2, 3) * t2.rho * t1.A;
  out.B = t1.phi.apply_dual(t2.B) + rat(2, 3) * t1.rho * t2.B -
          t2.phi.apply_dual(t1.B) - rat(2, 3) * t2.rho * t1.B;
  return out;
}

bool rep_consistency(const Theta& t1, const Theta& t2, const FTower& v) {
  FTower lhs = act(fbracket(t1, t2), v);
  FTower rhs = act(t1, act(t2, v)) - act(t2, act(t1, v));
  return lhs == rhs;
}

}  // namespace octe8
