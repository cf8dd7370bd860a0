#include "octe8/tensor.hpp"

#include <algorithm>

namespace octe8 {

bool TensorElem::is_zero() const {
  for (const auto& x : c)
    if (!octe8::is_zero(x)) return false;
  return true;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
  for (int i = 0; i < 64; ++i) c[i] += o.c[i];
  return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
  for (int i = 0; i < 64; ++i) c[i] -= o.c[i];
  return *this;
}

TensorElem& TensorElem::operator*=(const Rat& s) {
  for (int i = 0; i < 64; ++i) c[i] *= s;
  return *this;
}

TensorElem tensor_zero() { return {}; }

TensorElem tensor_unit(int left_idx, int right_idx, const Rat& coeff) {
  TensorElem t;
  t.c[8 * left_idx + right_idx] = coeff;
  return t;
}

TensorElem tensor_one() { return tensor_unit(0, 0); }

TensorElem labeled(const AlgElem& Q, const AlgElem& x) {
  TensorElem t;
  for (int s = 0; s < 8; ++s) {
    if (is_zero(Q.c[s])) continue;
    for (int o = 0; o < 8; ++o) {
      if (is_zero(x.c[o])) continue;
      t.c[8 * s + o] = Q.c[s] * x.c[o];
    }
  }
  return t;
}

TensorElem tmul(const AlgebraPair& p, const TensorElem& a,
                const TensorElem& b) {
  const Algebra& la = p.left.algebra();
  const Algebra& ra = p.right.algebra();
  TensorElem out;
  for (int i = 0; i < 64; ++i) {
    if (is_zero(a.c[i])) continue;
    int si = i >> 3, oi = i & 7;
    for (int j = 0; j < 64; ++j) {
      if (is_zero(b.c[j])) continue;
      int sj = j >> 3, oj = j & 7;
      UnitProduct ps = la.unit_product(si, sj);
      UnitProduct po = ra.unit_product(oi, oj);
      Rat term = a.c[i] * b.c[j];
      if (ps.sign * po.sign < 0)
        out.c[8 * ps.index + po.index] -= term;
      else
        out.c[8 * ps.index + po.index] += term;
    }
  }
  return out;
}

TensorElem tconj(const TensorElem& a) {
  TensorElem out;
  for (int i = 0; i < 64; ++i) {
    if (is_zero(a.c[i])) continue;
    int s = i >> 3, o = i & 7;
    int sign = (s == 0 ? 1 : -1) * (o == 0 ? 1 : -1);
    out.c[i] = sign < 0 ? Rat(-a.c[i]) : a.c[i];
  }
  return out;
}

Rat tinner(const AlgebraPair& p, const TensorElem& a, const TensorElem& b) {
  return tmul(p, a, tconj(b)).c[0];
}

TensorOp TensorOp::identity() {
  TensorOp op;
  for (int i = 0; i < 64; ++i) op.rows_[i].push_back({(std::uint8_t)i, Rat(1)});
  return op;
}

bool TensorOp::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

void TensorOp::add_entry(int row, int col, const Rat& v) {
  if (octe8::is_zero(v)) return;
  auto& r = rows_[row];
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const Entry& e, int c) { return e.col < c; });
  if (it != r.end() && it->col == col) {
    it->val += v;
    if (octe8::is_zero(it->val)) r.erase(it);
  } else {
    r.insert(it, Entry{(std::uint8_t)col, v});
  }
}

TensorOp& TensorOp::operator+=(const TensorOp& o) {
  for (int i = 0; i < 64; ++i)
    for (const auto& e : o.rows_[i]) add_entry(i, e.col, e.val);
  return *this;
}

TensorOp& TensorOp::operator-=(const TensorOp& o) {
  for (int i = 0; i < 64; ++i)
    for (const auto& e : o.rows_[i]) add_entry(i, e.col, Rat(-e.val));
  return *this;
}

TensorOp& TensorOp::operator*=(const Rat& s) {
  if (octe8::is_zero(s)) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.val *= s;
  return *this;
}

TensorElem TensorOp::apply(const TensorElem& v) const {
  TensorElem out;
  for (int i = 0; i < 64; ++i)
    for (const auto& e : rows_[i]) {
      if (octe8::is_zero(v.c[e.col])) continue;
      out.c[i] += e.val * v.c[e.col];
    }
  return out;
}

TensorOp compose(const TensorOp& a, const TensorOp& b) {
  TensorOp out;
  for (int i = 0; i < 64; ++i)
    for (const auto& ea : a.row(i))
      for (const auto& eb : b.row(ea.col)) out.add_entry(i, eb.col, ea.val * eb.val);
  return out;
}

TensorOp commutator(const TensorOp& a, const TensorOp& b) {
  TensorOp out = compose(a, b);
  out -= compose(b, a);
  return out;
}

TensorOp toperator(const AlgebraPair& p, const TensorElem& x) {
  TensorOp op;
  const Algebra& la = p.left.algebra();
  const Algebra& ra = p.right.algebra();
  for (int i = 0; i < 64; ++i) {
    if (is_zero(x.c[i])) continue;
    int si = i >> 3, oi = i & 7;
    for (int j = 0; j < 64; ++j) {
      int sj = j >> 3, oj = j & 7;
      UnitProduct ps = la.unit_product(si, sj);
      UnitProduct po = ra.unit_product(oi, oj);
      Rat v = ps.sign * po.sign < 0 ? Rat(-x.c[i]) : x.c[i];
      op.add_entry(8 * ps.index + po.index, j, v);
    }
  }
  return op;
}

TensorOp right_mult_op(const AlgebraPair& p, const TensorElem& x) {
  TensorOp op;
  const Algebra& la = p.left.algebra();
  const Algebra& ra = p.right.algebra();
  for (int j = 0; j < 64; ++j) {
    if (is_zero(x.c[j])) continue;
    int sj = j >> 3, oj = j & 7;
    for (int i = 0; i < 64; ++i) {
      int si = i >> 3, oi = i & 7;
      UnitProduct ps = la.unit_product(si, sj);
      UnitProduct po = ra.unit_product(oi, oj);
      Rat v = ps.sign * po.sign < 0 ? Rat(-x.c[j]) : x.c[j];
      op.add_entry(8 * ps.index + po.index, i, v);
    }
  }
  return op;
}

}  // namespace octe8
