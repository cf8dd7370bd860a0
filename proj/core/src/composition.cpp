#include "octe8/composition.hpp"

#include <cstring>

#include "octe8/linalg.hpp"

namespace octe8 {
namespace {

const char* kOctNames[8] = {"1", "i", "j", "k", "kl", "jl", "il", "l"};
const char* kSplitNames[8] = {"1", "I", "J", "K", "KL", "JL", "IL", "L"};

// Literal transcriptions of the two 7x7 imaginary-unit tables, rows and
// columns in basis order 1..7. Entry {s, u} means (row unit)*(col unit) =
// s * e_u.
constexpr UnitProduct kOctTable[7][7] = {
    // i, j, k, kl, jl, il, l
    {{-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},  // i
    {{-1, 3}, {-1, 0}, {+1, 1}, {-1, 6}, {-1, 7}, {+1, 4}, {+1, 5}},  // j
    {{+1, 2}, {-1, 1}, {-1, 0}, {-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}},  // k
    {{-1, 5}, {+1, 6}, {+1, 7}, {-1, 0}, {+1, 1}, {-1, 2}, {-1, 3}},  // kl
    {{+1, 4}, {+1, 7}, {-1, 6}, {-1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},  // jl
    {{+1, 7}, {-1, 4}, {+1, 5}, {+1, 2}, {-1, 3}, {-1, 0}, {-1, 1}},  // il
    {{-1, 6}, {-1, 5}, {-1, 4}, {+1, 3}, {+1, 2}, {+1, 1}, {-1, 0}},  // l
};

constexpr UnitProduct kSplitTable[7][7] = {
    // I, J, K, KL, JL, IL, L
    {{-1, 0}, {+1, 3}, {-1, 2}, {+1, 5}, {-1, 4}, {-1, 7}, {+1, 6}},  // I
    {{-1, 3}, {-1, 0}, {+1, 1}, {-1, 6}, {-1, 7}, {+1, 4}, {+1, 5}},  // J
    {{+1, 2}, {-1, 1}, {-1, 0}, {-1, 7}, {+1, 6}, {-1, 5}, {+1, 4}},  // K
    {{-1, 5}, {+1, 6}, {+1, 7}, {+1, 0}, {-1, 1}, {+1, 2}, {+1, 3}},  // KL
    {{+1, 4}, {+1, 7}, {-1, 6}, {+1, 1}, {+1, 0}, {-1, 3}, {+1, 2}},  // JL
    {{+1, 7}, {-1, 4}, {+1, 5}, {-1, 2}, {+1, 3}, {+1, 0}, {+1, 1}},  // IL
    {{-1, 6}, {-1, 5}, {-1, 4}, {-1, 3}, {-1, 2}, {-1, 1}, {+1, 0}},  // L
};

// Cayley-Dickson doubling: pairs (a, b) = a + b*u with u^2 = gamma and
// (a + b u)(c + d u) = (a c + gamma conj(d) b) + (d a + b conj(c)) u.
// Starting from R we obtain C, H, then O (gamma = -1) or O' (gamma = +1),
// with the doubled basis ordered [e0..e_{n-1}, e0*u .. e_{n-1}*u].
struct CdAlgebra {
  int n;
  std::vector<std::vector<int>> prod;  // signed: prod[i][j] = ±(k+1)

  static CdAlgebra reals() { return {1, {{1}}}; }

  CdAlgebra doubled(int gamma) const {
    CdAlgebra d;
    d.n = 2 * n;
    d.prod.assign(d.n, std::vector<int>(d.n, 0));
    auto cj = [&](int signed_idx) {
      int idx = std::abs(signed_idx) - 1;
      return idx == 0 ? signed_idx : -signed_idx;
    };
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) {
        // x = (a, b), y = (c, d) with exactly one of a/b and c/d a basis unit.
        bool xb = i >= n, yb = j >= n;
        int a = xb ? 0 : i + 1, b = xb ? i - n + 1 : 0;
        int c = yb ? 0 : j + 1, dd = yb ? j - n + 1 : 0;
        int first = 0, second = 0;
        if (!xb && !yb) first = prod[a - 1][c - 1];
        if (xb && yb) {
          int t = prod[std::abs(cj(dd)) - 1][b - 1];
          first = gamma * (cj(dd) < 0 ? -t : t);
        }
        if (!xb && yb) second = prod[dd - 1][a - 1];
        if (xb && !yb) {
          int t = prod[b - 1][std::abs(cj(c)) - 1];
          second = (cj(c) < 0 ? -t : t);
        }
        if (first != 0 && second != 0) throw error("cayley-dickson overlap");
        d.prod[i][j] = first != 0 ? first : (second > 0 ? second + n
                                             : second < 0 ? second - n
                                                          : 0);
      }
    return d;
  }
};

// The doubled chain lists H-basis as [1, i, j, ij=k] and the new units as
// [u, iu, ju, ku]; the paper's basis order is [1, i, j, k, kl, jl, il, l].
constexpr int kCdPermutation[8] = {0, 1, 2, 3, 7, 6, 5, 4};

void crosscheck_cayley_dickson(AlgKind kind, const UnitProduct table[8][8]) {
  CdAlgebra h = CdAlgebra::reals().doubled(-1).doubled(-1);
  CdAlgebra o = h.doubled(kind == AlgKind::Octonion ? -1 : +1);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int p = o.prod[kCdPermutation[i]][kCdPermutation[j]];
      int sign = p > 0 ? 1 : -1;
      int idx = std::abs(p) - 1;
      int mapped = -1;
      for (int t = 0; t < 8; ++t)
        if (kCdPermutation[t] == idx) mapped = t;
      if (table[i][j].sign != sign || table[i][j].index != mapped)
        throw error("multiplication table disagrees with Cayley-Dickson "
                    "doubling at (" +
                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

}  // namespace

Algebra::Algebra(AlgKind kind) : kind_(kind) {
  const UnitProduct(*src)[7] =
      kind == AlgKind::Octonion ? kOctTable : kSplitTable;
  for (int i = 0; i < 8; ++i) {
    table_[0][i] = {+1, static_cast<std::uint8_t>(i)};
    table_[i][0] = {+1, static_cast<std::uint8_t>(i)};
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) table_[i][j] = src[i - 1][j - 1];
  crosscheck_cayley_dickson(kind, table_);
}

const Algebra& Algebra::octonions() {
  static const Algebra a(AlgKind::Octonion);
  return a;
}

const Algebra& Algebra::split_octonions() {
  static const Algebra a(AlgKind::SplitOctonion);
  return a;
}

const char* Algebra::unit_name(int idx) const {
  return kind_ == AlgKind::Octonion ? kOctNames[idx] : kSplitNames[idx];
}

int Algebra::unit_index(std::string_view name) const {
  for (int i = 0; i < 8; ++i)
    if (name == unit_name(i)) return i;
  return -1;
}

const Algebra& AlgebraSpec::algebra() const {
  return kind == AlgKind::Octonion ? Algebra::octonions()
                                   : Algebra::split_octonions();
}

int AlgebraSpec::dim() const {
  int n = 0;
  for (int i = 0; i < 8; ++i) n += contains(i);
  return n;
}

std::vector<std::string> AlgebraSpec::basis_names() const {
  std::vector<std::string> out;
  for (int i = 0; i < 8; ++i)
    if (contains(i)) out.push_back(algebra().unit_name(i));
  return out;
}

bool AlgebraSpec::closed() const {
  if (!contains(0)) return false;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (contains(i) && contains(j) &&
          !contains(algebra().unit_product(i, j).index))
        return false;
  return true;
}

AlgebraSpec AlgebraSpec::quaternion_kkl(AlgKind k) {
  AlgebraSpec s{k, 0b10011001};  // {1, K, KL, L}
  if (!s.closed()) throw error("quaternion subset not closed");
  return s;
}

AlgebraSpec AlgebraSpec::complex_l(AlgKind k) {
  return {k, 0b10000001};  // {1, L}
}

bool AlgElem::is_zero() const {
  for (const auto& x : c)
    if (!octe8::is_zero(x)) return false;
  return true;
}

bool operator==(const AlgElem& a, const AlgElem& b) {
  return a.spec == b.spec && a.c == b.c;
}

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  if (!(spec == o.spec)) throw error("mismatched algebra specs");
  for (int i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  if (!(spec == o.spec)) throw error("mismatched algebra specs");
  for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

AlgElem& AlgElem::operator*=(const Rat& s) {
  for (int i = 0; i < 8; ++i) c[i] *= s;
  return *this;
}

AlgElem alg_zero(const AlgebraSpec& spec) { return AlgElem{spec, {}}; }

AlgElem alg_unit(const AlgebraSpec& spec, int idx, const Rat& coeff) {
  if (idx < 0 || idx > 7 || !spec.contains(idx))
    throw error("unit outside algebra spec");
  AlgElem e = alg_zero(spec);
  e.c[idx] = coeff;
  return e;
}

AlgElem alg_one(const AlgebraSpec& spec) { return alg_unit(spec, 0); }

AlgElem mul(const AlgElem& a, const AlgElem& b) {
  if (!(a.spec == b.spec)) throw error("mismatched algebra specs");
  const Algebra& alg = a.spec.algebra();
  AlgElem out = alg_zero(a.spec);
  for (int i = 0; i < 8; ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j < 8; ++j) {
      if (is_zero(b.c[j])) continue;
      UnitProduct p = alg.unit_product(i, j);
      Rat term = a.c[i] * b.c[j];
      if (p.sign < 0)
        out.c[p.index] -= term;
      else
        out.c[p.index] += term;
    }
  }
  return out;
}

AlgElem conj(const AlgElem& a) {
  AlgElem out = a;
  for (int i = 1; i < 8; ++i) out.c[i] = -out.c[i];
  return out;
}

Rat inner(const AlgElem& a, const AlgElem& b) {
  if (!(a.spec == b.spec)) throw error("mismatched algebra specs");
  return mul(a, conj(b)).c[0];
}

Rat norm(const AlgElem& a) { return inner(a, a); }

RatMatrix left_mult_operator(const AlgElem& a) {
  RatMatrix m(8, 8);
  for (int j = 0; j < 8; ++j) {
    AlgElem col = mul(a, alg_unit(AlgebraSpec{a.spec.kind, 0xff}, j));
    for (int i = 0; i < 8; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

std::pair<AlgElem, AlgElem> null_projectors(const AlgebraSpec& spec) {
  if (!spec.split()) throw error("null projectors need the split octonions");
  AlgElem plus = alg_zero(spec), minus = alg_zero(spec);
  plus.c[0] = rat(1, 2);
  plus.c[7] = rat(1, 2);
  minus.c[0] = rat(1, 2);
  minus.c[7] = rat(-1, 2);
  return {plus, minus};
}

AlgElem null_unit(const AlgebraSpec& spec, int base, int sign) {
  if (!spec.split()) throw error("null units need the split octonions");
  if (base < 1 || base > 3) throw error("null unit base must be I, J or K");
  AlgElem e = alg_zero(spec);
  e.c[base] = rat(1, 2);
  e.c[7 - base] = sign >= 0 ? rat(1, 2) : rat(-1, 2);
  return e;
}

}  // namespace octe8
