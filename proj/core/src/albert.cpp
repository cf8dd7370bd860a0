#include "octe8/albert.hpp"

namespace octe8 {

Mat3::Mat3(const AlgebraSpec& s) : spec(s) {
  for (auto& row : e)
    for (auto& x : row) x = alg_zero(s);
}

Mat3 Mat3::zero(const AlgebraSpec& s) { return Mat3(s); }

Mat3 Mat3::dagger() const {
  Mat3 d(spec);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d.e[i][j] = conj(e[j][i]);
  return d;
}

bool Mat3::is_zero() const {
  for (const auto& row : e)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

AlgElem Mat3::trace() const { return e[0][0] + e[1][1] + e[2][2]; }

Mat3& Mat3::operator+=(const Mat3& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] += o.e[i][j];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] -= o.e[i][j];
  return *this;
}

Mat3& Mat3::operator*=(const Rat& s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] *= s;
  return *this;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c(a.spec);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c.e[i][j] += mul(a.e[i][k], b.e[k][j]);
  return c;
}

AlbertElem::AlbertElem() : AlbertElem(AlgebraSpec::full(AlgKind::Octonion)) {}

AlbertElem::AlbertElem(const AlgebraSpec& s)
    : spec(s), a(alg_zero(s)), b(alg_zero(s)), c(alg_zero(s)) {}

AlbertElem AlbertElem::identity(const AlgebraSpec& s) {
  AlbertElem x(s);
  x.z[0] = x.z[1] = x.z[2] = 1;
  return x;
}

AlbertElem AlbertElem::diag(const Rat& x, const Rat& y, const Rat& z) {
  AlbertElem d;
  d.z[0] = x;
  d.z[1] = y;
  d.z[2] = z;
  return d;
}

bool AlbertElem::is_zero() const {
  return octe8::is_zero(z[0]) && octe8::is_zero(z[1]) && octe8::is_zero(z[2]) &&
         a.is_zero() && b.is_zero() && c.is_zero();
}

bool operator==(const AlbertElem& x, const AlbertElem& y) {
  return x.spec == y.spec && x.z[0] == y.z[0] && x.z[1] == y.z[1] &&
         x.z[2] == y.z[2] && x.a == y.a && x.b == y.b && x.c == y.c;
}

AlbertElem& AlbertElem::operator+=(const AlbertElem& o) {
  for (int i = 0; i < 3; ++i) z[i] += o.z[i];
  a += o.a;
  b += o.b;
  c += o.c;
  return *this;
}

AlbertElem& AlbertElem::operator-=(const AlbertElem& o) {
  for (int i = 0; i < 3; ++i) z[i] -= o.z[i];
  a -= o.a;
  b -= o.b;
  c -= o.c;
  return *this;
}

AlbertElem& AlbertElem::operator*=(const Rat& s) {
  for (int i = 0; i < 3; ++i) z[i] *= s;
  a *= s;
  b *= s;
  c *= s;
  return *this;
}

Mat3 AlbertElem::to_mat3() const {
  Mat3 m(spec);
  for (int i = 0; i < 3; ++i) m.e[i][i] = alg_unit(spec, 0, z[i]);
  m.e[1][2] = a;
  m.e[2][1] = conj(a);
  m.e[2][0] = b;
  m.e[0][2] = conj(b);
  m.e[0][1] = c;
  m.e[1][0] = conj(c);
  return m;
}

AlbertElem AlbertElem::from_mat3(const Mat3& m) {
  AlbertElem x(m.spec);
  for (int i = 0; i < 3; ++i) {
    for (int k = 1; k < 8; ++k)
      if (!octe8::is_zero(m.e[i][i].c[k])) throw error("non-real diagonal");
    x.z[i] = m.e[i][i].c[0];
  }
  if (!(m.e[2][1] == conj(m.e[1][2])) || !(m.e[0][2] == conj(m.e[2][0])) ||
      !(m.e[1][0] == conj(m.e[0][1])))
    throw error("matrix is not Hermitian");
  x.a = m.e[1][2];
  x.b = m.e[2][0];
  x.c = m.e[0][1];
  return x;
}

std::array<Rat, 27> AlbertElem::coords() const {
  std::array<Rat, 27> v;
  for (int i = 0; i < 3; ++i) v[i] = z[i];
  for (int k = 0; k < 8; ++k) {
    v[3 + k] = a.c[k];
    v[11 + k] = b.c[k];
    v[19 + k] = c.c[k];
  }
  return v;
}

AlbertElem AlbertElem::from_coords(const std::array<Rat, 27>& v,
                                   const AlgebraSpec& s) {
  AlbertElem x(s);
  for (int i = 0; i < 3; ++i) x.z[i] = v[i];
  for (int k = 0; k < 8; ++k) {
    x.a.c[k] = v[3 + k];
    x.b.c[k] = v[11 + k];
    x.c.c[k] = v[19 + k];
  }
  return x;
}

AlbertElem AlbertElem::basis_element(int idx, const AlgebraSpec& s) {
  std::array<Rat, 27> v{};
  v[idx] = 1;
  return from_coords(v, s);
}

AlbertElem jordan(const AlbertElem& x, const AlbertElem& y) {
  Mat3 p = x.to_mat3() * y.to_mat3();
  Mat3 q = y.to_mat3() * x.to_mat3();
  return AlbertElem::from_mat3(rat(1, 2) * (p + q));
}

AlbertElem freudenthal(const AlbertElem& x, const AlbertElem& y) {
  AlbertElem out = jordan(x, y);
  Rat tx = trace(x), ty = trace(y);
  out -= rat(1, 2) * (tx * y + ty * x);
  Rat s = rat(1, 2) * (tx * ty - trace_form(x, y));
  out += s * AlbertElem::identity(x.spec);
  return out;
}

Rat trace(const AlbertElem& x) { return x.z[0] + x.z[1] + x.z[2]; }

Rat trace_form(const AlbertElem& x, const AlbertElem& y) {
  return trace(jordan(x, y));
}

Rat albert_det(const AlbertElem& x) {
  return rat(1, 3) * trace(jordan(freudenthal(x, x), x));
}

std::pair<AlbertElem, Rat> tracefree_split(const AlbertElem& x) {
  Rat t = trace(x);
  AlbertElem x0 = x;
  x0 -= (t / 3) * AlbertElem::identity(x.spec);
  return {x0, t};
}

E6Operator E6Operator::zero() {
  return E6Operator{RatMatrix(27, 27), RatMatrix(27, 27)};
}

const RatMatrix& albert_gram() {
  static const RatMatrix g = [] {
    std::vector<Rat> d(27, Rat(2));
    d[0] = d[1] = d[2] = 1;
    return RatMatrix::diagonal(d);
  }();
  return g;
}

E6Operator E6Operator::from_matrix(const RatMatrix& op) {
  // dual = -(trace-form adjoint) = -G^{-1} op^T G; G is diagonal.
  const RatMatrix& g = albert_gram();
  RatMatrix dual(27, 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      dual.at(i, j) = -op.at(j, i) * g.at(j, j) / g.at(i, i);
  return E6Operator{op, dual};
}

AlbertElem E6Operator::apply(const AlbertElem& x) const {
  auto v = x.coords();
  std::array<Rat, 27> out{};
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      if (!is_zero(op.at(i, j)) && !is_zero(v[j])) out[i] += op.at(i, j) * v[j];
  return AlbertElem::from_coords(out, x.spec);
}

AlbertElem E6Operator::apply_dual(const AlbertElem& x) const {
  auto v = x.coords();
  std::array<Rat, 27> out{};
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      if (!is_zero(dual.at(i, j)) && !is_zero(v[j]))
        out[i] += dual.at(i, j) * v[j];
  return AlbertElem::from_coords(out, x.spec);
}

E6Operator& E6Operator::operator+=(const E6Operator& o) {
  op += o.op;
  dual += o.dual;
  return *this;
}

E6Operator& E6Operator::operator-=(const E6Operator& o) {
  op -= o.op;
  dual -= o.dual;
  return *this;
}

E6Operator& E6Operator::operator*=(const Rat& s) {
  op *= s;
  dual *= s;
  return *this;
}

namespace {

RatMatrix operator_matrix_from(const AlgebraSpec& s,
                               AlbertElem (*f)(const Mat3&, const AlbertElem&),
                               const Mat3& ctx) {
  RatMatrix m(27, 27);
  for (int j = 0; j < 27; ++j) {
    AlbertElem img = f(ctx, AlbertElem::basis_element(j, s));
    auto v = img.coords();
    for (int i = 0; i < 27; ++i) m.at(i, j) = v[i];
  }
  return m;
}

AlbertElem generator_action(const Mat3& phi, const AlbertElem& x) {
  Mat3 xm = x.to_mat3();
  return AlbertElem::from_mat3(phi * xm + xm * phi.dagger());
}

}  // namespace

E6Operator e6_from_generator(const Mat3& phi) {
  if (!phi.trace().is_zero()) throw error("e6 generator must be tracefree");
  Mat3 h = phi;
  h -= phi.dagger();
  Mat3 ah = phi;
  ah += phi.dagger();
  if (!h.is_zero() && !ah.is_zero())
    throw error("e6 generator must be Hermitian or anti-Hermitian");
  return E6Operator::from_matrix(
      operator_matrix_from(phi.spec, &generator_action, phi));
}

E6Operator e6_commutator(const E6Operator& f, const E6Operator& g) {
  return E6Operator::from_matrix(f.op * g.op - g.op * f.op);
}

E6Operator cross_operator(const AlbertElem& A, const AlbertElem& B) {
  RatMatrix m(27, 27);
  Rat t = rat(1, 3) * trace_form(A, B);
  for (int j = 0; j < 27; ++j) {
    AlbertElem x = AlbertElem::basis_element(j, A.spec);
    AlbertElem img = jordan(B, jordan(A, x)) - jordan(A, jordan(B, x)) -
                     jordan(jordan(A, B), x) + t * x;
    auto v = img.coords();
    for (int i = 0; i < 27; ++i) m.at(i, j) = v[i];
  }
  return E6Operator::from_matrix(m);
}

E6Operator cross_operator_alternate(const AlbertElem& A, const AlbertElem& B) {
  RatMatrix m(27, 27);
  Rat t = rat(1, 6) * trace_form(A, B);
  for (int j = 0; j < 27; ++j) {
    AlbertElem x = AlbertElem::basis_element(j, A.spec);
    AlbertElem img = rat(2) * freudenthal(B, freudenthal(A, x)) -
                     rat(1, 2) * trace_form(B, x) * A - t * x;
    auto v = img.coords();
    for (int i = 0; i < 27; ++i) m.at(i, j) = v[i];
  }
  return E6Operator::from_matrix(m);
}

}  // namespace octe8
