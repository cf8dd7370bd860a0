#include "octe8/albert.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace octe8;

namespace {

const AlgebraSpec kO = AlgebraSpec::full(AlgKind::Octonion);

AlbertElem random_albert(std::mt19937_64& rng, std::uint8_t unit_mask = 0xff) {
  AlbertElem x;
  for (int i = 0; i < 3; ++i)
    x.z[i] = rat(static_cast<long>(rng() % 9) - 4,
                 static_cast<long>(rng() % 4) + 1);
  for (int u = 0; u < 8; ++u) {
    if (!((unit_mask >> u) & 1)) continue;
    x.a.c[u] = rat(static_cast<long>(rng() % 9) - 4);
    x.b.c[u] = rat(static_cast<long>(rng() % 9) - 4);
    x.c.c[u] = rat(static_cast<long>(rng() % 9) - 4);
  }
  return x;
}

// The normalized type-I basis element with z = 1/2, e = 1/2.
AlbertElem type_one_element() {
  AlbertElem e;
  e.z[0] = rat(1, 2);
  e.z[1] = rat(-1, 2);
  e.c.c[0] = rat(1, 2);
  return e;
}

// Exact complex scalars for the independent determinant oracles.
struct Cx {
  Rat re, im;
  Cx() = default;
  Cx(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
  Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
  Cx operator*(const Cx& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Cx conj() const { return {re, Rat(-im)}; }
  bool zero() const { return is_zero(re) && is_zero(im); }
};

Cx cx_det(std::vector<std::vector<Cx>> m) {
  int n = static_cast<int>(m.size());
  Cx det{Rat(1), Rat(0)};
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (!m[r][c].zero()) {
        p = r;
        break;
      }
    if (p < 0) return {Rat(0), Rat(0)};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = Cx{Rat(-1), Rat(0)} * det;
    }
    det = det * m[c][c];
    Rat nrm = m[c][c].re * m[c][c].re + m[c][c].im * m[c][c].im;
    Cx inv{m[c][c].re / nrm, -m[c][c].im / nrm};
    for (int j = c; j < n; ++j) m[c][j] = m[c][j] * inv;
    for (int r = c + 1; r < n; ++r) {
      Cx f = m[r][c];
      if (f.zero()) continue;
      for (int j = c; j < n; ++j) m[r][j] = m[r][j] - f * m[c][j];
    }
  }
  return det;
}

// Quaternion a + bi + cj + dk as a 2x2 complex matrix.
std::array<std::array<Cx, 2>, 2> quat_matrix(const AlgElem& q) {
  return {{{Cx{q.c[0], q.c[1]}, Cx{q.c[2], q.c[3]}},
           {Cx{-q.c[2], q.c[3]}, Cx{q.c[0], -q.c[1]}}}};
}

}  // namespace

TEST(Albert, JordanBasics) {
  std::mt19937_64 rng(21);
  AlbertElem id = AlbertElem::identity();
  for (int n = 0; n < 10; ++n) {
    AlbertElem x = random_albert(rng);
    EXPECT_EQ(jordan(id, x), x);
    EXPECT_EQ(jordan(x, id), x);
  }
  EXPECT_TRUE(jordan(AlbertElem::diag(rat(1), rat(0), rat(0)),
                     AlbertElem::diag(rat(0), rat(1), rat(0)))
                  .is_zero());
  AlbertElem e = type_one_element();
  EXPECT_EQ(trace_form(e, e), rat(1));
  EXPECT_EQ(jordan(e, e), AlbertElem::diag(rat(1, 2), rat(1, 2), rat(0)));
}

TEST(Albert, FreudenthalBasics) {
  AlbertElem id = AlbertElem::identity();
  AlbertElem e = type_one_element();
  EXPECT_EQ(freudenthal(e, e), AlbertElem::diag(rat(0), rat(0), rat(-1, 2)));
  EXPECT_EQ(freudenthal(id, id), id);
  EXPECT_EQ(freudenthal(AlbertElem::diag(rat(1), rat(0), rat(0)),
                        AlbertElem::diag(rat(0), rat(1), rat(0))),
            AlbertElem::diag(rat(0), rat(0), rat(1, 2)));
}

TEST(Albert, FreudenthalTraceSplits) {
  std::mt19937_64 rng(22);
  AlbertElem id = AlbertElem::identity();
  for (int n = 0; n < 50; ++n) {
    AlbertElem x = random_albert(rng), y = random_albert(rng);
    auto [x0, tx] = tracefree_split(x);
    auto [y0, ty] = tracefree_split(y);
    AlbertElem s00 = jordan(x0, y0);
    s00 -= (trace_form(x0, y0) / 2) * id;
    EXPECT_EQ(freudenthal(x0, y0), s00);
    EXPECT_EQ(freudenthal((tx / 3) * id, y0), ((tx / 3) / -2) * y0);
    EXPECT_EQ(freudenthal((tx / 3) * id, (ty / 3) * id), (tx * ty / 9) * id);
    EXPECT_EQ(freudenthal(x, y), freudenthal(y, x));
  }
}

TEST(Albert, TraceForm) {
  AlbertElem id = AlbertElem::identity();
  EXPECT_EQ(trace_form(id, id), rat(3));
  RatMatrix gram(27, 27);
  for (int i = 0; i < 27; ++i)
    for (int j = 0; j < 27; ++j)
      gram.at(i, j) = trace_form(AlbertElem::basis_element(i),
                                 AlbertElem::basis_element(j));
  auto minors = leading_principal_minors(gram);
  for (const auto& m : minors) EXPECT_GT(sgn(m), 0);
  std::mt19937_64 rng(23);
  for (int n = 0; n < 20; ++n) {
    AlbertElem x = random_albert(rng), y = random_albert(rng),
               z = random_albert(rng);
    EXPECT_EQ(trace(jordan(jordan(x, y), z)), trace(jordan(x, jordan(y, z))));
  }
}

TEST(Albert, DeterminantDiagonal) {
  EXPECT_EQ(albert_det(AlbertElem::diag(rat(2), rat(-3), rat(5))), rat(-30));
  EXPECT_EQ(albert_det(AlbertElem::identity()), rat(1));
}

TEST(Albert, DeterminantComplexOracle) {
  // Entries restricted to span{1, i}: the ordinary complex determinant is an
  // independent oracle.
  std::mt19937_64 rng(24);
  for (int n = 0; n < 25; ++n) {
    AlbertElem x = random_albert(rng, 0b00000011);
    auto cx = [&](const AlgElem& q) { return Cx{q.c[0], q.c[1]}; };
    std::vector<std::vector<Cx>> m(3, std::vector<Cx>(3));
    m[0][0] = Cx{x.z[0], rat(0)};
    m[1][1] = Cx{x.z[1], rat(0)};
    m[2][2] = Cx{x.z[2], rat(0)};
    m[1][2] = cx(x.a);
    m[2][1] = cx(x.a).conj();
    m[2][0] = cx(x.b);
    m[0][2] = cx(x.b).conj();
    m[0][1] = cx(x.c);
    m[1][0] = cx(x.c).conj();
    Cx d = cx_det(m);
    EXPECT_TRUE(is_zero(d.im));
    EXPECT_EQ(d.re, albert_det(x));
  }
}

TEST(Albert, DeterminantQuaternionOracle) {
  // Quaternionic entries: complexify to 6x6; the complex determinant equals
  // the square of the Albert determinant.
  std::mt19937_64 rng(25);
  for (int n = 0; n < 15; ++n) {
    AlbertElem x = random_albert(rng, 0b00001111);
    Mat3 m3 = x.to_mat3();
    std::vector<std::vector<Cx>> m(6, std::vector<Cx>(6));
    for (int bi = 0; bi < 3; ++bi)
      for (int bj = 0; bj < 3; ++bj) {
        auto q = quat_matrix(m3.e[bi][bj]);
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) m[2 * bi + r][2 * bj + c] = q[r][c];
      }
    Cx d = cx_det(m);
    EXPECT_TRUE(is_zero(d.im));
    EXPECT_EQ(d.re, albert_det(x) * albert_det(x));
  }
}

TEST(Albert, TracefreeSplit) {
  AlbertElem id = AlbertElem::identity();
  auto [i0, it] = tracefree_split(id);
  EXPECT_TRUE(i0.is_zero());
  EXPECT_EQ(it, rat(3));
  auto [e0, et] = tracefree_split(AlbertElem::diag(rat(1), rat(0), rat(0)));
  EXPECT_EQ(et, rat(1));
  EXPECT_EQ(trace(e0), rat(0));
}

TEST(Albert, IdentityStarIdentities) {
  std::mt19937_64 rng(26);
  AlbertElem id = AlbertElem::identity();
  for (int n = 0; n < 20; ++n) {
    AlbertElem x = random_albert(rng);
    AlbertElem lhs = freudenthal(id, freudenthal(id, x));
    AlbertElem rhs = x;
    rhs += trace(x) * id;
    rhs *= rat(1, 4);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Albert, E6GeneratorAction) {
  Mat3 zero(kO);
  EXPECT_TRUE(e6_from_generator(zero).op.is_zero());
  Mat3 b(kO);
  b.e[0][0] = alg_unit(kO, 0, rat(1));
  b.e[1][1] = alg_unit(kO, 0, rat(-1));
  E6Operator phi = e6_from_generator(b);
  AlbertElem x = AlbertElem::diag(rat(3), rat(5), rat(-1));
  EXPECT_EQ(phi.apply(x), AlbertElem::diag(rat(6), rat(-10), rat(0)));
  Mat3 r(kO);
  r.e[0][1] = alg_unit(kO, 2);
  r.e[1][0] = alg_unit(kO, 2, rat(-1));
  EXPECT_TRUE(e6_from_generator(r).apply(AlbertElem::identity()).is_zero());
  Mat3 bad(kO);
  bad.e[0][0] = alg_unit(kO, 0);
  EXPECT_THROW(e6_from_generator(bad), error);
}

TEST(Albert, E6OperatorDuality) {
  Mat3 b(kO);
  b.e[0][0] = alg_unit(kO, 0, rat(1));
  b.e[2][2] = alg_unit(kO, 0, rat(-1));
  b.e[1][2] = alg_unit(kO, 4);
  b.e[2][1] = alg_unit(kO, 4);
  E6Operator boost = e6_from_generator(b);
  RatMatrix neg = boost.op;
  neg *= rat(-1);
  EXPECT_EQ(boost.dual, neg);

  Mat3 r(kO);
  r.e[0][1] = alg_unit(kO, 5);
  r.e[1][0] = alg_unit(kO, 5, rat(-1));
  r.e[0][0] = alg_unit(kO, 3);
  r.e[1][1] = alg_unit(kO, 3, rat(-2));
  r.e[2][2] = alg_unit(kO, 3);
  E6Operator rot = e6_from_generator(r);
  EXPECT_EQ(rot.dual, rot.op);

  E6Operator comm = e6_commutator(boost, rot);
  RatMatrix want = boost.dual * rot.dual - rot.dual * boost.dual;
  EXPECT_EQ(comm.dual, want);
}

TEST(Albert, CrossOperator) {
  std::mt19937_64 rng(27);
  AlbertElem id = AlbertElem::identity();
  EXPECT_TRUE(cross_operator(id, id).op.is_zero());
  for (int n = 0; n < 20; ++n) {
    AlbertElem a = random_albert(rng);
    EXPECT_TRUE(cross_operator(a, freudenthal(a, a)).op.is_zero());
  }
  for (int n = 0; n < 50; ++n) {
    AlbertElem a = random_albert(rng), b = random_albert(rng);
    EXPECT_EQ(cross_operator(a, b), cross_operator_alternate(a, b));
  }
}
