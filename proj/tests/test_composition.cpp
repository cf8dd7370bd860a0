#include "octe8/composition.hpp"

#include <gtest/gtest.h>

#include <random>

#include "octe8/linalg.hpp"

using namespace octe8;

namespace {

AlgElem random_elem(const AlgebraSpec& spec, std::mt19937_64& rng,
                    bool imaginary = false) {
  AlgElem e = alg_zero(spec);
  for (int u = imaginary ? 1 : 0; u < 8; ++u)
    e.c[u] = rat(static_cast<long>(rng() % 19) - 9,
                 static_cast<long>(rng() % 9) + 1);
  return e;
}

const AlgebraSpec kO = AlgebraSpec::full(AlgKind::Octonion);
const AlgebraSpec kS = AlgebraSpec::full(AlgKind::SplitOctonion);

}  // namespace

TEST(Composition, TableSamples) {
  const Algebra& o = Algebra::octonions();
  // i j = k
  EXPECT_EQ(o.unit_product(1, 2).sign, 1);
  EXPECT_EQ(o.unit_product(1, 2).index, 3);
  const Algebra& s = Algebra::split_octonions();
  // KL KL = 1, L IL = -I
  EXPECT_EQ(s.unit_product(4, 4).sign, 1);
  EXPECT_EQ(s.unit_product(4, 4).index, 0);
  EXPECT_EQ(s.unit_product(7, 6).sign, -1);
  EXPECT_EQ(s.unit_product(7, 6).index, 1);
}

TEST(Composition, IdentityActsTrivially) {
  std::mt19937_64 rng(1);
  for (int n = 0; n < 10; ++n) {
    AlgElem a = random_elem(kO, rng);
    EXPECT_EQ(mul(alg_one(kO), a), a);
    EXPECT_EQ(mul(a, alg_one(kO)), a);
  }
}

TEST(Composition, ConjugationBasics) {
  EXPECT_EQ(conj(alg_one(kO)), alg_one(kO));
  EXPECT_EQ(conj(alg_unit(kO, 1)), alg_unit(kO, 1, rat(-1)));
  AlgElem x = alg_zero(kS);
  x.c[0] = 2;
  x.c[7] = 3;
  AlgElem xc = alg_zero(kS);
  xc.c[0] = 2;
  xc.c[7] = -3;
  EXPECT_EQ(conj(x), xc);
}

TEST(Composition, ConjugationAntiAutomorphism) {
  for (const auto& spec : {kO, kS})
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        AlgElem a = alg_unit(spec, i), b = alg_unit(spec, j);
        EXPECT_EQ(conj(mul(a, b)), mul(conj(b), conj(a)));
        EXPECT_EQ(conj(conj(a)), a);
      }
}

TEST(Composition, InnerProduct) {
  EXPECT_EQ(inner(alg_unit(kO, 1), alg_unit(kO, 1)), rat(1));
  EXPECT_EQ(inner(alg_unit(kS, 7), alg_unit(kS, 7)), rat(-1));
  EXPECT_EQ(inner(alg_unit(kO, 1), alg_unit(kO, 2)), rat(0));
  // Gram signatures: (8,0) on O and (4,4) on O'.
  for (const auto& spec : {kO, kS}) {
    RatMatrix gram(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        gram.at(i, j) = inner(alg_unit(spec, i), alg_unit(spec, j));
    Signature sig = signature(gram);
    if (spec.split()) {
      EXPECT_EQ(sig, (Signature{4, 4, 0}));
    } else {
      EXPECT_EQ(sig, (Signature{8, 0, 0}));
    }
  }
}

TEST(Composition, Alternativity) {
  std::mt19937_64 rng(2);
  for (const auto& spec : {kO, kS}) {
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        AlgElem a = alg_unit(spec, i), b = alg_unit(spec, j);
        EXPECT_EQ(mul(mul(a, a), b), mul(a, mul(a, b)));
        EXPECT_EQ(mul(mul(a, b), b), mul(a, mul(b, b)));
      }
    for (int n = 0; n < 100; ++n) {
      AlgElem a = random_elem(spec, rng), b = random_elem(spec, rng);
      EXPECT_EQ(mul(mul(a, a), b), mul(a, mul(a, b)));
      EXPECT_EQ(mul(mul(a, b), b), mul(a, mul(b, b)));
    }
  }
}

TEST(Composition, NormComposes) {
  std::mt19937_64 rng(3);
  for (const auto& spec : {kO, kS})
    for (int n = 0; n < 50; ++n) {
      AlgElem a = random_elem(spec, rng), b = random_elem(spec, rng);
      EXPECT_EQ(norm(mul(a, b)), norm(a) * norm(b));
    }
}

TEST(Composition, LeftMultOperator) {
  EXPECT_EQ(left_mult_operator(alg_one(kO)), RatMatrix::identity(8));
  // column j of L_i is coeffs(i*j) = k
  RatMatrix li = left_mult_operator(alg_unit(kO, 1));
  for (int r = 0; r < 8; ++r) EXPECT_EQ(li.at(r, 2), rat(r == 3 ? 1 : 0));
  std::mt19937_64 rng(4);
  for (const auto& spec : {kO, kS}) {
    for (int u = 1; u < 8; ++u) {
      AlgElem a = alg_unit(spec, u);
      RatMatrix sq = left_mult_operator(a) * left_mult_operator(a);
      RatMatrix want = RatMatrix::identity(8);
      want *= -norm(a);
      EXPECT_EQ(sq, want);
    }
    for (int n = 0; n < 10; ++n) {
      AlgElem a = random_elem(spec, rng, /*imaginary=*/true);
      RatMatrix sq = left_mult_operator(a) * left_mult_operator(a);
      RatMatrix want = RatMatrix::identity(8);
      want *= -norm(a);
      EXPECT_EQ(sq, want);
    }
  }
}

TEST(Composition, OperatorIdentitiesPpqPqr) {
  for (const auto& spec : {kO, kS}) {
    for (int p = 1; p < 8; ++p)
      for (int q = 1; q < 8; ++q) {
        if (p == q) continue;
        RatMatrix Lp = left_mult_operator(alg_unit(spec, p));
        RatMatrix Lq = left_mult_operator(alg_unit(spec, q));
        Rat p2 = mul(alg_unit(spec, p), alg_unit(spec, p)).c[0];
        Rat q2 = mul(alg_unit(spec, q), alg_unit(spec, q)).c[0];
        RatMatrix lhs = Lp * Lp * Lq;
        RatMatrix rhs = Lq;
        rhs *= p2;
        EXPECT_EQ(lhs, rhs);
        for (int r = 0; r < 8; ++r) {
          RatMatrix Lr = left_mult_operator(alg_unit(spec, r));
          RatMatrix l2 = Lp * Lq * Lq * Lr;
          RatMatrix r2 = Lp * Lr;
          r2 *= q2;
          EXPECT_EQ(l2, r2);
        }
      }
  }
}

TEST(Composition, NullProjectors) {
  auto [lp, lm] = null_projectors(kS);
  EXPECT_EQ(lp + lm, alg_one(kS));
  EXPECT_EQ(mul(lp, lp), lp);
  EXPECT_EQ(mul(lm, lm), lm);
  EXPECT_TRUE(mul(lp, lm).is_zero());
  EXPECT_TRUE(mul(lm, lp).is_zero());
  EXPECT_THROW(null_projectors(kO), error);
}

TEST(Composition, NullSets) {
  auto [lp, lm] = null_projectors(kS);
  for (int sign : {+1, -1}) {
    const AlgElem proj = sign > 0 ? lp : lm;
    for (int base = 1; base <= 3; ++base)
      EXPECT_EQ(null_unit(kS, base, sign), mul(alg_unit(kS, base), proj));
  }
  AlgElem kp = null_unit(kS, 3, +1), km = null_unit(kS, 3, -1);
  AlgElem ip = null_unit(kS, 1, +1), im = null_unit(kS, 1, -1);
  AlgElem jp = null_unit(kS, 2, +1), jm = null_unit(kS, 2, -1);
  EXPECT_TRUE(mul(kp, kp).is_zero());
  EXPECT_EQ(mul(kp, km), rat(-1) * lm);
  EXPECT_EQ(mul(km, kp), rat(-1) * lp);
  EXPECT_EQ(mul(kp, ip), jm);
  EXPECT_TRUE(mul(kp, im).is_zero());
  // cyclic: I± J± = K∓, J± K± = I∓
  EXPECT_EQ(mul(ip, jp), km);
  EXPECT_EQ(mul(jp, kp), im);
  EXPECT_EQ(mul(im, jm), kp);
}

TEST(Composition, SubalgebraSpecs) {
  AlgebraSpec h = AlgebraSpec::quaternion_kkl(AlgKind::SplitOctonion);
  EXPECT_EQ(h.dim(), 4);
  EXPECT_TRUE(h.closed());
  AlgebraSpec c = AlgebraSpec::complex_l(AlgKind::SplitOctonion);
  EXPECT_EQ(c.dim(), 2);
  EXPECT_TRUE(c.closed());
  // {1, i, j} is not closed (ij = k missing)
  AlgebraSpec bad{AlgKind::Octonion, 0b00000111};
  EXPECT_FALSE(bad.closed());
  EXPECT_THROW(alg_unit(c, 1), error);
}

TEST(Composition, MismatchedSpecsThrow) {
  EXPECT_THROW(mul(alg_one(kO), alg_one(kS)), error);
  EXPECT_THROW(inner(alg_one(kO), alg_one(kS)), error);
}
