#include "octe8/tensor.hpp"

#include <gtest/gtest.h>

#include <random>

#include "octe8/linalg.hpp"

using namespace octe8;

namespace {

const AlgebraPair kPair{AlgebraSpec::full(AlgKind::SplitOctonion),
                        AlgebraSpec::full(AlgKind::Octonion)};

TensorElem random_tensor(std::mt19937_64& rng, int nnz = 6) {
  TensorElem t;
  for (int n = 0; n < nnz; ++n)
    t.c[rng() % 64] = rat(static_cast<long>(rng() % 9) - 4,
                          static_cast<long>(rng() % 4) + 1);
  return t;
}

}  // namespace

TEST(Tensor, ProductSamples) {
  // (1⊗i)(1⊗j) = 1⊗k
  EXPECT_EQ(tmul(kPair, tensor_unit(0, 1), tensor_unit(0, 2)),
            tensor_unit(0, 3));
  // (L⊗1)(L⊗1) = 1⊗1
  EXPECT_EQ(tmul(kPair, tensor_unit(7, 0), tensor_unit(7, 0)), tensor_one());
  // (K⊗i)(KL⊗1) = -L⊗i  (K·KL = -L)
  EXPECT_EQ(tmul(kPair, tensor_unit(3, 1), tensor_unit(4, 0)),
            tensor_unit(7, 1, rat(-1)));
}

TEST(Tensor, ConjBasics) {
  EXPECT_EQ(tconj(tensor_one()), tensor_one());
  EXPECT_EQ(tconj(tensor_unit(3, 1)), tensor_unit(3, 1));   // (-K)⊗(-i)
  EXPECT_EQ(tconj(tensor_unit(3, 0)), tensor_unit(3, 0, rat(-1)));
  std::mt19937_64 rng(5);
  for (int n = 0; n < 20; ++n) {
    TensorElem a = random_tensor(rng), b = random_tensor(rng);
    EXPECT_EQ(tconj(tconj(a)), a);
    EXPECT_EQ(tconj(tmul(kPair, a, b)), tmul(kPair, tconj(b), tconj(a)));
  }
}

TEST(Tensor, OperatorMatchesProduct) {
  std::mt19937_64 rng(6);
  for (int n = 0; n < 20; ++n) {
    TensorElem x = random_tensor(rng), y = random_tensor(rng);
    EXPECT_EQ(toperator(kPair, x).apply(y), tmul(kPair, x, y));
    TensorElem yx = tmul(kPair, y, x);
    EXPECT_EQ(right_mult_op(kPair, x).apply(y), yx);
  }
}

TEST(Tensor, OperatorSamples) {
  EXPECT_EQ(toperator(kPair, tensor_one()), TensorOp::identity());
  TensorOp li = toperator(kPair, tensor_unit(0, 1));
  TensorOp sq = compose(li, li);
  TensorOp want = TensorOp::identity();
  want *= rat(-1);
  EXPECT_EQ(sq, want);
  // K+ ⊗ 1 squares to zero
  AlgebraSpec split = kPair.left;
  TensorElem kp = labeled(null_unit(split, 3, +1), alg_one(kPair.right));
  TensorOp op = toperator(kPair, kp);
  EXPECT_TRUE(compose(op, op).is_zero());
}

TEST(Tensor, FactorOperatorsCommute) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 10; ++n) {
    TensorElem a;  // left factor only
    a.c[8 * (rng() % 8)] = rat(static_cast<long>(rng() % 7) - 3);
    TensorElem b;  // right factor only
    b.c[rng() % 8] = rat(static_cast<long>(rng() % 7) - 3);
    TensorOp oa = toperator(kPair, a), ob = toperator(kPair, b);
    EXPECT_EQ(toperator(kPair, tmul(kPair, a, b)), compose(oa, ob));
    EXPECT_TRUE(commutator(oa, ob).is_zero());
  }
}

TEST(Tensor, LabeledElements) {
  AlgebraSpec split = kPair.left;
  AlgebraSpec oct = kPair.right;
  TensorElem kp_i = labeled(null_unit(split, 3, +1), alg_unit(oct, 1));
  TensorElem want;
  want.c[8 * 3 + 1] = rat(1, 2);
  want.c[8 * 4 + 1] = rat(1, 2);
  EXPECT_EQ(kp_i, want);
  EXPECT_EQ(labeled(alg_one(split), alg_unit(oct, 5)), tensor_unit(0, 5));
  EXPECT_EQ(labeled(alg_unit(split, 7), alg_one(oct)), tensor_unit(7, 0));
}

TEST(Tensor, InnerSignature) {
  RatMatrix gram(64, 64);
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j)
      gram.at(i, j) = tinner(kPair, tensor_unit(i >> 3, i & 7),
                             tensor_unit(j >> 3, j & 7));
  EXPECT_EQ(signature(gram), (Signature{32, 32, 0}));
}
