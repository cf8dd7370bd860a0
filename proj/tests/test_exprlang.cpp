#include "octe8/exprlang.hpp"

#include <gtest/gtest.h>

#include "octe8/embedding.hpp"

using namespace octe8;

namespace {
const E8Algebra& alg() { return E8Algebra::get(PairKind::SplitO); }
}  // namespace

TEST(ExprLang, SumOfTwoTerms) {
  ElementExpr e = parse_element("X[K*i] + 2*D[j]");
  EXPECT_EQ(e.root_arity(), 2);
  E8Vector v = eval_element(e, alg());
  E8Vector want = alg().basis_vector(alg().off_index(BasisFamily::X, 8 * 3 + 1)) +
                  rat(2) * alg().basis_vector(alg().diag_index(BasisFamily::D, 0, 2));
  EXPECT_EQ(v, want);
}

TEST(ExprLang, BracketNode) {
  ElementExpr e = parse_element("[G[K+KL], G[I+IL]]");
  EXPECT_EQ(e.nodes[e.root].kind, ExprNode::Kind::Bracket);
  // [G_K + G_KL, G_I + G_IL] = 4[G_{K+}, G_{I+}] = -16 G_{J-} = -8(G_J - G_JL)
  E8Vector v = eval_element(e, alg());
  E8Vector want =
      rat(-8) * (alg().basis_vector(alg().diag_index(BasisFamily::G, 1, 2)) -
                 alg().basis_vector(alg().diag_index(BasisFamily::G, 1, 5)));
  EXPECT_EQ(v, want);
}

TEST(ExprLang, UnknownUnitError) {
  try {
    parse_element("X[Q*i]");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset, 2u);
    EXPECT_NE(e.got.find("Q"), std::string::npos);
  }
}

TEST(ExprLang, SyntaxErrors) {
  EXPECT_THROW(parse_element(""), ParseError);
  EXPECT_THROW(parse_element("X[K*i"), ParseError);
  EXPECT_THROW(parse_element("(X[K*i]"), ParseError);
  EXPECT_THROW(parse_element("D[1]"), ParseError);
  EXPECT_THROW(parse_element("X[k*i]"), ParseError);   // left factor must be uppercase
  EXPECT_THROW(parse_element("D[j] D[k]"), ParseError);
  EXPECT_THROW(parse_element("[X[K*i], ]"), ParseError);
}

TEST(ExprLang, WhitespaceAndOptionalStar) {
  E8Vector a = eval_element(parse_element("  2 * X[ K * i ]  "), alg());
  E8Vector b = eval_element(parse_element("2X[K*i]"), alg());
  EXPECT_EQ(a, b);
  E8Vector c = eval_element(parse_element("0*X[1*i]"), alg());
  EXPECT_TRUE(c.is_zero());
  E8Vector d = eval_element(parse_element("1/2*G[K] - 1/2*G[K]"), alg());
  EXPECT_TRUE(d.is_zero());
  E8Vector neg = eval_element(parse_element("-X[K*i]"), alg());
  EXPECT_EQ(neg, rat(-1) * alg().basis_vector(alg().off_index(BasisFamily::X, 25)));
}

TEST(ExprLang, Sl2RaisingExample) {
  // [A[L], A[K-KL]] is a nonzero multiple of A[K-KL].
  E8Vector v = eval_element(parse_element("[A[L], A[K-KL]]"), alg());
  E8Vector dir = eval_element(parse_element("A[K-KL]"), alg());
  EXPECT_FALSE(v.is_zero());
  EXPECT_EQ(v, rat(4) * dir);
}

TEST(ExprLang, PrintRoundTrip) {
  RatRng rng(61);
  for (int n = 0; n < 50; ++n) {
    E8Vector u;
    int nnz = 1 + static_cast<int>(rng.gen() % 8);
    for (int t = 0; t < nnz; ++t) u.c[rng.gen() % 248] = rng.small();
    std::string s = print_element(u, alg());
    EXPECT_EQ(eval_element(parse_element(s), alg()), u) << s;
  }
  EXPECT_EQ(print_element(E8Vector{}, alg()), "0*X[1*1]");
  EXPECT_TRUE(eval_element(parse_element("0*X[1*1]"), alg()).is_zero());
}
