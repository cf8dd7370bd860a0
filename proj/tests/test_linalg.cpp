#include "octe8/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace octe8;

namespace {

RatMatrix random_matrix(int n, int m, std::mt19937_64& rng) {
  RatMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      a.at(i, j) = rat(static_cast<long>(rng() % 11) - 5,
                       static_cast<long>(rng() % 4) + 1);
  return a;
}

}  // namespace

TEST(Linalg, SolveIdentity) {
  RatMatrix id = RatMatrix::identity(4);
  std::vector<Rat> b = {rat(1), rat(-2), rat(3, 2), rat(0)};
  auto x = solve(id, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
}

TEST(Linalg, SolveInconsistent) {
  RatMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  a.at(1, 0) = 2;
  a.at(1, 1) = 2;
  EXPECT_FALSE(solve(a, {rat(1), rat(3)}));
  auto x = solve(a, {rat(1), rat(2)});
  ASSERT_TRUE(x);
}

TEST(Linalg, SolveRoundTrip) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 10; ++n) {
    RatMatrix a = random_matrix(5, 5, rng);
    if (rank(a) != 5) continue;
    std::vector<Rat> b(5);
    for (auto& v : b) v = rat(static_cast<long>(rng() % 9) - 4);
    auto x = solve(a, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
  }
}

TEST(Linalg, RankAndKernel) {
  EXPECT_EQ(rank(RatMatrix::identity(7)), 7);
  EXPECT_EQ(rank(RatMatrix(5, 3)), 0);
  std::mt19937_64 rng(12);
  for (int n = 0; n < 10; ++n) {
    RatMatrix a = random_matrix(4, 6, rng);
    auto ker = kernel(a);
    EXPECT_EQ(rank(a) + static_cast<int>(ker.size()), 6);
    for (const auto& v : ker) {
      auto img = a.apply(v);
      for (const auto& c : img) EXPECT_TRUE(is_zero(c));
    }
  }
}

TEST(Linalg, RankPermutationInvariant) {
  std::mt19937_64 rng(13);
  RatMatrix a = random_matrix(6, 6, rng);
  RatMatrix p(6, 6);
  int perm[6] = {3, 1, 5, 0, 4, 2};
  for (int i = 0; i < 6; ++i) p.at(i, perm[i]) = 1;
  EXPECT_EQ(rank(a), rank(p * a));
  EXPECT_EQ(rank(a), rank(a * p));
}

TEST(Linalg, SignatureBasics) {
  EXPECT_EQ(signature(RatMatrix::diagonal({rat(1), rat(-1), rat(0)})),
            (Signature{1, 1, 1}));
  EXPECT_EQ(signature(RatMatrix::identity(9)), (Signature{9, 0, 0}));
  RatMatrix offdiag(2, 2);
  offdiag.at(0, 1) = 1;
  offdiag.at(1, 0) = 1;
  EXPECT_EQ(signature(offdiag), (Signature{1, 1, 0}));
  EXPECT_THROW(signature(random_matrix(3, 4, *new std::mt19937_64(1))), error);
}

TEST(Linalg, SylvesterInvariance) {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 5; ++n) {
    RatMatrix a = random_matrix(6, 6, rng);
    RatMatrix s = a + a.transposed();
    RatMatrix p = random_matrix(6, 6, rng);
    if (rank(p) != 6) continue;
    RatMatrix congruent = p.transposed() * s * p;
    EXPECT_EQ(signature(s), signature(congruent));
  }
}

TEST(Linalg, IntegerEigenspaces) {
  EigenReport rep = integer_eigenspaces(RatMatrix::identity(5), {rat(1)});
  ASSERT_EQ(rep.spaces.size(), 1u);
  EXPECT_EQ(rep.spaces[0].multiplicity, 5);
  EXPECT_EQ(rep.residual_dim, 0);

  // companion matrix of x^2 + 4: no rational eigenvalues
  RatMatrix comp(2, 2);
  comp.at(0, 1) = -4;
  comp.at(1, 0) = 1;
  rep = integer_eigenspaces(comp, {rat(2), rat(-2)});
  EXPECT_EQ(rep.spaces[0].multiplicity, 0);
  EXPECT_EQ(rep.spaces[1].multiplicity, 0);
  EXPECT_EQ(rep.residual_dim, 2);
}

TEST(Linalg, LeadingMinors) {
  RatMatrix g = RatMatrix::diagonal({rat(1), rat(2), rat(3)});
  g.at(0, 1) = g.at(1, 0) = 1;
  auto minors = leading_principal_minors(g);
  ASSERT_EQ(minors.size(), 3u);
  EXPECT_EQ(minors[0], rat(1));
  EXPECT_EQ(minors[1], rat(1));
  EXPECT_EQ(minors[2], rat(3));
}
