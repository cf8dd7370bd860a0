#include "octe8/e8.hpp"

#include <gtest/gtest.h>

#include "octe8/embedding.hpp"

using namespace octe8;

namespace {

const E8Algebra& alg() { return E8Algebra::get(PairKind::SplitO); }

E8Vector gnull(int base, int sign) {
  E8Vector v = alg().basis_vector(alg().diag_index(BasisFamily::G, 1, base)) +
               rat(sign) * alg().basis_vector(
                               alg().diag_index(BasisFamily::G, 1, 7 - base));
  v *= rat(1, 2);
  return v;
}

E8Vector anull(int base, int sign) {
  E8Vector v = alg().basis_vector(alg().diag_index(BasisFamily::A, 1, base)) +
               rat(sign) * alg().basis_vector(
                               alg().diag_index(BasisFamily::A, 1, 7 - base));
  v *= rat(1, 2);
  return v;
}

}  // namespace

TEST(E8, BasisLayout) {
  EXPECT_EQ(alg().basis().size(), 248u);
  EXPECT_EQ(alg().basis_name(0), "X[1*1]");
  EXPECT_EQ(alg().basis_name(8 * 3 + 1), "X[K*i]");
  EXPECT_EQ(alg().basis_name(64), "Y[1*1]");
  EXPECT_EQ(alg().basis_name(192), "D[i]");
  EXPECT_EQ(alg().basis_name(199), "D[I]");
  EXPECT_EQ(alg().basis_name(226 + 7), "G[L]");
  EXPECT_EQ(alg().basis_name(247), "A[L]");
  for (int i = 0; i < 248; ++i)
    EXPECT_EQ(alg().basis_index(alg().basis()[i]), i);
}

TEST(E8, SameTypeBracketsAgreeWithDiagonalNesting) {
  // [X_{1⊗i}, X_{1⊗j}] = 2 D_{i,j} = [D_i, D_j], and the Y analogue through
  // E_q = (S_q - D_q)/2.
  const E8Algebra& a = alg();
  E8Vector xij = a.bracket(a.basis_vector(a.off_index(BasisFamily::X, 1)),
                           a.basis_vector(a.off_index(BasisFamily::X, 2)));
  E8Vector dij = a.bracket(a.basis_vector(a.diag_index(BasisFamily::D, 0, 1)),
                           a.basis_vector(a.diag_index(BasisFamily::D, 0, 2)));
  EXPECT_EQ(xij, dij);
  EXPECT_FALSE(xij.is_zero());

  E8Vector yij = a.bracket(a.basis_vector(a.off_index(BasisFamily::Y, 1)),
                           a.basis_vector(a.off_index(BasisFamily::Y, 2)));
  E8Vector ei = rat(1, 2) * (a.basis_vector(a.diag_index(BasisFamily::S, 0, 1)) -
                             a.basis_vector(a.diag_index(BasisFamily::D, 0, 1)));
  E8Vector ej = rat(1, 2) * (a.basis_vector(a.diag_index(BasisFamily::S, 0, 2)) -
                             a.basis_vector(a.diag_index(BasisFamily::D, 0, 2)));
  EXPECT_EQ(yij, a.bracket(ei, ej));
}

TEST(E8, NestedIdentities) {
  // [G_{K±}, G_{I±}] = -4 G_{J∓}; [G_{K±}, G_{I∓}] = 6 A_{J±};
  // [G_{K±}, I± x] = 2 J∓ x.
  const E8Algebra& a = alg();
  for (int sign : {+1, -1}) {
    EXPECT_EQ(a.bracket(gnull(3, sign), gnull(1, sign)),
              rat(-4) * gnull(2, -sign));
    EXPECT_EQ(a.bracket(gnull(3, sign), gnull(1, -sign)),
              rat(6) * anull(2, sign));
    for (int o = 0; o < 8; ++o) {
      E8Vector ix =
          rat(1, 2) * (a.basis_vector(a.off_index(BasisFamily::X, 8 * 1 + o)) +
                       rat(sign) *
                           a.basis_vector(a.off_index(BasisFamily::X, 8 * 6 + o)));
      E8Vector jx =
          rat(1, 2) * (a.basis_vector(a.off_index(BasisFamily::X, 8 * 2 + o)) -
                       rat(sign) *
                           a.basis_vector(a.off_index(BasisFamily::X, 8 * 5 + o)));
      EXPECT_EQ(a.bracket(gnull(3, sign), ix), rat(2) * jx);
    }
  }
}

TEST(E8, DiagonalSpanDimensions) {
  // All nested D_{p,q}, E_{p,q}, F_{p,q} together with D, S span 56
  // dimensions, and the D+E+F sums span 14 per side.
  const E8Algebra& a = alg();
  std::vector<E8Vector> all;
  std::vector<E8Vector> def_sums[2];
  for (int side = 0; side < 2; ++side)
    for (int p = 1; p <= 7; ++p) {
      all.push_back(a.basis_vector(a.diag_index(BasisFamily::D, side, p)));
      all.push_back(a.basis_vector(a.diag_index(BasisFamily::S, side, p)));
      for (int q = p + 1; q <= 7; ++q) {
        int off = side ? 8 : 1;
        E8Vector xp = a.basis_vector(a.off_index(BasisFamily::X, off * p));
        E8Vector xq = a.basis_vector(a.off_index(BasisFamily::X, off * q));
        E8Vector yp = a.basis_vector(a.off_index(BasisFamily::Y, off * p));
        E8Vector yq = a.basis_vector(a.off_index(BasisFamily::Y, off * q));
        E8Vector zp = a.basis_vector(a.off_index(BasisFamily::Z, off * p));
        E8Vector zq = a.basis_vector(a.off_index(BasisFamily::Z, off * q));
        E8Vector d = rat(1, 2) * a.bracket(xp, xq);
        E8Vector e = rat(1, 2) * a.bracket(yp, yq);
        E8Vector f = rat(1, 2) * a.bracket(zp, zq);
        all.push_back(d);
        all.push_back(e);
        all.push_back(f);
        def_sums[side].push_back(d + e + f);
      }
    }
  EXPECT_EQ(a.subalgebra_closure(all).span_dim, 56);
  EXPECT_EQ(a.subalgebra_closure(def_sums[0]).span_dim, 14);
  EXPECT_EQ(a.subalgebra_closure(def_sums[1]).span_dim, 14);
}

TEST(E8, JacobiSampledAndNegativeControl) {
  JacobiReport rep = alg().jacobi_sampled(100000, 1);
  EXPECT_EQ(rep.violations, 0);
  EXPECT_EQ(rep.triples_checked, 100000);

  FastTable corrupted = alg().fast_table();
  for (auto& e : corrupted.entries) {
    e.second = -e.second;  // flip one sign
    break;
  }
  JacobiReport bad = jacobi_sampled_over(corrupted, 100000, 1);
  EXPECT_GT(bad.violations, 0);
}

TEST(E8, KillingForm) {
  const E8Algebra& a = alg();
  const RatMatrix& k = a.killing_matrix();
  EXPECT_TRUE(k.is_symmetric());
  RatRng rng(41);
  for (int n = 0; n < 10; ++n) {
    E8Vector u, w, v;
    for (int t = 0; t < 5; ++t) {
      u.c[rng.gen() % 248] = rng.small();
      w.c[rng.gen() % 248] = rng.small();
      v.c[rng.gen() % 248] = rng.small();
    }
    EXPECT_EQ(a.killing(a.bracket(u, w), v) + a.killing(w, a.bracket(u, v)),
              rat(0));
  }
}

TEST(E8, SubalgebraClosures) {
  const E8Algebra& a = alg();
  ClosureResult e7 = a.subalgebra_closure(a.e7_subspace());
  EXPECT_TRUE(e7.closed);
  EXPECT_EQ(e7.span_dim, 133);
  ClosureResult e6 = a.subalgebra_closure(a.e6_subspace());
  EXPECT_TRUE(e6.closed);
  EXPECT_EQ(e6.span_dim, 78);
  ClosureResult one = a.subalgebra_closure({a.basis_vector(1)});
  EXPECT_FALSE(one.closed);
  EXPECT_GT(one.closure_dim, one.span_dim);
  EXPECT_THROW(a.restricted_subalgebra(0b00000111, 0xff), error);
}

TEST(E8, Centralizers) {
  const E8Algebra& a = alg();
  std::vector<E8Vector> whole;
  for (int i = 0; i < 248; ++i) whole.push_back(a.basis_vector(i));
  EXPECT_TRUE(a.centralizer(whole).empty());

  auto ce7 = a.centralizer(a.e7_subspace());
  EXPECT_EQ(ce7.size(), 3u);

  // The centralizer of e6 is the 8-dimensional sl(3,R): the anchors A_{I±},
  // A_{J±}, the sl(2,R) triple and G_L.
  auto ce6 = a.centralizer(a.e6_subspace());
  EXPECT_EQ(ce6.size(), 8u);
  std::vector<E8Vector> probe = ce6;
  probe.push_back(a.basis_vector(a.diag_index(BasisFamily::G, 1, 7)));
  for (int u : {1, 2, 3, 4, 5, 6, 7})
    probe.push_back(a.basis_vector(a.diag_index(BasisFamily::A, 1, u)));
  EXPECT_EQ(a.subalgebra_closure(probe).span_dim, 8);
}

TEST(E8, AdEigenvalues) {
  const E8Algebra& a = alg();
  E8Vector al = a.basis_vector(a.diag_index(BasisFamily::A, 1, 7));
  EigenReport rep = a.ad_eigen(
      al, {rat(0), rat(2), rat(-2), rat(4), rat(-4)});
  EXPECT_EQ(rep.spaces[0].multiplicity, 134);
  EXPECT_EQ(rep.spaces[1].multiplicity, 56);
  EXPECT_EQ(rep.spaces[2].multiplicity, 56);
  EXPECT_EQ(rep.spaces[3].multiplicity, 1);
  EXPECT_EQ(rep.spaces[4].multiplicity, 1);
  EXPECT_EQ(rep.residual_dim, 0);

  EigenReport zero = a.ad_eigen(E8Vector{}, {rat(0)});
  EXPECT_EQ(zero.spaces[0].multiplicity, 248);
}

TEST(E8, PairNames) {
  EXPECT_STREQ(pair_name(PairKind::SplitO), "O':O");
  EXPECT_EQ(pair_from_name("O:O"), PairKind::OO);
  EXPECT_EQ(pair_from_name("O':O'"), PairKind::SplitSplit);
  EXPECT_FALSE(pair_from_name("H:O"));
}
