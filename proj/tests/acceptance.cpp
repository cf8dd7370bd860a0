// Acceptance suite: one pass/fail line per criterion, all exact arithmetic.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "octe8/embedding.hpp"
#include "octe8/serialization.hpp"

using namespace octe8;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, const Report& rep) {
  bool pass = rep.all_pass();
  std::string detail;
  for (const auto& c : rep.checks)
    if (!c.pass) detail += " [" + c.id + ": " + c.detail + "]";
  std::printf("[%s] criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

Report pick(const Report& rep, std::initializer_list<const char*> prefixes) {
  Report out;
  out.suite = rep.suite;
  out.pair = rep.pair;
  for (const auto& c : rep.checks)
    for (const char* p : prefixes)
      if (c.id.rfind(p, 0) == 0) out.checks.push_back(c);
  return out;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  try {
    criterion(1, "multiplication tables match the doubling construction",
              suite_tables());

    const E8Algebra& alg = E8Algebra::get(PairKind::SplitO);
    criterion(2, "full Jacobi sweep over all basis triples (O':O)",
              suite_jacobi(alg, /*full=*/true, 0, 1));

    {
      Report combined;
      for (PairKind k :
           {PairKind::SplitO, PairKind::OO, PairKind::SplitSplit}) {
        Report r = suite_killing(E8Algebra::get(k));
        for (auto& c : r.checks)
          combined.add(std::string(pair_name(k)) + " " + c.id, c.pass, c.detail);
      }
      criterion(3, "Killing signatures (112,136,0) / (0,248,0) / (128,120,0)",
                combined);
    }

    EmbeddingVerifier v(alg);
    criterion(4, "decomposition 248 = 133 + 2x56 + 3 with e7-invariant towers",
              v.verify_decomposition());
    criterion(5, "Lemma 1 exhaustive over Albert basis pairs and null labels",
              v.verify_lemma1());
    criterion(6, "Lemma 2 exhaustive over Albert basis pairs and label cycles",
              v.verify_lemma2());
    criterion(7, "determinant via commutators (double, Kdet, triple product)",
              v.verify_determinant(50, 1));
    criterion(8, "Freudenthal action equivalence on both towers",
              v.verify_action_equivalence(200, 1));
    criterion(9, "e7 bracket equivalence including <A,B> and trace identities",
              v.verify_e7_bracket(100, 1));
    criterion(10, "raising/lowering chains annihilate after four steps",
              suite_chains(v, 20, 1));

    Report grading = suite_grading(alg);
    criterion(11, "Table 5 eigenvalues and [G_L, A] anchors",
              pick(grading, {"Grading/table5", "Grading/GAI-GAJ"}));
    criterion(12, "gradings: e7 27/79/27, e8 1/56/134/56/1, bigrading pieces",
              pick(grading, {"Grading/e7-3grading", "Grading/e8-adAL-5term",
                             "Grading/bigrading", "Grading/3term"}));

    criterion(13, "complex tower for e7(-5): no rational eigenvalues, "
                  "(ad h)^2 scalar",
              pick(suite_forms(), {"Forms/e7(-5)", "Forms/complex"}));
    criterion(14, "export/import hash round-trip and parse/print round-trip",
              suite_roundtrip(alg, 1));
  } catch (const std::exception& e) {
    std::printf("[FAIL] acceptance aborted: %s\n", e.what());
    ++g_failures;
  }
  auto t1 = Clock::now();
  std::printf("%d criterion(s) failed; total %lld ms\n", g_failures,
              (long long)std::chrono::duration_cast<std::chrono::milliseconds>(
                  t1 - t0)
                  .count());
  return g_failures == 0 ? 0 : 1;
}
