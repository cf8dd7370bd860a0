#include "octe8/serialization.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "octe8/exprlang.hpp"

namespace octe8 {
namespace {

using ordered_json = nlohmann::ordered_json;

struct TableData {
  std::string pair;
  std::vector<std::string> basis;
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> rows;
};

TableData table_from_algebra(const E8Algebra& alg) {
  TableData t;
  t.pair = pair_name(alg.kind());
  for (int i = 0; i < E8Algebra::kDim; ++i) t.basis.push_back(alg.basis_name(i));
  E8Vector acc;
  for (int i = 0; i < E8Algebra::kDim; ++i)
    for (int j = i + 1; j < E8Algebra::kDim; ++j) {
      acc = E8Vector{};
      alg.bracket_basis_acc(i, j, Rat(1), acc);
      std::vector<std::pair<int, Rat>> terms;
      for (int k = 0; k < E8Algebra::kDim; ++k)
        if (!is_zero(acc.c[k])) terms.push_back({k, acc.c[k]});
      if (!terms.empty()) t.rows[{i, j}] = std::move(terms);
    }
  return t;
}

std::string emit_json(const TableData& t) {
  ordered_json j;
  j["pair"] = t.pair;
  j["basis"] = t.basis;
  ordered_json brackets = ordered_json::array();
  for (const auto& [ij, terms] : t.rows) {
    ordered_json row;
    row["i"] = ij.first;
    row["j"] = ij.second;
    ordered_json jt = ordered_json::array();
    for (const auto& [k, c] : terms) {
      ordered_json term;
      term["k"] = k;
      term["c"] = rat_str(c);
      jt.push_back(std::move(term));
    }
    row["terms"] = std::move(jt);
    brackets.push_back(std::move(row));
  }
  j["brackets"] = std::move(brackets);
  return j.dump();
}

TableData table_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  TableData t;
  t.pair = j.at("pair").get<std::string>();
  for (const auto& name : j.at("basis")) t.basis.push_back(name.get<std::string>());
  if (t.basis.size() != 248) throw error("basis must list 248 names");
  for (const auto& row : j.at("brackets")) {
    int i = row.at("i").get<int>();
    int jj = row.at("j").get<int>();
    if (i < 0 || jj <= i || jj >= 248) throw error("bad bracket indices");
    std::vector<std::pair<int, Rat>> terms;
    for (const auto& term : row.at("terms")) {
      int k = term.at("k").get<int>();
      if (k < 0 || k >= 248) throw error("bad term index");
      terms.push_back({k, rat_parse(term.at("c").get<std::string>())});
    }
    t.rows[{i, jj}] = std::move(terms);
  }
  return t;
}

}  // namespace

std::string structure_to_json(const E8Algebra& alg) {
  return emit_json(table_from_algebra(alg));
}

std::string structure_to_csv(const E8Algebra& alg) {
  TableData t = table_from_algebra(alg);
  std::string out = "i,j,k,c\n";
  for (const auto& [ij, terms] : t.rows)
    for (const auto& [k, c] : terms) {
      out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
             std::to_string(k) + "," + rat_str(c) + "\n";
    }
  return out;
}

std::string content_hash_hex(std::string_view bytes) {
  Fnv1a h;
  h.feed(bytes);
  return h.hex();
}

ImportResult verify_structure_json(const E8Algebra& alg,
                                   const std::string& json) {
  ImportResult res;
  TableData imported;
  try {
    imported = table_from_json(json);
  } catch (const std::exception& e) {
    res.message = std::string("parse failure: ") + e.what();
    return res;
  }
  if (imported.pair != pair_name(alg.kind())) {
    res.message = "pair mismatch: " + imported.pair;
    return res;
  }
  for (int i = 0; i < E8Algebra::kDim; ++i)
    if (imported.basis[i] != alg.basis_name(i)) {
      res.message = "basis name mismatch at " + std::to_string(i);
      return res;
    }
  TableData own = table_from_algebra(alg);
  if (!(own.rows == imported.rows)) {
    res.message = "structure constants differ";
    return res;
  }
  res.ok = true;
  res.hash = content_hash_hex(emit_json(imported));
  return res;
}

std::string report_to_json(const Report& rep) {
  Report sorted = rep;
  std::sort(sorted.checks.begin(), sorted.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  ordered_json j;
  j["suite"] = sorted.suite;
  j["pair"] = sorted.pair;
  ordered_json checks = ordered_json::array();
  int passed = 0;
  for (const auto& c : sorted.checks) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
    if (c.pass) ++passed;
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"total", sorted.checks.size()},
                  {"passed", passed},
                  {"failed", sorted.checks.size() - passed}};
  return j.dump(2);
}

Report suite_tables() {
  Report rep;
  rep.suite = "tables";
  rep.pair = "-";
  for (AlgKind kind : {AlgKind::Octonion, AlgKind::SplitOctonion}) {
    const char* which = kind == AlgKind::Octonion ? "O" : "O'";
    bool ok = true;
    std::string detail = "49 imaginary-unit products match the doubling";
    try {
      const Algebra& a = kind == AlgKind::Octonion
                             ? Algebra::octonions()
                             : Algebra::split_octonions();
      (void)a;
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    rep.add(std::string("Tables/") + which, ok, detail);
  }
  // Cited sample products.
  const Algebra& o = Algebra::octonions();
  const Algebra& s = Algebra::split_octonions();
  auto prod_is = [](const Algebra& a, int i, int j, int sign, int idx) {
    UnitProduct p = a.unit_product(i, j);
    return p.sign == sign && p.index == idx;
  };
  rep.add("Tables/samples",
          prod_is(o, 1, 2, +1, 3) &&   // i j = k
              prod_is(s, 4, 4, +1, 0) &&  // KL KL = 1
              prod_is(s, 7, 6, -1, 1),    // L IL = -I
          "i*j = k, KL*KL = 1, L*IL = -I");
  return rep;
}

Report suite_jacobi(const E8Algebra& alg, bool full, long long samples,
                    std::uint64_t seed) {
  Report rep;
  rep.suite = "jacobi";
  rep.pair = pair_name(alg.kind());
  RatRng rng(seed);
  bool anti = true;
  for (int n = 0; n < 5; ++n) {
    E8Vector u;
    for (int t = 0; t < 12; ++t) u.c[rng.gen() % 248] = rng.small();
    if (!alg.bracket(u, u).is_zero()) anti = false;
  }
  rep.add("Jacobi/antisymmetry", anti, "[u,u] = 0 on random vectors");
  JacobiReport jr =
      full ? alg.jacobi_full() : alg.jacobi_sampled(samples, seed);
  std::string detail = std::to_string(jr.triples_checked) + " triples, " +
                       std::to_string(jr.violations) + " violations";
  if (jr.first_violation) {
    auto [a, b, c] = *jr.first_violation;
    detail += " (first at " + std::to_string(a) + "," + std::to_string(b) +
              "," + std::to_string(c) + ")";
  }
  rep.add(full ? "Jacobi/full-sweep" : "Jacobi/sampled-sweep",
          jr.violations == 0, detail);
  return rep;
}

Report suite_killing(const E8Algebra& alg) {
  Report rep;
  rep.suite = "killing";
  rep.pair = pair_name(alg.kind());
  Signature want;
  switch (alg.kind()) {
    case PairKind::SplitO:
      want = {112, 136, 0};
      break;
    case PairKind::OO:
      want = {0, 248, 0};
      break;
    case PairKind::SplitSplit:
      want = {128, 120, 0};
      break;
  }
  Signature got = alg.killing_signature();
  rep.add("Killing/signature", got == want,
          "(" + std::to_string(got.pos) + "," + std::to_string(got.neg) + "," +
              std::to_string(got.zero) + ")");
  RatRng rng(7);
  bool inv = true;
  for (int n = 0; n < 10; ++n) {
    E8Vector u, w, v;
    for (int t = 0; t < 6; ++t) {
      u.c[rng.gen() % 248] = rng.small();
      w.c[rng.gen() % 248] = rng.small();
      v.c[rng.gen() % 248] = rng.small();
    }
    Rat lhs = alg.killing(alg.bracket(u, w), v) + alg.killing(w, alg.bracket(u, v));
    if (!is_zero(lhs)) inv = false;
  }
  rep.add("Killing/ad-invariance", inv, "killing([u,w],v) = -killing(w,[u,v])");
  return rep;
}

Report suite_grading(const E8Algebra& alg) {
  Report rep;
  rep.suite = "grading";
  rep.pair = pair_name(alg.kind());
  if (alg.kind() != PairKind::SplitO) {
    rep.add("Grading/pair", false, "grading suite needs the O':O pair");
    return rep;
  }
  auto gvec = [&](int unit) {
    return alg.basis_vector(alg.diag_index(BasisFamily::G, 1, unit));
  };
  auto avec = [&](int unit) {
    return alg.basis_vector(alg.diag_index(BasisFamily::A, 1, unit));
  };
  E8Vector al = avec(7), gl = gvec(7);

  // Table 5 rows on the six null label directions plus L.
  struct Row {
    int base, sign, la, lg;
  } rows[6] = {{1, +1, -2, -2}, {2, +1, +2, -2}, {3, +1, 0, +4},
               {1, -1, +2, +2}, {2, -1, -2, +2}, {3, -1, 0, -4}};
  bool t5 = true;
  for (const auto& r : rows)
    for (int o = 0; o < 8 && t5; ++o) {
      E8Vector lab =
          alg.basis_vector(alg.off_index(BasisFamily::X, 8 * r.base + o)) +
          rat(r.sign) *
              alg.basis_vector(alg.off_index(BasisFamily::X, 8 * (7 - r.base) + o));
      if (!(alg.bracket(al, lab) == rat(r.la) * lab)) t5 = false;
      if (!(alg.bracket(gl, lab) == rat(r.lg) * lab)) t5 = false;
    }
  for (int o = 0; o < 8 && t5; ++o) {
    E8Vector lab = alg.basis_vector(alg.off_index(BasisFamily::X, 8 * 7 + o));
    if (!alg.bracket(al, lab).is_zero() || !alg.bracket(gl, lab).is_zero())
      t5 = false;
  }
  rep.add("Grading/table5-labels", t5, "A_L and G_L eigenvalues on Im O'");

  // G_Q follows the label eigenvalues under both Cartan elements; the A_Q
  // carry the doublet eigenvalues instead: anchors A_{I±}, A_{J±} sit inside
  // the towers P± (eigenvalue ±2) and A_{K±} are the sl(2,R) ladder (∓4).
  bool t5g = true;
  for (const auto& r : rows) {
    E8Vector gq = gvec(r.base) + rat(r.sign) * gvec(7 - r.base);
    gq *= rat(1, 2);
    if (!(alg.bracket(al, gq) == rat(r.la) * gq)) t5g = false;
    if (!(alg.bracket(gl, gq) == rat(r.lg) * gq)) t5g = false;
    E8Vector aq = avec(r.base) + rat(r.sign) * avec(7 - r.base);
    aq *= rat(1, 2);
    int la_anchor = r.base == 3 ? -4 * r.sign : 2 * r.sign;
    if (!(alg.bracket(al, aq) == rat(la_anchor) * aq)) t5g = false;
  }
  rep.add("Grading/table5-GA", t5g,
          "[A_L, G_Q] and [G_L, G_Q] follow the labels; [A_L, A_Q] follows "
          "the doublets");

  bool gaij = true;
  for (int sign : {+1, -1}) {
    E8Vector ai = avec(1) + rat(sign) * avec(6);
    ai *= rat(1, 2);
    E8Vector aj = avec(2) + rat(sign) * avec(5);
    aj *= rat(1, 2);
    if (!(alg.bracket(gl, ai) == rat(-6 * sign) * ai)) gaij = false;
    if (!(alg.bracket(gl, aj) == rat(6 * sign) * aj)) gaij = false;
  }
  rep.add("Grading/GAI-GAJ", gaij, "[G_L, A_{I±}] = ∓6, [G_L, A_{J±}] = ±6");

  auto e7 = alg.e7_subspace();
  GradingReport g7 = alg.grading_check(
      gl, {{rat(-4), 27}, {rat(0), 79}, {rat(4), 27}}, &e7);
  std::string d7;
  for (const auto& p : g7.pieces) d7 += std::to_string(p.dim) + " ";
  rep.add("Grading/e7-3grading", g7.law_holds && g7.residual_dim == 0,
          "dims " + d7 + "residual " + std::to_string(g7.residual_dim));

  GradingReport g8 = alg.grading_check(
      al, {{rat(-4), 1}, {rat(-2), 56}, {rat(0), 134}, {rat(2), 56}, {rat(4), 1}});
  std::string d8;
  for (const auto& p : g8.pieces) d8 += std::to_string(p.dim) + " ";
  rep.add("Grading/e8-adAL-5term", g8.law_holds && g8.residual_dim == 0,
          "dims " + d8 + "residual " + std::to_string(g8.residual_dim));

  BigradingReport bg = alg.joint_grading_check(gl, al);
  std::vector<int> want = {2, 27, 54, 82, 54, 27, 2};
  std::vector<int> got;
  for (const auto& p : bg.grouped) got.push_back(p.dim);
  std::string dbg;
  for (int d : got) dbg += std::to_string(d) + " ";
  rep.add("Grading/bigrading", bg.law_holds && bg.residual_dim == 0 && got == want,
          "piece dims " + dbg);

  rep.add("Grading/3term-vs-5term-note", true,
          "ad(A_L) has the five eigenvalues {0,±2,±4}: the ±4 pieces are the "
          "sl(2,R) ladder directions, so the displayed three-term structure "
          "56+(133+3)+56 is the module decomposition (see the decomp suite), "
          "not a literal ad-grading");
  return rep;
}

Report suite_forms() {
  Report rep;
  rep.suite = "forms";
  rep.pair = "-";
  for (PairKind k : {PairKind::SplitO, PairKind::OO, PairKind::SplitSplit}) {
    Report sub = suite_killing(E8Algebra::get(k));
    for (auto& c : sub.checks)
      if (c.id == "Killing/signature")
        rep.add(std::string("Forms/signature-") + pair_name(k), c.pass, c.detail);
  }

  // The complex Freudenthal tower: e7(-5) = su(3, O'⊗H) inside e8(-24).
  const E8Algebra& alg = E8Algebra::get(PairKind::SplitO);
  auto e75 = alg.e7_quaternionic_right();
  ClosureResult cr = alg.subalgebra_closure(e75);
  rep.add("Forms/e7(-5)-closure", cr.closed && cr.span_dim == 133,
          "span " + std::to_string(cr.span_dim) + ", closure " +
              std::to_string(cr.closure_dim));

  auto cent = alg.centralizer(e75);
  bool cent_ok = cent.size() == 3;
  rep.add("Forms/e7(-5)-centralizer", cent_ok,
          "dim " + std::to_string(cent.size()));

  // Complement of e7(-5) ⊕ su(2): the remaining 112 standard basis elements.
  std::vector<bool> inside(248, false);
  for (const auto& v : e75)
    for (int idx : v.support()) inside[idx] = true;
  for (int u : {3, 4, 7}) inside[alg.diag_index(BasisFamily::A, 0, u)] = true;
  std::vector<int> comp;
  for (int i = 0; i < 248; ++i)
    if (!inside[i]) comp.push_back(i);
  bool comp_ok = comp.size() == 112;

  E8Vector h = alg.basis_vector(alg.diag_index(BasisFamily::A, 0, 7));
  // ad(h) restricted to the complement (must preserve it).
  int w = static_cast<int>(comp.size());
  std::vector<int> where(248, -1);
  for (int t = 0; t < w; ++t) where[comp[t]] = t;
  RatMatrix M(w, w);
  for (int t = 0; t < w && comp_ok; ++t) {
    E8Vector img;
    alg.bracket_basis_acc(alg.diag_index(BasisFamily::A, 0, 7), comp[t], Rat(1),
                          img);
    (void)h;
    for (int idx : img.support()) {
      if (where[idx] < 0) {
        comp_ok = false;
        break;
      }
      M.at(where[idx], t) = img.c[idx];
    }
  }
  rep.add("Forms/complex-complement", comp_ok,
          "112-dimensional ad(h)-invariant complement");

  if (comp_ok) {
    std::vector<Rat> cands;
    for (int v : {0, 1, -1, 2, -2, 3, -3, 4, -4}) cands.push_back(rat(v));
    EigenReport er = integer_eigenspaces(M, cands);
    bool none = true;
    for (const auto& sp : er.spaces)
      if (sp.multiplicity != 0) none = false;
    rep.add("Forms/complex-no-rational-eigenvalues",
            none && er.residual_dim == 112,
            "no rational eigenvalues on the complement");

    RatMatrix M2 = M * M;
    Rat c = M2.at(0, 0);
    bool scalar = sgn(c) < 0;
    for (int i = 0; i < w && scalar; ++i)
      for (int j = 0; j < w && scalar; ++j) {
        if (i == j ? !(M2.at(i, j) == c) : !is_zero(M2.at(i, j)))
          scalar = false;
      }
    rep.add("Forms/complex-adh-squared", scalar,
            "(ad h)^2 = " + rat_str(c) + " on the complement");
  }
  return rep;
}

Report suite_chains(const EmbeddingVerifier& v, int n_random,
                    std::uint64_t seed) {
  Report rep;
  rep.suite = "chains";
  rep.pair = pair_name(v.algebra().kind());
  RatRng rng(seed);
  long bad_a = 0, bad_b = 0, bad_third = 0, bad_e8 = 0;
  for (int n = 0; n < n_random; ++n) {
    AlbertElem a = rng.albert();
    Theta ta;
    ta.A = a;
    Theta tb;
    tb.B = rng.albert();
    FTower p = rng.tower();
    FTower x = p;
    for (int step = 0; step < 4; ++step) x = act(ta, x);
    if (!x.is_zero()) ++bad_a;
    x = p;
    for (int step = 0; step < 4; ++step) x = act(tb, x);
    if (!x.is_zero()) ++bad_b;

    FTower anchor;
    anchor.q = rng.small();
    FTower third = act(ta, act(ta, act(ta, anchor)));
    FTower want;
    want.p = rat(6) * anchor.q * albert_det(a);
    if (!(third == want)) ++bad_third;
    if (!act(ta, third).is_zero()) ++bad_third;

    E8Vector t0 = v.embed_theta(ta);
    for (int sign : {+1, -1}) {
      E8Vector w = v.embed_tower(p, sign);
      for (int step = 0; step < 4; ++step) w = v.algebra().bracket(t0, w);
      if (!w.is_zero()) ++bad_e8;
    }
  }
  auto fmt = [&](long bad) {
    return bad ? std::to_string(bad) + " failures"
               : std::to_string(n_random) + " random cases";
  };
  rep.add("Chains/model-A-nilpotent", bad_a == 0, fmt(bad_a));
  rep.add("Chains/model-B-nilpotent", bad_b == 0, fmt(bad_b));
  rep.add("Chains/third-step-det", bad_third == 0, fmt(bad_third));
  rep.add("Chains/e8-nilpotent", bad_e8 == 0, fmt(bad_e8));
  return rep;
}

Report suite_roundtrip(const E8Algebra& alg, std::uint64_t seed) {
  Report rep;
  rep.suite = "roundtrip";
  rep.pair = pair_name(alg.kind());
  std::string exported = structure_to_json(alg);
  ImportResult ir = verify_structure_json(alg, exported);
  bool hash_ok = ir.ok && ir.hash == content_hash_hex(exported);
  rep.add("Roundtrip/export-import", hash_ok,
          hash_ok ? "content hash " + ir.hash : ir.message);

  RatRng rng(seed);
  long bad = 0;
  for (int n = 0; n < 100; ++n) {
    E8Vector u;
    int nnz = 1 + static_cast<int>(rng.gen() % 10);
    for (int t = 0; t < nnz; ++t) u.c[rng.gen() % 248] = rng.small();
    std::string s = print_element(u, alg);
    E8Vector back = eval_element(parse_element(s), alg);
    if (!(back == u)) ++bad;
  }
  rep.add("Roundtrip/parse-print", bad == 0,
          bad ? std::to_string(bad) + " mismatches" : "100 random vectors");
  return rep;
}

}  // namespace octe8
