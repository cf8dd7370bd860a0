// Command-line surface: multiplication tables, structure-table builds,
// verification suites, bracket/spectrum queries and exports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "octe8/embedding.hpp"
#include "octe8/exprlang.hpp"
#include "octe8/serialization.hpp"

namespace {

using namespace octe8;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

bool g_json_errors = false;

int fail_usage(const std::string& message) {
  if (g_json_errors) {
    nlohmann::ordered_json j;
    j["error"] = "usage";
    j["message"] = message;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return kExitUsage;
}

PairKind parse_pair_flag(const std::string& p) {
  auto k = pair_from_name(p);
  if (!k) throw error("unknown pair '" + p + "' (use O:O, O':O or O':O')");
  return *k;
}

void print_table(AlgKind kind) {
  const Algebra& a = kind == AlgKind::Octonion ? Algebra::octonions()
                                               : Algebra::split_octonions();
  std::printf("%6s", "");
  for (int j = 1; j < 8; ++j) std::printf("%6s", a.unit_name(j));
  std::printf("\n");
  for (int i = 1; i < 8; ++i) {
    std::printf("%6s", a.unit_name(i));
    for (int j = 1; j < 8; ++j) {
      UnitProduct p = a.unit_product(i, j);
      std::string cell = (p.sign < 0 ? "-" : "") + std::string(a.unit_name(p.index));
      std::printf("%6s", cell.c_str());
    }
    std::printf("\n");
  }
}

// Accepts "0,±2,±4" (UTF-8 ±) as well as plain signed rationals.
std::vector<Rat> parse_candidates(const std::string& text) {
  std::vector<Rat> out;
  auto add_unique = [&](const Rat& r) {
    for (const auto& x : out)
      if (x == r) return;
    out.push_back(r);
  };
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' || c == ' ') {
      ++i;
      continue;
    }
    bool pm = false;
    if (static_cast<unsigned char>(c) == 0xc2 && i + 1 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0xb1) {
      pm = true;
      i += 2;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && text[j] != ' ') ++j;
    Rat r = rat_parse(text.substr(i, j - i));
    add_unique(r);
    if (pm) add_unique(-r);
    i = j;
  }
  return out;
}

Report run_suite(const std::string& name, PairKind kind, bool full,
                 std::uint64_t seed) {
  const E8Algebra& alg = E8Algebra::get(kind);
  auto verifier = [&]() -> EmbeddingVerifier {
    if (kind != PairKind::SplitO)
      throw error("suite '" + name + "' needs --pair O':O");
    return EmbeddingVerifier(alg);
  };
  if (name == "tables") return suite_tables();
  if (name == "jacobi") return suite_jacobi(alg, full, 100000, seed);
  if (name == "killing") return suite_killing(alg);
  if (name == "lemma1") return verifier().verify_lemma1();
  if (name == "lemma2") return verifier().verify_lemma2();
  if (name == "det") return verifier().verify_determinant(50, seed);
  if (name == "action") {
    EmbeddingVerifier v = verifier();
    Report rep = v.verify_action_equivalence(200, seed);
    rep.merge(suite_chains(v, 20, seed));
    return rep;
  }
  if (name == "e7bracket") return verifier().verify_e7_bracket(100, seed);
  if (name == "decomp") return verifier().verify_decomposition();
  if (name == "grading") return suite_grading(alg);
  if (name == "forms") return suite_forms();
  throw error("unknown suite '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact division-algebra construction of e8 and its Freudenthal "
               "e7 structure"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json_errors, "machine-readable errors on stderr");

  std::string algebra_name = "O";
  auto* tables = app.add_subcommand("tables", "print a multiplication table");
  tables->add_option("--algebra", algebra_name, "O or O'")
      ->check(CLI::IsMember({"O", "O'"}));
  bool tables_check = false;
  tables->add_flag("--check", tables_check,
                   "cross-check the tables against Cayley-Dickson doubling");

  std::string pair_flag = "O':O";
  std::string cache_dir;
  auto* build = app.add_subcommand("build", "build or load a structure table");
  build->add_option("--pair", pair_flag, "O:O, O':O or O':O'");
  build->add_option("--cache", cache_dir, "cache directory");

  std::string suite = "all";
  bool full = false;
  std::uint64_t seed = 1;
  std::string report_out;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite,
                     "tables|jacobi|killing|lemma1|lemma2|det|action|"
                     "e7bracket|decomp|grading|forms|all");
  verify->add_flag("--full", full, "full Jacobi sweep instead of sampling");
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--out", report_out, "write a JSON report");
  verify->add_option("--pair", pair_flag, "O:O, O':O or O':O'");

  std::string lhs_text, rhs_text;
  auto* bracket_cmd = app.add_subcommand("bracket", "bracket two expressions");
  bracket_cmd->add_option("--lhs", lhs_text, "left expression")->required();
  bracket_cmd->add_option("--rhs", rhs_text, "right expression")->required();
  bracket_cmd->add_option("--pair", pair_flag, "O:O, O':O or O':O'");

  std::string elem_text, cand_text = "0";
  auto* spectrum = app.add_subcommand("spectrum", "ad-eigenvalue multiplicities");
  spectrum->add_option("--element", elem_text, "expression")->required();
  spectrum->add_option("--candidates", cand_text, "e.g. \"0,±2,±4\"");
  spectrum->add_option("--pair", pair_flag, "O:O, O':O or O':O'");

  std::string what = "sc", format = "json", out_file;
  auto* export_cmd = app.add_subcommand("export", "export structure constants");
  export_cmd->add_option("--what", what, "sc");
  export_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  export_cmd->add_option("--out", out_file, "output file")->required();
  export_cmd->add_option("--pair", pair_flag, "O:O, O':O or O':O'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tables->parsed()) {
      AlgKind kind =
          algebra_name == "O" ? AlgKind::Octonion : AlgKind::SplitOctonion;
      print_table(kind);
      if (tables_check) {
        Report rep = suite_tables();
        for (const auto& c : rep.checks)
          std::printf("[%s] %s %s\n", c.pass ? "pass" : "FAIL", c.id.c_str(),
                      c.detail.c_str());
        if (!rep.all_pass()) return kExitVerifyFail;
      }
      return kExitOk;
    }

    if (build->parsed()) {
      PairKind kind = parse_pair_flag(pair_flag);
      if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::string slug = pair_name(kind);
        for (auto& c : slug)
          if (c == ':' || c == '\'') c = c == ':' ? '-' : 'p';
        std::filesystem::path file =
            std::filesystem::path(cache_dir) / ("sc_" + slug + ".json");
        const E8Algebra& alg = E8Algebra::get(kind);
        if (std::filesystem::exists(file)) {
          std::ifstream in(file);
          std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
          ImportResult ir = verify_structure_json(alg, text);
          if (!ir.ok) throw error("cache mismatch: " + ir.message);
          std::printf("loaded %s (hash %s)\n", file.c_str(), ir.hash.c_str());
        } else {
          std::string text = structure_to_json(alg);
          std::ofstream out(file);
          out << text;
          std::printf("built %s (hash %s)\n", file.c_str(),
                      content_hash_hex(text).c_str());
        }
      } else {
        const E8Algebra& alg = E8Algebra::get(kind);
        std::printf("built structure table for %s (%d basis elements)\n",
                    pair_name(alg.kind()), E8Algebra::kDim);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      PairKind kind = parse_pair_flag(pair_flag);
      std::vector<std::string> suites;
      if (suite == "all")
        suites = {"tables", "jacobi", "killing", "lemma1", "lemma2",
                  "det",    "action", "e7bracket", "decomp", "grading",
                  "forms"};
      else
        suites = {suite};
      Report combined;
      combined.suite = suite;
      combined.pair = pair_name(kind);
      for (const auto& s : suites) combined.merge(run_suite(s, kind, full, seed));
      std::sort(combined.checks.begin(), combined.checks.end(),
                [](const CheckResult& a, const CheckResult& b) {
                  return a.id < b.id;
                });
      for (const auto& c : combined.checks)
        std::printf("[%s] %-40s %s\n", c.pass ? "pass" : "FAIL", c.id.c_str(),
                    c.detail.c_str());
      if (!report_out.empty()) {
        std::ofstream out(report_out);
        out << report_to_json(combined) << "\n";
      }
      return combined.all_pass() ? kExitOk : kExitVerifyFail;
    }

    if (bracket_cmd->parsed()) {
      const E8Algebra& alg = E8Algebra::get(parse_pair_flag(pair_flag));
      E8Vector lhs = eval_element(parse_element(lhs_text), alg);
      E8Vector rhs = eval_element(parse_element(rhs_text), alg);
      std::printf("%s\n", print_element(alg.bracket(lhs, rhs), alg).c_str());
      return kExitOk;
    }

    if (spectrum->parsed()) {
      const E8Algebra& alg = E8Algebra::get(parse_pair_flag(pair_flag));
      E8Vector h = eval_element(parse_element(elem_text), alg);
      std::vector<Rat> cands = parse_candidates(cand_text);
      EigenReport er = alg.ad_eigen(h, cands);
      for (const auto& sp : er.spaces)
        std::printf("lambda = %-6s multiplicity %d\n", rat_str(sp.lambda).c_str(),
                    sp.multiplicity);
      std::printf("residual dimension %d\n", er.residual_dim);
      return kExitOk;
    }

    if (export_cmd->parsed()) {
      if (what != "sc") return fail_usage("only --what sc is supported");
      const E8Algebra& alg = E8Algebra::get(parse_pair_flag(pair_flag));
      std::string text =
          format == "json" ? structure_to_json(alg) : structure_to_csv(alg);
      std::ofstream out(out_file);
      if (!out) return fail_usage("cannot open " + out_file);
      out << text;
      if (format == "json")
        std::printf("hash %s\n", content_hash_hex(text).c_str());
      return kExitOk;
    }
  } catch (const ParseError& e) {
    if (g_json_errors) {
      nlohmann::ordered_json j;
      j["error"] = "parse";
      j["offset"] = e.offset;
      j["expected"] = e.expected;
      j["got"] = e.got;
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  } catch (const std::exception& e) {
    if (g_json_errors) {
      nlohmann::ordered_json j;
      j["error"] = "runtime";
      j["message"] = e.what();
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
  }
  return fail_usage("no subcommand");
}
