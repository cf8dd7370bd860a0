#pragma once

#include <string>

#include "octe8/e8.hpp"
#include "octe8/embedding.hpp"
#include "octe8/report.hpp"

namespace octe8 {

/// Canonical structure-constant export. The byte stream is deterministic:
/// {"pair": ..., "basis": [248 names], "brackets": [{"i", "j", "terms": [
/// {"k", "c"}]}]} with i < j only and rationals as decimal-free strings.
std::string structure_to_json(const E8Algebra& alg);
std::string structure_to_csv(const E8Algebra& alg);

/// FNV-1a content hash of a canonical export.
std::string content_hash_hex(std::string_view bytes);

struct ImportResult {
  bool ok = false;
  std::string hash;     // hash of the re-serialized imported table
  std::string message;  // first discrepancy if !ok
};

/// Parses an export and checks it is bit-identical (after canonical
/// re-serialization) to the in-memory table of alg.
ImportResult verify_structure_json(const E8Algebra& alg, const std::string& json);

std::string report_to_json(const Report& rep);

// Named verification suites (the CLI surface and the acceptance criteria are
// assembled from these).
Report suite_tables();
Report suite_jacobi(const E8Algebra& alg, bool full, long long samples,
                    std::uint64_t seed);
Report suite_killing(const E8Algebra& alg);
Report suite_grading(const E8Algebra& alg);
Report suite_forms();
Report suite_chains(const EmbeddingVerifier& v, int n_random,
                    std::uint64_t seed);
Report suite_roundtrip(const E8Algebra& alg, std::uint64_t seed);

}  // namespace octe8
