#include "octe8/serialization.hpp"

#include <gtest/gtest.h>

using namespace octe8;

namespace {
const E8Algebra& alg() { return E8Algebra::get(PairKind::SplitO); }
}  // namespace

TEST(Serialization, ExportImportRoundTrip) {
  std::string text = structure_to_json(alg());
  ImportResult res = verify_structure_json(alg(), text);
  EXPECT_TRUE(res.ok) << res.message;
  EXPECT_EQ(res.hash, content_hash_hex(text));
}

TEST(Serialization, DetectsCorruption) {
  std::string text = structure_to_json(alg());
  // Flip a digit inside some coefficient.
  auto pos = text.find("\"c\":\"2\"");
  ASSERT_NE(pos, std::string::npos);
  std::string bad = text;
  bad[pos + 5] = '3';
  ImportResult res = verify_structure_json(alg(), bad);
  EXPECT_FALSE(res.ok);
}

TEST(Serialization, DetectsPairMismatch) {
  std::string text = structure_to_json(alg());
  ImportResult res = verify_structure_json(E8Algebra::get(PairKind::OO), text);
  EXPECT_FALSE(res.ok);
  EXPECT_NE(res.message.find("pair"), std::string::npos);
}

TEST(Serialization, CsvShape) {
  std::string csv = structure_to_csv(alg());
  EXPECT_EQ(csv.rfind("i,j,k,c\n", 0), 0u);
  EXPECT_GT(std::count(csv.begin(), csv.end(), '\n'), 1000);
}

TEST(Serialization, ReportJson) {
  Report rep;
  rep.suite = "demo";
  rep.pair = "O':O";
  rep.add("B/second", true, "fine");
  rep.add("A/first", false, "broken");
  std::string j = report_to_json(rep);
  // Sorted by id: A/first before B/second.
  EXPECT_LT(j.find("A/first"), j.find("B/second"));
  EXPECT_NE(j.find("\"failed\": 1"), std::string::npos);
  EXPECT_NE(j.find("\"status\": \"fail\""), std::string::npos);
}

TEST(Serialization, TableSuite) {
  Report rep = suite_tables();
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.id;
}

TEST(Serialization, SampledJacobiSuite) {
  Report rep = suite_jacobi(alg(), false, 20000, 3);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.detail;
}

TEST(Serialization, RoundtripSuite) {
  Report rep = suite_roundtrip(alg(), 9);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.id << " " << c.detail;
}
