#include <gtest/gtest.h>

#include <algorithm>

#include "lie8/serialize.hpp"
#include "lie8/verify.hpp"

using namespace lie8;

TEST(Serialize, RootsDocument) {
  auto rs = RootSystem::build(type_E(8));
  auto d = roots_document(rs);
  EXPECT_EQ(d["schema_version"], kSchemaVersion);
  EXPECT_EQ(d["kind"], "roots");
  EXPECT_EQ(d["total"], 240);
  EXPECT_EQ(d["roots"].size(), 240u);
  EXPECT_EQ(d.dump(), roots_document(RootSystem::build(type_E(8))).dump());
}

TEST(Serialize, ClassesDocument) {
  auto rs = RootSystem::build(type_B2());
  auto d = classes_document(rs, conjugacy_classes_exhaustive(rs));
  EXPECT_EQ(d["schema_version"], kSchemaVersion);
  EXPECT_EQ(d["group_order"], "8");
  EXPECT_EQ(d["class_count"], 5);
  EXPECT_EQ(d["elliptic_count"], 2);
  for (const auto& c : d["classes"]) {
    EXPECT_TRUE(c["size"].is_string());
    EXPECT_TRUE(c["order"].is_string());
    EXPECT_TRUE(c["fingerprint"]["cycles"].is_array());
    for (const auto& run : c["fingerprint"]["cycles"]) EXPECT_EQ(run.size(), 2u);
  }
}

TEST(Serialize, CensusDocument) {
  auto rs = RootSystem::build(type_A(3));
  auto a = census_document(sample_class_census(rs, 5000, 1));
  auto b = census_document(sample_class_census(rs, 5000, 1));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["distinct"], 5);
  EXPECT_EQ(a["samples"], "5000");
}

TEST(Serialize, OperatorDocument) {
  auto rs = RootSystem::build(type_A(1));
  AdjointModule m(rs);
  auto d = operator_document(m, build_E(m, 0, 1));
  EXPECT_EQ(d["rows"], 3);
  EXPECT_EQ(d["entries"].size(), 9u);
  EXPECT_EQ(d["schema_version"], kSchemaVersion);
}

TEST(Serialize, StrataDocumentAndCsv) {
  sp4::FiniteModel m(3);
  auto r = sp4::stratum_map(m);
  auto u = sp4::unipotent_report(m, r);
  auto d = sp4::strata_document(m, r, u);
  EXPECT_EQ(d["schema_version"], kSchemaVersion);
  EXPECT_EQ(d["classes"].size(), 20u);
  EXPECT_EQ(d["strata"].size(), 5u);
  EXPECT_EQ(d["weyl_elements"].size(), 8u);
  EXPECT_TRUE(d["theorem"]["a_cover"].get<bool>());
  for (const auto& c : d["classes"]) {
    EXPECT_TRUE(c.contains("size"));
    EXPECT_TRUE(c.contains("dimension"));
    EXPECT_TRUE(c.contains("order"));
    EXPECT_TRUE(c.contains("unipotent"));
  }
  auto csv = sp4::strata_csv(m, r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 20);
  EXPECT_EQ(csv.rfind("stratum,label,", 0), 0u);
  EXPECT_EQ(sp4::strata_document(m, r, u).dump(), d.dump());
}

TEST(Serialize, FactorialsAndReportHaveNoTimings) {
  EXPECT_EQ(verify::factorial(8), 40320u);
  verify::Criterion c;
  c.id = 1;
  c.name = "x";
  c.correct = true;
  c.seconds = 1.5;
  auto j = verify::report_json({c});
  EXPECT_EQ(j.dump().find("1.5"), std::string::npos);
}
