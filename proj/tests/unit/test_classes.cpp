#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lie8/weyl_classes.hpp"
#include "oracles.hpp"

using namespace lie8;

namespace {

std::vector<oracle::Perm> oracle_group(const RootSystem& rs) {
  std::vector<oracle::Perm> gens;
  for (int i = 0; i < rs.rank(); ++i) {
    auto p = simple_reflection(rs, i).perm();
    gens.emplace_back(p.begin(), p.end());
  }
  return oracle::closure(gens);
}

std::vector<std::size_t> sizes_of(const std::vector<ClassRecord>& cl) {
  std::vector<std::size_t> out;
  for (const auto& c : cl) out.push_back(*c.size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Classes, B2) {
  auto rs = RootSystem::build(type_B2());
  auto cl = conjugacy_classes_exhaustive(rs);
  ASSERT_EQ(cl.size(), 5u);
  EXPECT_EQ(sizes_of(cl), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  std::size_t elliptic = 0;
  for (const auto& c : cl) elliptic += c.elliptic;
  EXPECT_EQ(elliptic, 2u);
  auto census = exhaustive_census(rs);
  EXPECT_EQ(census.distinct, 5u);
  EXPECT_EQ(census.elliptic, 2u);
}

TEST(Classes, A1) { EXPECT_EQ(conjugacy_classes_exhaustive(RootSystem::build(type_A(1))).size(), 2u); }

TEST(Classes, MatchBruteForceOracle) {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "D4"}) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    auto group = oracle_group(rs);
    auto cl = conjugacy_classes_exhaustive(rs);
    EXPECT_EQ(cl.size(), oracle::class_count_by_commuting_pairs(group));
    EXPECT_EQ(sizes_of(cl), oracle::class_sizes(group));
  }
}

TEST(Classes, E6Fixture) {
  auto rs = RootSystem::build(type_E(6));
  auto part = conjugacy_partition(rs);
  ASSERT_EQ(part.classes.size(), 25u);
  std::uint64_t total = 0;
  std::size_t elliptic = 0;
  for (const auto& c : part.classes) {
    total += *c.size;
    elliptic += c.elliptic;
    EXPECT_EQ(51840u % *c.size, 0u);
  }
  EXPECT_EQ(total, 51840u);
  EXPECT_EQ(elliptic, 5u);
  EXPECT_EQ(sizes_of(part.classes),
            (std::vector<std::size_t>{1, 36, 45, 80, 240, 270, 480, 540, 540, 540, 720, 1440, 1440,
                                      1440, 1440, 1620, 2160, 3240, 4320, 4320, 4320, 5184, 5184, 5760, 6480}));
  // |C| = |W| / |C_W(w)|, centralizers counted over the whole group
  for (const auto& c : part.classes) {
    const auto& w = c.representative;
    std::uint64_t cent = 0;
    for (const auto& g : part.table.elements()) cent += g * w == w * g;
    EXPECT_EQ(*c.size * cent, 51840u);
  }
}

TEST(Classes, FingerprintsSeparateAndRecordsConsistent) {
  for (const char* t : {"A1", "A2", "A3", "B2", "D4", "E6"}) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    auto part = conjugacy_partition(rs);
    std::set<Fingerprint> prints;
    for (const auto& c : part.classes) prints.insert(c.fingerprint);
    EXPECT_EQ(prints.size(), part.classes.size());

    std::vector<int> min_len(part.classes.size(), 1 << 20);
    for (std::size_t x = 0; x < part.table.size(); ++x) {
      const auto& c = part.classes[part.class_of[x]];
      EXPECT_EQ(fingerprint(part.table[x]), c.fingerprint);
      min_len[part.class_of[x]] = std::min(min_len[part.class_of[x]], part.table.length_of(x));
    }
    for (std::size_t k = 0; k < part.classes.size(); ++k) {
      const auto& c = part.classes[k];
      EXPECT_EQ(c.min_length, min_len[k]);
      EXPECT_EQ(length(c.representative), c.min_length);
      EXPECT_EQ(c.elliptic, determinant(IntMatrix::identity(rs.rank()) - matrix_on_V(c.representative)) != 0);
      EXPECT_EQ(c.order, element_order(c.representative));
      for (const auto& w : c.minimal_elements) EXPECT_EQ(length(w), c.min_length);
    }
  }
}

TEST(Classes, DescentReachesClassMinimum) {
  for (const char* t : {"A3", "B2", "D4", "A4"}) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    auto part = conjugacy_partition(rs);
    for (std::size_t x = 0; x < part.table.size(); ++x) {
      EXPECT_EQ(min_length_descent(part.table[x]).min_length, part.classes[part.class_of[x]].min_length);
    }
  }
}

TEST(Classes, SampledCensus) {
  auto rs = RootSystem::build(type_E(6));
  auto a = sample_class_census(rs, 20000, 248);
  auto b = sample_class_census(rs, 20000, 248);
  EXPECT_EQ(a.distinct, 25u);
  EXPECT_EQ(a.elliptic, 5u);
  EXPECT_EQ(a.distinct, b.distinct);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) EXPECT_EQ(a.entries[k].sampled_hits, b.entries[k].sampled_hits);
  std::uint64_t hits = 0;
  for (const auto& e : a.entries) hits += e.sampled_hits;
  EXPECT_EQ(hits, 20000u);
  auto raw = sample_class_census(rs, 2000, 248, false);
  EXPECT_EQ(raw.distinct, raw.distinct_sampled);
}

TEST(Classes, E8CensusSmall) {
  // power closure already reaches every class from a modest sample
  auto rs = RootSystem::build(type_E(8));
  auto c = sample_class_census(rs, 100000, 248);
  EXPECT_EQ(c.distinct, 112u);
  EXPECT_EQ(c.elliptic, 30u);
}
