#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "lie8/bsgs.hpp"
#include "lie8/weyl_classes.hpp"
#include "oracles.hpp"

using namespace lie8;

namespace {

std::uint64_t order_oracle(const RootSystem& rs) {
  std::vector<int> heights;
  for (std::size_t b = 0; b < rs.num_positive(); ++b) heights.push_back(rs.height(b));
  return oracle::weyl_order_from_heights(heights);
}

}  // namespace

TEST(Bsgs, E8Order) {
  auto rs = RootSystem::build(type_E(8));
  auto chain = weyl_chain(rs);
  EXPECT_EQ(chain.order(), 696729600ull);
  EXPECT_EQ(chain.order(), 24ull * 720 * 40320);
  EXPECT_EQ(chain.order(), order_oracle(rs));
  EXPECT_TRUE(chain.verify());
}

TEST(Bsgs, OrdersMatchDegreeOracle) {
  auto types = ade_types_up_to_rank8();
  types.push_back("B2");
  for (const auto& t : types) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    EXPECT_EQ(group_order_bsgs(rs), order_oracle(rs));
  }
}

TEST(Bsgs, SmallOrders) {
  EXPECT_EQ(group_order_bsgs(RootSystem::build(type_A(1))), 2u);
  EXPECT_EQ(group_order_bsgs(RootSystem::build(type_B2())), 8u);
}

TEST(Bsgs, MatchesEnumeration) {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "D4", "D5", "E6"}) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    EXPECT_EQ(enumerate_group(rs).size(), group_order_bsgs(rs));
  }
  auto b2 = RootSystem::build(type_B2());
  std::vector<oracle::Perm> gens;
  for (int i = 0; i < 2; ++i) {
    auto p = simple_reflection(b2, i).perm();
    gens.emplace_back(p.begin(), p.end());
  }
  EXPECT_EQ(oracle::closure(gens).size(), 8u);
}

TEST(Bsgs, Membership) {
  auto rs = RootSystem::build(type_D(5));
  auto chain = weyl_chain(rs);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) EXPECT_TRUE(chain.contains(chain.random_element(rng)));
  // a transposition of two roots is not in W
  Perm p = identity_perm(rs.size());
  std::swap(p[0], p[1]);
  EXPECT_FALSE(chain.contains(p));
}

TEST(Bsgs, UniformOnB2) {
  auto rs = RootSystem::build(type_B2());
  auto chain = weyl_chain(rs);
  auto table = WeylGroupTable::enumerate(rs);
  std::mt19937_64 rng(248);
  const int n = 100000;
  std::vector<int> hits(8, 0);
  for (int k = 0; k < n; ++k) ++hits[table.index_of(WeylElement(rs, chain.random_element(rng)))];
  const double mean = n / 8.0, sigma = std::sqrt(n * (1.0 / 8) * (7.0 / 8));
  for (int h : hits) EXPECT_LT(std::abs(h - mean), 5 * sigma);
}

TEST(Bsgs, EnumerationCap) {
  auto rs = RootSystem::build(type_E(8));
  try {
    enumerate_group(rs);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("696729600"), std::string::npos);
  }
}
