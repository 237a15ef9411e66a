#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "lie8/cartan.hpp"
#include "lie8/errors.hpp"
#include "lie8/root_system.hpp"
#include "oracles.hpp"

using namespace lie8;

namespace {

std::set<oracle::Vec> as_set(const RootSystem& rs) {
  std::set<oracle::Vec> out;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    auto r = rs.root(k);
    out.insert(oracle::Vec(r.begin(), r.end()));
  }
  return out;
}

std::set<oracle::Vec> lattice_roots(const CartanDatum& d) {
  std::set<oracle::Vec> out;
  auto add = [&](std::int64_t norm) {
    for (auto& v : oracle::lattice_vectors(d.gram, d.rank, norm)) out.insert(v);
  };
  add(2);
  if (!d.simply_laced) add(4);
  return out;
}

}  // namespace

TEST(RootSystem, E8Counts) {
  auto rs = RootSystem::build(type_E(8));
  EXPECT_EQ(rs.size(), 240u);
  EXPECT_EQ(rs.num_positive(), 120u);
  EXPECT_EQ(oracle::e8_roots_doubled().size(), 240u);
}

TEST(RootSystem, A1) {
  auto rs = RootSystem::build(type_A(1));
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs.root(0)[0], 1);
  EXPECT_EQ(rs.root(1)[0], -1);
}

TEST(RootSystem, ClosureMatchesLatticeScan) {
  auto types = ade_types_up_to_rank8();
  types.push_back("B2");
  for (const auto& t : types) {
    SCOPED_TRACE(t);
    const auto d = parse_type(t);
    auto rs = RootSystem::build(d);
    EXPECT_EQ(as_set(rs), lattice_roots(d));
  }
}

TEST(RootSystem, Bilinear) {
  auto rs = RootSystem::build(type_E(8));
  const auto& d = rs.datum();
  for (int i = 0; i < 8; ++i) {
    EXPECT_EQ(rs.bilinear(rs.root(rs.simple(i)), rs.root(rs.simple(i))), 2);
    for (int j = 0; j < 8; ++j) {
      if (i != j && d.at(i, j) != 0) {
        EXPECT_EQ(rs.bilinear(rs.root(rs.simple(i)), rs.root(rs.simple(j))), -1);
      }
    }
  }
  for (std::size_t k = 0; k < rs.size(); ++k) EXPECT_EQ(rs.norm(k), 2);
  Coords short_v(3, 0);
  EXPECT_THROW(rs.bilinear(short_v, rs.root(0)), ArgumentError);
}

TEST(RootSystem, CanonicalOrder) {
  for (const char* t : {"A3", "D5", "E8", "B2"}) {
    SCOPED_TRACE(t);
    auto rs = RootSystem::build(parse_type(t));
    const std::size_t np = rs.num_positive();
    for (std::size_t k = 0; k < np; ++k) {
      EXPECT_TRUE(std::all_of(rs.root(k).begin(), rs.root(k).end(), [](Coord c) { return c >= 0; }));
      EXPECT_EQ(rs.negate(k), k + np);
      auto neg = rs.root(k + np);
      for (std::size_t j = 0; j < neg.size(); ++j) EXPECT_EQ(neg[j], -rs.root(k)[j]);
      if (k + 1 < np) {
        auto a = rs.root(k), b = rs.root(k + 1);
        const bool ordered = rs.height(k) < rs.height(k + 1) ||
                             (rs.height(k) == rs.height(k + 1) &&
                              std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        EXPECT_TRUE(ordered) << "at " << k;
      }
    }
  }
}

TEST(RootSystem, Reflections) {
  auto rs = RootSystem::build(type_E(8));
  for (int i = 0; i < 8; ++i) {
    const std::size_t ai = rs.simple(i);
    EXPECT_EQ(rs.reflect_index(ai, ai), rs.negate(ai));
    for (std::size_t b = 0; b < rs.size(); ++b) {
      const std::size_t img = rs.reflect_index(ai, b);
      EXPECT_EQ(rs.reflect_index(ai, img), b);
      if (rs.is_positive(b) && b != ai) {
        EXPECT_TRUE(rs.is_positive(img));
      }
    }
  }
  // adjacent vertices 0 and 2: s_0(a_2) = a_2 + a_0
  auto v = rs.reflect(rs.simple(0), Coords(rs.root(rs.simple(2)).begin(), rs.root(rs.simple(2)).end()));
  Coords want(8, 0);
  want[0] = want[2] = 1;
  EXPECT_EQ(v, want);
}

TEST(RootSystem, B2Convention) {
  auto rs = RootSystem::build(type_B2());
  EXPECT_EQ(rs.size(), 8u);
  EXPECT_EQ(rs.norm(rs.simple(0)), 2);
  EXPECT_EQ(rs.norm(rs.simple(1)), 4);
  EXPECT_EQ(rs.bilinear(rs.root(rs.simple(0)), rs.root(rs.simple(1))), -2);
}

TEST(RootSystem, RejectsIndefinite) {
  // affine A2: a triangle
  auto d = from_graph("triangle", 3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_THROW(RootSystem::build(d), ArgumentError);
  EXPECT_THROW(parse_type("F4"), ArgumentError);
  EXPECT_THROW(parse_type("A9"), ArgumentError);
  EXPECT_THROW(parse_type("D3"), ArgumentError);
}

TEST(RootSystem, RootCap) { EXPECT_THROW(RootSystem::build(type_E(8), 100), ResourceError); }
