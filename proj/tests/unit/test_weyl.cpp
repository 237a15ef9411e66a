#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "lie8/bsgs.hpp"
#include "lie8/weyl.hpp"
#include "lie8/weyl_classes.hpp"
#include "oracles.hpp"

using namespace lie8;

namespace {

const RootSystem& sys(const std::string& t) {
  static std::map<std::string, RootSystem> cache;
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, RootSystem::build(parse_type(t))).first;
  return it->second;
}

// l(w) from the matrix on V: positive roots b with w^-1(b) negative.
int length_via_matrix(const WeylElement& w) {
  const auto& rs = w.system();
  IntMatrix m = matrix_on_V(invert(w));
  int n = 0;
  for (std::size_t b = 0; b < rs.num_positive(); ++b) {
    auto r = rs.root(b);
    bool negative = false;
    for (int i = 0; i < rs.rank(); ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < rs.rank(); ++j) acc += m(i, j) * r[j];
      negative = negative || acc < 0;
    }
    n += negative;
  }
  return n;
}

WeylElement random_element(const RootSystem& rs, std::mt19937_64& rng) {
  static std::map<const RootSystem*, StabilizerChain> chains;
  auto it = chains.find(&rs);
  if (it == chains.end()) it = chains.emplace(&rs, weyl_chain(rs)).first;
  return {rs, it->second.random_element(rng)};
}

}  // namespace

TEST(Weyl, Involutions) {
  const auto& rs = sys("E8");
  for (int i = 0; i < 8; ++i) {
    auto s = simple_reflection(rs, i);
    EXPECT_TRUE((s * s).is_identity());
    EXPECT_EQ(length(s), 1);
    EXPECT_EQ(element_order(s), 2u);
  }
  EXPECT_THROW(simple_reflection(rs, 8), ArgumentError);
}

TEST(Weyl, MixingSystemsRejected) {
  auto a = simple_reflection(sys("A2"), 0);
  auto b = simple_reflection(sys("A2"), 1);
  auto c = simple_reflection(sys("D4"), 0);
  EXPECT_NO_THROW(a * b);
  EXPECT_THROW(a * c, ArgumentError);
}

TEST(Weyl, CoxeterOrder) {
  const auto& rs = sys("E8");
  std::vector<int> word{0, 1, 2, 3, 4, 5, 6, 7};
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(word.begin(), word.end(), rng);
    auto c = from_word(rs, word);
    EXPECT_EQ(element_order(c), 30u);
    EXPECT_EQ(length(c), 8);
    EXPECT_TRUE(is_elliptic(c));
  }
  EXPECT_EQ(element_order(coxeter_element(sys("B2"))), 4u);
  EXPECT_EQ(element_order(from_word(sys("B2"), std::vector<int>{0, 1})), 4u);
}

TEST(Weyl, CoxeterPolynomialIsCyclotomic30) {
  // Phi_30(t) = t^8 + t^7 - t^5 - t^4 - t^3 + t + 1
  auto fp = fingerprint(coxeter_element(sys("E8")));
  EXPECT_EQ(fp.charpoly, (std::vector<std::int64_t>{1, 1, 0, -1, -1, -1, 0, 1, 1}));
  EXPECT_NE(evaluate(fp.charpoly, 1), 0);
}

TEST(Weyl, CoxeterPowers) {
  auto c = coxeter_element(sys("E8"));
  EXPECT_EQ(element_order(power(c, 15)), 2u);
  EXPECT_EQ(element_order(power(c, 10)), 3u);
  EXPECT_EQ(element_order(power(c, 6)), 5u);
  // c^15 = -1
  for (std::size_t b = 0; b < sys("E8").size(); ++b) EXPECT_EQ(power(c, 15)(b), sys("E8").negate(b));
}

TEST(Weyl, AllCoxeterElementsShareFingerprintAndDescendTo8) {
  const auto& rs = sys("E8");
  const auto cox = fingerprint(coxeter_element(rs));
  std::vector<int> word{0, 1, 2, 3, 4, 5, 6, 7};
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(word.begin(), word.end(), rng);
    auto c = from_word(rs, word);
    auto g = random_element(rs, rng);
    auto conj = g * c * invert(g);
    EXPECT_EQ(fingerprint(conj), cox);
    EXPECT_EQ(min_length_descent(conj).min_length, 8);
  }
}

TEST(Weyl, OrderThirtyIsNotASingleClass) {
  const auto& rs = sys("E8");
  // Coxeter element of the parabolic subgroup A2 x A1 x A4 (all vertices
  // but the branch vertex 3): order lcm(3, 2, 5) = 30 with a fixed vector.
  auto w = from_word(rs, std::vector<int>{0, 1, 2, 4, 5, 6, 7});
  EXPECT_EQ(element_order(w), 30u);
  EXPECT_FALSE(is_elliptic(w));
  EXPECT_NE(fingerprint(w), fingerprint(coxeter_element(rs)));
  EXPECT_EQ(min_length_descent(w).min_length, 7);
}

TEST(Weyl, RandomOrderThirtyWithCoxeterFingerprintDescendTo8) {
  const auto& rs = sys("E8");
  const auto cox = fingerprint(coxeter_element(rs));
  std::mt19937_64 rng(30);
  int seen = 0;
  while (seen < 20) {
    auto w = random_element(rs, rng);
    if (element_order(w) != 30 || fingerprint(w) != cox) continue;
    ++seen;
    EXPECT_EQ(min_length_descent(w).min_length, 8);
  }
}

TEST(Weyl, Length) {
  EXPECT_EQ(length(WeylElement::identity(sys("E8"))), 0);
  const auto& b2 = sys("B2");
  auto w0 = longest_element(b2);
  EXPECT_EQ(length(w0), 4);
  EXPECT_TRUE((w0 * w0).is_identity());
  for (const char* t : {"A1", "A2", "A3", "B2", "D4", "E6"}) {
    SCOPED_TRACE(t);
    const auto& rs = sys(t);
    auto lw = longest_element(rs);
    EXPECT_EQ(static_cast<std::size_t>(length(lw)), rs.num_positive());
    EXPECT_TRUE((lw * lw).is_identity());
  }
}

TEST(Weyl, LengthMatchesMatrixOracleAndInverse) {
  for (const char* t : {"A3", "B2", "D4"}) {
    SCOPED_TRACE(t);
    for (const auto& w : enumerate_group(sys(t))) {
      EXPECT_EQ(length(w), length_via_matrix(w));
      EXPECT_EQ(length(w), length(invert(w)));
      EXPECT_EQ(reduced_word(w).size(), static_cast<std::size_t>(length(w)));
      EXPECT_EQ(from_word(sys(t), reduced_word(w)), w);
    }
  }
  std::mt19937_64 rng(1);
  const auto& e8 = sys("E8");
  for (int k = 0; k < 200; ++k) {
    auto w = random_element(e8, rng);
    EXPECT_EQ(length(w), length(invert(w)));
    EXPECT_EQ(length(w), length_via_matrix(w));
  }
}

TEST(Weyl, MatrixPreservesGram) {
  std::mt19937_64 rng(5);
  for (const char* t : {"B2", "E7", "E8"}) {
    const auto& rs = sys(t);
    const int n = rs.rank();
    for (int k = 0; k < 20; ++k) {
      auto w = random_element(rs, rng);
      IntMatrix m = matrix_on_V(w);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          std::int64_t g = 0;
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) g += m(a, i) * rs.datum().at(a, b) * m(b, j);
          }
          EXPECT_EQ(g, rs.datum().at(i, j));
        }
      }
      for (std::size_t b = 0; b < rs.size(); ++b) EXPECT_EQ(w(rs.negate(b)), rs.negate(w(b)));
    }
  }
}

TEST(Weyl, FingerprintBasics) {
  const auto& e8 = sys("E8");
  auto fp = fingerprint(WeylElement::identity(e8));
  EXPECT_EQ(fp.cycles, (CycleType{{1, 240}}));
  EXPECT_EQ(fp.charpoly, (std::vector<std::int64_t>{1, -8, 28, -56, 70, -56, 28, -8, 1}));

  const auto& b2 = sys("B2");
  auto s1 = simple_reflection(b2, 0), s2 = simple_reflection(b2, 1);
  EXPECT_EQ(fingerprint(s1), fingerprint(s2 * s1 * s2));
  EXPECT_NE(fingerprint(s1), fingerprint(s2));
}

TEST(Weyl, Elliptic) {
  EXPECT_FALSE(is_elliptic(WeylElement::identity(sys("E8"))));
  EXPECT_TRUE(is_elliptic(longest_element(sys("B2"))));
  auto w0 = longest_element(sys("B2"));
  EXPECT_EQ(determinant(IntMatrix::identity(2) - matrix_on_V(w0)), 4);
}

TEST(Weyl, DescentSmall) {
  const auto& b2 = sys("B2");
  auto w = from_word(b2, std::vector<int>{0, 1, 0});
  auto d = min_length_descent(w);
  EXPECT_EQ(d.min_length, 1);
  EXPECT_EQ(length(d.witness), 1);
  EXPECT_EQ(fingerprint(d.witness), fingerprint(w));
  EXPECT_EQ(min_length_descent(WeylElement::identity(b2)).min_length, 0);
}

TEST(Weyl, DescentCap) {
  const auto& rs = sys("E8");
  // a long element needs more than two visited states
  auto w = longest_element(rs) * from_word(rs, std::vector<int>{0, 2, 3});
  EXPECT_THROW(min_length_descent(w, 2), ResourceError);
}
