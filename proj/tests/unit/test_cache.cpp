#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "lie8/root_cache.hpp"

using namespace lie8;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lie8-cache-test-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CacheTest, MissThenHit) {
  RootCache cache(dir_);
  auto a = cache.get(type_E(8));
  EXPECT_EQ(cache.misses(), 1u);
  EXPECT_TRUE(fs::exists(cache.path_for(type_E(8))));
  auto b = cache.get(type_E(8));
  EXPECT_EQ(cache.hits(), 1u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_TRUE(std::equal(a.root(k).begin(), a.root(k).end(), b.root(k).begin()));
  }
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_EQ(e.path().extension(), ".json");
}

TEST_F(CacheTest, KeyedByGram) {
  RootCache cache(dir_);
  EXPECT_NE(cache.path_for(type_E(8)), cache.path_for(type_E(7)));
  EXPECT_NE(cache.path_for(type_A(3)), cache.path_for(type_D(4)));
  EXPECT_EQ(cache.path_for(type_A(3)), cache.path_for(parse_type("A3")));
}

TEST_F(CacheTest, ByteIdenticalDocuments) {
  RootCache one(dir_ / "one"), two(dir_ / "two");
  one.get(type_D(6));
  two.get(type_D(6));
  EXPECT_EQ(slurp(one.path_for(type_D(6))), slurp(two.path_for(type_D(6))));
  EXPECT_NE(slurp(one.path_for(type_D(6))).find("\"schema_version\":1"), std::string::npos);
}

TEST_F(CacheTest, CorruptFileIsRebuilt) {
  RootCache cache(dir_);
  cache.get(type_A(4));
  {
    std::ofstream out(cache.path_for(type_A(4)), std::ios::trunc);
    out << "{\"schema_version\": 1, \"roots\": [[1]]";
  }
  EXPECT_FALSE(cache.load(type_A(4)).has_value());
  auto rs = cache.get(type_A(4));
  EXPECT_EQ(rs.size(), 20u);
  EXPECT_TRUE(cache.load(type_A(4)).has_value());
}

TEST_F(CacheTest, WrongSchemaIgnored) {
  RootCache cache(dir_);
  cache.get(type_A(2));
  auto doc = nlohmann::json::parse(slurp(cache.path_for(type_A(2))));
  doc["schema_version"] = kSchemaVersion + 1;
  std::ofstream(cache.path_for(type_A(2)), std::ios::trunc) << doc.dump();
  EXPECT_FALSE(cache.load(type_A(2)).has_value());
}

TEST_F(CacheTest, NonCanonicalOrderRejected) {
  RootCache cache(dir_);
  cache.get(type_A(2));
  auto doc = nlohmann::json::parse(slurp(cache.path_for(type_A(2))));
  std::swap(doc["roots"][0], doc["roots"][1]);
  std::ofstream(cache.path_for(type_A(2)), std::ios::trunc) << doc.dump();
  EXPECT_FALSE(cache.load(type_A(2)).has_value());
}

TEST_F(CacheTest, DisabledCache) {
  RootCache cache;
  EXPECT_FALSE(cache.enabled());
  EXPECT_EQ(cache.get(type_E(6)).size(), 72u);
}
