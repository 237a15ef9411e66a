#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <json.hpp>

#include "lie8/root_system.hpp"

namespace lie8 {

inline constexpr int kSchemaVersion = 1;

/// FNV-1a over the canonical text form "rank|g00,g01,...". Stable across
/// platforms and runs; used as the cache key for a Gram matrix.
inline std::string gram_key(const CartanDatum& d) {
  std::string text = std::to_string(d.rank) + "|";
  for (std::size_t k = 0; k < d.gram.size(); ++k) {
    if (k) text += ',';
    text += std::to_string(d.gram[k]);
  }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::json root_system_document(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    auto r = rs.root(k);
    roots.push_back(std::vector<int>(r.begin(), r.end()));
  }
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "root_system"},
      {"key", gram_key(rs.datum())},
      {"name", rs.name()},
      {"rank", rs.rank()},
      {"gram", rs.datum().gram},
      {"simply_laced", rs.simply_laced()},
      {"num_positive", rs.num_positive()},
      {"roots", std::move(roots)},
  };
}

/// On-disk store of canonical root lists, one JSON document per Gram matrix.
/// A missing directory means "no caching". Documents that fail validation
/// are ignored and rebuilt.
class RootCache {
 public:
  RootCache() = default;
  explicit RootCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }

  std::filesystem::path path_for(const CartanDatum& d) const {
    return dir_ / ("roots-" + gram_key(d) + ".json");
  }

  RootSystem get(const CartanDatum& d) {
    if (enabled()) {
      if (auto hit = load(d)) {
        ++hits_;
        return std::move(*hit);
      }
    }
    ++misses_;
    RootSystem rs = RootSystem::build(d);
    if (enabled()) store(rs);
    return rs;
  }

  std::optional<RootSystem> load(const CartanDatum& d) const {
    std::ifstream in(path_for(d));
    if (!in) return std::nullopt;
    try {
      auto doc = nlohmann::json::parse(in);
      if (doc.at("schema_version").get<int>() != kSchemaVersion) return std::nullopt;
      if (doc.at("key").get<std::string>() != gram_key(d)) return std::nullopt;
      if (doc.at("gram").get<std::vector<std::int64_t>>() != d.gram) return std::nullopt;
      std::vector<Coords> roots;
      for (const auto& r : doc.at("roots")) roots.push_back(r.get<Coords>());
      return RootSystem::from_ordered_roots(d, roots);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void store(const RootSystem& rs) const {
    std::filesystem::create_directories(dir_);
    auto target = path_for(rs.datum());
    auto tmp = target;
    tmp += "." + std::to_string(::getpid()) + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << root_system_document(rs).dump() << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace lie8
