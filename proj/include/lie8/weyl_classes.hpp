#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "lie8/bsgs.hpp"
#include "lie8/errors.hpp"
#include "lie8/weyl.hpp"

namespace lie8 {

inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// All elements of W with an exact index, in breadth-first order from the
/// identity under right multiplication by the simple reflections.
class WeylGroupTable {
 public:
  static WeylGroupTable enumerate(const RootSystem& rs, std::uint64_t cap = kDefaultGroupCap) {
    const std::uint64_t order = group_order_bsgs(rs);
    if (order > cap) {
      throw ResourceError("W(" + rs.name() + ") has order " + std::to_string(order) +
                          " (from the stabilizer chain), above the enumeration cap of " +
                          std::to_string(cap));
    }
    WeylGroupTable t(rs);
    t.elements_.reserve(order);
    t.push(WeylElement::identity(rs));
    for (std::size_t f = 0; f < t.elements_.size(); ++f) {
      for (const auto& s : t.gens_) {
        WeylElement y = t.elements_[f] * s;
        if (!t.index_.count(y.key())) t.push(std::move(y));
      }
    }
    if (t.elements_.size() != order) {
      throw IntegrityError("closure size " + std::to_string(t.elements_.size()) +
                           " disagrees with stabilizer-chain order " + std::to_string(order));
    }
    return t;
  }

  const RootSystem& system() const { return *rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<WeylElement>& generators() const { return gens_; }
  int length_of(std::size_t i) const { return lengths_[i]; }

  std::size_t index_of(const WeylElement& w) const {
    auto it = index_.find(w.key());
    if (it == index_.end()) throw ArgumentError("element not in the enumerated group");
    return it->second;
  }

 private:
  explicit WeylGroupTable(const RootSystem& rs) : rs_(&rs) {
    for (int i = 0; i < rs.rank(); ++i) gens_.push_back(simple_reflection(rs, i));
  }

  void push(WeylElement w) {
    index_.emplace(w.key(), elements_.size());
    lengths_.push_back(length(w));
    elements_.push_back(std::move(w));
  }

  const RootSystem* rs_;
  std::vector<WeylElement> gens_;
  std::vector<WeylElement> elements_;
  std::vector<int> lengths_;
  std::unordered_map<ElementKey, std::size_t, ElementKeyHash> index_;
};

inline std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                                std::uint64_t cap = kDefaultGroupCap) {
  return WeylGroupTable::enumerate(rs, cap).elements();
}

struct ClassRecord {
  Fingerprint fingerprint;
  WeylElement representative;  // first element of C_min in enumeration order
  std::optional<std::uint64_t> size;  // exhaustive mode only
  int min_length = 0;
  bool elliptic = false;
  std::uint64_t order = 1;
  std::vector<WeylElement> minimal_elements;  // C_min, exhaustive mode only
};

/// Partition of W into conjugacy classes, with every element's class id.
struct ClassPartition {
  WeylGroupTable table;
  std::vector<ClassRecord> classes;
  std::vector<std::uint32_t> class_of;  // indexed like table
};

/// Orbits of W on itself under x -> s x s for the simple reflections s.
/// Classes are sorted by (min length, order, fingerprint).
inline ClassPartition conjugacy_partition(const RootSystem& rs,
                                          std::uint64_t cap = kDefaultGroupCap) {
  ClassPartition part{WeylGroupTable::enumerate(rs, cap), {}, {}};
  const auto& t = part.table;
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> raw(t.size(), kUnset);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t start = 0; start < t.size(); ++start) {
    if (raw[start] != kUnset) continue;
    const auto cid = static_cast<std::uint32_t>(members.size());
    members.emplace_back();
    auto& orbit = members.back();
    raw[start] = cid;
    orbit.push_back(start);
    for (std::size_t f = 0; f < orbit.size(); ++f) {
      for (const auto& s : t.generators()) {
        std::size_t y = t.index_of(s * t[orbit[f]] * s);
        if (raw[y] == kUnset) {
          raw[y] = cid;
          orbit.push_back(y);
        }
      }
    }
  }

  std::vector<ClassRecord> recs;
  recs.reserve(members.size());
  for (auto& orbit : members) {
    std::sort(orbit.begin(), orbit.end());
    int lmin = t.length_of(orbit.front());
    for (auto x : orbit) lmin = std::min(lmin, t.length_of(x));
    std::vector<WeylElement> cmin;
    for (auto x : orbit) {
      if (t.length_of(x) == lmin) cmin.push_back(t[x]);
    }
    const WeylElement& rep = cmin.front();
    Fingerprint fp = fingerprint(rep);
    bool ell = is_elliptic(rep);
    recs.push_back(ClassRecord{std::move(fp), rep, orbit.size(), lmin, ell, element_order(rep),
                               std::move(cmin)});
  }

  std::vector<std::size_t> perm(recs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = recs[a];
    const auto& y = recs[b];
    if (x.min_length != y.min_length) return x.min_length < y.min_length;
    if (x.order != y.order) return x.order < y.order;
    if (x.fingerprint != y.fingerprint) return x.fingerprint < y.fingerprint;
    return a < b;
  });
  std::vector<std::uint32_t> renumber(recs.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    renumber[perm[k]] = static_cast<std::uint32_t>(k);
    part.classes.push_back(std::move(recs[perm[k]]));
  }
  part.class_of.resize(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) part.class_of[x] = renumber[raw[x]];
  return part;
}

inline std::vector<ClassRecord> conjugacy_classes_exhaustive(const RootSystem& rs,
                                                             std::uint64_t cap = kDefaultGroupCap) {
  return conjugacy_partition(rs, cap).classes;
}

struct CensusEntry {
  Fingerprint fingerprint;
  std::uint64_t order = 1;
  bool elliptic = false;
  std::uint64_t sampled_hits = 0;  // draws whose own fingerprint is this one
  bool reached_by_closure = false;  // first seen as a power or as -w
};

struct Census {
  std::string type;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool power_closure = true;
  std::size_t distinct_sampled = 0;
  std::size_t elliptic_sampled = 0;
  std::size_t distinct = 0;
  std::size_t elliptic = 0;
  std::vector<CensusEntry> entries;  // sorted by fingerprint
};

/// Class census of W by uniform sampling through the stabilizer chain.
///
/// Each draw contributes its fingerprint. With power_closure set, every new
/// fingerprint also contributes those of w^d for each divisor d of ord(w)
/// and, when -1 lies in W, of -w; conjugacy classes are closed under these
/// maps, and this reaches the tiny classes (such as {1} and {-1}) that
/// uniform draws almost never hit. Deterministic for a given (seed, n).
inline Census sample_class_census(const RootSystem& rs, std::uint64_t n_samples,
                                  std::uint64_t seed, bool power_closure = true) {
  StabilizerChain chain = weyl_chain(rs);
  std::mt19937_64 rng(seed);

  std::optional<WeylElement> minus_one;
  {
    Perm neg(rs.size());
    for (std::size_t b = 0; b < rs.size(); ++b) neg[b] = static_cast<std::uint16_t>(rs.negate(b));
    if (chain.contains(neg)) minus_one.emplace(rs, std::move(neg));
  }

  std::map<Fingerprint, CensusEntry> seen;
  auto record = [&](const WeylElement& w, bool sampled) -> bool {
    Fingerprint fp = fingerprint(w);
    auto it = seen.find(fp);
    if (it == seen.end()) {
      CensusEntry e;
      e.fingerprint = fp;
      e.order = element_order(w);
      e.elliptic = fp.elliptic();
      e.reached_by_closure = !sampled;
      it = seen.emplace(std::move(fp), std::move(e)).first;
      if (sampled) it->second.sampled_hits = 1;
      return true;
    }
    if (sampled) ++it->second.sampled_hits;
    return false;
  };

  for (std::uint64_t k = 0; k < n_samples; ++k) {
    WeylElement w(rs, chain.random_element(rng));
    bool fresh = record(w, true);
    if (!power_closure || !fresh) continue;
    std::vector<WeylElement> pending{w};
    while (!pending.empty()) {
      WeylElement x = std::move(pending.back());
      pending.pop_back();
      std::vector<WeylElement> images;
      const std::uint64_t ord = element_order(x);
      for (std::uint64_t d = 2; d <= ord; ++d) {
        if (ord % d == 0) images.push_back(power(x, d));
      }
      if (minus_one) images.push_back(*minus_one * x);
      for (auto& y : images) {
        if (record(y, false)) pending.push_back(std::move(y));
      }
    }
  }

  Census c;
  c.type = rs.name();
  c.samples = n_samples;
  c.seed = seed;
  c.power_closure = power_closure;
  for (auto& [fp, e] : seen) {
    if (e.sampled_hits > 0) {
      ++c.distinct_sampled;
      c.elliptic_sampled += e.elliptic;
    }
    c.elliptic += e.elliptic;
    c.entries.push_back(std::move(e));
  }
  c.distinct = c.entries.size();
  return c;
}

/// Census read off the exhaustive class list (small types only).
inline Census exhaustive_census(const RootSystem& rs, std::uint64_t cap = kDefaultGroupCap) {
  auto classes = conjugacy_classes_exhaustive(rs, cap);
  std::map<Fingerprint, CensusEntry> by_fp;
  for (const auto& c : classes) {
    auto& e = by_fp[c.fingerprint];
    e.fingerprint = c.fingerprint;
    e.order = c.order;
    e.elliptic = c.elliptic;
    e.sampled_hits += c.size.value_or(0);
  }
  Census out;
  out.type = rs.name();
  out.samples = 0;
  out.power_closure = false;
  for (auto& [fp, e] : by_fp) {
    out.elliptic += e.elliptic;
    out.entries.push_back(std::move(e));
  }
  out.distinct = out.distinct_sampled = out.entries.size();
  out.elliptic_sampled = out.elliptic;
  return out;
}

}  // namespace lie8
