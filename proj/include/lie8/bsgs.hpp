#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lie8/errors.hpp"
#include "lie8/weyl.hpp"

namespace lie8 {

/// Base and strong generating set for a permutation group, built by
/// deterministic Schreier-Sims: every Schreier generator of every level is
/// sifted, and any non-trivial residue is adjoined as a new strong
/// generator before the level is re-examined. The finished chain is
/// certified, so order() is exact and contains() is a true membership test.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators) : degree_(degree) {
    for (const auto& g : generators) {
      if (g.size() != degree) throw ArgumentError("generator has wrong degree");
      if (!is_identity(g)) strong_.push_back(g);
    }
    for (const auto& s : strong_) {
      if (fixes_base(s, levels_.size())) append_base_point(s);
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) rebuild_level(l);
    complete();
  }

  std::size_t degree() const { return degree_; }
  std::size_t base_length() const { return levels_.size(); }

  std::vector<std::size_t> base() const {
    std::vector<std::size_t> b;
    for (const auto& l : levels_) b.push_back(l.point);
    return b;
  }

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& l : levels_) s.push_back(l.orbit.size());
    return s;
  }

  std::size_t strong_generator_count() const { return strong_.size(); }

  /// Product of the basic orbit lengths. Throws ResourceError on overflow.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    for (const auto& l : levels_) {
      if (__builtin_mul_overflow(ord, static_cast<std::uint64_t>(l.orbit.size()), &ord)) {
        throw ResourceError("group order exceeds 64 bits");
      }
    }
    return ord;
  }

  bool contains(const Perm& g) const {
    if (g.size() != degree_) return false;
    Perm h = g;
    return sift(h, 0) == levels_.size() && is_identity(h);
  }

  /// Uniform random element: a product of uniformly chosen coset
  /// representatives, one per level.
  template <class Rng>
  Perm random_element(Rng& rng) const {
    Perm g = identity_perm(degree_);
    for (const auto& l : levels_) {
      std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
      g = compose(g, l.transversal[l.orbit[pick(rng)]]);
    }
    return g;
  }

  /// Re-sifts every Schreier generator of every level.
  bool verify() const {
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      if (first_failing_schreier(k).has_value()) return false;
    }
    return true;
  }

 private:
  struct Level {
    std::size_t point;
    std::vector<std::size_t> gens;  // indices into strong_ fixing earlier base points
    std::vector<std::size_t> orbit;
    // transversal[p] maps the base point to p; empty when p is off-orbit.
    std::vector<Perm> transversal;
    std::vector<Perm> transversal_inv;
  };

  bool fixes_base(const Perm& g, std::size_t upto) const {
    for (std::size_t l = 0; l < upto; ++l) {
      if (g[levels_[l].point] != levels_[l].point) return false;
    }
    return true;
  }

  void append_base_point(const Perm& moved_by) {
    std::size_t x = 0;
    while (moved_by[x] == x) ++x;
    Level l;
    l.point = x;
    levels_.push_back(std::move(l));
  }

  void rebuild_level(std::size_t k) {
    Level& l = levels_[k];
    l.gens.clear();
    for (std::size_t i = 0; i < strong_.size(); ++i) {
      if (fixes_base(strong_[i], k)) l.gens.push_back(i);
    }
    l.orbit.assign(1, l.point);
    l.transversal.assign(degree_, Perm{});
    l.transversal_inv.assign(degree_, Perm{});
    l.transversal[l.point] = identity_perm(degree_);
    l.transversal_inv[l.point] = identity_perm(degree_);
    for (std::size_t f = 0; f < l.orbit.size(); ++f) {
      const std::size_t p = l.orbit[f];
      for (std::size_t gi : l.gens) {
        const Perm& s = strong_[gi];
        const std::size_t q = s[p];
        if (!l.transversal[q].empty()) continue;
        l.transversal[q] = compose(s, l.transversal[p]);
        l.transversal_inv[q] = inverse(l.transversal[q]);
        l.orbit.push_back(q);
      }
    }
  }

  /// Strips g through levels k, k+1, ...; returns the level where it fell
  /// out of an orbit (or levels_.size()). g is replaced by the residue.
  std::size_t sift(Perm& g, std::size_t k) const {
    for (; k < levels_.size(); ++k) {
      const Level& l = levels_[k];
      const std::size_t p = g[l.point];
      if (l.transversal[p].empty()) return k;
      g = compose(l.transversal_inv[p], g);
    }
    return k;
  }

  struct Failure {
    Perm residue;
    std::size_t level;
  };

  std::optional<Failure> first_failing_schreier(std::size_t k) const {
    const Level& l = levels_[k];
    for (std::size_t p : l.orbit) {
      for (std::size_t gi : l.gens) {
        const Perm& s = strong_[gi];
        const std::size_t q = s[p];
        Perm h = compose(l.transversal_inv[q], compose(s, l.transversal[p]));
        if (is_identity(h)) continue;
        std::size_t j = sift(h, k + 1);
        if (j < levels_.size() || !is_identity(h)) return Failure{std::move(h), j};
      }
    }
    return std::nullopt;
  }

  void complete() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      auto fail = first_failing_schreier(static_cast<std::size_t>(i));
      if (!fail) {
        --i;
        continue;
      }
      std::size_t j = fail->level;
      if (j == levels_.size()) append_base_point(fail->residue);
      strong_.push_back(std::move(fail->residue));
      for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) rebuild_level(l);
      i = static_cast<std::ptrdiff_t>(j);
    }
  }

  std::size_t degree_;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

/// Stabilizer chain of W acting on the root indices, from the simple
/// reflections.
inline StabilizerChain weyl_chain(const RootSystem& rs) {
  std::vector<Perm> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, i).perm());
  return StabilizerChain(rs.size(), gens);
}

/// |W| from the stabilizer chain.
///
/// W is the F_1 analog of the Chevalley group: its order is the q -> 1 limit
/// of |G(F_q)| / (q - 1)^rank. For E8 this is 4! 6! 8! = 696729600.
inline std::uint64_t group_order_bsgs(const RootSystem& rs) { return weyl_chain(rs).order(); }

}  // namespace lie8
