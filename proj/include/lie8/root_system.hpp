#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lie8/cartan.hpp"
#include "lie8/errors.hpp"
#include "lie8/matrix.hpp"

namespace lie8 {

using Coord = std::int16_t;
using Coords = std::vector<Coord>;

inline constexpr std::size_t kDefaultRootCap = 100000;

/// Largest W-orbit of a fundamental weight that is kept for class
/// fingerprints.
inline constexpr std::size_t kWeightOrbitCap = 512;

/// W-orbit of a positive multiple of the fundamental weight w_k, as integer
/// vectors in the simple-root basis.
struct WeightOrbit {
  int vertex = 0;
  std::vector<Coords> points;
  std::map<Coords, std::uint32_t> index;
};

/// A finite crystallographic root system with canonical root indexing.
///
/// Roots are integer coordinate vectors in the simple-root basis. Index
/// order: positive roots sorted by (height, lexicographic coordinates),
/// followed by the negatives, with -beta stored at index(beta) + |R+|.
/// Values are immutable after construction.
class RootSystem {
 public:
  /// Enumerates R by closure: starts from the simple roots and applies all
  /// simple reflections until no new vector appears.
  static RootSystem build(const CartanDatum& datum, std::size_t cap = kDefaultRootCap) {
    check_positive_definite(datum);
    const int n = datum.rank;
    RootSystem rs;
    rs.datum_ = datum;

    std::set<Coords> seen;
    std::deque<Coords> queue;
    for (int i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
      Coords v = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < n; ++i) {
        Coords w = rs.reflect_simple(i, v);
        if (seen.insert(w).second) {
          if (seen.size() > cap) {
            throw ResourceError("root closure for '" + datum.name + "' exceeded cap of " +
                                std::to_string(cap) + " roots");
          }
          queue.push_back(std::move(w));
        }
      }
    }

    std::vector<Coords> positives;
    for (const auto& v : seen) {
      bool nonneg = std::all_of(v.begin(), v.end(), [](Coord c) { return c >= 0; });
      bool nonpos = std::all_of(v.begin(), v.end(), [](Coord c) { return c <= 0; });
      if (!nonneg && !nonpos) {
        throw IntegrityError("root of mixed sign found while building '" + datum.name + "'");
      }
      if (nonneg) positives.push_back(v);
    }
    if (positives.size() * 2 != seen.size()) {
      throw IntegrityError("root set of '" + datum.name + "' is not symmetric under negation");
    }

    return assemble(datum, positives);
  }

  /// Rebuilds a system from a stored canonical root list (positives then
  /// negatives). Rejects lists that are not in canonical order or are not
  /// closed under the simple reflections.
  static RootSystem from_ordered_roots(const CartanDatum& datum, const std::vector<Coords>& roots) {
    check_positive_definite(datum);
    const std::size_t n = static_cast<std::size_t>(datum.rank);
    if (roots.empty() || roots.size() % 2 != 0) {
      throw ArgumentError("stored root list for '" + datum.name + "' has odd or zero length");
    }
    const std::size_t np = roots.size() / 2;
    std::vector<Coords> positives(roots.begin(), roots.begin() + np);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (roots[k].size() != n) throw ArgumentError("stored root has wrong length");
    }
    RootSystem rs = assemble(datum, positives);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      auto r = rs.root(k);
      if (!std::equal(r.begin(), r.end(), roots[k].begin())) {
        throw ArgumentError("stored root list for '" + datum.name + "' is not in canonical order");
      }
    }
    for (std::size_t k = 0; k < rs.size(); ++k) {
      for (int i = 0; i < datum.rank; ++i) {
        if (!rs.find(rs.reflect(rs.simple(i), rs.root(k)))) {
          throw ArgumentError("stored root list for '" + datum.name + "' is not reflection-closed");
        }
      }
    }
    return rs;
  }

  const CartanDatum& datum() const { return datum_; }
  const std::string& name() const { return datum_.name; }
  int rank() const { return datum_.rank; }
  bool simply_laced() const { return datum_.simply_laced; }

  std::size_t size() const { return 2 * num_positive_; }
  std::size_t num_positive() const { return num_positive_; }

  std::span<const Coord> root(std::size_t idx) const {
    return {coords_.data() + idx * datum_.rank, static_cast<std::size_t>(datum_.rank)};
  }
  int height(std::size_t idx) const { return heights_[idx]; }
  std::int64_t norm(std::size_t idx) const { return norms_[idx]; }
  bool is_positive(std::size_t idx) const { return idx < num_positive_; }
  std::size_t negate(std::size_t idx) const {
    return idx < num_positive_ ? idx + num_positive_ : idx - num_positive_;
  }
  /// Index of the simple root a_i.
  std::size_t simple(int i) const { return simple_[i]; }

  std::optional<std::size_t> find(std::span<const Coord> v) const {
    auto it = index_.find(Coords(v.begin(), v.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::span<const Coord> v) const {
    auto idx = find(v);
    if (!idx) throw ArgumentError("vector is not a root of " + name());
    return *idx;
  }

  /// u^T * Gram * v, exact.
  std::int64_t bilinear(std::span<const Coord> u, std::span<const Coord> v) const {
    const int n = datum_.rank;
    if (u.size() != static_cast<std::size_t>(n) || v.size() != static_cast<std::size_t>(n)) {
      throw ArgumentError("bilinear: vector length does not match rank " + std::to_string(n));
    }
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      std::int64_t row = 0;
      for (int j = 0; j < n; ++j) row += datum_.at(i, j) * v[j];
      s += u[i] * row;
    }
    return s;
  }

  /// s_a(v) = v - 2 (v, a) / (a, a) * a for the root with index `a`.
  Coords reflect(std::size_t a, std::span<const Coord> v) const {
    if (a >= size()) throw ArgumentError("reflect: root index out of range");
    auto alpha = root(a);
    std::int64_t num = 2 * bilinear(v, alpha);
    std::int64_t den = norms_[a];
    if (num % den != 0) throw IntegrityError("reflect: non-integral reflection coefficient");
    std::int64_t c = num / den;
    Coords out(v.begin(), v.end());
    for (int j = 0; j < datum_.rank; ++j) out[j] = static_cast<Coord>(out[j] - c * alpha[j]);
    return out;
  }

  const std::vector<WeightOrbit>& weight_orbits() const { return weight_orbits_; }

  /// Index of s_a(b) for roots a, b.
  std::size_t reflect_index(std::size_t a, std::size_t b) const {
    return index_.at(reflect(a, root(b)));
  }

 private:
  static RootSystem assemble(const CartanDatum& datum, std::vector<Coords> positives) {
    const int n = datum.rank;
    std::sort(positives.begin(), positives.end(), [](const Coords& a, const Coords& b) {
      int ha = height_of(a), hb = height_of(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    RootSystem rs;
    rs.datum_ = datum;
    const std::size_t np = positives.size();
    rs.num_positive_ = np;
    rs.coords_.resize(2 * np * n);
    rs.heights_.resize(2 * np);
    for (std::size_t k = 0; k < np; ++k) {
      for (int j = 0; j < n; ++j) {
        if (positives[k][j] < 0) throw ArgumentError("positive root with negative coordinate");
        rs.coords_[k * n + j] = positives[k][j];
        rs.coords_[(k + np) * n + j] = static_cast<Coord>(-positives[k][j]);
      }
      rs.heights_[k] = height_of(positives[k]);
      rs.heights_[k + np] = -rs.heights_[k];
    }
    for (std::size_t k = 0; k < 2 * np; ++k) {
      auto r = rs.root(k);
      if (!rs.index_.emplace(Coords(r.begin(), r.end()), k).second) {
        throw ArgumentError("duplicate root in '" + datum.name + "'");
      }
    }
    rs.simple_.resize(n);
    for (int i = 0; i < n; ++i) {
      Coords e(n, 0);
      e[i] = 1;
      auto it = rs.index_.find(e);
      if (it == rs.index_.end()) throw ArgumentError("simple root missing from '" + datum.name + "'");
      rs.simple_[i] = it->second;
    }
    rs.norms_.resize(2 * np);
    for (std::size_t k = 0; k < 2 * np; ++k) rs.norms_[k] = rs.bilinear(rs.root(k), rs.root(k));
    rs.build_weight_orbits();
    return rs;
  }

  // Orbits of fundamental weights that are small and are not root orbits.
  // They separate classes that a diagram automorphism interchanges, which
  // the action on R alone cannot do.
  void build_weight_orbits() {
    const int n = datum_.rank;
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = datum_.at(i, j);
    }
    for (int k = 0; k < n; ++k) {
      // Column k of adj(G), scaled by (a_k, a_k) / 2, is det(G) * w_k.
      Coords x(n);
      std::int64_t common = 0;
      std::vector<std::int64_t> col(n);
      for (int i = 0; i < n; ++i) {
        IntMatrix minor(n - 1, n - 1);
        for (int r = 0, rr = 0; r < n; ++r) {
          if (r == k) continue;
          for (int c = 0, cc = 0; c < n; ++c) {
            if (c == i) continue;
            minor(rr, cc++) = g(r, c);
          }
          ++rr;
        }
        std::int64_t cof = n == 1 ? 1 : determinant(minor);
        if ((i + k) % 2) cof = -cof;
        col[i] = cof * (datum_.at(k, k) / 2);
        common = std::gcd(common, col[i] < 0 ? -col[i] : col[i]);
      }
      for (int i = 0; i < n; ++i) x[i] = static_cast<Coord>(col[i] / common);
      if (index_.count(x)) continue;
      WeightOrbit orbit;
      orbit.vertex = k;
      orbit.index.emplace(x, 0);
      orbit.points.push_back(x);
      bool too_big = false;
      for (std::size_t f = 0; f < orbit.points.size() && !too_big; ++f) {
        for (int i = 0; i < n; ++i) {
          Coords y = reflect_simple(i, orbit.points[f]);
          if (orbit.index.emplace(y, static_cast<std::uint32_t>(orbit.points.size())).second) {
            orbit.points.push_back(std::move(y));
            if (orbit.points.size() > kWeightOrbitCap) {
              too_big = true;
              break;
            }
          }
        }
      }
      if (!too_big) weight_orbits_.push_back(std::move(orbit));
    }
  }

  static int height_of(const Coords& v) {
    int h = 0;
    for (Coord c : v) h += c;
    return h;
  }

  // Used during closure, before the index exists.
  Coords reflect_simple(int i, const Coords& v) const {
    const int n = datum_.rank;
    std::int64_t va = 0;
    for (int j = 0; j < n; ++j) va += datum_.at(i, j) * v[j];
    std::int64_t num = 2 * va;
    std::int64_t den = datum_.at(i, i);
    if (num % den != 0) throw IntegrityError("non-integral simple reflection coefficient");
    Coords out = v;
    out[i] = static_cast<Coord>(out[i] - num / den);
    return out;
  }

  CartanDatum datum_;
  std::size_t num_positive_ = 0;
  std::vector<Coord> coords_;
  std::vector<int> heights_;
  std::vector<std::int64_t> norms_;
  std::vector<std::size_t> simple_;
  std::map<Coords, std::size_t> index_;
  std::vector<WeightOrbit> weight_orbits_;
};

}  // namespace lie8
