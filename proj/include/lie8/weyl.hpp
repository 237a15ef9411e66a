#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <deque>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lie8/errors.hpp"
#include "lie8/matrix.hpp"
#include "lie8/root_system.hpp"

namespace lie8 {

/// Permutation of root indices; p[x] is the image of root x.
using Perm = std::vector<std::uint16_t>;

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return p;
}

/// (a * b)[x] = a[b[x]]: apply b first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) c[x] = a[b[x]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint16_t>(x);
  return c;
}

inline bool is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] != x) return false;
  }
  return true;
}

/// Exact key of a Weyl element: the images of the simple roots. W acts
/// faithfully on V, so the key is injective.
using ElementKey = std::array<std::uint16_t, kMaxRank>;

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const {
    std::uint64_t lo = 0, hi = 0;
    for (int i = 0; i < 4; ++i) lo |= static_cast<std::uint64_t>(k[i]) << (16 * i);
    for (int i = 0; i < 4; ++i) hi |= static_cast<std::uint64_t>(k[i + 4]) << (16 * i);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x);
  }
};

/// An element of W, stored as its permutation of the root indices.
///
/// Holds a non-owning pointer to its root system; the system must outlive
/// every element built from it.
class WeylElement {
 public:
  WeylElement(const RootSystem& rs, Perm perm) : rs_(&rs), perm_(std::move(perm)) {
    if (perm_.size() != rs.size()) throw ArgumentError("permutation length does not match |R|");
  }

  static WeylElement identity(const RootSystem& rs) { return {rs, identity_perm(rs.size())}; }

  const RootSystem& system() const { return *rs_; }
  const Perm& perm() const { return perm_; }
  std::size_t operator()(std::size_t root) const { return perm_[root]; }

  bool is_identity() const { return lie8::is_identity(perm_); }

  ElementKey key() const {
    ElementKey k{};
    for (int i = 0; i < rs_->rank(); ++i) k[i] = perm_[rs_->simple(i)];
    return k;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rs_ == b.rs_ && a.perm_ == b.perm_;
  }

 private:
  const RootSystem* rs_;
  Perm perm_;
};

inline void require_same_system(const WeylElement& a, const WeylElement& b) {
  if (&a.system() != &b.system()) {
    throw ArgumentError("Weyl elements belong to different root systems");
  }
}

inline WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw ArgumentError("simple reflection index out of range");
  Perm p(rs.size());
  const std::size_t a = rs.simple(i);
  for (std::size_t b = 0; b < rs.size(); ++b) p[b] = static_cast<std::uint16_t>(rs.reflect_index(a, b));
  return {rs, std::move(p)};
}

/// a * b acts as "b, then a".
inline WeylElement group_op(const WeylElement& a, const WeylElement& b) {
  require_same_system(a, b);
  return {a.system(), compose(a.perm(), b.perm())};
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return group_op(a, b); }

inline WeylElement invert(const WeylElement& a) { return {a.system(), inverse(a.perm())}; }

inline WeylElement power(const WeylElement& a, std::uint64_t k) {
  WeylElement result = WeylElement::identity(a.system());
  WeylElement base = a;
  for (; k; k >>= 1) {
    if (k & 1) result = result * base;
    base = base * base;
  }
  return result;
}

/// s_{word[0]} s_{word[1]} ... as a single element.
inline WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) w = w * simple_reflection(rs, i);
  return w;
}

/// Sorted cycle lengths of the permutation on R, run-length encoded as
/// (length, count) with ascending length.
using CycleType = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline CycleType cycle_type(const Perm& p) {
  std::vector<std::uint32_t> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::uint32_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  CycleType ct;
  for (auto len : lengths) {
    if (!ct.empty() && ct.back().first == len) {
      ++ct.back().second;
    } else {
      ct.emplace_back(len, 1);
    }
  }
  return ct;
}

/// Order of the element: lcm of its cycle lengths on R.
inline std::uint64_t element_order(const WeylElement& a) {
  std::uint64_t ord = 1;
  for (auto [len, count] : cycle_type(a.perm())) ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

/// l(w) = #(R+ cap w(-R+)): negative roots whose image is positive.
inline int length(const WeylElement& w) {
  const auto& rs = w.system();
  const std::size_t np = rs.num_positive();
  int l = 0;
  for (std::size_t b = np; b < 2 * np; ++b) l += w.perm()[b] < np;
  return l;
}

/// Matrix of w on V in the simple-root basis; column j holds w(a_j).
inline IntMatrix matrix_on_V(const WeylElement& w) {
  const auto& rs = w.system();
  const int n = rs.rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    auto img = rs.root(w.perm()[rs.simple(j)]);
    for (int i = 0; i < n; ++i) m(i, j) = img[i];
  }
  return m;
}

/// Conjugation-invariant signature of a Weyl element.
///
/// `cycles` is the cycle type on R and `charpoly` the characteristic
/// polynomial on V. `refinement` adds cycle types on further W-stable sets:
/// the roots of each length (non-simply-laced types only) and the small
/// fundamental-weight orbits. The action on R cannot tell apart classes
/// that a diagram automorphism interchanges (the two reflection classes of
/// B2, the triality triples of D4); the weight orbits can.
struct Fingerprint {
  CycleType cycles;
  std::vector<std::int64_t> charpoly;  // t^n first
  std::vector<CycleType> refinement;

  /// Zero fixed space on V, read off as charpoly(1) != 0.
  bool elliptic() const { return evaluate(charpoly, 1) != 0; }

  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const WeylElement& w) {
  const auto& rs = w.system();
  IntMatrix m = matrix_on_V(w);
  Fingerprint fp{cycle_type(w.perm()), characteristic_polynomial(m), {}};

  if (!rs.simply_laced()) {
    std::vector<std::int64_t> norms;
    for (std::size_t b = 0; b < rs.size(); ++b) norms.push_back(rs.norm(b));
    std::sort(norms.begin(), norms.end());
    norms.erase(std::unique(norms.begin(), norms.end()), norms.end());
    for (auto nv : norms) {
      std::vector<std::size_t> sub;
      for (std::size_t b = 0; b < rs.size(); ++b) {
        if (rs.norm(b) == nv) sub.push_back(b);
      }
      std::vector<std::uint32_t> pos(rs.size(), 0);
      for (std::size_t k = 0; k < sub.size(); ++k) pos[sub[k]] = static_cast<std::uint32_t>(k);
      Perm p(sub.size());
      for (std::size_t k = 0; k < sub.size(); ++k) p[k] = static_cast<std::uint16_t>(pos[w(sub[k])]);
      fp.refinement.push_back(cycle_type(p));
    }
  }

  const int n = rs.rank();
  for (const auto& orbit : rs.weight_orbits()) {
    Perm p(orbit.points.size());
    Coords y(n);
    for (std::size_t k = 0; k < orbit.points.size(); ++k) {
      const auto& x = orbit.points[k];
      for (int i = 0; i < n; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < n; ++j) acc += m(i, j) * x[j];
        y[i] = static_cast<Coord>(acc);
      }
      p[k] = static_cast<std::uint16_t>(orbit.index.at(y));
    }
    fp.refinement.push_back(cycle_type(p));
  }
  return fp;
}

/// det(I - w) != 0 on V.
inline bool is_elliptic(const WeylElement& w) {
  IntMatrix m = matrix_on_V(w);
  IntMatrix id = IntMatrix::identity(m.rows());
  return determinant(id - m) != 0;
}

/// Product of all simple reflections in vertex order 0, 1, ..., rank-1.
inline WeylElement coxeter_element(const RootSystem& rs) {
  std::vector<int> word(rs.rank());
  std::iota(word.begin(), word.end(), 0);
  return from_word(rs, word);
}

/// A reduced word: w = s_{word[0]} ... s_{word[k-1]} with k = l(w).
inline std::vector<int> reduced_word(const WeylElement& w) {
  const auto& rs = w.system();
  std::vector<int> rev;
  WeylElement x = w;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && rs.is_positive(x(rs.simple(i)))) ++i;
    if (i == rs.rank()) break;
    rev.push_back(i);
    x = x * simple_reflection(rs, i);
  }
  return {rev.rbegin(), rev.rend()};
}

/// Longest element: the unique w with l(w) = |R+|, found by descending
/// along w -> w s_i while some simple root is still sent to a positive root.
inline WeylElement longest_element(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    int ascent = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.is_positive(w(rs.simple(i)))) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) return w;
    w = w * simple_reflection(rs, ascent);
  }
}

inline constexpr std::size_t kDefaultDescentCap = 10'000'000;

struct DescentResult {
  int min_length;
  WeylElement witness;
  std::size_t states_visited;
};

/// Minimal length in the conjugacy class of w, by cyclic shifts.
///
/// From the current element, explores conjugates x -> s_i x s_i of equal
/// length breadth-first until one admits a strict decrease, then restarts
/// from the shorter element. Terminates when the equal-length component has
/// no decreasing move; that component then lies in C_min.
inline DescentResult min_length_descent(const WeylElement& w,
                                        std::size_t cap = kDefaultDescentCap) {
  const auto& rs = w.system();
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));

  WeylElement current = w;
  int current_len = length(w);
  std::size_t visited_total = 0;
  for (;;) {
    std::unordered_set<ElementKey, ElementKeyHash> visited;
    std::deque<WeylElement> queue;
    visited.insert(current.key());
    queue.push_back(current);
    bool descended = false;
    while (!queue.empty() && !descended) {
      WeylElement x = std::move(queue.front());
      queue.pop_front();
      for (const auto& s : gens) {
        WeylElement y = s * x * s;
        int ly = length(y);
        if (ly < current_len) {
          current = std::move(y);
          current_len = ly;
          descended = true;
          break;
        }
        if (ly == current_len && visited.insert(y.key()).second) {
          if (visited_total + visited.size() > cap) {
            throw ResourceError("min_length_descent: visited-state cap of " +
                                std::to_string(cap) + " exceeded");
          }
          queue.push_back(std::move(y));
        }
      }
    }
    visited_total += visited.size();
    if (!descended) return {current_len, current, visited_total};
  }
}

}  // namespace lie8
