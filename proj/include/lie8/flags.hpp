#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lie8/errors.hpp"
#include "lie8/fq.hpp"
#include "lie8/sp4.hpp"

namespace lie8::sp4 {

using Vec4 = std::array<std::uint8_t, 4>;

/// <x, y> = x^T J y.
inline std::uint8_t pairing(const Vec4& x, const Vec4& y, const PrimeField& f) {
  std::uint8_t s = f.mul(x[0], y[3]);
  s = f.add(s, f.mul(x[1], y[2]));
  s = f.sub(s, f.mul(x[2], y[1]));
  return f.sub(s, f.mul(x[3], y[0]));
}

inline Vec4 apply(const Mat4& g, const Vec4& v, const PrimeField& f) {
  Vec4 out;
  for (int i = 0; i < 4; ++i) {
    unsigned s = 0;
    for (int j = 0; j < 4; ++j) s += static_cast<unsigned>(g[i * 4 + j]) * v[j];
    out[i] = static_cast<std::uint8_t>(s % f.q());
  }
  return out;
}

/// Scales v so that its first nonzero coordinate is 1.
inline Vec4 normalize(Vec4 v, const PrimeField& f) {
  for (int k = 0; k < 4; ++k) {
    if (v[k] != 0) {
      const std::uint8_t s = f.inv(v[k]);
      for (auto& x : v) x = f.mul(x, s);
      return v;
    }
  }
  throw ArgumentError("normalize: zero vector");
}

/// Rank of up to 8 vectors in F_q^4, by elimination on a local copy.
inline int span_rank(const Vec4* rows, int n, const PrimeField& f) {
  std::array<Vec4, 8> a{};
  std::copy(rows, rows + n, a.begin());
  int r = 0;
  for (int c = 0; c < 4 && r < n; ++c) {
    int p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[r], a[p]);
    const std::uint8_t s = f.inv(a[r][c]);
    for (int i = r + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint8_t m = f.mul(a[i][c], s);
      for (int j = c; j < 4; ++j) a[i][j] = f.sub(a[i][j], f.mul(m, a[r][j]));
    }
    ++r;
  }
  return r;
}

inline std::array<Vec4, 2> plane_basis(const Vec4& a, const Vec4& b, const PrimeField& f) {
  auto [rows, pivots] = rref({FqRow(a.begin(), a.end()), FqRow(b.begin(), b.end())}, f);
  if (rows.size() != 2) throw ArgumentError("plane_basis: vectors are dependent");
  std::array<Vec4, 2> out;
  for (int r = 0; r < 2; ++r) std::copy(rows[r].begin(), rows[r].end(), out[r].begin());
  return out;
}

/// Isotropic flag L < P in F_q^4: a normalised line vector and the reduced
/// echelon basis of the plane.
struct IsotropicFlag {
  Vec4 line{};
  std::array<Vec4, 2> plane{};

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (auto x : line) k = (k << 3) | x;
    for (const auto& r : plane) {
      for (auto x : r) k = (k << 3) | x;
    }
    return k;
  }
  friend bool operator==(const IsotropicFlag&, const IsotropicFlag&) = default;
};

/// Flag <v> < <v, u>; throws unless the plane is isotropic and 2-dimensional.
inline IsotropicFlag make_flag(const Vec4& v, const Vec4& u, const PrimeField& f) {
  if (pairing(v, u, f) != 0) throw ArgumentError("make_flag: plane is not isotropic");
  return IsotropicFlag{normalize(v, f), plane_basis(v, u, f)};
}

/// <e1> < <e1, e2>.
inline IsotropicFlag standard_flag() {
  return IsotropicFlag{{1, 0, 0, 0}, {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}}};
}

inline IsotropicFlag act(const Mat4& g, const IsotropicFlag& fl, const PrimeField& f) {
  return IsotropicFlag{normalize(apply(g, fl.line, f), f),
                       plane_basis(apply(g, fl.plane[0], f), apply(g, fl.plane[1], f), f)};
}

/// Basis of L^perp for L = <v>.
inline std::array<Vec4, 3> perp_basis(const Vec4& v, const PrimeField& f) {
  FqRow c(4);
  for (int k = 0; k < 4; ++k) {
    Vec4 e{};
    e[k] = 1;
    c[k] = pairing(e, v, f);
  }
  auto ns = nullspace({c}, 4, f);
  if (ns.size() != 3) throw IntegrityError("perp_basis: expected a hyperplane");
  std::array<Vec4, 3> out;
  for (int r = 0; r < 3; ++r) std::copy(ns[r].begin(), ns[r].end(), out[r].begin());
  return out;
}

/// Permutation of {0,1,2,3}; p[j] = i.
using S4Perm = std::array<std::uint8_t, 4>;

/// Bases of the proper steps of the complete flag L < P < L^perp < V.
struct CompleteFlag {
  std::array<Vec4, 1> e1;
  std::array<Vec4, 2> e2;
  std::array<Vec4, 3> e3;
};

inline CompleteFlag complete(const IsotropicFlag& fl, const PrimeField& f) {
  return CompleteFlag{{fl.line}, fl.plane, perp_basis(fl.line, f)};
}

/// Relative position of two complete flags as a permutation: with
/// d(i, j) = dim(E_i cap F_j), w(j) = i exactly where the second difference
/// of d is 1.
inline S4Perm relpos_perm(const CompleteFlag& e, const CompleteFlag& g, const PrimeField& f) {
  auto step = [](const CompleteFlag& c, int i) -> std::pair<const Vec4*, int> {
    switch (i) {
      case 1: return {c.e1.data(), 1};
      case 2: return {c.e2.data(), 2};
      default: return {c.e3.data(), 3};
    }
  };
  std::array<std::array<int, 5>, 5> d{};
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      if (i == 4 || j == 4) {
        d[i][j] = std::min(i, j);
        continue;
      }
      auto [a, na] = step(e, i);
      auto [b, nb] = step(g, j);
      std::array<Vec4, 6> rows;
      std::copy(a, a + na, rows.begin());
      std::copy(b, b + nb, rows.begin() + na);
      d[i][j] = i + j - span_rank(rows.data(), na + nb, f);
    }
  }
  S4Perm w{};
  std::array<bool, 4> hit{};
  for (int j = 1; j <= 4; ++j) {
    int found = -1;
    for (int i = 1; i <= 4; ++i) {
      if (d[i][j] - d[i - 1][j] - d[i][j - 1] + d[i - 1][j - 1] == 1) {
        if (found >= 0) throw IntegrityError("relpos: ambiguous column in the rank table");
        found = i;
      }
    }
    if (found < 0 || hit[found - 1]) throw IntegrityError("relpos: rank table is not a permutation");
    hit[found - 1] = true;
    w[j - 1] = static_cast<std::uint8_t>(found - 1);
  }
  return w;
}

/// All isotropic flags over F_q, sorted by key, with the relative position
/// table (as permutations, packed 2 bits per entry) for every ordered pair.
class FlagSpace {
 public:
  explicit FlagSpace(unsigned q) : f_(q) {
    std::vector<Vec4> lines;
    for (unsigned m = 1; m < q * q * q * q; ++m) {
      Vec4 v{};
      unsigned x = m;
      for (int k = 3; k >= 0; --k) {
        v[k] = static_cast<std::uint8_t>(x % q);
        x /= q;
      }
      if (normalize(v, f_) == v) lines.push_back(v);
    }
    for (const auto& v : lines) {
      for (const auto& u : lines) {
        if (pairing(v, u, f_) != 0) continue;
        Vec4 pair[2] = {v, u};
        if (span_rank(pair, 2, f_) != 2) continue;
        IsotropicFlag fl = make_flag(v, u, f_);
        if (index_.emplace(fl.key(), 0).second) flags_.push_back(fl);
      }
    }
    std::sort(flags_.begin(), flags_.end(),
              [](const IsotropicFlag& a, const IsotropicFlag& b) { return a.key() < b.key(); });
    for (std::size_t k = 0; k < flags_.size(); ++k) {
      index_[flags_[k].key()] = static_cast<std::uint32_t>(k);
      complete_.push_back(complete(flags_[k], f_));
    }
    const std::size_t n = flags_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table_[a * n + b] = pack_perm(relpos_perm(complete_[a], complete_[b], f_));
      }
    }
  }

  const PrimeField& field() const { return f_; }
  unsigned q() const { return f_.q(); }
  std::size_t size() const { return flags_.size(); }
  const IsotropicFlag& operator[](std::size_t k) const { return flags_[k]; }
  const std::vector<IsotropicFlag>& flags() const { return flags_; }

  std::uint32_t index_of(const IsotropicFlag& fl) const {
    auto it = index_.find(fl.key());
    if (it == index_.end()) throw ArgumentError("flag not in the enumerated set");
    return it->second;
  }

  /// Index of g F_k.
  std::uint32_t image(const Mat4& g, std::size_t k) const { return index_of(act(g, flags_[k], f_)); }

  S4Perm relpos(std::size_t a, std::size_t b) const { return unpack_perm(table_[a * size() + b]); }
  std::uint8_t relpos_packed(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }

  static std::uint8_t pack_perm(const S4Perm& p) {
    return static_cast<std::uint8_t>(p[0] | (p[1] << 2) | (p[2] << 4) | (p[3] << 6));
  }
  static S4Perm unpack_perm(std::uint8_t b) {
    return {static_cast<std::uint8_t>(b & 3), static_cast<std::uint8_t>((b >> 2) & 3),
            static_cast<std::uint8_t>((b >> 4) & 3), static_cast<std::uint8_t>((b >> 6) & 3)};
  }

 private:
  PrimeField f_;
  std::vector<IsotropicFlag> flags_;
  std::vector<CompleteFlag> complete_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint8_t> table_;
};

/// |Sp4| / |B| with |B| = q^4 (q - 1)^2.
inline std::uint64_t flag_count_formula(std::uint64_t q) {
  return sp4_order_formula(q) / (q * q * q * q * (q - 1) * (q - 1));
}

}  // namespace lie8::sp4
