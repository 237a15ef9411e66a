#pragma once

// Reference computations that share no code with the library. Slow and
// plain on purpose.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t quad(const std::vector<std::int64_t>& gram, int n, const Vec& x) {
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += x[i] * gram[i * n + j] * x[j];
  }
  return s;
}

// All x in Z^n with x^T G x == target, G positive definite (Fincke-Pohst).
inline std::vector<Vec> lattice_vectors(const std::vector<std::int64_t>& gram, int n, std::int64_t target) {
  // G = R^T R via Cholesky; q_ij form: Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2
  std::vector<double> q(n * n, 0.0);
  std::vector<double> a(gram.begin(), gram.end());
  for (int i = 0; i < n; ++i) {
    q[i * n + i] = a[i * n + i];
    for (int j = i + 1; j < n; ++j) q[i * n + j] = a[i * n + j] / a[i * n + i];
    for (int k = i + 1; k < n; ++k) {
      for (int l = k; l < n; ++l) a[k * n + l] -= q[i * n + k] * q[i * n + l] * a[i * n + i];
    }
  }
  std::vector<Vec> out;
  Vec x(n, 0);
  const double bound = static_cast<double>(target) + 1e-6;
  std::function<void(int, double)> rec = [&](int i, double used) {
    if (i < 0) {
      if (quad(gram, n, x) == target) out.push_back(x);
      return;
    }
    double c = 0;
    for (int j = i + 1; j < n; ++j) c += q[i * n + j] * static_cast<double>(x[j]);
    const double r = std::sqrt(std::max(0.0, (bound - used) / q[i * n + i]));
    const auto lo = static_cast<std::int64_t>(std::ceil(-c - r - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(-c + r + 1e-9));
    for (std::int64_t v = lo; v <= hi; ++v) {
      x[i] = v;
      const double t = static_cast<double>(v) + c;
      rec(i - 1, used + q[i * n + i] * t * t);
    }
    x[i] = 0;
  };
  rec(n - 1, 0.0);
  return out;
}

// E8 roots in the even coordinate model, doubled: +-2e_i +-2e_j and
// (+-1,...,+-1) with an even number of minus signs.
inline std::vector<std::array<int, 8>> e8_roots_doubled() {
  std::vector<std::array<int, 8>> out;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      for (int si : {2, -2}) {
        for (int sj : {2, -2}) {
          std::array<int, 8> v{};
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
      }
    }
  }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::array<int, 8> v;
    for (int i = 0; i < 8; ++i) v[i] = mask >> i & 1 ? -1 : 1;
    out.push_back(v);
  }
  return out;
}

// |W| as the product of the degrees m_i + 1, where the exponents m_i form
// the partition dual to (number of positive roots of height k)_k.
inline std::uint64_t weyl_order_from_heights(const std::vector<int>& positive_heights) {
  std::map<int, int> per;
  for (int h : positive_heights) ++per[h];
  std::uint64_t order = 1;
  // exponent m occurs (count of height m) - (count of height m+1) times
  for (auto [h, c] : per) {
    const int next = per.count(h + 1) ? per.at(h + 1) : 0;
    for (int k = 0; k < c - next; ++k) order *= static_cast<std::uint64_t>(h + 1);
  }
  return order;
}

using Perm = std::vector<std::uint32_t>;

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::uint32_t>(i);
  return c;
}

// Plain set closure of permutation generators.
inline std::vector<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0u);
  std::set<Perm> seen{id};
  std::vector<Perm> todo{id};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

// Number of classes = #{(g, h) : gh = hg} / |G|.
inline std::size_t class_count_by_commuting_pairs(const std::vector<Perm>& group) {
  std::size_t pairs = 0;
  for (const auto& g : group) {
    for (const auto& h : group) pairs += compose(g, h) == compose(h, g);
  }
  return pairs / group.size();
}

// Conjugacy classes by brute force: x ~ g x g^-1 over the whole group.
inline std::vector<std::size_t> class_sizes(const std::vector<Perm>& group) {
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : group) {
    if (done.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& g : group) cls.insert(compose(compose(g, x), inverse(g)));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Adjoint Chevalley orders: PGL2 and PGL3 over F_q.
inline std::uint64_t adjoint_a1_order(std::uint64_t q) { return q * (q * q - 1) / std::gcd<std::uint64_t>(2, q - 1); }
inline std::uint64_t adjoint_a2_order(std::uint64_t q) {
  return q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd<std::uint64_t>(3, q - 1);
}

inline std::uint64_t sp4_order(std::uint64_t q) { return q * q * q * q * (q * q - 1) * (q * q * q * q - 1); }

// 4x4 matrices over F_q as plain int arrays, row-major.
using M4 = std::array<int, 16>;

inline int md(long long x, int q) { return static_cast<int>(((x % q) + q) % q); }

// Symplectic form with <e1,e4> = <e2,e3> = 1.
inline int pair(const std::array<int, 4>& x, const std::array<int, 4>& y, int q) {
  return md(static_cast<long long>(x[0]) * y[3] + x[1] * y[2] - x[2] * y[1] - x[3] * y[0], q);
}

// Flags L < P with P isotropic, counted by brute force over vectors.
inline std::uint64_t isotropic_flag_count(int q) {
  std::uint64_t vectors_in_planes = 0;
  std::uint64_t lines = 0;
  const int total = q * q * q * q;
  auto vec = [q](int code) {
    std::array<int, 4> v;
    for (int i = 0; i < 4; ++i, code /= q) v[i] = code % q;
    return v;
  };
  for (int a = 1; a < total; ++a) {
    auto v = vec(a);
    // one representative per line: first nonzero coordinate equal to 1
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    ++lines;
    for (int b = 1; b < total; ++b) {
      auto u = vec(b);
      if (pair(v, u, q) != 0) continue;
      bool dependent = false;
      for (int t = 0; t < q && !dependent; ++t) {
        bool eq = true;
        for (int i = 0; i < 4; ++i) eq = eq && md(static_cast<long long>(t) * v[i], q) == u[i];
        dependent = eq;
      }
      if (!dependent) ++vectors_in_planes;
    }
  }
  (void)lines;
  // each plane through L has q^2 - q vectors outside L
  return vectors_in_planes / static_cast<std::uint64_t>(q * q - q);
}

// dim {X in gl4 : X^T J + J X = 0 and gX = Xg}, by elimination over F_q on
// the 16 entries of X.
inline int centralizer_dimension(const M4& g, int q) {
  static const M4 J{0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0};
  std::vector<std::array<int, 16>> rows;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      std::array<int, 16> comm{}, form{};
      for (int k = 0; k < 4; ++k) {
        // (gX - Xg)_{rc} = sum_k g_rk X_kc - X_rk g_kc
        comm[k * 4 + c] += g[r * 4 + k];
        comm[r * 4 + k] -= g[k * 4 + c];
        // (X^T J + J X)_{rc} = sum_k X_kr J_kc + J_rk X_kc
        form[k * 4 + r] += J[k * 4 + c];
        form[k * 4 + c] += J[r * 4 + k];
      }
      for (auto& x : comm) x = md(x, q);
      for (auto& x : form) x = md(x, q);
      rows.push_back(comm);
      rows.push_back(form);
    }
  }
  auto inv = [q](int a) {
    for (int b = 1; b < q; ++b) {
      if (a * b % q == 1) return b;
    }
    return 0;
  };
  int rank = 0;
  for (int col = 0; col < 16 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col]) {
        piv = static_cast<int>(r);
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const int s = inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * s % q;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || !rows[r][col]) continue;
      const int t = rows[r][col];
      for (int k = 0; k < 16; ++k) rows[r][k] = md(rows[r][k] - t * rows[rank][k], q);
    }
    ++rank;
  }
  return 16 - rank;
}

}  // namespace oracle
