#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lie8/errors.hpp"

namespace lie8 {

/// Largest rank handled anywhere in the library. Weyl element keys pack the
/// images of the simple roots into a fixed array of this length.
inline constexpr int kMaxRank = 8;

/// Vertex set, symmetric Gram matrix (a_i, a_j) and the simply-laced flag.
struct CartanDatum {
  std::string name;
  int rank = 0;
  std::vector<std::int64_t> gram;  // row-major, rank x rank
  bool simply_laced = true;

  std::int64_t at(int i, int j) const {
    return gram[static_cast<std::size_t>(i) * rank + j];
  }

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;
};

/// Leading principal minors of a symmetric integer matrix, computed with
/// fraction-free (Bareiss) elimination so every intermediate is exact.
inline std::vector<std::int64_t> leading_minors(const std::vector<std::int64_t>& m, int n) {
  std::vector<__int128> a(m.begin(), m.end());
  std::vector<std::int64_t> minors;
  minors.reserve(n);
  __int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    // After step k-1 the pivot a[k][k] is the (k+1)-th leading minor,
    // provided all earlier pivots were nonzero.
    __int128 pivot = a[k * n + k];
    minors.push_back(static_cast<std::int64_t>(pivot));
    if (pivot == 0) {
      // Later minors are undefined for this elimination order; the caller
      // stops at the first non-positive one anyway.
      for (int r = k + 1; r < n; ++r) minors.push_back(0);
      break;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = pivot;
  }
  return minors;
}

/// Throws ArgumentError naming the first leading minor that is not positive.
inline void check_positive_definite(const CartanDatum& d) {
  if (d.rank <= 0 || d.gram.size() != static_cast<std::size_t>(d.rank) * d.rank) {
    throw ArgumentError("Cartan datum '" + d.name + "': Gram matrix has wrong shape");
  }
  for (int i = 0; i < d.rank; ++i) {
    for (int j = 0; j < d.rank; ++j) {
      if (d.at(i, j) != d.at(j, i)) {
        throw ArgumentError("Cartan datum '" + d.name + "': Gram matrix is not symmetric");
      }
    }
  }
  auto minors = leading_minors(d.gram, d.rank);
  for (int k = 0; k < d.rank; ++k) {
    if (minors[k] <= 0) {
      throw ArgumentError("Cartan datum '" + d.name + "' is not positive definite: leading minor " +
                          std::to_string(k + 1) + " equals " + std::to_string(minors[k]));
    }
  }
}

/// Simply-laced datum from an undirected multigraph:
/// (a_i, a_i) = 2, (a_i, a_j) = -(number of edges joining i and j).
inline CartanDatum from_graph(std::string name, int vertices,
                              const std::vector<std::pair<int, int>>& edges) {
  if (vertices <= 0 || vertices > kMaxRank) {
    throw ArgumentError("graph '" + name + "': vertex count must lie in 1.." +
                        std::to_string(kMaxRank));
  }
  CartanDatum d;
  d.name = std::move(name);
  d.rank = vertices;
  d.gram.assign(static_cast<std::size_t>(vertices) * vertices, 0);
  for (int i = 0; i < vertices; ++i) d.gram[i * vertices + i] = 2;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v) {
      throw ArgumentError("graph '" + d.name + "': bad edge");
    }
    d.gram[u * vertices + v] -= 1;
    d.gram[v * vertices + u] -= 1;
  }
  d.simply_laced = true;
  return d;
}

inline CartanDatum type_A(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_graph("A" + std::to_string(n), n, edges);
}

/// D_n: chain 0 - 1 - ... - (n-2) with vertex n-1 attached to n-3.
inline CartanDatum type_D(int n) {
  if (n < 4) throw ArgumentError("D_n requires n >= 4");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 3, n - 1);
  return from_graph("D" + std::to_string(n), n, edges);
}

/// E_n, n in {6, 7, 8}, Bourbaki numbering shifted to 0-based: the chain
/// 0 - 2 - 3 - 4 - 5 - 6 - 7 with vertex 1 attached to vertex 3.
inline CartanDatum type_E(int n) {
  if (n < 6 || n > 8) throw ArgumentError("E_n requires n in {6, 7, 8}");
  std::vector<std::pair<int, int>> edges{{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
  if (n >= 7) edges.emplace_back(5, 6);
  if (n >= 8) edges.emplace_back(6, 7);
  return from_graph("E" + std::to_string(n), n, edges);
}

/// B2 with a_1 short ((a_1,a_1) = 2), a_2 long ((a_2,a_2) = 4), (a_1,a_2) = -2.
inline CartanDatum type_B2() {
  CartanDatum d;
  d.name = "B2";
  d.rank = 2;
  d.gram = {2, -2, -2, 4};
  d.simply_laced = false;
  return d;
}

/// Parses "A<n>", "D<n>", "E6", "E7", "E8" and "B2".
inline CartanDatum parse_type(std::string_view s) {
  auto bad = [&] {
    return ArgumentError("unknown type '" + std::string(s) +
                         "' (expected A<n>, D<n>, E6, E7, E8 or B2; rank <= 8)");
  };
  if (s.size() < 2) throw bad();
  int n = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') throw bad();
    n = n * 10 + (c - '0');
    if (n > 99) throw bad();
  }
  switch (s[0]) {
    case 'A':
      if (n < 1 || n > kMaxRank) throw bad();
      return type_A(n);
    case 'D':
      if (n < 4 || n > kMaxRank) throw bad();
      return type_D(n);
    case 'E':
      if (n < 6 || n > 8) throw bad();
      return type_E(n);
    case 'B':
      if (n != 2) throw bad();
      return type_B2();
    default:
      throw bad();
  }
}

/// All simply-laced types of rank at most 8.
inline std::vector<std::string> ade_types_up_to_rank8() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E" + std::to_string(n));
  return out;
}

}  // namespace lie8
