#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lie8/errors.hpp"

namespace lie8 {

/// Arithmetic in F_q for a small prime q chosen at run time, by table lookup.
class PrimeField {
 public:
  explicit PrimeField(unsigned q) : q_(q) {
    if (q != 2 && q != 3 && q != 5 && q != 7) {
      throw ArgumentError("field size must be one of the primes 2, 3, 5, 7 (got " +
                          std::to_string(q) + ")");
    }
    for (unsigned a = 0; a < q; ++a) {
      for (unsigned b = 0; b < q; ++b) {
        add_[a][b] = static_cast<std::uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<std::uint8_t>((a * b) % q);
        if ((a * b) % q == 1) inv_[a] = static_cast<std::uint8_t>(b);
      }
      neg_[a] = static_cast<std::uint8_t>((q - a) % q);
    }
  }

  unsigned q() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a][b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a][neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const {
    if (a == 0) throw ArgumentError("inverse of zero");
    return inv_[a];
  }
  std::uint8_t from_int(long long x) const {
    long long r = x % static_cast<long long>(q_);
    return static_cast<std::uint8_t>(r < 0 ? r + q_ : r);
  }

 private:
  unsigned q_;
  std::array<std::array<std::uint8_t, 8>, 8> add_{};
  std::array<std::array<std::uint8_t, 8>, 8> mul_{};
  std::array<std::uint8_t, 8> neg_{};
  std::array<std::uint8_t, 8> inv_{};
};

using FqRow = std::vector<std::uint8_t>;

/// Reduced row echelon form; zero rows are dropped. Returns the pivot
/// columns alongside.
inline std::pair<std::vector<FqRow>, std::vector<std::size_t>> rref(std::vector<FqRow> rows,
                                                                    const PrimeField& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return {rows, pivots};
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const std::uint8_t s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint8_t m = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return {rows, pivots};
}

inline std::size_t rank(std::vector<FqRow> rows, const PrimeField& f) {
  return rref(std::move(rows), f).first.size();
}

/// Basis of {x : A x = 0} for A given by its rows (each of length n).
inline std::vector<FqRow> nullspace(const std::vector<FqRow>& a, std::size_t n,
                                    const PrimeField& f) {
  auto [r, pivots] = rref(a, f);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<FqRow> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FqRow x(n, 0);
    x[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = f.neg(r[k][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace lie8
