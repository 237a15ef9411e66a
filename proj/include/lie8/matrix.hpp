#pragma once

#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lie8/errors.hpp"

namespace lie8 {

/// Residue modulo a compile-time prime P.
template <std::uint32_t P>
class Fp {
  static_assert(P >= 2 && P < 256, "small prime fields only");

 public:
  static constexpr std::uint32_t modulus = P;

  constexpr Fp() = default;
  constexpr Fp(long long x) : v_(static_cast<std::uint8_t>(((x % P) + P) % P)) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) + b.v_); }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return Fp(static_cast<long long>(a.v_) + P - b.v_);
  }
  friend constexpr Fp operator*(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) * b.v_); }
  constexpr Fp operator-() const { return Fp(static_cast<long long>(P) - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  constexpr Fp inverse() const {
    if (v_ == 0) throw ArgumentError("inverse of zero in a prime field");
    // Fermat: a^(P-2).
    Fp r(1), b = *this;
    for (std::uint32_t e = P - 2; e; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  friend constexpr bool operator==(Fp, Fp) = default;

 private:
  std::uint8_t v_ = 0;
};

/// Dense row-major matrix over an exact scalar ring. The ring is part of the
/// type: Matrix<std::int64_t> for integers, Matrix<Fp<p>> for F_p.
template <class T>
class Matrix {
 public:
  using scalar_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  bool is_zero() const {
    for (const T& x : data_) {
      if (!(x == T(0))) return false;
    }
    return true;
  }

  /// Applies f entrywise, producing a matrix over another ring.
  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ArgumentError("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    // Row-gather with zero skipping; the operators here are very sparse.
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T* crow = &c.data_[i * c.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T(0)) continue;
        const T* brow = &b.data_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!(brow[j] == T(0))) crow[j] = crow[j] + aik * brow[j];
        }
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = c.data_[k] + b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = c.data_[k] - b.data_[k];
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArgumentError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Exact determinant by fraction-free Gaussian elimination with pivoting.
inline std::int64_t determinant(const IntMatrix& m) {
  if (!m.square()) throw ArgumentError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<__int128> a(m.data().begin(), m.data().end());
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * static_cast<std::int64_t>(a[(n - 1) * n + (n - 1)]);
}

/// Characteristic polynomial det(tI - A), coefficients from t^n down to t^0.
/// Faddeev-LeVerrier; every division by k is exact over the integers.
inline std::vector<std::int64_t> characteristic_polynomial(const IntMatrix& a) {
  if (!a.square()) throw ArgumentError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    IntMatrix am = a * next;
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    if (tr % static_cast<std::int64_t>(k) != 0) {
      throw IntegrityError("characteristic polynomial: inexact division");
    }
    c[k] = -tr / static_cast<std::int64_t>(k);
    m = std::move(next);
  }
  return c;
}

inline std::int64_t evaluate(const std::vector<std::int64_t>& coeffs_high_first, std::int64_t t) {
  std::int64_t v = 0;
  for (auto c : coeffs_high_first) v = v * t + c;
  return v;
}

/// Byte-level hash of a matrix over a trivially copyable scalar type.
template <class T>
struct MatrixHash {
  std::size_t operator()(const Matrix<T>& m) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const T& x : m.data()) {
      unsigned char buf[sizeof(T)];
      std::memcpy(buf, &x, sizeof(T));
      for (unsigned char b : buf) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace lie8
