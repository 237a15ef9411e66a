#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lie8/errors.hpp"
#include "lie8/fq.hpp"

namespace lie8::sp4 {

/// 4x4 matrix over F_q, row-major, entries in [0, q).
using Mat4 = std::array<std::uint8_t, 16>;

/// The symplectic form: <e1,e4> = <e2,e3> = 1, <e3,e2> = <e4,e1> = -1.
inline Mat4 form(const PrimeField& f) {
  Mat4 j{};
  j[0 * 4 + 3] = 1;
  j[1 * 4 + 2] = 1;
  j[2 * 4 + 1] = f.neg(1);
  j[3 * 4 + 0] = f.neg(1);
  return j;
}

inline Mat4 identity() {
  Mat4 m{};
  for (int i = 0; i < 4; ++i) m[i * 4 + i] = 1;
  return m;
}

inline Mat4 mul(const Mat4& a, const Mat4& b, const PrimeField& f) {
  Mat4 c;
  const unsigned q = f.q();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      unsigned s = 0;
      for (int k = 0; k < 4; ++k) s += static_cast<unsigned>(a[i * 4 + k]) * b[k * 4 + j];
      c[i * 4 + j] = static_cast<std::uint8_t>(s % q);
    }
  }
  return c;
}

inline Mat4 transpose(const Mat4& a) {
  Mat4 t;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) t[j * 4 + i] = a[i * 4 + j];
  }
  return t;
}

inline Mat4 negate(const Mat4& a, const PrimeField& f) {
  Mat4 n;
  for (int k = 0; k < 16; ++k) n[k] = f.neg(a[k]);
  return n;
}

inline Mat4 sub(const Mat4& a, const Mat4& b, const PrimeField& f) {
  Mat4 c;
  for (int k = 0; k < 16; ++k) c[k] = f.sub(a[k], b[k]);
  return c;
}

inline bool is_symplectic(const Mat4& g, const PrimeField& f) {
  const Mat4 j = form(f);
  return mul(mul(transpose(g), j, f), g, f) == j;
}

/// g^{-1} = J^{-1} g^T J for symplectic g (J^{-1} = -J).
inline Mat4 inverse(const Mat4& g, const PrimeField& f) {
  const Mat4 j = form(f);
  return mul(mul(negate(j, f), transpose(g), f), j, f);
}

/// x -> x + <x, v> v.
inline Mat4 transvection(const std::array<std::uint8_t, 4>& v, const PrimeField& f) {
  const Mat4 j = form(f);
  // Row form of <x, v> = x^T J v: coefficient c_k = (J v)_k.
  std::array<std::uint8_t, 4> jv{};
  for (int k = 0; k < 4; ++k) {
    unsigned s = 0;
    for (int l = 0; l < 4; ++l) s += static_cast<unsigned>(j[k * 4 + l]) * v[l];
    jv[k] = static_cast<std::uint8_t>(s % f.q());
  }
  Mat4 t = identity();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) t[r * 4 + c] = f.add(t[r * 4 + c], f.mul(v[r], jv[c]));
  }
  return t;
}

/// Generators: symplectic transvections along e1, e2, e1 + e2, e3 and e4
/// (long-root elements). Five are needed: for q = 2 transvections are the
/// transpositions of Sp4(F_2) = S6.
inline std::vector<Mat4> generators(const PrimeField& f) {
  std::vector<std::array<std::uint8_t, 4>> dirs{
      {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::vector<Mat4> gens;
  for (const auto& v : dirs) gens.push_back(transvection(v, f));
  return gens;
}

/// 3 bits per entry, entry 0 in the most significant position, so numeric
/// order of keys is lexicographic order of entries.
inline std::uint64_t pack(const Mat4& m) {
  std::uint64_t k = 0;
  for (int i = 0; i < 16; ++i) k = (k << 3) | m[i];
  return k;
}

inline Mat4 unpack(std::uint64_t k) {
  Mat4 m;
  for (int i = 15; i >= 0; --i) {
    m[i] = static_cast<std::uint8_t>(k & 7u);
    k >>= 3;
  }
  return m;
}

/// Key of the coset {g, -g}: the lexicographically smaller member. For
/// q = 2 the centre is trivial and this is just pack(g).
inline std::uint64_t canonical(const Mat4& g, const PrimeField& f) {
  const std::uint64_t a = pack(g);
  if (f.q() == 2) return a;
  return std::min(a, pack(negate(g, f)));
}

/// Open-addressing set of nonzero 64-bit keys.
class KeySet {
 public:
  explicit KeySet(std::size_t expected = 1024) {
    std::size_t cap = 16;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, 0);
  }

  bool insert(std::uint64_t key) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    return place(key);
  }

  bool contains(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == key) return true;
      if (slots_[i] == 0) return false;
    }
  }

  std::size_t size() const { return count_; }

 private:
  static std::size_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }

  bool place(std::uint64_t key) {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i] == key) return false;
      if (slots_[i] == 0) {
        slots_[i] = key;
        ++count_;
        return true;
      }
    }
  }

  void grow() {
    std::vector<std::uint64_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, 0);
    count_ = 0;
    for (auto k : old) {
      if (k) place(k);
    }
  }

  std::vector<std::uint64_t> slots_;
  std::size_t count_ = 0;
};

/// Open-addressing map from the keys of a sorted list to their positions.
class KeyIndex {
 public:
  explicit KeyIndex(const std::vector<std::uint64_t>& keys) {
    std::size_t cap = 16;
    while (cap < keys.size() * 2) cap <<= 1;
    slots_.assign(cap, Slot{0, 0});
    for (std::size_t k = 0; k < keys.size(); ++k) {
      const std::size_t mask = cap - 1;
      std::size_t i = mix(keys[k]) & mask;
      while (slots_[i].key != 0) i = (i + 1) & mask;
      slots_[i] = Slot{keys[k], static_cast<std::uint32_t>(k)};
    }
  }

  std::uint32_t at(std::uint64_t key) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = mix(key) & mask;; i = (i + 1) & mask) {
      if (slots_[i].key == key) return slots_[i].pos;
      if (slots_[i].key == 0) throw ArgumentError("element not in the group");
    }
  }

 private:
  struct Slot {
    std::uint64_t key;
    std::uint32_t pos;
  };
  static std::size_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
  std::vector<Slot> slots_;
};

/// q^4 (q^2 - 1)(q^4 - 1).
inline std::uint64_t sp4_order_formula(std::uint64_t q) {
  return q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
}

namespace detail {

// Breadth-first closure of the generators under right multiplication,
// with elements represented by key(g).
template <class KeyFn>
std::vector<std::uint64_t> closure(const PrimeField& f, KeyFn key, std::uint64_t expected) {
  const auto gens = generators(f);
  KeySet seen(expected);
  std::vector<std::uint64_t> elems;
  elems.reserve(expected);
  const std::uint64_t id = key(identity());
  seen.insert(id);
  elems.push_back(id);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const Mat4 x = unpack(elems[k]);
    for (const auto& s : gens) {
      const std::uint64_t y = key(mul(x, s, f));
      if (seen.insert(y)) elems.push_back(y);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace detail

/// All of Sp4(F_q) as sorted keys, by closure from the generators.
inline std::vector<std::uint64_t> sp4_group(unsigned q) {
  PrimeField f(q);
  return detail::closure(f, [](const Mat4& m) { return pack(m); }, sp4_order_formula(q));
}

struct Quotient {
  unsigned q = 0;
  std::vector<std::uint64_t> keys;  // sorted canonical keys
  bool centre_trivial = false;
  std::string warning;
};

/// Sp4(F_q) / {+-I} with canonical representatives. For q = 2 the centre is
/// trivial and the input is returned unchanged with a warning.
inline Quotient project_center(unsigned q, const std::vector<std::uint64_t>& group) {
  PrimeField f(q);
  Quotient out;
  out.q = q;
  if (q == 2) {
    out.keys = group;
    out.centre_trivial = true;
    out.warning = "centre of Sp4(F_2) is trivial; quotient is the group itself";
    return out;
  }
  for (auto k : group) {
    if (canonical(unpack(k), f) == k) out.keys.push_back(k);
  }
  return out;
}

/// The central quotient built directly by closure on canonical keys, without
/// materialising the full group first.
inline Quotient quotient_group(unsigned q) {
  if (q == 2) return project_center(2, sp4_group(2));
  PrimeField f(q);
  Quotient out;
  out.q = q;
  out.keys = detail::closure(f, [&f](const Mat4& m) { return canonical(m, f); },
                             sp4_order_formula(q) / 2);
  return out;
}

inline std::size_t index_of(const std::vector<std::uint64_t>& sorted_keys, std::uint64_t k) {
  auto it = std::lower_bound(sorted_keys.begin(), sorted_keys.end(), k);
  if (it == sorted_keys.end() || *it != k) throw ArgumentError("element not in the group");
  return static_cast<std::size_t>(it - sorted_keys.begin());
}

/// (g - I)^4 = 0.
inline bool is_unipotent(const Mat4& g, const PrimeField& f) {
  const Mat4 n = sub(g, identity(), f);
  const Mat4 n2 = mul(n, n, f);
  return mul(n2, n2, f) == Mat4{};
}

/// det(tI - g) mod q, coefficients of t^4 down to t^0.
inline std::array<std::uint8_t, 5> charpoly(const Mat4& g, const PrimeField& f) {
  auto a = [&](int i, int j) { return static_cast<long long>(g[i * 4 + j]); };
  auto det2 = [&](int i, int j) { return a(i, i) * a(j, j) - a(i, j) * a(j, i); };
  auto det3 = [&](int i, int j, int k) {
    return a(i, i) * (a(j, j) * a(k, k) - a(j, k) * a(k, j)) -
           a(i, j) * (a(j, i) * a(k, k) - a(j, k) * a(k, i)) +
           a(i, k) * (a(j, i) * a(k, j) - a(j, j) * a(k, i));
  };
  long long tr = a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
  long long m2 = 0, m3 = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) m2 += det2(i, j);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      for (int k = j + 1; k < 4; ++k) m3 += det3(i, j, k);
    }
  }
  long long det = 0;
  for (int c = 0; c < 4; ++c) {
    int r[3], k = 0;
    for (int x = 0; x < 4; ++x) {
      if (x != c) r[k++] = x;
    }
    // Expansion along row 0.
    long long minor = a(1, r[0]) * (a(2, r[1]) * a(3, r[2]) - a(2, r[2]) * a(3, r[1])) -
                      a(1, r[1]) * (a(2, r[0]) * a(3, r[2]) - a(2, r[2]) * a(3, r[0])) +
                      a(1, r[2]) * (a(2, r[0]) * a(3, r[1]) - a(2, r[1]) * a(3, r[0]));
    det += (c % 2 ? -1 : 1) * a(0, c) * minor;
  }
  return {1, f.from_int(-tr), f.from_int(m2), f.from_int(-m3), f.from_int(det)};
}

/// Basis of the Lie algebra sp4 = {X : X^T J + J X = 0} as 16-vectors.
inline std::vector<FqRow> lie_algebra_basis(const PrimeField& f) {
  const Mat4 j = form(f);
  std::vector<FqRow> eqs(16, FqRow(16, 0));
  // (X^T J + J X)_{rc} = sum_k X_{kr} J_{kc} + J_{rk} X_{kc}.
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      auto& row = eqs[r * 4 + c];
      for (int k = 0; k < 4; ++k) {
        row[k * 4 + r] = f.add(row[k * 4 + r], j[k * 4 + c]);
        row[k * 4 + c] = f.add(row[k * 4 + c], j[r * 4 + k]);
      }
    }
  }
  return nullspace(eqs, 16, f);
}

/// dim of the class of g: rank of Ad(g) - id on sp4, i.e. 10 minus the
/// dimension of the Lie centraliser. Only odd q; characteristic 2 is bad
/// for this type and the Lie-centraliser method does not apply.
inline int class_dimension(const Mat4& g, const PrimeField& f) {
  if (f.q() % 2 == 0) {
    throw UnsupportedError("class_dimension: characteristic 2 is not supported");
  }
  static thread_local std::vector<FqRow> basis;
  static thread_local unsigned basis_q = 0;
  if (basis_q != f.q()) {
    basis = lie_algebra_basis(f);
    basis_q = f.q();
  }
  const Mat4 gi = inverse(g, f);
  std::vector<FqRow> images;
  for (const auto& xv : basis) {
    Mat4 x;
    for (int k = 0; k < 16; ++k) x[k] = xv[k];
    Mat4 d = sub(mul(mul(g, x, f), gi, f), x, f);
    images.emplace_back(d.begin(), d.end());
  }
  return static_cast<int>(rank(images, f));
}

}  // namespace lie8::sp4
