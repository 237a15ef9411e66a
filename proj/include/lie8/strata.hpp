#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lie8/cartan.hpp"
#include "lie8/errors.hpp"
#include "lie8/flags.hpp"
#include "lie8/root_system.hpp"
#include "lie8/sp4.hpp"
#include "lie8/weyl_classes.hpp"

namespace lie8::sp4 {

/// dim sp4 = dim so5.
inline constexpr int kGroupDimension = 10;

inline S4Perm compose(const S4Perm& a, const S4Perm& b) {
  return {a[b[0]], a[b[1]], a[b[2]], a[b[3]]};
}

/// W(B2) and its image in the permutations of e1..e4.
///
/// Convention: s1 (short root) acts as the middle transposition (e2 e3) and
/// s2 (long root) as the product of outer transpositions (e1 e2)(e3 e4).
/// Under SO5 = Sp4 / {+-1} the short root of B2 is the long root 2 eps_2 of
/// C2, hence the middle swap.
class B2Weyl {
 public:
  static constexpr S4Perm kS1{0, 2, 1, 3};
  static constexpr S4Perm kS2{1, 0, 3, 2};

  B2Weyl()
      : rs_(std::make_unique<RootSystem>(RootSystem::build(type_B2()))),
        part_(std::make_unique<ClassPartition>(conjugacy_partition(*rs_))) {
    const auto& t = part_->table;
    const std::array<S4Perm, 2> sigma{kS1, kS2};
    image_.assign(t.size(), S4Perm{});
    std::vector<bool> set(t.size(), false);
    const std::size_t e = t.index_of(WeylElement::identity(*rs_));
    image_[e] = {0, 1, 2, 3};
    set[e] = true;
    std::vector<std::size_t> queue{e};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const std::size_t x = queue[k];
      for (int i = 0; i < 2; ++i) {
        const std::size_t y = t.index_of(t[x] * t.generators()[i]);
        const S4Perm img = compose(image_[x], sigma[i]);
        if (!set[y]) {
          image_[y] = img;
          set[y] = true;
          queue.push_back(y);
        } else if (image_[y] != img) {
          throw IntegrityError("W(B2) -> S4 identification is not a homomorphism");
        }
      }
    }
    by_packed_.fill(-1);
    for (std::size_t w = 0; w < t.size(); ++w) {
      auto& slot = by_packed_[FlagSpace::pack_perm(image_[w])];
      if (slot >= 0) throw IntegrityError("W(B2) -> S4 identification is not injective");
      slot = static_cast<std::int16_t>(w);
    }
  }

  const RootSystem& system() const { return *rs_; }
  const WeylGroupTable& table() const { return part_->table; }
  const ClassPartition& partition() const { return *part_; }
  std::size_t size() const { return image_.size(); }
  const S4Perm& image(std::size_t w) const { return image_[w]; }

  /// Element of W(B2) with the given image; throws if outside the image.
  std::size_t element_of_packed(std::uint8_t packed) const {
    const int w = by_packed_[packed];
    if (w < 0) {
      const S4Perm p = FlagSpace::unpack_perm(packed);
      throw IntegrityError("relative position [" + std::to_string(p[0]) + "," +
                           std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
                           std::to_string(p[3]) + "] lies outside W(B2)");
    }
    return static_cast<std::size_t>(w);
  }
  std::size_t element_of(const S4Perm& p) const { return element_of_packed(FlagSpace::pack_perm(p)); }

  std::size_t index_of_word(std::initializer_list<int> word) const {
    std::vector<int> v(word);
    return table().index_of(from_word(*rs_, v));
  }

  /// "{1}", "C4", "C4^2", "C'" (class of s1) or "C''" (class of s2).
  std::string label(std::size_t weyl_class) const {
    const auto& p = *part_;
    const auto& t = p.table;
    auto cls = [&](const WeylElement& w) { return p.class_of[t.index_of(w)]; };
    if (cls(WeylElement::identity(*rs_)) == weyl_class) return "{1}";
    if (cls(longest_element(*rs_)) == weyl_class) return "C4^2";
    if (cls(simple_reflection(*rs_, 0)) == weyl_class) return "C'";
    if (cls(simple_reflection(*rs_, 1)) == weyl_class) return "C''";
    if (p.classes[weyl_class].order == 4) return "C4";
    throw IntegrityError("unexpected conjugacy class of W(B2)");
  }

 private:
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<ClassPartition> part_;
  std::vector<S4Perm> image_;
  std::array<std::int16_t, 256> by_packed_{};
};

/// Monomial symplectic lift of a simple reflection, with the permutation
/// given by the B2Weyl convention.
inline Mat4 weyl_lift(int i, const PrimeField& f) {
  Mat4 g{};
  if (i == 0) {
    g[0 * 4 + 0] = 1;
    g[2 * 4 + 1] = 1;           // e2 -> e3
    g[1 * 4 + 2] = f.neg(1);    // e3 -> -e2
    g[3 * 4 + 3] = 1;
  } else if (i == 1) {
    const S4Perm& s = B2Weyl::kS2;
    for (int j = 0; j < 4; ++j) g[s[j] * 4 + j] = 1;
  } else {
    throw ArgumentError("weyl_lift: vertex must be 0 or 1");
  }
  return g;
}

/// Ranks of (g - I)^k and (g + I)^k for k = 1..4.
using JordanProfile = std::array<int, 8>;

inline int mat_rank(const Mat4& m, const PrimeField& f) {
  std::array<Vec4, 4> rows;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) rows[r][c] = m[r * 4 + c];
  }
  return span_rank(rows.data(), 4, f);
}

inline JordanProfile jordan_profile(const Mat4& g, const PrimeField& f) {
  JordanProfile p{};
  const Mat4 id = identity();
  const Mat4 nm = sub(g, id, f);
  const Mat4 np = sub(g, negate(id, f), f);
  Mat4 a = nm, b = np;
  for (int k = 0; k < 4; ++k) {
    p[k] = mat_rank(a, f);
    p[4 + k] = mat_rank(b, f);
    a = mul(a, nm, f);
    b = mul(b, np, f);
  }
  return p;
}

/// Field-independent label of a coset {g, -g} whose eigenvalues are all +-1:
/// the smaller Jordan profile over the two lifts. Empty otherwise.
inline std::optional<JordanProfile> sign_signature(const Mat4& g, const PrimeField& f) {
  JordanProfile p = jordan_profile(g, f);
  if (p[3] + p[7] != 4) return std::nullopt;  // generalised eigenspaces of +-1 fill V
  if (f.q() == 2) return p;
  JordanProfile swapped;
  for (int k = 0; k < 4; ++k) {
    swapped[k] = p[4 + k];
    swapped[4 + k] = p[k];
  }
  return std::min(p, swapped);
}

/// Monic irreducible polynomials over F_q of degree 1..4, coefficients of
/// t^d first.
inline std::vector<std::vector<std::uint8_t>> irreducible_polynomials(const PrimeField& f) {
  const unsigned q = f.q();
  auto monic = [&](int d) {
    std::vector<std::vector<std::uint8_t>> out;
    unsigned total = 1;
    for (int k = 0; k < d; ++k) total *= q;
    for (unsigned m = 0; m < total; ++m) {
      std::vector<std::uint8_t> p(d + 1);
      p[0] = 1;
      unsigned x = m;
      for (int k = d; k >= 1; --k) {
        p[k] = static_cast<std::uint8_t>(x % q);
        x /= q;
      }
      out.push_back(std::move(p));
    }
    return out;
  };
  auto times = [&](const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return c;
  };
  std::vector<std::vector<std::uint8_t>> all;
  for (int d = 1; d <= 4; ++d) {
    std::set<std::vector<std::uint8_t>> reducible;
    for (int e = 1; e <= d / 2; ++e) {
      for (const auto& a : monic(e)) {
        for (const auto& b : monic(d - e)) reducible.insert(times(a, b));
      }
    }
    for (auto& p : monic(d)) {
      if (!reducible.count(p)) {
        all.push_back(p);
      }
    }
  }
  return all;
}

/// Invariant of g under GL4(F_q)-similarity: for each irreducible factor p of
/// the characteristic polynomial, p and the ranks of p(g)^k, k = 1..4.
using SimilarityInvariant = std::vector<std::vector<std::uint8_t>>;

inline SimilarityInvariant similarity_invariant(
    const Mat4& g, const PrimeField& f, const std::vector<std::vector<std::uint8_t>>& irreducibles) {
  SimilarityInvariant out;
  for (const auto& p : irreducibles) {
    Mat4 v{};  // Horner: p(g)
    for (auto c : p) {
      v = mul(v, g, f);
      for (int k = 0; k < 4; ++k) v[k * 5] = f.add(v[k * 5], c);
    }
    if (mat_rank(v, f) == 4) continue;
    std::vector<std::uint8_t> entry = p;
    Mat4 x = v;
    for (int k = 0; k < 4; ++k) {
      entry.push_back(static_cast<std::uint8_t>(mat_rank(x, f)));
      x = mul(x, v, f);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

struct GroupClass {
  std::uint64_t rep = 0;  // smallest canonical key in the class
  std::uint64_t size = 0;
  std::uint32_t order = 1;  // in the quotient
  bool unipotent = false;   // some lift has (g - I)^4 = 0
  std::optional<int> dimension;
  std::array<std::uint8_t, 5> charpoly{};  // of the lift unpack(rep)
  std::uint8_t realized = 0;  // bit w set iff relpos(F, gF) = w for some flag F
  std::uint8_t realized_geometric = 0;  // union of `realized` over the geometric class
  std::uint32_t geometric = 0;          // id of the geometric class
  std::optional<JordanProfile> signature;
};

/// The central quotient Sp4(F_q) / {+-1} (Sp4(F_2) itself for q = 2) with its
/// conjugacy classes, flags and W(B2).
///
/// Rational classes are grouped into geometric classes: two cosets {g, -g}
/// are conjugate over the algebraic closure iff g is GL4-similar to g' or
/// to -g'. G_w over the algebraic closure is a union of geometric classes,
/// so a rational class lies in it as soon as some rational class of the
/// same geometric class has a rational flag F with relpos(F, gF) = w; this
/// is `realized_geometric`. Rational flags alone (`realized`) can miss a
/// rational form of a class.
class FiniteModel {
 public:
  explicit FiniteModel(unsigned q) : f_(q), quotient_(quotient_group(q)), flags_(q) {
    partition();
    const auto irr = irreducible_polynomials(f_);
    std::map<SimilarityInvariant, std::uint32_t> geo;
    for (auto& c : classes_) {
      const Mat4 g = unpack(c.rep);
      c.order = quotient_order(g);
      c.unipotent = is_unipotent(g, f_) || (q != 2 && is_unipotent(negate(g, f_), f_));
      if (q % 2 == 1) c.dimension = class_dimension(g, f_);
      c.charpoly = charpoly(g, f_);
      c.realized = realized_mask(g);
      c.signature = sign_signature(g, f_);
      SimilarityInvariant inv = similarity_invariant(g, f_, irr);
      if (q != 2) inv = std::min(inv, similarity_invariant(negate(g, f_), f_, irr));
      c.geometric = geo.emplace(std::move(inv), static_cast<std::uint32_t>(geo.size())).first->second;
    }
    geometric_count_ = geo.size();
    std::vector<std::uint8_t> masks(geometric_count_, 0);
    for (const auto& c : classes_) masks[c.geometric] |= c.realized;
    for (auto& c : classes_) {
      c.realized_geometric = masks[c.geometric];
      const auto& first = classes_[first_in_geometric(c.geometric)];
      if (c.dimension != first.dimension || c.unipotent != first.unipotent) {
        throw IntegrityError("rational classes of one geometric class disagree on dimension");
      }
    }
  }

  std::size_t geometric_count() const { return geometric_count_; }

  unsigned q() const { return f_.q(); }
  const PrimeField& field() const { return f_; }
  const Quotient& quotient() const { return quotient_; }
  std::size_t order() const { return quotient_.keys.size(); }
  const std::vector<GroupClass>& classes() const { return classes_; }
  std::uint32_t class_of(std::size_t element) const { return class_of_[element]; }
  std::uint32_t class_of_key(std::uint64_t key) const {
    return class_of_[index_of(quotient_.keys, key)];
  }
  const FlagSpace& flags() const { return flags_; }
  const B2Weyl& weyl() const { return weyl_; }

  /// Bit mask over W(B2) indices of {relpos(F, gF) : F a flag}.
  std::uint8_t realized_mask(const Mat4& g) const {
    std::uint8_t mask = 0;
    for (std::size_t k = 0; k < flags_.size(); ++k) {
      const std::uint32_t j = flags_.image(g, k);
      mask |= static_cast<std::uint8_t>(1u << weyl_.element_of_packed(flags_.relpos_packed(k, j)));
    }
    return mask;
  }

  std::uint32_t first_in_geometric(std::uint32_t gid) const {
    for (std::uint32_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c].geometric == gid) return c;
    }
    throw ArgumentError("no such geometric class");
  }

  /// Smallest k >= 1 with g^k = +-I (g^k = I for q = 2).
  std::uint32_t quotient_order(const Mat4& g) const {
    const Mat4 id = identity();
    const Mat4 mid = negate(id, f_);
    Mat4 x = g;
    for (std::uint32_t k = 1; k <= 10000; ++k) {
      if (x == id || x == mid) return k;
      x = mul(x, g, f_);
    }
    throw IntegrityError("element order exceeds 10000");
  }

 private:
  void partition() {
    const auto gens = generators(f_);
    std::vector<Mat4> invs;
    for (const auto& s : gens) invs.push_back(inverse(s, f_));
    const auto& keys = quotient_.keys;
    const KeyIndex index(keys);
    constexpr std::uint32_t kUnset = 0xffffffffu;
    std::vector<std::uint32_t> raw(keys.size(), kUnset);
    std::vector<GroupClass> found;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < keys.size(); ++start) {
      if (raw[start] != kUnset) continue;
      const auto cid = static_cast<std::uint32_t>(found.size());
      GroupClass c;
      c.rep = keys[start];
      raw[start] = cid;
      stack.assign(1, start);
      std::uint64_t size = 1;
      while (!stack.empty()) {
        const Mat4 x = unpack(keys[stack.back()]);
        stack.pop_back();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          const std::size_t y = index.at(canonical(mul(mul(gens[k], x, f_), invs[k], f_), f_));
          if (raw[y] == kUnset) {
            raw[y] = cid;
            ++size;
            stack.push_back(y);
          }
        }
      }
      c.size = size;
      c.order = quotient_order(unpack(c.rep));
      found.push_back(c);
    }
    std::vector<std::uint32_t> perm(found.size());
    for (std::uint32_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
      const auto& x = found[a];
      const auto& y = found[b];
      if (x.order != y.order) return x.order < y.order;
      if (x.size != y.size) return x.size < y.size;
      return x.rep < y.rep;
    });
    std::vector<std::uint32_t> renumber(found.size());
    for (std::uint32_t k = 0; k < perm.size(); ++k) {
      renumber[perm[k]] = k;
      classes_.push_back(found[perm[k]]);
    }
    class_of_.resize(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) class_of_[x] = renumber[raw[x]];
  }

  PrimeField f_;
  Quotient quotient_;
  FlagSpace flags_;
  B2Weyl weyl_;
  std::vector<GroupClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::size_t geometric_count_ = 0;
};

/// G_w as a set of class ids; `geometric` selects the saturated masks.
inline std::vector<std::uint32_t> g_w_classes(const FiniteModel& m, std::size_t w,
                                              bool geometric = true) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < m.classes().size(); ++c) {
    const auto& gc = m.classes()[c];
    if ((geometric ? gc.realized_geometric : gc.realized) >> w & 1u) out.push_back(c);
  }
  return out;
}

/// Key of some element whose realized mask differs from that of its class
/// representative, scanning the whole group; empty when G_w is a union of
/// classes for every w.
inline std::optional<std::uint64_t> first_unstable_element(const FiniteModel& m) {
  const auto& keys = m.quotient().keys;
  for (std::size_t x = 0; x < keys.size(); ++x) {
    if (m.realized_mask(unpack(keys[x])) != m.classes()[m.class_of(x)].realized) return keys[x];
  }
  return std::nullopt;
}

struct StratumRecord {
  std::size_t weyl_class = 0;
  std::string label;
  Fingerprint fingerprint;
  int min_length = 0;
  bool elliptic = false;
  std::uint64_t weyl_order = 1;
  std::vector<std::size_t> cmin;  // W(B2) table indices
  std::size_t chosen = 0;         // the w defining G_C
  bool well_defined = true;       // G_w equal for all w in C_min
  std::vector<std::uint32_t> members;  // G_C
  std::uint64_t members_size = 0;
  int delta = 0;
  std::vector<std::uint32_t> boxed;
  std::uint64_t boxed_size = 0;
  std::size_t unipotent_raw = 0;     // unipotent classes in the boxed set
  std::size_t unipotent_merged = 0;  // same, merged by (dimension, charpoly)
};

struct TheoremReport {
  bool nonempty = true;           // G_C != empty for all C
  bool well_defined = true;       // independence of w in C_min
  bool cover = true;              // (a)
  bool equal_or_disjoint = true;  // (b)
  bool unipotent_raw_single = true;     // (c), rational classes
  bool unipotent_merged_single = true;  // (c), merged estimate
  bool elliptic_delta = true;           // (d), delta = 10 - l(w)
  bool elliptic_unipotent_single = true;  // (d), merged estimate
  std::size_t distinct_strata = 0;
  std::vector<std::string> counterexamples;
  // The same construction with rational flags only, without saturation.
  bool cover_rational_flags = true;
  std::vector<std::uint32_t> uncovered_rational;
};

struct StrataReport {
  unsigned q = 0;
  std::uint64_t group_order = 0;
  std::vector<StratumRecord> strata;  // in W(B2) class order
  TheoremReport theorem;
};

namespace detail {

inline std::vector<std::uint32_t> unipotent_among(const FiniteModel& m,
                                                  const std::vector<std::uint32_t>& ids) {
  std::vector<std::uint32_t> out;
  for (auto c : ids) {
    if (m.classes()[c].unipotent) out.push_back(c);
  }
  return out;
}

// Unipotent classes are compared through their unipotent lift, so that the
// merged estimate does not depend on which of g, -g the key picked.
inline std::size_t merged_unipotent_count(const FiniteModel& m,
                                          const std::vector<std::uint32_t>& ids) {
  std::set<int> dims;
  for (auto c : ids) dims.insert(m.classes()[c].dimension.value_or(-1));
  return dims.size();
}

}  // namespace detail

/// Strata of the finite model, one record per conjugacy class of W(B2), with
/// the properties of the boxed sets checked over the whole group. Odd q only.
inline StrataReport stratum_map(const FiniteModel& m, bool geometric = true);

namespace detail {

inline std::vector<std::uint32_t> uncovered(const FiniteModel& m, const StrataReport& r) {
  std::vector<bool> hit(m.classes().size(), false);
  for (const auto& s : r.strata) {
    for (auto c : s.boxed) hit[c] = true;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < hit.size(); ++c) {
    if (!hit[c]) out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline StrataReport stratum_map(const FiniteModel& m, bool geometric) {
  if (m.q() % 2 == 0) {
    throw UnsupportedError("strata need class dimensions, which are not available for q = 2");
  }
  const auto& part = m.weyl().partition();
  StrataReport rep;
  rep.q = m.q();
  rep.group_order = m.order();
  auto& th = rep.theorem;

  for (std::size_t ci = 0; ci < part.classes.size(); ++ci) {
    const auto& wc = part.classes[ci];
    StratumRecord s;
    s.weyl_class = ci;
    s.label = m.weyl().label(ci);
    s.fingerprint = wc.fingerprint;
    s.min_length = wc.min_length;
    s.elliptic = wc.elliptic;
    s.weyl_order = wc.order;
    for (const auto& w : wc.minimal_elements) s.cmin.push_back(part.table.index_of(w));
    std::sort(s.cmin.begin(), s.cmin.end());
    s.chosen = s.cmin.front();
    s.members = g_w_classes(m, s.chosen, geometric);
    for (std::size_t k = 1; k < s.cmin.size(); ++k) {
      if (g_w_classes(m, s.cmin[k], geometric) != s.members) {
        s.well_defined = false;
        th.well_defined = false;
        th.counterexamples.push_back("G_w differs across C_min of " + s.label);
      }
    }
    if (s.members.empty()) {
      th.nonempty = false;
      th.counterexamples.push_back("G_C is empty for " + s.label);
      rep.strata.push_back(std::move(s));
      continue;
    }
    s.delta = kGroupDimension;
    for (auto c : s.members) {
      s.members_size += m.classes()[c].size;
      s.delta = std::min(s.delta, *m.classes()[c].dimension);
    }
    for (auto c : s.members) {
      if (*m.classes()[c].dimension == s.delta) {
        s.boxed.push_back(c);
        s.boxed_size += m.classes()[c].size;
      }
    }
    auto un = detail::unipotent_among(m, s.boxed);
    s.unipotent_raw = un.size();
    s.unipotent_merged = detail::merged_unipotent_count(m, un);
    if (s.unipotent_raw > 1) th.unipotent_raw_single = false;
    if (s.unipotent_merged > 1) {
      th.unipotent_merged_single = false;
      th.counterexamples.push_back("boxed set of " + s.label + " meets " +
                                   std::to_string(s.unipotent_merged) +
                                   " unipotent classes after merging");
    }
    if (s.elliptic) {
      if (s.delta != kGroupDimension - s.min_length) {
        th.elliptic_delta = false;
        th.counterexamples.push_back("delta of " + s.label + " is " + std::to_string(s.delta) +
                                     ", expected " +
                                     std::to_string(kGroupDimension - s.min_length));
      }
      if (s.unipotent_merged != 1) {
        th.elliptic_unipotent_single = false;
        th.counterexamples.push_back("boxed set of elliptic " + s.label + " meets " +
                                     std::to_string(s.unipotent_merged) + " unipotent classes");
      }
    }
    rep.strata.push_back(std::move(s));
  }

  std::vector<int> covered(m.classes().size(), 0);
  std::set<std::vector<std::uint32_t>> distinct;
  for (const auto& s : rep.strata) {
    if (!s.members.empty()) distinct.insert(s.boxed);
  }
  for (const auto& b : distinct) {
    for (auto c : b) ++covered[c];
  }
  th.distinct_strata = distinct.size();
  for (std::uint32_t c = 0; c < covered.size(); ++c) {
    if (covered[c] == 0) {
      th.cover = false;
      th.counterexamples.push_back("class " + std::to_string(c) + " lies in no boxed set");
    } else if (covered[c] > 1) {
      th.equal_or_disjoint = false;
      th.counterexamples.push_back("class " + std::to_string(c) + " lies in " +
                                   std::to_string(covered[c]) + " distinct boxed sets");
    }
  }
  if (geometric) {
    th.uncovered_rational = detail::uncovered(m, stratum_map(m, false));
    th.cover_rational_flags = th.uncovered_rational.empty();
  } else {
    th.uncovered_rational = detail::uncovered(m, rep);
    th.cover_rational_flags = th.uncovered_rational.empty();
  }
  return rep;
}

struct UnipotentReport {
  unsigned q = 0;
  std::vector<std::uint32_t> classes;  // unipotent class ids
  std::size_t raw = 0;
  std::size_t merged = 0;  // by (dimension, charpoly)
  std::vector<std::size_t> strata_containing;  // per unipotent class, distinct boxed sets
  bool each_in_one_stratum = true;
};

inline UnipotentReport unipotent_report(const FiniteModel& m, const StrataReport& s) {
  UnipotentReport r;
  r.q = m.q();
  for (std::uint32_t c = 0; c < m.classes().size(); ++c) {
    if (m.classes()[c].unipotent) r.classes.push_back(c);
  }
  r.raw = r.classes.size();
  r.merged = detail::merged_unipotent_count(m, r.classes);
  std::set<std::vector<std::uint32_t>> distinct;
  for (const auto& st : s.strata) {
    if (!st.members.empty()) distinct.insert(st.boxed);
  }
  for (auto c : r.classes) {
    std::size_t n = 0;
    for (const auto& b : distinct) n += std::binary_search(b.begin(), b.end(), c);
    r.strata_containing.push_back(n);
    if (n != 1) r.each_in_one_stratum = false;
  }
  return r;
}

struct DimensionMatch {
  JordanProfile signature{};
  std::vector<int> dims_a, dims_b;  // sorted, with repetition
  std::uint64_t size_a = 0, size_b = 0;  // total class sizes with this signature
  std::optional<double> growth_estimate;  // log(size_b / size_a) / log(q_b / q_a)
  bool consistent = true;
};

struct DimensionCrossCheck {
  unsigned q_a = 0, q_b = 0;
  std::vector<DimensionMatch> matches;
  bool consistent = true;
  std::vector<std::string> flags;
};

/// Compares class dimensions between two fields on the classes whose
/// eigenvalues are all +-1, matched by Jordan profile. The dimension sets
/// must agree. The growth of the class sizes gives a second, approximate
/// estimate; a deviation above 1 is flagged.
inline DimensionCrossCheck cross_check_dimensions(const FiniteModel& a, const FiniteModel& b) {
  if (a.q() % 2 == 0 || b.q() % 2 == 0 || a.q() == b.q()) {
    throw ArgumentError("cross_check_dimensions: need two distinct odd fields");
  }
  DimensionCrossCheck out;
  out.q_a = a.q();
  out.q_b = b.q();
  std::map<JordanProfile, DimensionMatch> by;
  for (const auto& c : a.classes()) {
    if (!c.signature) continue;
    auto& d = by[*c.signature];
    d.signature = *c.signature;
    d.dims_a.push_back(*c.dimension);
    d.size_a += c.size;
  }
  for (const auto& c : b.classes()) {
    if (!c.signature) continue;
    auto& d = by[*c.signature];
    d.signature = *c.signature;
    d.dims_b.push_back(*c.dimension);
    d.size_b += c.size;
  }
  for (auto& [sig, d] : by) {
    std::sort(d.dims_a.begin(), d.dims_a.end());
    std::sort(d.dims_b.begin(), d.dims_b.end());
    std::vector<int> ua = d.dims_a, ub = d.dims_b;
    ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
    ub.erase(std::unique(ub.begin(), ub.end()), ub.end());
    if (ua.empty() || ub.empty()) {
      out.flags.push_back("Jordan profile present over only one field");
      continue;
    }
    if (ua != ub) {
      d.consistent = false;
      out.consistent = false;
      out.flags.push_back("dimension sets differ for a matched Jordan profile");
    }
    if (ua.size() == 1) {
      d.growth_estimate = std::log(static_cast<double>(d.size_b) / static_cast<double>(d.size_a)) /
                          std::log(static_cast<double>(b.q()) / static_cast<double>(a.q()));
      if (std::abs(*d.growth_estimate - ua.front()) > 1.0) {
        out.flags.push_back("size growth suggests dimension " +
                            std::to_string(*d.growth_estimate) + " against " +
                            std::to_string(ua.front()));
      }
    }
    out.matches.push_back(std::move(d));
  }
  return out;
}

}  // namespace lie8::sp4
