#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <unordered_set>
#include <vector>

#include "lie8/errors.hpp"
#include "lie8/matrix.hpp"
#include "lie8/root_system.hpp"

namespace lie8 {

/// The module M with basis X_a (a in R) followed by t_i (i in I).
///
/// X_a sits at the canonical root index of a, t_i at |R| + i, so the span of
/// the first |R+| basis vectors is M+. Non-owning: the root system must
/// outlive the module.
class AdjointModule {
 public:
  explicit AdjointModule(const RootSystem& rs) : rs_(&rs) {
    if (!rs.simply_laced()) {
      throw UnsupportedError("adjoint module: type " + rs.name() +
                             " is not simply laced; the operators E_{i,e} are defined for ADE "
                             "types only");
    }
  }

  const RootSystem& system() const { return *rs_; }
  std::size_t dim() const { return rs_->size() + rs_->rank(); }
  std::size_t dim_positive() const { return rs_->num_positive(); }
  std::size_t x_index(std::size_t root) const { return root; }
  std::size_t t_index(int i) const { return rs_->size() + static_cast<std::size_t>(i); }
  bool is_x(std::size_t basis) const { return basis < rs_->size(); }

 private:
  const RootSystem* rs_;
};

inline AdjointModule build_module(const RootSystem& rs) { return AdjointModule(rs); }

/// Exact integer matrix of E_{i,e} on M; column c is the image of basis c.
struct AdjointOperator {
  IntMatrix matrix;
  int vertex = 0;
  int sign = 1;
};

/// E_{i,e}:  X_a -> X_{a + e a_i}  when a + e a_i is a root,
///           X_{-e a_i} -> t_i,
///           X_a -> 0              otherwise,
///           t_j -> |(a_i, a_j)| X_{e a_i}.
inline AdjointOperator build_E(const AdjointModule& m, int i, int eps) {
  const auto& rs = m.system();
  if (i < 0 || i >= rs.rank()) throw ArgumentError("build_E: vertex out of range");
  if (eps != 1 && eps != -1) throw ArgumentError("build_E: sign must be +1 or -1");
  AdjointOperator op{IntMatrix(m.dim(), m.dim()), i, eps};
  const std::size_t ai = rs.simple(i);
  const std::size_t e_ai = eps == 1 ? ai : rs.negate(ai);
  const std::size_t minus_e_ai = rs.negate(e_ai);
  const int n = rs.rank();
  Coords target(n);
  for (std::size_t a = 0; a < rs.size(); ++a) {
    if (a == minus_e_ai) {
      op.matrix(m.t_index(i), m.x_index(a)) = 1;
      continue;
    }
    auto r = rs.root(a);
    for (int k = 0; k < n; ++k) target[k] = r[k];
    target[i] = static_cast<Coord>(target[i] + eps);
    if (auto b = rs.find(target)) op.matrix(m.x_index(*b), m.x_index(a)) = 1;
  }
  for (int j = 0; j < n; ++j) {
    op.matrix(m.x_index(e_ai), m.t_index(j)) = std::llabs(rs.datum().at(i, j));
  }
  return op;
}

/// E^2 / 2 by exact halving; throws IntegrityError if E^3 != 0 or some entry
/// of E^2 is odd.
inline IntMatrix divided_square(const AdjointOperator& e) {
  IntMatrix e2 = e.matrix * e.matrix;
  if (!(e2 * e.matrix).is_zero()) {
    throw IntegrityError("E_{" + std::to_string(e.vertex) + "," + std::to_string(e.sign) +
                         "} is not nilpotent of order 3");
  }
  for (std::size_t r = 0; r < e2.rows(); ++r) {
    for (std::size_t c = 0; c < e2.cols(); ++c) {
      if (e2(r, c) % 2 != 0) {
        throw IntegrityError("E^2 has an odd entry at (" + std::to_string(r) + ", " +
                             std::to_string(c) + ")");
      }
      e2(r, c) /= 2;
    }
  }
  return e2;
}

/// exp(l E) = I + l E + l^2 (E^2 / 2), with E^2 / 2 formed over the integers
/// before it is mapped into the scalar ring S. Valid in every characteristic,
/// including 2.
template <class S>
Matrix<S> exp_unipotent(const AdjointOperator& e, S lambda) {
  const IntMatrix half = divided_square(e);
  auto to_s = [](std::int64_t x) { return S(x); };
  Matrix<S> out = Matrix<S>::identity(e.matrix.rows());
  out = out + lambda * e.matrix.map(to_s);
  out = out + (lambda * lambda) * half.map(to_s);
  return out;
}

struct Sl2Diagnostic {
  int vertex = 0;
  std::vector<std::int64_t> x_weights;  // H_i X_a = x_weights[a] X_a
};

/// Checks H_i = [E_{i,1}, E_{i,-1}] acts by (a, a_i) on X_a and by 0 on t_j.
inline Sl2Diagnostic sl2_check(const AdjointModule& m, int i) {
  const auto& rs = m.system();
  auto up = build_E(m, i, 1);
  auto down = build_E(m, i, -1);
  IntMatrix h = up.matrix * down.matrix - down.matrix * up.matrix;
  Sl2Diagnostic d{i, {}};
  const std::size_t ai = rs.simple(i);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    std::int64_t expected = 0;
    if (m.is_x(c)) expected = rs.bilinear(rs.root(c), rs.root(ai));
    for (std::size_t r = 0; r < m.dim(); ++r) {
      std::int64_t want = r == c ? expected : 0;
      if (h(r, c) != want) {
        std::string what = m.is_x(c) ? "X_{root " + std::to_string(c) + "}"
                                     : "t_" + std::to_string(c - rs.size());
        throw IntegrityError("sl2 check failed for vertex " + std::to_string(i) + " on " + what);
      }
    }
    if (m.is_x(c)) d.x_weights.push_back(expected);
  }
  return d;
}

/// Checks [E_{i,1}, E_{j,1}] = 0 for vertices with (a_i, a_j) = 0.
inline void commuting_check(const AdjointModule& m, int i, int j) {
  const auto& rs = m.system();
  if (rs.datum().at(i, j) != 0) {
    throw ArgumentError("commuting_check: vertices " + std::to_string(i) + " and " +
                        std::to_string(j) + " are joined");
  }
  auto a = build_E(m, i, 1).matrix;
  auto b = build_E(m, j, 1).matrix;
  IntMatrix c = a * b - b * a;
  for (std::size_t col = 0; col < c.cols(); ++col) {
    for (std::size_t r = 0; r < c.rows(); ++r) {
      if (c(r, col) != 0) {
        throw IntegrityError("E_{" + std::to_string(i) + ",1} and E_{" + std::to_string(j) +
                             ",1} do not commute on basis vector " + std::to_string(col));
      }
    }
  }
}

/// True iff the operator maps span{X_a : a in R+} into itself.
inline bool stabilizes_Mplus(const AdjointModule& m, const IntMatrix& op) {
  const std::size_t np = m.dim_positive();
  for (std::size_t c = 0; c < np; ++c) {
    for (std::size_t r = np; r < op.rows(); ++r) {
      if (op(r, c) != 0) return false;
    }
  }
  return true;
}

inline constexpr std::uint64_t kDefaultClosureCap = 200'000;

/// |<exp(l E_{i,e}) : i in I, e = +-1, l in F_P^*>| by breadth-first closure
/// under right multiplication.
template <std::uint32_t P>
std::uint64_t chevalley_group_closure(const AdjointModule& m,
                                      std::uint64_t cap = kDefaultClosureCap) {
  using F = Fp<P>;
  using Mat = Matrix<F>;
  std::vector<Mat> gens;
  for (int i = 0; i < m.system().rank(); ++i) {
    for (int eps : {1, -1}) {
      auto e = build_E(m, i, eps);
      for (std::uint32_t l = 1; l < P; ++l) gens.push_back(exp_unipotent<F>(e, F(l)));
    }
  }
  std::unordered_set<Mat, MatrixHash<F>> seen;
  std::vector<Mat> frontier{Mat::identity(m.dim())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        Mat y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw ResourceError("Chevalley closure over F_" + std::to_string(P) + " for " +
                                m.system().name() + " exceeded cap " + std::to_string(cap) +
                                " (partial count " + std::to_string(seen.size()) + ")");
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Runtime dispatch over the supported primes 2, 3, 5, 7.
inline std::uint64_t chevalley_group_order(const AdjointModule& m, std::uint32_t p,
                                           std::uint64_t cap = kDefaultClosureCap) {
  switch (p) {
    case 2: return chevalley_group_closure<2>(m, cap);
    case 3: return chevalley_group_closure<3>(m, cap);
    case 5: return chevalley_group_closure<5>(m, cap);
    case 7: return chevalley_group_closure<7>(m, cap);
    default:
      throw ArgumentError("chevalley closure: prime must be one of 2, 3, 5, 7");
  }
}

}  // namespace lie8
