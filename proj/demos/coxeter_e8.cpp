// Coxeter element of E8: order, length, characteristic polynomial, and the
// orders of a few of its powers.

#include <cstdio>

#include "lie8/weyl.hpp"

int main() {
  auto rs = lie8::RootSystem::build(lie8::type_E(8));
  auto c = lie8::coxeter_element(rs);
  std::printf("order %llu, length %d, elliptic %s\n", static_cast<unsigned long long>(lie8::element_order(c)),
              lie8::length(c), lie8::is_elliptic(c) ? "yes" : "no");

  auto fp = lie8::fingerprint(c);
  std::printf("charpoly:");
  for (auto a : fp.charpoly) std::printf(" %lld", static_cast<long long>(a));
  std::printf("\ncycles on roots:");
  for (auto [len, n] : fp.cycles) std::printf(" %ux%u", n, len);
  std::printf("\n");

  for (unsigned k : {6u, 10u, 15u}) {
    auto p = lie8::power(c, k);
    std::printf("c^%-2u order %llu, class min length %d\n", k,
                static_cast<unsigned long long>(lie8::element_order(p)), lie8::min_length_descent(p).min_length);
  }
}
