// Strata of PSp4(F_q) indexed by the classes of W(B2).
//   demo_sp4_strata [q]     q = 3 (default) or 5

#include <cstdio>
#include <cstdlib>

#include "lie8/strata.hpp"

int main(int argc, char** argv) {
  const unsigned q = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 3;
  lie8::sp4::FiniteModel m(q);
  auto r = lie8::sp4::stratum_map(m);
  std::printf("|G| = %zu, %zu classes\n", m.order(), m.classes().size());
  for (const auto& s : r.strata) {
    std::printf("%-5s l_min %d  delta %d  boxed:", s.label.c_str(), s.min_length, s.delta);
    for (auto c : s.boxed) std::printf(" %u", c);
    std::printf("  (%llu elements)\n", static_cast<unsigned long long>(s.boxed_size));
  }
  std::printf("cover %s, equal or disjoint %s\n", r.theorem.cover ? "yes" : "no",
              r.theorem.equal_or_disjoint ? "yes" : "no");
}
