// Runs every acceptance criterion (1-12) at its stated tolerance and time
// limit. One line per criterion; exit status 1 if any line is FAIL.
#include <cmath>
#include <cstdio>
#include <string>

#include "lie8/verify.hpp"

int main() {
  using lie8::verify::Criterion;
  int failures = 0;
  auto print = [&](const Criterion& c) {
    const bool ok = c.pass();
    failures += !ok;
    std::string why;
    if (c.correct && !c.within_limit()) why = " TIME LIMIT EXCEEDED";
    const std::string limit = std::isinf(c.limit) ? "no time limit" : "limit " + std::to_string(static_cast<int>(c.limit)) + " s";
    std::printf("[%s] criterion %2d (%s): %s [%.2f s, %s]%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.summary.c_str(), c.seconds, limit.c_str(), why.c_str());
    std::fflush(stdout);
  };
  lie8::verify::Options opt;
  lie8::verify::run_all(opt, print);
  std::printf("%s: %d criterion failure(s)\n", failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED", failures);
  return failures ? 1 : 0;
}
