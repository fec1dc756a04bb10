// one line per acceptance criterion; nonzero exit if any fails

#include <chrono>
#include <cstdio>
#include <exception>

#include "fracleg/acceptance.hpp"

int main() {
  using namespace fracleg;
  int failed = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& criterion : acceptance::all_criteria()) {
    CriterionResult r;
    try {
      r = criterion();
    } catch (const std::exception& e) {
      r.name = std::string("uncaught exception: ") + e.what();
    }
    if (!r.passed) ++failed;
    std::printf("%s\n", acceptance::format_line(r).c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d of 11 criteria failed (%.1f s)\n", failed, secs);
  return failed ? 1 : 0;
}
