#include <cstdio>

#include "syvol/verify.hpp"

int main() {
  int failed = 0;
  for (const auto& r : syvol::verify::run_all()) {
    std::puts(syvol::verify::summary_line(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 9 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
