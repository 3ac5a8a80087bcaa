// Acceptance gate: every library-level guarantee at its full checked scale,
// one verdict line per property, nonzero exit on any failure.

#include <cstdio>

#include "quiverpath/verify.hpp"

int main() {
  quiverpath::verify::Options opts;
  opts.seed = 1;
  opts.jobs = 4;
  const std::vector<quiverpath::verify::PropertyResult> results =
      quiverpath::verify::run_all(opts);
  int failures = 0;
  for (const quiverpath::verify::PropertyResult& r : results) {
    if (r.pass) {
      std::printf("[PASS] %s (cases=%lld, %.1fs)\n", r.name.c_str(), r.cases,
                  r.seconds);
    } else {
      std::printf("[FAIL] %s: %s\n", r.name.c_str(), r.counterexample.c_str());
      ++failures;
    }
  }
  if (failures > 0) std::printf("%d of 9 properties failed\n", failures);
  return failures == 0 ? 0 : 1;
}
