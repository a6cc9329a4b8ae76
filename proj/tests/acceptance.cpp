// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <cstdio>
#include <cstring>

#include "selftest.hpp"

int main(int argc, char** argv) {
  syzlab::SelftestOptions opts;
  opts.jobs = 4;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--skip-slow") == 0) opts.include_slow = false;

  auto results = syzlab::run_selftest(opts);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.pass ? "" : " ", r.pass ? "" : r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: some criteria FAILED");
  return all ? 0 : 1;
}
