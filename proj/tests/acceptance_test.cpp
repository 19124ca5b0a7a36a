// Runs acceptance criteria 1-8 and prints one pass/fail line per criterion.
// Tolerances are exact throughout; time limits are pinned in the suite.

#include <cstdio>
#include <cstring>

#include "suite.hpp"

int main(int argc, char** argv) {
  sccay::suite::SuiteOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) options.tier = sccay::suite::Tier::kExtended;
    if (std::strcmp(argv[i], "--standard") == 0) options.tier = sccay::suite::Tier::kStandard;
  }
  std::printf("acceptance tier: %s, seed %llu\n", sccay::suite::to_string(options.tier).c_str(),
              static_cast<unsigned long long>(options.seed));
  int failures = 0;
  for (const auto& info : sccay::suite::criteria(options.tier)) {
    const auto result = sccay::suite::run_criterion(info.id, options);
    std::printf("%s\n", sccay::suite::format_line(result).c_str());
    for (const auto& line : result.checks) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    failures += !result.passed;
  }
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
