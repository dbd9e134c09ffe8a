// Runs every acceptance suite at the default bounds (m = n = 2, operator
// order <= 3, coefficient degree <= 3, 200 cases, seed 42) and prints one
// line per criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <eulerops/suites.hpp>

int main(int argc, char** argv) {
  eulerops::suites::SuiteConfig config;
  if (argc > 1) config.seed = std::strtoull(argv[1], nullptr, 10);

  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  int criterion = 0;
  for (const auto& suite : eulerops::suites::registry()) {
    ++criterion;
    const auto report = suite.run(config);
    std::printf("[%s] criterion %2d %-16s %5llu cases  %.3f s  %s\n", report.passed() ? "PASS" : "FAIL",
                criterion, report.name.c_str(), static_cast<unsigned long long>(report.cases_run),
                report.wall_seconds, report.title.c_str());
    for (const auto& f : report.failures) {
      std::printf("    %s\n      input:    %s\n      expected: %s\n      actual:   %s\n", f.check.c_str(),
                  f.input.c_str(), f.expected.c_str(), f.actual.c_str());
    }
    if (!report.passed()) ++failed;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%d criteria passed in %.3f s (seed %llu)\n", criterion - failed, criterion, total,
              static_cast<unsigned long long>(config.seed));
  return failed == 0 && total < 60.0 ? 0 : 1;
}
