// Acceptance run: one PASS/FAIL line per criterion, at the pinned sizes.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lrc/golden.hpp"
#include "lrc/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::string check;  // empty for the golden replay
  int size;
  double budget_seconds;  // 0 when the criterion sets no runtime target
};

bool report(const Criterion& c, bool ok, std::size_t instances, std::size_t failures, double seconds,
            const std::string& first_failure) {
  const bool in_budget = c.budget_seconds == 0 || seconds <= c.budget_seconds;
  const bool pass = ok && in_budget;
  const std::string budget = c.budget_seconds == 0 ? "" : " budget=" + std::to_string(int(c.budget_seconds)) + "s";
  std::printf("%s criterion %d (%s): instances=%zu failures=%zu time=%.2fs%s\n", pass ? "PASS" : "FAIL", c.number,
              c.title.c_str(), instances, failures, seconds, budget.c_str());
  if (!first_failure.empty()) std::printf("     first failure: %s\n", first_failure.c_str());
  if (!in_budget) std::printf("     over the runtime budget\n");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden examples", "", 0, 1},
      {2, "involution, |lambda| <= 8", "involution", 8, 120},
      {3, "commutor coincidence, |lambda| <= 8", "coincidence", 8, 0},
      {4, "switch strategy confluence, <= 8 cells, 20 random orders", "confluence", 8, 0},
      {5, "Knuth-equivalent order words, <= 7 cells, length <= 5", "order-words", 7, 0},
      {6, "skew RSK bijection, <= 6 cells per factor", "skew-rsk", 6, 0},
      {7, "bumping route geometry", "routes", 7, 0},
      {8, "LR rule against polynomial product, |mu|+|nu| <= 8", "lr-oracle", 8, 300},
      {9, "staged switching recursion, |lambda| <= 8", "recursion", 8, 0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (c.check.empty()) {
      const auto start = std::chrono::steady_clock::now();
      std::size_t assertions = 0, failures = 0;
      std::string first;
      bool ok = true;
      try {
        for (const auto& r : lrc::golden::run(lrc::golden::default_fixture_dir())) {
          assertions += r.assertions;
          failures += r.mismatches.size();
          if (!r.passed() && first.empty()) first = r.id + ": " + r.mismatches.front();
        }
        ok = failures == 0;
      } catch (const std::exception& e) {
        ok = false;
        first = e.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      failed += !report(c, ok, assertions, failures, secs, first);
      continue;
    }
    lrc::verify::Options opt;
    opt.max_size = c.size;
    opt.random_orders = 20;
    // The involution target is stated for one thread.
    if (c.check == "involution") opt.exec = lrc::verify::Exec::serial;
    const lrc::verify::Report r = lrc::verify::run_check(c.check, opt);
    std::string first;
    if (!r.failures.empty()) {
      const auto& f = r.failures.front();
      first = f.input + " expected " + f.expected + " got " + f.actual;
    }
    failed += !report(c, r.passed(), r.instances, r.failures.size(), r.seconds, first);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
