/* SPDX-License-Identifier: Apache-2.0 */
// Runs every acceptance criterion once and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ipart/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  double limit_seconds;  // 0: no own limit
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  const Criterion criteria[] = {{1, "floor", 60},   {2, "transfer", 0}, {3, "vgs", 0},     {4, "isolation", 0},
                                {5, "arch", 0},     {6, "residue", 0},  {7, "escape", 0},  {8, "automorphism", 0},
                                {9, "epsilon", 0},  {10, "oracles", 0}};
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    const ipart::SuiteReport r = ipart::run_suite(c.suite, seed);
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    bool ok = r.ok() && !r.cases.empty();
    std::string note;
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      ok = false;
      note = " over the " + std::to_string(int(c.limit_seconds)) + " s limit";
    }
    if (c.number == 10) {
      // the criterion also bounds the whole run
      const double total = std::chrono::duration<double>(clock::now() - start).count();
      if (total >= 300) {
        ok = false;
        note += " full run took " + std::to_string(total) + " s";
      }
    }
    std::printf("criterion %2d %-12s %s  %zu/%zu cases  %.1f s%s\n", c.number, c.suite, ok ? "PASS" : "FAIL", r.passed(),
                r.cases.size(), secs, note.c_str());
    if (!ok)
      for (const auto& k : r.cases)
        if (!k.passed) {
          std::printf("    first failure: %s -> %s\n", k.input.c_str(), k.got.c_str());
          break;
        }
    std::fflush(stdout);
    all = all && ok;
  }
  const double total = std::chrono::duration<double>(clock::now() - start).count();
  std::printf("acceptance %s (seed %llu, %.1f s)\n", all ? "PASS" : "FAIL", static_cast<unsigned long long>(seed), total);
  return all ? 0 : 1;
}
