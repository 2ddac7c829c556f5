// Acceptance runner: one criterion per argument (1..10), all when none.
// Each criterion maps onto a suite at its pinned size and prints one
// pass/fail line.
#include <chrono>
#include <cstdio>
#include <cstring>

#include "minorlab/suite.hpp"

using namespace minorlab;

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* what;
};

const Criterion kCriteria[] = {
    {1, "wing-equivalence", "build_wing1 agrees with the forbidden-minor oracle"},
    {2, "min-degree", "every outerplanar graph yields degree <= 2 witnesses"},
    {3, "trace-stability", "traces survive single-vertex peels in both senses"},
    {4, "constrained-coloring", "constrained 3-coloring passes the independent checker"},
    {5, "outer-two-colors", "outer vertices can take two colors; the solver finds it"},
    {6, "cycle-theorems", "twin-cycle and simple-cycle implications hold"},
    {7, "dirac-k4", "the constructive K4 witness validates on every chromatic-4 graph"},
    {8, "reduction-soundness", "reductions keep chi and clique-cut recombination colors properly"},
    {9, "boundary-claim", "a 4-coloring with a 3-colored boundary always exists"},
    {10, "determinism", "suite reports are byte-identical across re-runs"},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty())
    for (const auto& c : kCriteria) wanted.push_back(c.number);

  int bad = 0;
  for (int number : wanted) {
    const Criterion* crit = nullptr;
    for (const auto& c : kCriteria)
      if (c.number == number) crit = &c;
    if (!crit) {
      std::printf("FAIL criterion %d: unknown\n", number);
      ++bad;
      continue;
    }
    SuiteConfig cfg;  // pinned acceptance sizes
    if (const char* s = std::getenv("MINORLAB_NODE_BUDGET")) cfg.node_budget = std::atoll(s);
    auto t0 = std::chrono::steady_clock::now();
    auto report = run_suite(crit->suite, cfg);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = report.clean();
    if (!ok) ++bad;
    std::printf("%s criterion %d (%s): %ld passed, %ld failed, %ld unknown, %ld findings [%.1fs] — %s\n",
                ok ? "PASS" : "FAIL", number, crit->suite, report.passed, report.failed,
                report.unknown, report.findings, secs, crit->what);
    for (const auto& v : report.recorded)
      if (v.status != "info" || std::strstr(v.detail.c_str(), "engine") != nullptr)
        std::printf("    [%s] %s: %s\n", v.status.c_str(), v.item.c_str(), v.detail.c_str());
    std::fflush(stdout);
  }
  return bad == 0 ? 0 : 1;
}
