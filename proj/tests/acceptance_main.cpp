// Acceptance runner. Each criterion prints a single [PASS]/[FAIL] line with
// wall-clock timing; the exit status is the number of failures. Time limits
// are part of the criteria and are asserted here, not just reported.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ordlab/adjacent.hpp"
#include "ordlab/ramsey.hpp"
#include "ordlab/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace ordlab;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Outcome {
  bool ok = true;
  std::string detail;  // first failure reason

  void require(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      detail = why;
    }
  }
};

void run_criterion(const std::string& name, double limit_seconds,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(Clock::now() - t0).count();
  out.require(elapsed < limit_seconds,
              "took " + std::to_string(elapsed) + "s, limit " +
                  std::to_string(limit_seconds) + "s");
  if (out.ok) {
    std::printf("[PASS] %-24s (%.2fs)\n", name.c_str(), elapsed);
  } else {
    ++g_failures;
    std::printf("[FAIL] %-24s (%.2fs) %s\n", name.c_str(), elapsed,
                out.detail.c_str());
  }
  std::fflush(stdout);
}

std::string suite_failure(const SuiteReport& r) {
  std::string msg = r.suite + ": " + std::to_string(r.violations) +
                    " violations over " + std::to_string(r.cases) + " cases";
  if (!r.violation_details.empty()) msg += "; first: " + r.violation_details[0];
  return msg;
}

// Independent smallest-witness scan for the staircase instance: over
// [m, R], (c+1)-color the singletons; a set H = {h_1 < ...} of one color is
// good when |H| >= k and |H| >= f(h_k). Plain bitmask enumeration.
std::optional<Nat> oracle_saph(Nat c, Nat k, Nat m, const EvalFn& f,
                               Nat r_max) {
  for (Nat R = m; R <= r_max; ++R) {
    const Nat n = R - m + 1;
    bool all_good = true;
    std::vector<std::uint32_t> col(n, 0);
    for (;;) {
      bool found = false;
      for (std::uint32_t color = 0; color <= c && !found; ++color) {
        std::vector<Nat> h;
        for (Nat i = 0; i < n; ++i)
          if (col[i] == color) h.push_back(m + i);
        if (h.size() >= k && h.size() >= f(h[k - 1])) found = true;
      }
      if (!found) {
        all_good = false;
        break;
      }
      std::size_t i = n;
      bool carried = true;
      while (i > 0) {
        --i;
        if (++col[i] <= c) {
          carried = false;
          break;
        }
        col[i] = 0;
      }
      if (carried) break;
    }
    if (all_good) return R;
  }
  return std::nullopt;
}

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  const std::string cmd = std::string(ORDLAB_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    r.code = -1;
    return r;
  }
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main() {
  run_criterion("comparison-lemma", 30.0, [](Outcome& out) {
    const auto r = run_comparison_lemma_suite("small", 0);
    out.require(r.violations == 0, suite_failure(r));
    out.require(r.cases > 100000, "suspiciously few cases");
  });

  run_criterion("encoding-lemmas", 60.0, [](Outcome& out) {
    const auto r = run_encoding_lemmas_suite("small", 0);
    out.require(r.violations == 0, suite_failure(r));
    out.require(r.cases >= 10000, "fewer than the 10^4 random instances");
  });

  run_criterion("largeness", 10.0, [](Outcome& out) {
    const auto r = run_largeness_suite("small", 0);
    out.require(r.violations == 0, suite_failure(r));
    out.require(r.cases >= 10000, "fewer than the 10^4 random descents");
  });

  run_criterion("ramsey-cf2-exhaustive", 1.0, [](Outcome& out) {
    // library answer plus a full independent scan of all 2^15 colorings of
    // the 15 pairs in [0,5] (and the bad coloring at R=4), inside 1 s
    const auto w = min_frt_witness(SizeFunction::cf(2), 2, 2, 0, 10);
    out.require(w.R.has_value() && *w.R == 5,
                "library witness != 5");
    const auto good = oracle::frt_good(SizeFunction::cf(2));
    out.require(
        oracle::first_bad_coloring(2, 2, oracle::interval(0, 4), good)
            .has_value(),
        "oracle found no bad coloring at R=4");
    const oracle::GroundScan scan(2, oracle::interval(0, 5));
    bool all_good = true;
    oracle::for_each_coloring(scan.num_subsets, 2,
                              [&](const std::vector<std::uint32_t>& colors) {
                                if (!scan.admits_good(colors, good)) {
                                  all_good = false;
                                  return false;
                                }
                                return true;
                              });
    out.require(all_good, "oracle found a bad coloring at R=5");
  });

  run_criterion("ramsey-cf1", 60.0, [](Outcome& out) {
    const auto w = min_frt_witness(SizeFunction::cf(1), 1, 2, 0, 10);
    out.require(w.R.has_value() && *w.R == 2, "library witness != 2");
    out.require(oracle::min_witness(SizeFunction::cf(1), 1, 2, 0, 10) == 2,
                "oracle witness != 2");
  });

  run_criterion("ramsey-ph", 60.0, [](Outcome& out) {
    const SizeFunction F = SizeFunction::ph(EvalFn::identity());
    const auto w = min_frt_witness(F, 1, 2, 3, 15);
    out.require(w.R.has_value() && *w.R == 9, "library witness != 9");
    out.require(oracle::min_witness(F, 1, 2, 3, 9) == 9, "oracle witness != 9");
  });

  run_criterion("ramsey-saph", 60.0, [](Outcome& out) {
    const auto w = saph_search(1, 1, 1, 2, EvalFn::identity(), 20);
    out.require(w.R.has_value() && *w.R == 5, "library witness != 5");
    out.require(oracle_saph(1, 1, 2, EvalFn::identity(), 20) == 5,
                "oracle witness != 5");
  });

  run_criterion("tree-duality", 60.0, [](Outcome& out) {
    const auto tree = build_compactness_tree(SizeFunction::cf(2), 2, 2, 5);
    out.require(tree.levels.size() == 6, "expected levels 0..5");
    for (Nat R = 0; R < tree.levels.size(); ++R) {
      const bool empty = tree.levels[R].colorings.empty();
      out.require(empty == (R >= 5),
                  "level " + std::to_string(R) +
                      (empty ? " unexpectedly empty" : " unexpectedly nonempty"));
    }
    // restriction of a stored bad coloring is itself a stored bad coloring
    for (Nat R = 0; R < tree.levels.size(); ++R) {
      for (const auto& node : tree.levels[R].colorings) {
        for (Nat r = 0; r < R; ++r) {
          const auto sub = restrict_coloring(node, 2, R, r);
          const auto& lvl = tree.levels[r].colorings;
          const bool present =
              std::find(lvl.begin(), lvl.end(), sub) != lvl.end();
          out.require(present, "restriction of a level-" + std::to_string(R) +
                                   " node missing at level " +
                                   std::to_string(r));
        }
      }
    }
  });

  run_criterion("ar-transfer", 60.0, [](Outcome& out) {
    const auto r = run_ar_transfer_suite("small", 0);
    out.require(r.violations == 0, suite_failure(r));
    out.require(r.cases >= 1000, "fewer than the 10^3 random sequences");
  });

  run_criterion("counterexample-fn", 10.0, [](Outcome& out) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      const Nat d = 1 + rng() % 2;
      const Nat k = 2 + rng() % 2;
      const Nat R = d + rng() % 5;
      const auto subs = oracle::combos(R + 1, d);
      std::vector<std::uint32_t> colors(subs.size());
      for (auto& c : colors) c = static_cast<std::uint32_t>(rng() % k);
      const SubsetColoring C(d, k, 0, R, colors);
      const SizeFunction F = counterexample_size_fn(C);
      out.require(coloring_admits_no_good_set(C, frt_good_set(F)),
                  "library re-check found a good set, trial " +
                      std::to_string(trial));
      out.require(!oracle::coloring_good(d, oracle::interval(0, R), colors,
                                         oracle::frt_good(F)),
                  "oracle found a good set, trial " + std::to_string(trial));
      if (!out.ok) return;
    }
  });

  run_criterion("determinism", 120.0, [](Outcome& out) {
    const struct {
      const char* args;
      const char* expect;  // nullptr = only repeatability is checked
    } commands[] = {
        {"frt min-r --size-fn cf:2 --d 2 --k 2 --a 0 --rmax 10",
         "{\"R\":5}\n"},
        {"frt min-r --size-fn cf:1 --d 1 --k 2 --a 0 --rmax 10",
         "{\"R\":2}\n"},
        {"frt min-r --size-fn ph:id --d 1 --k 2 --a 3 --rmax 15",
         "{\"R\":9}\n"},
        {"ar saph --d 1 --c 1 --k 1 --m 2 --f id --rmax 20", "{\"R\":5}\n"},
        {"large find --alpha \"w*2\" --f \"x+1\" --start 0",
         "{\"set\":[1,2,3,4,5,6]}\n"},
        {"frt tree --size-fn cf:2 --d 2 --k 2 --rmax 5", nullptr},
        {"verify --suite comparison-lemma --universe tiny", nullptr},
        {"verify --suite ar-transfer --universe tiny", nullptr},
    };
    for (const auto& c : commands) {
      const auto first = run_cli(c.args);
      const auto second = run_cli(c.args);
      out.require(first.code == 0,
                  std::string(c.args) + ": exit " + std::to_string(first.code));
      out.require(first.out == second.out && first.code == second.code,
                  std::string(c.args) + ": repeated runs differ");
      if (c.expect)
        out.require(first.out == c.expect,
                    std::string(c.args) + ": unexpected payload " + first.out);
      if (!out.ok) return;
    }
    // parallel search must reproduce the sequential bytes
    const char* base = "frt min-r --size-fn cf:2 --d 2 --k 2 --a 0 --rmax 10";
    const auto seq = run_cli(std::string(base) + " --threads 1");
    const auto par = run_cli(std::string(base) + " --threads 4");
    out.require(seq.out == par.out && seq.out == "{\"R\":5}\n",
                "threads 1 vs 4 payloads differ");
    const char* hold = "frt holds --size-fn cf:2 --d 2 --k 2 --a 0 --r 4";
    const auto seq_h = run_cli(std::string(hold) + " --threads 1");
    const auto par_h = run_cli(std::string(hold) + " --threads 4");
    out.require(seq_h.out == par_h.out, "threads 1 vs 4 witnesses differ");
  });

  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
