// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "rootfn/verify.hpp"

using namespace rootfn;

namespace {

struct Criterion {
  const char* label;
  std::vector<Check> (*run)(std::uint64_t);
};

const Criterion kCriteria[] = {
    {"01 gamma-series-closed-form", criterion_gamma_closed_form},
    {"02 c-function-forms", criterion_c_function_forms},
    {"03 eigenvalue-equation", criterion_eigenvalue_equation},
    {"04 series-vs-closed-form", criterion_series_vs_closed_form},
    {"05 plancherel-and-inversion", criterion_plancherel},
    {"06 laplacian-symbol-identity", criterion_symbol_identity},
    {"07 flat-segal-bargmann", criterion_flat_segal_bargmann},
    {"08 fock-isometry", criterion_fock_isometry},
    {"09 hall-mitchell", criterion_hall_mitchell},
    {"10 abel-inversion", criterion_abel_inversion},
    {"11 lambda-specialization", criterion_lambda_specialization},
    {"12 heat-semigroup-contraction-limit", criterion_heat_semigroup},
};

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20260808ULL;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  int failures = 0;
  for (const Criterion& crit : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    double worst_margin = 0.0;  // defect / tolerance, max over checks
    std::string failing;
    try {
      const std::vector<Check> checks = crit.run(seed);
      for (const Check& c : checks) {
        if (c.tolerance > 0.0)
          worst_margin = std::max(worst_margin, c.defect / c.tolerance);
        if (!c.pass) {
          pass = false;
          failing += (failing.empty() ? "" : ", ") + c.name;
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      failing = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (pass) {
      std::printf("[PASS] %-38s (worst defect %.2e of tolerance, %.1fs)\n",
                  crit.label, worst_margin, secs);
    } else {
      std::printf("[FAIL] %-38s (%s, %.1fs)\n", crit.label, failing.c_str(), secs);
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
