#ifndef ROOTFN_VERIFY_HPP
#define ROOTFN_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootfn/types.hpp"

namespace rootfn {

/// One verified statement: lhs/rhs are the two sides being compared (when the
/// check is a comparison), defect the achieved error, tolerance the bound it
/// must meet. paper_ref names the mathematical statement machine-readably.
struct Check {
  std::string name;
  std::string paper_ref;
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Deterministic uniform deviates, bit-reproducible across platforms (the
/// distribution is derived from raw mt19937_64 words, not from
/// std::uniform_real_distribution).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Complex complex_box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    const double im = uniform(im_lo, im_hi);
    return {re, im};
  }

 private:
  std::mt19937_64 gen_;
};

// Acceptance criteria, one function per criterion.
std::vector<Check> criterion_gamma_closed_form(std::uint64_t seed);
std::vector<Check> criterion_c_function_forms(std::uint64_t seed);
std::vector<Check> criterion_eigenvalue_equation(std::uint64_t seed);
std::vector<Check> criterion_series_vs_closed_form(std::uint64_t seed);
std::vector<Check> criterion_plancherel(std::uint64_t seed);
std::vector<Check> criterion_symbol_identity(std::uint64_t seed);
std::vector<Check> criterion_flat_segal_bargmann(std::uint64_t seed);
std::vector<Check> criterion_fock_isometry(std::uint64_t seed);
std::vector<Check> criterion_hall_mitchell(std::uint64_t seed);
std::vector<Check> criterion_abel_inversion(std::uint64_t seed);
std::vector<Check> criterion_lambda_specialization(std::uint64_t seed);
std::vector<Check> criterion_heat_semigroup(std::uint64_t seed);

/// Suite names understood by the CLI: all, gamma, eigen, plancherel, fock,
/// hall_mitchell, abel_inv.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

nlohmann::ordered_json suite_to_json(const SuiteResult& result);

}  // namespace rootfn

#endif
