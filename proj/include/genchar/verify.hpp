#pragma once

// Invariant checks grouped into suites, shared by `genchar verify` and the
// acceptance binary. Every check is exact; a failing check carries the first
// counterexample in `detail`.

#include <cstdint>
#include <string>
#include <vector>

namespace genchar {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// oracles, orthogonality, greene, frobenius, cauchy, all.
const std::vector<std::string>& verify_suites();

// Individual checks; the bounds are inclusive.
CheckResult check_mn_vs_syt(int n_max);
CheckResult check_mn_vs_def(int n_max);
CheckResult check_ncycle(int n_max);
CheckResult check_j1_reduction(int n_max);
CheckResult check_class_sizes(int n_max);
CheckResult check_marked_bijection(int n_max);

CheckResult check_gamma_orthogonality(int n_max);
CheckResult check_schur_orthogonality(int n_max);

CheckResult check_skew_closed(int max_boxes, int points, std::uint64_t seed);
CheckResult check_pair_closed(int max_boxes, int points, std::uint64_t seed);
CheckResult check_decomposition(int max_boxes, int points, std::uint64_t seed);
CheckResult check_recurrence(int max_boxes, int points, std::uint64_t seed);

CheckResult check_ch_prime(int n_max);
CheckResult check_jacobi_trudi(int n_max);
CheckResult check_t_power(int n_max);
CheckResult check_isometry(int n_max, std::uint64_t seed);
CheckResult check_frobenius_weighted(int n_max);
/// Passes when the unweighted expansion fails to reconstruct some class of S(2).
CheckResult check_frobenius_unweighted_rejected();

CheckResult check_cauchy(int max_n);

/// Runs a whole suite. n_max bounds the degree (for greene: the number of
/// boxes). Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite, int n_max, std::uint64_t seed);

std::string render_text(const VerifyReport& report);
std::string render_json(const VerifyReport& report, int indent = 2);

}  // namespace genchar
