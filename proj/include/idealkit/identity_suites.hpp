#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idealkit {

// Randomized checks of the ideal identities behind the sum decomposition.
//   sum-intersection:     (I + J1) ∩ J2 = I*J2 + J1 ∩ J2            (general ideals)
//   intersection-of-sums: ∩_k Σ_i I_ik J_(n-i) = Σ_i (∩_k Σ_(j>=i) I_jk) J_(n-i)
//   power-of-sum:         ∩_(k,l) L_(n,k,l) = (I + J)^n for n = 1, 2, 3
//   colon-of-sum:         (I + J) : f = (I : f) + J                   (general ideals)
// I and the I_ik live in the x-block, J and the J_i in the y-block.
enum class IdentitySuite { sum_intersection, intersection_of_sums, power_of_sum, colon_of_sum };

std::string_view suite_name(IdentitySuite s);
std::optional<IdentitySuite> parse_suite(std::string_view name);
std::vector<IdentitySuite> all_suites();

struct SuiteFailure {
  unsigned instance;
  std::uint64_t seed;  // reproduces the instance
  std::string detail;
};

struct SuiteResult {
  IdentitySuite suite;
  std::uint64_t base_seed = 0;
  unsigned instances = 0;
  unsigned cases = 0;
  unsigned passed = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return passed == cases; }
};

// Instance i uses the seed instance_seed(seed, i). With inject_failure the
// right-hand side is multiplied by (x1), which breaks every instance; used to
// test the harness itself.
SuiteResult run_suite(IdentitySuite suite, std::uint64_t seed, unsigned count, bool inject_failure = false);

}  // namespace idealkit
