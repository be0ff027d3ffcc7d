#ifndef NULLCERT_FUZZ_HPP
#define NULLCERT_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullcert/certificate.hpp"
#include "nullcert/groebner.hpp"

namespace nullcert {

/// Bounds for randomly generated systems. Everything is a pure function of
/// these values.
struct FuzzParams {
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  std::size_t num_vars = 3;       // <= 4
  std::size_t num_polys = 3;      // <= 4
  std::uint32_t max_degree = 2;   // <= 3
  std::int64_t coeff_bound = 3;   // coefficients drawn from [-bound, bound] \ {0}

  /// Throws InvalidArgument when a bound is violated.
  void validate() const;
};

/// Per-trial random stream: SplitMix64 seeded from (seed, trial, stream).
/// The mapping from raw draws to values is fixed here rather than delegated to
/// <random> distributions, whose output is implementation-defined.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi] (modulo reduction).
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// Draws f_1..f_{k-1} and lambda_1..lambda_{k-1}, then sets
/// f_k = 1 - sum lambda_i f_i so that 1 is in <F> with lambda_k = 1.
/// Deterministic in (params, trial_index).
SystemF gen_inconsistent_system(const FuzzParams& params, std::size_t trial_index);

enum class Check { pass, fail, not_run };

struct TrialVerdict {
  bool skipped = false;
  std::string skip_reason;

  Check extended_final_found = Check::not_run;  // (a) extended final element present
  Check certificate = Check::not_run;   // (b) sum lambda_i f_i == 1
  Check z1_final = Check::not_run;      // (c) z = 1 specialization is final
  Check membership = Check::not_run;    // (d) reduces to 0 modulo the scaled ideal basis
  Check uniqueness = Check::not_run;    // (e) same reduced basis after permuting generators
  Check soundness = Check::not_run;     // every certificate found implies 1 in <F>

  bool final_present = false;           // (f) observational: lex basis of I has a final polynomial
  bool unreduced_z_lead = false;        // observational: unreduced basis has an element with leading monomial z

  std::optional<std::string> extended_final;  // rendered
  std::vector<std::string> failures;

  bool hard_failure() const { return !failures.empty(); }
};

/// Runs every property on one system. `permutation_seed` drives the generator
/// shuffle for the uniqueness check. Limit overruns mark the trial skipped.
TrialVerdict run_property_suite(const SystemF& system, const ComputationLimits& limits,
                                std::uint64_t permutation_seed = 0);

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t thm5_pass = 0;
  std::size_t final_present = 0;
  std::size_t counterexamples = 0;
  std::size_t hard_failures = 0;
};

struct FuzzReport {
  FuzzParams params;
  std::vector<SystemF> systems;
  std::vector<TrialVerdict> verdicts;
  FuzzSummary summary;

  /// Per-trial lines, the summary line
  ///   trials=<N> skipped=<s> thm5_pass=<p> final_present=<q> counterexamples=<r>
  /// and each counterexample system in `.polysys` form.
  std::string render() const;
};

/// Runs `params.trials` trials. `workers` > 1 spreads trials over threads;
/// results are merged in trial order so the report does not depend on it.
FuzzReport run_fuzz(const FuzzParams& params, const ComputationLimits& limits, unsigned workers = 1);

std::string summary_line(const FuzzSummary& summary);

}  // namespace nullcert

#endif  // NULLCERT_FUZZ_HPP
