#pragma once

#include "manhattan/lattice.hpp"
#include "manhattan/numeric.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace manhattan {

// Raised when a runtime pathwise check fails; the message names the chain,
// step and position.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct WalkerState {
  Site position;
  LocalEnv env;  // always equals local_env(rule, position)
  std::uint64_t steps_taken = 0;
};

WalkerState make_walker(const OrientationRule& rule);

// One move along `axis_choice` (0-based), in the direction the cached
// environment dictates.
WalkerState step(const WalkerState& state, const OrientationRule& rule,
                 int axis_choice);

struct SimConfig {
  explicit SimConfig(OrientationRule r) : rule(std::move(r)) {}

  OrientationRule rule;
  std::uint64_t n_steps = 1;
  std::uint64_t n_chains = 1;
  std::uint64_t seed = 0;
  std::uint64_t record_stride = 1;
  // Unset means: on for n_chains <= 10^4, off above (the checks roughly
  // double the step cost).
  std::optional<bool> check_invariants;
  // Execution detail only; results and serialized output never depend on it.
  unsigned n_workers = 1;

  int dimension() const { return rule.dimension(); }
  bool invariants_resolved() const {
    return check_invariants.value_or(n_chains <= 10'000);
  }
};

// Exact integer sums over chains at one recorded step count.
struct MomentRecord {
  std::uint64_t n = 0;
  std::vector<BigInt> sum_x;     // sum of X_n[i]
  std::vector<BigInt> sum_x_sq;  // sum of X_n[i]^2
  BigInt sum_normsq_sq = 0;      // sum of |X_n|^4, for the MSD standard error
};

struct SampleMoments {
  // Echo of the semantic config (worker count deliberately excluded).
  std::string rule_name;
  int d = 0;
  std::uint64_t n_steps = 0;
  std::uint64_t n_chains = 0;
  std::uint64_t seed = 0;
  std::uint64_t record_stride = 1;
  bool checked_invariants = false;

  std::vector<MomentRecord> records;

  BigInt sum_normsq(const MomentRecord& rec) const;
  Rational mean_estimate(const MomentRecord& rec, int coord) const;
  Rational msd_estimate(const MomentRecord& rec) const;
  // Standard error of the mean of |X_n|^2 (sample variance over n_chains - 1);
  // 0 when the sample is degenerate.
  double msd_stderr(const MomentRecord& rec) const;
  double mean_stderr(const MomentRecord& rec, int coord) const;

  // CSV: versioned header, config echo comment, then one row per record.
  std::string to_csv() const;
  std::string to_json() const;
};

// Recording points: multiples of the stride, plus n_steps itself.
std::vector<std::uint64_t> record_schedule(std::uint64_t n_steps,
                                           std::uint64_t stride);

// Runs n_chains independent walks of n_steps from the origin. Chain i draws
// from chain_seed(seed, i), so the result is bit-identical for any worker
// count. With invariant checks on, every step asserts the squared-norm
// increment identity |x+e|^2 - |x|^2 = 2 x.e + 1 and, on the Manhattan
// lattice, the environment flip rule L' = -L + 2e.
SampleMoments simulate(const SimConfig& config);

}  // namespace manhattan
