#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "combhardy/classify.hpp"
#include "combhardy/comb.hpp"
#include "combhardy/config.hpp"

namespace combhardy {

/// Adaptive Gaussian walk parameters. Each step moves by an isotropic
/// Gaussian of spatial scale step_fraction * dist_to_boundary and advances
/// the clock by scale^2 (unit variance per unit time), which makes the
/// sampled skeleton an exact Brownian path seen at those times. Paths stop
/// inside the absorb_eps band, which biases exit times slightly low; the
/// strip calibration quantifies that bias.
struct WalkConfig {
  double step_fraction = Defaults::step_fraction;  ///< in (0, 1/4]
  double absorb_eps = Defaults::absorb_eps;        ///< in (0, 1/10)
  long max_steps = Defaults::max_steps;
};

/// Seeded Monte Carlo batch of exit times. Recorded times keep path order,
/// so aggregation does not depend on scheduling;
/// times.size() + truncation_hits + nonconvergent == n_samples.
struct ExitTimeBatch {
  std::uint64_t seed = 0;
  long n_samples = 0;
  double step_fraction = 0.0;
  double absorb_eps = 0.0;
  std::vector<double> times;
  long truncation_hits = 0;  ///< paths that left the materialized region
  long nonconvergent = 0;    ///< paths that exhausted the step budget
};

/// Walkable domains beyond the comb itself; used by the calibration harness
/// and the coupled-noise comparison.
struct StripDomain {};  ///< {|Im z| < 1}
struct HalfPlaneDomain {
  double wall_re = 0.0;  ///< {Re z > wall_re}
};
struct SubstripDomain {
  double wall_re = 0.0;  ///< {Re z > wall_re, |Im z| < 1}
};

/// Samples n exit times from the comb starting at `start`. Deterministic in
/// (seed, n, config); thread_count only affects wall time, never results.
/// Throws StartOutsideDomain when the start is not interior.
ExitTimeBatch sample_exit_times(const CombSpec& spec, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg = {},
                                int thread_count = 0);

/// Same sampler over the plug domains (no truncation frontier there).
ExitTimeBatch sample_exit_times(const StripDomain& dom, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg = {},
                                int thread_count = 0);
ExitTimeBatch sample_exit_times(const HalfPlaneDomain& dom, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg = {},
                                int thread_count = 0);
ExitTimeBatch sample_exit_times(const SubstripDomain& dom, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg = {},
                                int thread_count = 0);

struct MomentOptions {
  double truncation_cap = Defaults::truncation_cap;
  bool strict = false;  ///< throw TooManyTruncations above the cap
};

struct MomentEstimate {
  double p = 0.0;
  double mean_p = 0.0;
  double std_err = 0.0;
  /// Doubling the sample count moved the mean by less than three combined
  /// standard errors. Requires the paired overload; the single-batch
  /// overload can only set it for the trivial p = 0 case.
  bool stable = false;
  bool biased_low = false;  ///< truncation fraction exceeded the cap
  long truncation_hits = 0;
};

/// Empirical mean and standard error of tau^p. p = 0 returns exactly 1 with
/// zero error. Throws TooManyTruncations in strict mode above the cap.
MomentEstimate moment_estimate(const ExitTimeBatch& batch, double p,
                               const MomentOptions& opts = {});

/// Paired form: also fills the stability flag from a doubled batch.
MomentEstimate moment_estimate(const ExitTimeBatch& batch, const ExitTimeBatch& doubled,
                               double p, const MomentOptions& opts = {});

/// One shared Brownian path driving three nested stopping rules:
/// substrip {Re z > -x_1, |Im z| < 1}, the comb, and the half plane
/// {Re z > -x_1}. Domain inclusion then orders the recorded exit times
/// pathwise; a missing entry means that domain was censored (truncation or
/// step budget).
struct CoupledTriple {
  std::optional<double> substrip;
  std::optional<double> comb;
  std::optional<double> halfplane;
};
std::vector<CoupledTriple> coupled_exit_times(const CombSpec& spec, Point start, long n,
                                              std::uint64_t seed,
                                              const WalkConfig& cfg = {});

struct BurkholderConfig {
  long n_samples = Defaults::n_samples;
  std::uint64_t seed = Defaults::seed;
  Point start{0.0, 0.0};
  WalkConfig walk;
  int thread_count = 0;
};

struct BurkholderEntry {
  MomentEstimate estimate;      ///< paired estimate with stability flag
  double mean_at_double = 0.0;  ///< mean at the doubled sample count
  std::string expectation;      ///< what the verdict predicts for this p
  bool consistent = false;      ///< observation matches the expectation
};

/// Exit-time moment diagnostics against a classification verdict:
/// infinite-Hardy combs should show stable moments at every requested p,
/// finite-Hardy combs should show growth for p above bound_upper / 2.
/// Confidence labels only; heavy tails preclude a hard test.
struct BurkholderReport {
  Decision decision = Decision::Undetermined;
  std::vector<BurkholderEntry> entries;
  std::string notes;
};

BurkholderReport burkholder_diagnostic(const CombSpec& spec, const Verdict& verdict,
                                       std::span<const double> ps,
                                       const BurkholderConfig& cfg = {});

}  // namespace combhardy
