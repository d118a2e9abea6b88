#pragma once

#include <optional>
#include <span>
#include <string>

#include "combhardy/bounds.hpp"
#include "combhardy/comb.hpp"

namespace combhardy {

enum class Decision {
  InfiniteHardy,
  FiniteHardy,
  Undetermined,
};

/// Which result justifies the decision. Rules key off the declared family;
/// explicit gap lists only ever receive numeric trend hints, because finitely
/// many samples cannot certify an asymptotic hypothesis.
enum class Justification {
  Thm1_2_Subexponential,  ///< log alpha_n / n -> 0
  Thm1_3_GeneralBound,    ///< alpha_n <= e^{b_n}, log alpha_n/(b_n - b_{n-1}) -> inf
  Cor1_4_ExpBound,        ///< alpha_n <= e^n and alpha_n -> inf
  Thm1_5_Oscillating,     ///< sparse-spike construction, finite Hardy number
  Thm1_6_DoubleExp,       ///< alpha_n comparable to e^{e^n}, finite Hardy number
  Sec1_ExponentialType,   ///< alpha_n = e^{c n}
  BoundedGaps_Thm1_1,     ///< bounded gaps force an infinite Hardy number
  Cor4_1_Bou,             ///< exit-time moment corollary, numeric desk-scale test
  NumericTrendOnly,
};

struct Verdict {
  Decision decision = Decision::Undetermined;
  Justification justification = Justification::NumericTrendOnly;
  /// [max(1/2, tail min L), tail min U] for finite verdicts; +inf markers for
  /// infinite ones; the same numeric tails, flagged diagnostic, otherwise.
  double bound_lower = 0.5;
  double bound_upper = 0.0;
  std::string notes;
  std::optional<TrendReport> trend;  ///< attached for numeric-only verdicts
};

const char* to_string(Decision d);
const char* to_string(Justification j);

struct ClassifyOptions {
  /// Allow the exit-time moment corollary as a fallback for custom formulas
  /// without a registered asymptotic class. Never applies to explicit lists.
  bool run_bou_check = false;
  std::vector<double> bou_thetas = {0.5, 0.9};
};

/// Maps a materialized spec to a decision plus the result that justifies it,
/// with the numeric bound interval from the tail of the bound series.
/// The decision and justification depend only on the family, so they are
/// stable under growing truncation; the interval tightens with N.
Verdict classify(const CombSpec& spec, const ClassifyOptions& opts = {});

/// Numeric test of sum_j (max_{n<=j} alpha_n^2) theta^j < infinity through
/// tail log-ratio convergence, for each theta in (0,1). True means the
/// hypothesis of the exit-time moment corollary holds at desk scale.
bool check_bou_corollary(const CombSpec& spec, std::span<const double> thetas);

/// Oscillating comb with gaps c off the greedy spike subsequence and
/// e^{b_{k_m}} on it. Throws InvalidFamilyParam if c <= 1 or the envelope
/// increment floor is not positive.
CombSpec build_counterexample(const OscillatingParams& params, int n);

}  // namespace combhardy
