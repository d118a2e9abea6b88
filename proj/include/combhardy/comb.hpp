#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "combhardy/config.hpp"

namespace combhardy {

/// One-sided comb domain: the half plane {Re z > -x_1} minus the vertical
/// rays {x_n + iy : |y| >= 1} for n = 0..N, with x_0 = 0 and every gap
/// alpha_n = x_n - x_{n-1} strictly greater than 1.

struct Point {
  double re = 0.0;
  double im = 0.0;
};

enum class Family {
  Explicit,     ///< teeth given as a list of coordinates
  Constant,     ///< alpha_n = alpha
  Polynomial,   ///< alpha_n = (n+1)^p
  Exponential,  ///< alpha_n = e^{c n}
  SubexpExp,    ///< alpha_n = e^{n^p}
  DoubleExp,    ///< alpha_n = e^{e^n}
  Oscillating,  ///< alpha_n = c off a sparse spike subsequence, e^{b_k} on it
  Custom,       ///< named formula, see CustomParams
};

/// b_n = b1 + (n-1) r.
struct LinearBFamily {
  double r = 1.0;
  double b1 = 1.0;
};

/// Explicit b values (1-based).
struct CustomBFamily {
  std::vector<double> values;
};

using BFamily = std::variant<LinearBFamily, CustomBFamily>;

/// Envelope sequence for the oscillating construction. The spike
/// subsequence k_m is derived greedily: the smallest index whose b value is
/// at least the sum of previously chosen b values.
struct OscillatingParams {
  double c = 2.0;  ///< off-spike gap, must exceed 1
  BFamily b = LinearBFamily{};

  double b_value(int n) const;
  /// inf_{n>1}(b_n - b_{n-1}) over the materialized range.
  double min_b_increment(int n_max) const;
};

struct ExplicitParams {
  std::vector<double> x;  ///< teeth beyond x_0 = 0, strictly increasing
};
struct ConstantParams {
  double alpha = 2.0;
};
struct PolynomialParams {
  double p = 1.0;
};
struct ExponentialParams {
  double c = 1.0;
};
struct SubexpExpParams {
  double p = 0.5;
};
struct DoubleExpParams {};

/// Named gap formulas beyond the fixed families:
///   "exp_exp_nk"           log alpha_n = e^{n^k}, requires k in (0,1)
///   "exp_exp_n_over_log_n" log alpha_n = e^{n/log n} for n >= 4, linear
///                          backfill below so the b-envelope stays increasing
///   "log_sq"               log alpha_n = log(n+1)^2; carries no registered
///                          asymptotic class, so classification falls back to
///                          numeric rules
struct CustomParams {
  std::string formula;
  double k = 0.5;
};

using FamilyParams = std::variant<ExplicitParams, ConstantParams, PolynomialParams,
                                  ExponentialParams, SubexpExpParams, DoubleExpParams,
                                  OscillatingParams, CustomParams>;

/// Declarative description of a comb domain: family, parameters and
/// truncation depth. materialize() fills the derived fields; everything else
/// treats a materialized spec as immutable.
struct CombSpec {
  Family family = Family::Constant;
  FamilyParams params = ConstantParams{};
  int truncate_n = Defaults::truncate_n;
  double float_cap = Defaults::float_cap;

  // Derived by materialize().
  std::vector<double> log_gaps;    ///< log alpha_1 .. log alpha_N
  std::vector<double> log_prefix;  ///< log x_1 .. log x_N (log-sum-exp route)
  std::vector<double> x;           ///< x_0 .. x_M as doubles, M <= N (cap)
  std::vector<int> spikes;         ///< oscillating spike indices k_m, 1-based

  bool materialized() const { return !log_gaps.empty(); }
  /// Number of teeth with raw floating point coordinates (M above).
  int materialized_teeth() const { return static_cast<int>(x.size()) - 1; }
};

/// Evaluates the family formulas and fills log_gaps, log_prefix, the float
/// prefix and (for oscillating combs) the spike subsequence.
/// Throws InvalidFamilyParam when a parameter is out of range or a gap
/// would be <= 1. Never overflows: gaps live in log space.
CombSpec materialize(CombSpec spec);

/// x_n = sum_{i<=n} alpha_i, x_0 = 0.
/// Throws IndexOutOfRange for n outside [0, N] and OverflowError when x_n
/// exceeds the float cap (use log_x_coord instead).
double x_coord(const CombSpec& spec, int n);

/// log x_n through the stable log-sum-exp route; defined for 1 <= n <= N
/// (returns -infinity for n = 0).
double log_x_coord(const CombSpec& spec, int n);

enum class Containment {
  Inside,
  Outside,
  BeyondTruncation,  ///< Re z exceeds the materialized teeth; no verdict
};

/// Membership test against the wall, the rays and the truncation frontier.
/// Ray hits use exact coordinate equality (rays have zero width).
Containment contains(const CombSpec& spec, Point z);

/// Euclidean distance from z to the domain boundary. Exterior points map to
/// 0 by convention. Only the two rays bracketing Re z (plus the wall) can
/// attain the minimum, so the scan is O(log N).
/// Throws OutsideTruncation when Re z exceeds the materialized teeth.
double dist_to_boundary(const CombSpec& spec, Point z);

/// Greedy spike subsequence for an envelope b: smallest index k with
/// b_k >= sum of previously selected b values, scanning k = 1..n_max.
std::vector<int> greedy_spike_indices(const OscillatingParams& params, int n_max);

}  // namespace combhardy
