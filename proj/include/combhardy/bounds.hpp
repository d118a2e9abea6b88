#pragma once

#include <optional>
#include <span>
#include <vector>

#include "combhardy/comb.hpp"
#include "combhardy/config.hpp"
#include "combhardy/numerics.hpp"

namespace combhardy {

/// Per-index record of the growth-criterion ratios and the closed-form
/// bound series, all computed in log space.
///
/// ratio_R and ratio_Rprime are the same quantity reached by two routes:
/// ratio_R divides by log of the raw coordinate sum (falling back to the
/// log-sum-exp value once coordinates pass the float cap) while
/// ratio_Rprime always divides by the log-sum-exp denominator. Keeping both
/// makes the agreement checkable instead of assumed.
struct BoundSeries {
  int n = 0;
  double sum_log_gaps = 0.0;  ///< sum_{i<=n} log alpha_i
  double log_x_n = 0.0;       ///< log-sum-exp route
  double ratio_R = 0.0;       ///< sum_log_gaps / log x_n (raw-sum route)
  double ratio_Rprime = 0.0;  ///< sum_log_gaps / log-sum-exp denominator
  double upper_U = 0.0;       ///< 4 sum_log_gaps/log x_n + n K / log x_n + 4
  double lower_L = 0.0;       ///< ratio_R - 1
  double K = 0.0;             ///< 4 log((1+sqrt 5)/2)
};

/// One record per n = 1..N. Throws DegenerateLog if some log x_n <= 0
/// (impossible while every gap exceeds 1).
std::vector<BoundSeries> criterion_series(const CombSpec& spec);

/// U_n series; its tail minimum is the numeric upper estimate for the
/// Hardy number of the truncated comb.
std::vector<double> upper_bound_series(const CombSpec& spec);

/// L_n = ratio_R - 1 series. The effective lower estimate is
/// max(1/2, tail min), since the Hardy number of a simply connected domain
/// never drops below 1/2.
std::vector<double> lower_bound_series(const CombSpec& spec);

/// Tail diagnostics of the two bound series over [ceil(N/2), N].
struct BoundTails {
  double upper = 0.0;            ///< tail min of U_n
  double lower_effective = 0.5;  ///< max(1/2, tail min of L_n)
  TailWindow window;
};
BoundTails bound_tails(const CombSpec& spec);

/// Quasi-hyperbolic distance between the axis points x_a and x_b in closed
/// form: 2 sum_{i=a+1}^{b} arcsinh(alpha_i / 2). On the axis the boundary
/// distance is sqrt(1 + min(x - x_{i-1}, x_i - x)^2), so each gap
/// contributes exactly one arcsinh term.
/// Throws OverflowError when a gap in range exceeds the float cap.
double qh_axis_distance(const CombSpec& spec, int a, int b);

enum class TrendHint {
  DivergesToInfinity,
  BoundedAbove,
  Inconclusive,
};

struct TrendConfig {
  double slope_tolerance = Defaults::slope_tolerance;
};

/// Finite-truncation trend diagnostics. These report what the tail of the
/// criterion ratio does over [ceil(N/2), N]; they are hints layered beside
/// the classifier's verdict, never a replacement for it.
struct TrendReport {
  double tail_min = 0.0;  ///< of ratio_Rprime over the window
  double tail_max = 0.0;
  /// log alpha_n / (b_n - b_{n-1}) over the window when an envelope is
  /// declared, else log alpha_n / (log x_n - log x_{n-1}) as a growth proxy.
  std::vector<double> term_ratio_tail;
  TrendHint verdict_hint = TrendHint::Inconclusive;
  TailWindow window;
  bool used_declared_b = false;
};

/// Hint rule: a monotone tail whose least-squares slope exceeds the
/// tolerance diverges; a tail whose slope stays at or below the tolerance is
/// bounded above; anything else is inconclusive. first_index is the 1-based
/// index of series[0].
TrendHint trend_hint(std::span<const double> series, int first_index, TailWindow window,
                     const TrendConfig& cfg = {});

/// b-envelope value for families that declare one (oscillating, e^{n^p}
/// with p >= 1, double exponential, and the named custom formulas).
/// Returns nullopt when the family has no declared envelope.
std::optional<double> declared_b_value(const CombSpec& spec, int n);

TrendReport trend_report(const CombSpec& spec, const BFamily* b_family = nullptr,
                         const TrendConfig& cfg = {});

}  // namespace combhardy
