#include "combhardy/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "combhardy/errors.hpp"

namespace combhardy {

namespace {

void require_materialized(const CombSpec& spec) {
  if (!spec.materialized())
    throw Error("spec must be materialized first");
}

}  // namespace

std::vector<BoundSeries> criterion_series(const CombSpec& spec) {
  require_materialized(spec);
  const int n_total = spec.truncate_n;
  const double K = arcsinh_gap_constant();
  const int m = spec.materialized_teeth();

  std::vector<BoundSeries> out(n_total);
  double sum_lg = 0.0;
  for (int n = 1; n <= n_total; ++n) {
    sum_lg += spec.log_gaps[n - 1];
    const double lx = spec.log_prefix[n - 1];
    if (lx <= 0.0)
      throw DegenerateLog("log x_n <= 0 at n = " + std::to_string(n));
    // Raw-sum route while coordinates fit in floats, log-sum-exp beyond.
    const double lx_raw = (n <= m) ? std::log(spec.x[n]) : lx;

    BoundSeries rec;
    rec.n = n;
    rec.sum_log_gaps = sum_lg;
    rec.log_x_n = lx;
    rec.ratio_R = sum_lg / lx_raw;
    rec.ratio_Rprime = sum_lg / lx;
    rec.upper_U = (4.0 * sum_lg + n * K) / lx + 4.0;
    rec.lower_L = rec.ratio_R - 1.0;
    rec.K = K;
    out[n - 1] = rec;
  }
  return out;
}

std::vector<double> upper_bound_series(const CombSpec& spec) {
  auto series = criterion_series(spec);
  std::vector<double> u(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) u[i] = series[i].upper_U;
  return u;
}

std::vector<double> lower_bound_series(const CombSpec& spec) {
  auto series = criterion_series(spec);
  std::vector<double> l(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) l[i] = series[i].lower_L;
  return l;
}

BoundTails bound_tails(const CombSpec& spec) {
  auto series = criterion_series(spec);
  BoundTails tails;
  tails.window = tail_window(static_cast<int>(series.size()));
  std::vector<double> u(series.size()), l(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    u[i] = series[i].upper_U;
    l[i] = series[i].lower_L;
  }
  tails.upper = tail_min(u, tails.window);
  tails.lower_effective = std::max(0.5, tail_min(l, tails.window));
  return tails;
}

double qh_axis_distance(const CombSpec& spec, int a, int b) {
  require_materialized(spec);
  if (a < 0 || b > spec.truncate_n || a > b)
    throw IndexOutOfRange("qh_axis_distance needs 0 <= a <= b <= N");
  const double log_cap = std::log(spec.float_cap);
  double sum = 0.0;
  for (int i = a + 1; i <= b; ++i) {
    const double lg = spec.log_gaps[i - 1];
    if (lg > log_cap)
      throw OverflowError("gap alpha_" + std::to_string(i) + " exceeds the float cap");
    sum += std::asinh(0.5 * std::exp(lg));
  }
  return 2.0 * sum;
}

TrendHint trend_hint(std::span<const double> series, int first_index, TailWindow window,
                     const TrendConfig& cfg) {
  if (window.size() < 4) return TrendHint::Inconclusive;
  // Re-base the window onto the local span.
  TailWindow local{window.lo - first_index + 1, window.hi - first_index + 1};
  if (local.lo < 1 || local.hi > static_cast<int>(series.size()))
    return TrendHint::Inconclusive;

  bool monotone = true;
  for (int n = local.lo; n < local.hi; ++n) {
    if (series[n] < series[n - 1]) {
      monotone = false;
      break;
    }
  }
  const double slope = least_squares_slope(series, local);
  if (monotone && slope > cfg.slope_tolerance) return TrendHint::DivergesToInfinity;
  if (slope <= cfg.slope_tolerance) return TrendHint::BoundedAbove;
  return TrendHint::Inconclusive;
}

std::optional<double> declared_b_value(const CombSpec& spec, int n) {
  switch (spec.family) {
    case Family::Oscillating:
      return std::get<OscillatingParams>(spec.params).b_value(n);
    case Family::SubexpExp: {
      double p = std::get<SubexpExpParams>(spec.params).p;
      // Below p = 1 the increments n^p - (n-1)^p decay to zero, so n^p is
      // not an admissible envelope.
      if (p < 1.0) return std::nullopt;
      return std::pow(n, p);
    }
    case Family::DoubleExp:
      return std::exp(n);
    case Family::Custom: {
      const auto& cp = std::get<CustomParams>(spec.params);
      if (cp.formula == "exp_exp_nk") return std::exp(std::pow(n, cp.k));
      if (cp.formula == "exp_exp_n_over_log_n") {
        auto b = [](int i) { return std::exp(i / std::log(static_cast<double>(i))); };
        double b4 = b(4), step = b(5) - b4;
        return (n >= 4) ? b(n) : b4 - (4 - n) * step;
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

TrendReport trend_report(const CombSpec& spec, const BFamily* b_family,
                         const TrendConfig& cfg) {
  auto series = criterion_series(spec);
  const int n_total = static_cast<int>(series.size());

  TrendReport rep;
  rep.window = tail_window(n_total);

  std::vector<double> rprime(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) rprime[i] = series[i].ratio_Rprime;
  rep.tail_min = tail_min(rprime, rep.window);
  rep.tail_max = tail_max(rprime, rep.window);
  rep.verdict_hint = trend_hint(rprime, 1, rep.window, cfg);

  auto b_at = [&](int n) -> std::optional<double> {
    if (b_family) {
      OscillatingParams view;
      view.b = *b_family;
      return view.b_value(n);
    }
    return declared_b_value(spec, n);
  };

  auto fill_ratios = [&](bool declared) {
    rep.term_ratio_tail.clear();
    for (int n = std::max(2, rep.window.lo); n <= rep.window.hi; ++n) {
      double denom = declared ? (*b_at(n) - *b_at(n - 1))
                              : (spec.log_prefix[n - 1] - spec.log_prefix[n - 2]);
      if (denom <= 0.0) return false;
      rep.term_ratio_tail.push_back(spec.log_gaps[n - 1] / denom);
    }
    return true;
  };

  rep.used_declared_b = b_at(2).has_value() && fill_ratios(true);
  if (!rep.used_declared_b) fill_ratios(false);
  return rep;
}

}  // namespace combhardy
