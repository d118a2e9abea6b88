#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace combhardy {

/// Streaming log-sum-exp: value() == log(sum_i exp(a_i)) without ever
/// forming the raw sum. Rescales whenever a new maximum arrives, so the
/// accumulator stays exact for wildly spread inputs (double exponential
/// gap sequences reach e^{e^n}).
class LogSumExp {
 public:
  void add(double a) {
    if (a <= max_) {
      sum_ += std::exp(a - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - a) + 1.0;
      max_ = a;
    }
    ++count_;
  }

  double value() const {
    if (count_ == 0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

  std::size_t count() const { return count_; }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

inline double log_sum_exp(std::span<const double> values) {
  LogSumExp acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

/// Neumaier compensated summation. Aggregations that must not depend on
/// thread scheduling reduce through this in a fixed index order.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Closed 1-based index window [lo, hi]; used for tail diagnostics over the
/// upper half of a series.
struct TailWindow {
  int lo = 1;
  int hi = 1;
  int size() const { return hi - lo + 1; }
};

/// Upper-half window [ceil(n/2), n].
inline TailWindow tail_window(int n) { return TailWindow{(n + 1) / 2, n}; }

inline double tail_min(std::span<const double> series, TailWindow w) {
  double m = std::numeric_limits<double>::infinity();
  for (int n = w.lo; n <= w.hi; ++n) m = std::min(m, series[n - 1]);
  return m;
}

inline double tail_max(std::span<const double> series, TailWindow w) {
  double m = -std::numeric_limits<double>::infinity();
  for (int n = w.lo; n <= w.hi; ++n) m = std::max(m, series[n - 1]);
  return m;
}

/// Least-squares slope of values against their 1-based index over [w.lo, w.hi].
inline double least_squares_slope(std::span<const double> series, TailWindow w) {
  const int m = w.size();
  if (m < 2) return 0.0;
  double xm = 0.0, ym = 0.0;
  for (int n = w.lo; n <= w.hi; ++n) {
    xm += n;
    ym += series[n - 1];
  }
  xm /= m;
  ym /= m;
  double num = 0.0, den = 0.0;
  for (int n = w.lo; n <= w.hi; ++n) {
    num += (n - xm) * (series[n - 1] - ym);
    den += (n - xm) * (n - xm);
  }
  return den > 0.0 ? num / den : 0.0;
}

/// Constant from the tooth-to-tooth arcsinh estimate: 4 log((1+sqrt(5))/2).
/// Computed from the closed form rather than frozen as a decimal.
inline double arcsinh_gap_constant() {
  return 4.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0);
}

}  // namespace combhardy
