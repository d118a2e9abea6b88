#include "combhardy/comb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "combhardy/errors.hpp"
#include "combhardy/numerics.hpp"

namespace combhardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidFamilyParam(what);
}

std::vector<double> explicit_log_gaps(const ExplicitParams& p, int n) {
  require(!p.x.empty(), "explicit family needs a nonempty teeth list");
  require(static_cast<int>(p.x.size()) == n,
          "explicit family: truncate_n must match the teeth list length");
  std::vector<double> lg(p.x.size());
  double prev = 0.0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    double gap = p.x[i] - prev;
    require(gap > 1.0, "explicit family: every gap must exceed 1");
    lg[i] = std::log(gap);
    prev = p.x[i];
  }
  return lg;
}

}  // namespace

double OscillatingParams::b_value(int n) const {
  if (const auto* lin = std::get_if<LinearBFamily>(&b)) {
    return lin->b1 + (n - 1) * lin->r;
  }
  const auto& vals = std::get<CustomBFamily>(b).values;
  if (n < 1 || n > static_cast<int>(vals.size()))
    throw IndexOutOfRange("b family index " + std::to_string(n));
  return vals[n - 1];
}

double OscillatingParams::min_b_increment(int n_max) const {
  if (const auto* lin = std::get_if<LinearBFamily>(&b)) return lin->r;
  double r = kInf;
  for (int n = 2; n <= n_max; ++n) r = std::min(r, b_value(n) - b_value(n - 1));
  return r;
}

std::vector<int> greedy_spike_indices(const OscillatingParams& params, int n_max) {
  std::vector<int> ks;
  double chosen_sum = 0.0;
  for (int k = 1; k <= n_max; ++k) {
    double bk = params.b_value(k);
    if (ks.empty() || bk >= chosen_sum) {
      ks.push_back(k);
      chosen_sum += bk;
    }
  }
  return ks;
}

CombSpec materialize(CombSpec spec) {
  const int n = spec.truncate_n;
  if (n < 1) throw InvalidFamilyParam("truncate_n must be >= 1");

  spec.log_gaps.clear();
  spec.spikes.clear();

  switch (spec.family) {
    case Family::Explicit:
      spec.log_gaps = explicit_log_gaps(std::get<ExplicitParams>(spec.params), n);
      break;
    case Family::Constant: {
      double a = std::get<ConstantParams>(spec.params).alpha;
      require(a > 1.0, "constant family: alpha must exceed 1");
      spec.log_gaps.assign(n, std::log(a));
      break;
    }
    case Family::Polynomial: {
      double p = std::get<PolynomialParams>(spec.params).p;
      require(p > 0.0, "polynomial family: p must be positive");
      spec.log_gaps.resize(n);
      for (int i = 1; i <= n; ++i) spec.log_gaps[i - 1] = p * std::log(i + 1.0);
      break;
    }
    case Family::Exponential: {
      double c = std::get<ExponentialParams>(spec.params).c;
      require(c > 0.0, "exponential family: c must be positive");
      spec.log_gaps.resize(n);
      for (int i = 1; i <= n; ++i) spec.log_gaps[i - 1] = c * i;
      break;
    }
    case Family::SubexpExp: {
      double p = std::get<SubexpExpParams>(spec.params).p;
      require(p > 0.0, "subexp-exp family: p must be positive");
      spec.log_gaps.resize(n);
      for (int i = 1; i <= n; ++i) spec.log_gaps[i - 1] = std::pow(i, p);
      break;
    }
    case Family::DoubleExp: {
      spec.log_gaps.resize(n);
      for (int i = 1; i <= n; ++i) spec.log_gaps[i - 1] = std::exp(i);
      break;
    }
    case Family::Oscillating: {
      const auto& osc = std::get<OscillatingParams>(spec.params);
      require(osc.c > 1.0, "oscillating family: c must exceed 1");
      if (const auto* custom = std::get_if<CustomBFamily>(&osc.b)) {
        require(static_cast<int>(custom->values.size()) >= n,
                "oscillating family: b list shorter than truncate_n");
      }
      require(osc.b_value(1) > 0.0, "oscillating family: b_1 must be positive");
      require(osc.min_b_increment(n) > 0.0,
              "oscillating family: b must be strictly increasing");
      spec.spikes = greedy_spike_indices(osc, n);
      spec.log_gaps.assign(n, std::log(osc.c));
      for (int k : spec.spikes) spec.log_gaps[k - 1] = osc.b_value(k);
      break;
    }
    case Family::Custom: {
      const auto& cp = std::get<CustomParams>(spec.params);
      spec.log_gaps.resize(n);
      if (cp.formula == "exp_exp_nk") {
        require(cp.k > 0.0 && cp.k < 1.0, "exp_exp_nk: k must lie in (0,1)");
        for (int i = 1; i <= n; ++i) spec.log_gaps[i - 1] = std::exp(std::pow(i, cp.k));
      } else if (cp.formula == "exp_exp_n_over_log_n") {
        // n/log n dips below its n=4 value at n=2,3; backfill those linearly
        // so the envelope stays increasing with a positive increment floor.
        auto b = [](int i) { return std::exp(i / std::log(static_cast<double>(i))); };
        double b4 = b(4), step = b(5) - b4;
        for (int i = 1; i <= n; ++i)
          spec.log_gaps[i - 1] = (i >= 4) ? b(i) : b4 - (4 - i) * step;
      } else if (cp.formula == "log_sq") {
        for (int i = 1; i <= n; ++i) {
          double l = std::log(i + 1.0);
          spec.log_gaps[i - 1] = l * l;
        }
      } else {
        throw InvalidFamilyParam("unknown custom formula: " + cp.formula);
      }
      break;
    }
  }

  for (double lg : spec.log_gaps)
    require(lg > 0.0, "every gap must exceed 1");

  // log x_n prefixes through the stable accumulator.
  spec.log_prefix.resize(n);
  LogSumExp acc;
  for (int i = 0; i < n; ++i) {
    acc.add(spec.log_gaps[i]);
    spec.log_prefix[i] = acc.value();
  }

  // Raw float coordinates while they stay below the cap.
  spec.x.assign(1, 0.0);
  const double log_cap = std::log(spec.float_cap);
  for (int i = 0; i < n; ++i) {
    if (spec.log_gaps[i] > log_cap || spec.log_prefix[i] > log_cap) break;
    spec.x.push_back(spec.x.back() + std::exp(spec.log_gaps[i]));
  }
  return spec;
}

double x_coord(const CombSpec& spec, int n) {
  if (n < 0 || n > spec.truncate_n)
    throw IndexOutOfRange("x_coord index " + std::to_string(n));
  if (n > spec.materialized_teeth())
    throw OverflowError("x_" + std::to_string(n) + " exceeds the float cap");
  return spec.x[n];
}

double log_x_coord(const CombSpec& spec, int n) {
  if (n < 0 || n > spec.truncate_n)
    throw IndexOutOfRange("log_x_coord index " + std::to_string(n));
  if (n == 0) return -kInf;
  return spec.log_prefix[n - 1];
}

Containment contains(const CombSpec& spec, Point z) {
  if (!std::isfinite(z.re) || !std::isfinite(z.im))
    return Containment::Outside;
  const double x1 = spec.x.size() > 1 ? spec.x[1] : kInf;
  if (z.re <= -x1) return Containment::Outside;
  if (z.re > spec.x.back()) return Containment::BeyondTruncation;
  if (std::abs(z.im) >= 1.0) {
    // On a ray iff Re z coincides with a tooth coordinate.
    auto it = std::lower_bound(spec.x.begin(), spec.x.end(), z.re);
    if (it != spec.x.end() && *it == z.re) return Containment::Outside;
  }
  return Containment::Inside;
}

double dist_to_boundary(const CombSpec& spec, Point z) {
  if (z.re > spec.x.back())
    throw OutsideTruncation("point beyond materialized teeth");
  Containment c = contains(spec, z);
  if (c == Containment::Outside) return 0.0;

  const double x1 = spec.x[1];
  double best = z.re + x1;  // left wall {Re z = -x_1}

  // Candidate rays: the ones bracketing Re z.
  auto it = std::lower_bound(spec.x.begin(), spec.x.end(), z.re);
  long hi = it - spec.x.begin();
  const double ay = std::abs(z.im);
  for (long k = hi - 1; k <= hi; ++k) {
    if (k < 0 || k >= static_cast<long>(spec.x.size())) continue;
    double dx = std::abs(z.re - spec.x[k]);
    double d = (ay >= 1.0) ? dx : std::hypot(dx, 1.0 - ay);
    best = std::min(best, d);
  }
  return best;
}

}  // namespace combhardy
