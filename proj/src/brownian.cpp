#include "combhardy/brownian.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "combhardy/errors.hpp"
#include "combhardy/numerics.hpp"
#include "combhardy/rng.hpp"

namespace combhardy {

namespace {

enum class PathEnd { Exited, Truncated, Nonconvergent };

struct PathResult {
  PathEnd end = PathEnd::Exited;
  double time = 0.0;
};

// Distance/escape views of the walkable domains. Exterior points map to
// distance 0, which the absorb band picks up even after an overshoot.
struct CombView {
  const CombSpec* spec;
  double x_max;
  double dist(Point z) const { return dist_to_boundary(*spec, z); }
  bool escaped(Point z) const { return z.re > x_max; }
};
struct StripView {
  double dist(Point z) const { return std::max(0.0, 1.0 - std::abs(z.im)); }
  bool escaped(Point) const { return false; }
};
struct HalfPlaneView {
  double wall;
  double dist(Point z) const { return std::max(0.0, z.re - wall); }
  bool escaped(Point) const { return false; }
};
struct SubstripView {
  double wall;
  double dist(Point z) const {
    return std::max(0.0, std::min(1.0 - std::abs(z.im), z.re - wall));
  }
  bool escaped(Point) const { return false; }
};

void validate_walk(const WalkConfig& cfg) {
  if (!(cfg.step_fraction > 0.0 && cfg.step_fraction <= 0.25))
    throw ConfigError("step_fraction must lie in (0, 1/4]");
  if (!(cfg.absorb_eps > 0.0 && cfg.absorb_eps < 0.1))
    throw ConfigError("absorb_eps must lie in (0, 1/10)");
  if (cfg.max_steps < 1) throw ConfigError("max_steps must be positive");
}

template <typename View>
PathResult walk_path(const View& dom, Point start, const WalkConfig& cfg,
                     Philox4x32& rng) {
  Point z = start;
  double t = 0.0;
  for (long step = 0; step < cfg.max_steps; ++step) {
    if (dom.escaped(z)) return {PathEnd::Truncated, t};
    const double d = dom.dist(z);
    if (d < cfg.absorb_eps) return {PathEnd::Exited, t};
    const double s = cfg.step_fraction * d;
    auto [g1, g2] = rng.gaussian_pair();
    z.re += s * g1;
    z.im += s * g2;
    t += s * s;
  }
  return {PathEnd::Nonconvergent, t};
}

template <typename View>
ExitTimeBatch run_batch(const View& dom, Point start, long n, std::uint64_t seed,
                        const WalkConfig& cfg, int thread_count) {
  validate_walk(cfg);
  if (n < 1) throw ConfigError("n_samples must be positive");
  if (dom.escaped(start) || dom.dist(start) <= 0.0)
    throw StartOutsideDomain("start point is not interior");

  std::vector<PathResult> slots(n);
  auto run_range = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      Philox4x32 rng(seed, static_cast<std::uint64_t>(i));
      slots[i] = walk_path(dom, start, cfg, rng);
    }
  };

  int workers = thread_count > 0
                    ? thread_count
                    : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<long>(workers, n));
  if (workers <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::future<void>> futs;
    const long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long lo = w * chunk;
      const long hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : futs) f.get();
  }

  ExitTimeBatch batch;
  batch.seed = seed;
  batch.n_samples = n;
  batch.step_fraction = cfg.step_fraction;
  batch.absorb_eps = cfg.absorb_eps;
  batch.times.reserve(n);
  for (const PathResult& r : slots) {
    switch (r.end) {
      case PathEnd::Exited: batch.times.push_back(r.time); break;
      case PathEnd::Truncated: ++batch.truncation_hits; break;
      case PathEnd::Nonconvergent: ++batch.nonconvergent; break;
    }
  }
  return batch;
}

}  // namespace

ExitTimeBatch sample_exit_times(const CombSpec& spec, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg,
                                int thread_count) {
  if (!spec.materialized()) throw Error("spec must be materialized first");
  CombView view{&spec, spec.x.back()};
  return run_batch(view, start, n, seed, cfg, thread_count);
}

ExitTimeBatch sample_exit_times(const StripDomain&, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg,
                                int thread_count) {
  return run_batch(StripView{}, start, n, seed, cfg, thread_count);
}

ExitTimeBatch sample_exit_times(const HalfPlaneDomain& dom, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg,
                                int thread_count) {
  return run_batch(HalfPlaneView{dom.wall_re}, start, n, seed, cfg, thread_count);
}

ExitTimeBatch sample_exit_times(const SubstripDomain& dom, Point start, long n,
                                std::uint64_t seed, const WalkConfig& cfg,
                                int thread_count) {
  return run_batch(SubstripView{dom.wall_re}, start, n, seed, cfg, thread_count);
}

MomentEstimate moment_estimate(const ExitTimeBatch& batch, double p,
                               const MomentOptions& opts) {
  if (batch.times.empty()) throw Error("moment_estimate: batch has no recorded times");
  if (p < 0.0) throw Error("moment_estimate: p must be nonnegative");

  MomentEstimate est;
  est.p = p;
  est.truncation_hits = batch.truncation_hits;
  est.biased_low =
      batch.truncation_hits > opts.truncation_cap * static_cast<double>(batch.n_samples);
  if (est.biased_low && opts.strict)
    throw TooManyTruncations("escaped-path fraction exceeds the configured cap");

  if (p == 0.0) {
    est.mean_p = 1.0;
    est.std_err = 0.0;
    est.stable = true;
    return est;
  }

  const auto m = static_cast<double>(batch.times.size());
  CompensatedSum sum;
  for (double t : batch.times) sum.add(std::pow(t, p));
  est.mean_p = sum.value() / m;

  CompensatedSum sq;
  for (double t : batch.times) {
    const double d = std::pow(t, p) - est.mean_p;
    sq.add(d * d);
  }
  const double var = m > 1.0 ? sq.value() / (m - 1.0) : 0.0;
  est.std_err = std::sqrt(var / m);
  return est;
}

MomentEstimate moment_estimate(const ExitTimeBatch& batch, const ExitTimeBatch& doubled,
                               double p, const MomentOptions& opts) {
  MomentEstimate a = moment_estimate(batch, p, opts);
  MomentEstimate b = moment_estimate(doubled, p, opts);
  const double combined = std::hypot(a.std_err, b.std_err);
  a.stable = std::abs(b.mean_p - a.mean_p) <= 3.0 * combined;
  return a;
}

std::vector<CoupledTriple> coupled_exit_times(const CombSpec& spec, Point start, long n,
                                              std::uint64_t seed, const WalkConfig& cfg) {
  if (!spec.materialized()) throw Error("spec must be materialized first");
  validate_walk(cfg);
  const double x1 = spec.x[1];
  const double x_max = spec.x.back();
  SubstripView sub{-x1};
  CombView comb{&spec, x_max};
  HalfPlaneView half{-x1};
  if (sub.dist(start) <= 0.0)
    throw StartOutsideDomain("start must be interior to the substrip");

  std::vector<CoupledTriple> out(n);
  for (long i = 0; i < n; ++i) {
    Philox4x32 rng(seed, static_cast<std::uint64_t>(i));
    Point z = start;
    double t = 0.0;
    bool sub_active = true, comb_active = true, half_active = true;
    for (long step = 0; step < cfg.max_steps; ++step) {
      if (comb_active && comb.escaped(z)) comb_active = false;  // censored
      if (sub_active && sub.dist(z) < cfg.absorb_eps) {
        out[i].substrip = t;
        sub_active = false;
      }
      if (comb_active && comb.dist(z) < cfg.absorb_eps) {
        out[i].comb = t;
        comb_active = false;
      }
      if (half_active && half.dist(z) < cfg.absorb_eps) {
        out[i].halfplane = t;
        half_active = false;
      }
      if (!sub_active && !comb_active && !half_active) break;
      // Step at the resolution of the tightest still-active domain.
      double d = std::numeric_limits<double>::infinity();
      if (sub_active) d = std::min(d, sub.dist(z));
      if (comb_active) d = std::min(d, comb.dist(z));
      if (half_active) d = std::min(d, half.dist(z));
      const double s = cfg.step_fraction * std::max(d, cfg.absorb_eps);
      auto [g1, g2] = rng.gaussian_pair();
      z.re += s * g1;
      z.im += s * g2;
      t += s * s;
    }
  }
  return out;
}

BurkholderReport burkholder_diagnostic(const CombSpec& spec, const Verdict& verdict,
                                       std::span<const double> ps,
                                       const BurkholderConfig& cfg) {
  BurkholderReport report;
  report.decision = verdict.decision;
  report.notes =
      "exit-time moment trends vs the classification; confidence labels only";
  if (ps.empty()) return report;
  for (double p : ps)
    if (!(p > 0.0)) throw Error("burkholder_diagnostic: p must be positive");

  ExitTimeBatch base =
      sample_exit_times(spec, cfg.start, cfg.n_samples, cfg.seed, cfg.walk,
                        cfg.thread_count);
  ExitTimeBatch doubled =
      sample_exit_times(spec, cfg.start, 2 * cfg.n_samples, cfg.seed + 1, cfg.walk,
                        cfg.thread_count);

  for (double p : ps) {
    BurkholderEntry entry;
    entry.estimate = moment_estimate(base, doubled, p);
    entry.mean_at_double = moment_estimate(doubled, p).mean_p;
    switch (verdict.decision) {
      case Decision::InfiniteHardy:
        entry.expectation = "all moments finite: expect a stable estimate";
        entry.consistent = entry.estimate.stable;
        break;
      case Decision::FiniteHardy:
        if (p > verdict.bound_upper / 2.0) {
          entry.expectation = "p above bound_upper/2: expect growth with n";
          entry.consistent = !entry.estimate.stable ||
                             entry.mean_at_double > entry.estimate.mean_p;
        } else if (p < verdict.bound_lower / 2.0) {
          entry.expectation = "p below bound_lower/2: expect a stable estimate";
          entry.consistent = entry.estimate.stable;
        } else {
          entry.expectation = "p inside the bound interval over 2: no prediction";
          entry.consistent = true;
        }
        break;
      case Decision::Undetermined:
        entry.expectation = "no theorem-backed expectation";
        entry.consistent = true;
        break;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace combhardy
