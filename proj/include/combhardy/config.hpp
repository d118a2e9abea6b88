#pragma once

#include <cstdint>

namespace combhardy {

/// Single place for every tunable default. All of them can be overridden per
/// call, by CLI flags, or by COMBHARDY_* environment variables in the CLI.
struct Defaults {
  /// Teeth materialized beyond x_0 when a spec does not say otherwise.
  static constexpr int truncate_n = 40;
  /// Raw coordinates above this cap are kept in log form only.
  static constexpr double float_cap = 1e300;

  /// Uniform grid spacing for the shortest-path oracle.
  static constexpr double grid_cell = 0.02;
  /// Grid domain is clipped to |z| <= clip_radius.
  static constexpr double clip_radius = 12.0;

  /// Monte Carlo sample count.
  static constexpr long n_samples = 100000;
  static constexpr std::uint64_t seed = 1;
  /// Step scale as a fraction of the distance to the boundary.
  static constexpr double step_fraction = 0.2;
  /// Paths are absorbed once the boundary distance drops below this band.
  static constexpr double absorb_eps = 1e-3;
  /// Per-path step budget before a walk is declared nonconvergent.
  static constexpr long max_steps = 100000;
  /// Fraction of escaped-right paths tolerated before estimates are flagged.
  static constexpr double truncation_cap = 0.01;

  /// Least-squares slope below this is treated as "not growing" by the
  /// trend diagnostics (ratio units per index step).
  static constexpr double slope_tolerance = 1e-3;
};

}  // namespace combhardy
