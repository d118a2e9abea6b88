#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "combhardy/comb.hpp"
#include "combhardy/config.hpp"

namespace combhardy {

enum class Connectivity { Four = 4, Eight = 8 };

/// Uniform grid discretization of the clipped domain. The cell must resolve
/// the unit tooth half-length, hence the hard cell < 1/4 requirement.
struct GridConfig {
  double cell = Defaults::grid_cell;
  double clip_radius = Defaults::clip_radius;  ///< domain kept to |z| <= clip
  Connectivity connectivity = Connectivity::Eight;
};

enum class QhMethod { ClosedForm, Quadrature, GridPath };

/// Target of a shortest-path query: a point, or the circle set |z| = r
/// intersected with the domain.
struct CircleTarget {
  double r = 1.0;
};
using GridTarget = std::variant<Point, CircleTarget>;

struct QhDistanceResult {
  double value = 0.0;
  QhMethod method = QhMethod::GridPath;
  std::optional<GridConfig> config;
  bool circle_target = false;
  double target_radius = 0.0;
  /// Upper bound on the discretization excess: metric anisotropy of the
  /// chosen connectivity plus endpoint snapping, both relative to value.
  double reported_error = 0.0;
  /// Node at which the minimum was attained (the snapped target for point
  /// queries, the cheapest circle-band node otherwise). Which component of
  /// the circle set wins is reported here, never asserted.
  Point attained_at;
};

/// Shortest path over the grid graph whose edge weights are
/// |u - v| / dist_to_boundary((u+v)/2). Values estimate the quasi-hyperbolic
/// distance from above and settle under cell refinement.
/// Throws ConfigError for bad grids, Unreachable when the target cannot be
/// reached (over-coarse cells or an empty target band).
QhDistanceResult grid_delta(const CombSpec& spec, const GridConfig& cfg, Point source,
                            const GridTarget& target);

/// Radial sweep: delta(0, F_r) / log r per radius plus the factor-2 sandwich
/// bracketing the Hardy number estimate. Diagnostic at finite truncation.
struct HardyEstimate {
  std::vector<double> radii;
  std::vector<double> delta;
  std::vector<double> delta_over_logr;
  std::vector<Point> attained_at;
  double sandwich_low = 0.0;   ///< (tail min of delta/log r) / 2
  double sandwich_high = 0.0;  ///< 2 * (tail min of delta/log r)
};

HardyEstimate hardy_estimate(const CombSpec& spec, const GridConfig& cfg,
                             std::vector<double> radii);

}  // namespace combhardy
