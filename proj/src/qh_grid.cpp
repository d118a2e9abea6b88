#include "combhardy/qh_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "combhardy/errors.hpp"
#include "combhardy/numerics.hpp"

namespace combhardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Largest W*H footprint we are willing to allocate (~240 MB of ids).
constexpr long kMaxCells = 60'000'000;

struct Offset {
  int di, dj;
};
constexpr Offset kOffsets8[] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

/// Grid graph over the clipped comb domain.
class Grid {
 public:
  Grid(const CombSpec& spec, const GridConfig& cfg) : spec_(spec), cfg_(cfg) {
    if (!(cfg.cell > 0.0) || cfg.cell >= 0.25)
      throw ConfigError("grid cell must lie in (0, 1/4)");
    if (!(cfg.clip_radius > 1.0))
      throw ConfigError("clip radius must exceed 1");
    if (!spec.materialized()) throw Error("spec must be materialized first");

    const double cell = cfg.cell;
    const double x1 = spec.x[1];
    const double x_max = std::min(spec.x.back(), cfg.clip_radius);
    i_lo_ = static_cast<long>(std::floor(-x1 / cell)) + 1;
    i_hi_ = static_cast<long>(std::floor(x_max / cell));
    j_hi_ = static_cast<long>(std::floor(cfg.clip_radius / cell));
    width_ = i_hi_ - i_lo_ + 1;
    height_ = 2 * j_hi_ + 1;
    if (width_ < 1 || height_ < 1) throw ConfigError("empty grid");
    if (width_ * height_ > kMaxCells)
      throw ConfigError("grid of " + std::to_string(width_ * height_) +
                        " cells exceeds the supported size; coarsen the cell "
                        "or shrink the clip radius");

    node_id_.assign(width_ * height_, -1);
    const double clip2 = cfg.clip_radius * cfg.clip_radius;
    for (long i = i_lo_; i <= i_hi_; ++i) {
      const double x = i * cell;
      for (long j = -j_hi_; j <= j_hi_; ++j) {
        const double y = j * cell;
        if (x * x + y * y > clip2) continue;
        if (contains(spec, {x, y}) != Containment::Inside) continue;
        node_id_[flat(i, j)] = static_cast<int>(nodes_.size());
        nodes_.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }

  Point position(int id) const {
    return {nodes_[id].di * cfg_.cell, nodes_[id].dj * cfg_.cell};
  }

  int id_at(long i, long j) const {
    if (i < i_lo_ || i > i_hi_ || std::abs(j) > j_hi_) return -1;
    return node_id_[flat(i, j)];
  }

  /// Nearest admissible node to z, probing a small neighborhood around the
  /// rounded cell. Returns -1 if none is found.
  int snap(Point z) const {
    const long ci = static_cast<long>(std::llround(z.re / cfg_.cell));
    const long cj = static_cast<long>(std::llround(z.im / cfg_.cell));
    int best = -1;
    double best_d2 = kInf;
    for (long di = -2; di <= 2; ++di) {
      for (long dj = -2; dj <= 2; ++dj) {
        int id = id_at(ci + di, cj + dj);
        if (id < 0) continue;
        Point p = position(id);
        double d2 = (p.re - z.re) * (p.re - z.re) + (p.im - z.im) * (p.im - z.im);
        if (d2 < best_d2) {
          best_d2 = d2;
          best = id;
        }
      }
    }
    return best;
  }

  /// True when the straight segment between two admissible nodes stays in
  /// the domain. A segment can only leave through a ray: the single tooth
  /// that may sit between the two columns blocks it if the crossing happens
  /// at |y| >= 1.
  bool edge_open(Point a, Point b) const {
    if (a.re == b.re) return true;
    const double lo = std::min(a.re, b.re), hi = std::max(a.re, b.re);
    auto it = std::upper_bound(spec_.x.begin(), spec_.x.end(), lo);
    if (it == spec_.x.end() || *it >= hi) return true;
    const double t = (*it - a.re) / (b.re - a.re);
    const double y_at = a.im + t * (b.im - a.im);
    return std::abs(y_at) < 1.0;
  }

  /// Dijkstra from the source node. Early-exits when target_flag[popped]
  /// holds (pass an empty flag vector to settle the whole grid).
  std::vector<double> shortest_paths(int source, const std::vector<char>& target_flag,
                                     int* reached = nullptr) const {
    const int n_offsets = cfg_.connectivity == Connectivity::Eight ? 8 : 4;
    std::vector<double> dist(nodes_.size(), kInf);
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[source] = 0.0;
    pq.push({0.0, source});
    if (reached) *reached = -1;
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > dist[u]) continue;
      if (!target_flag.empty() && target_flag[u]) {
        if (reached) *reached = u;
        return dist;
      }
      const Point pu = position(u);
      for (int k = 0; k < n_offsets; ++k) {
        const long vi = nodes_[u].di + kOffsets8[k].di;
        const long vj = nodes_[u].dj + kOffsets8[k].dj;
        const int v = id_at(vi, vj);
        if (v < 0) continue;
        const Point pv = position(v);
        if (!edge_open(pu, pv)) continue;
        const double len = std::hypot(pv.re - pu.re, pv.im - pu.im);
        const double mid_d =
            dist_to_boundary(spec_, {0.5 * (pu.re + pv.re), 0.5 * (pu.im + pv.im)});
        if (mid_d <= 0.0) continue;
        const double nd = d + len / mid_d;
        if (nd < dist[v]) {
          dist[v] = nd;
          pq.push({nd, v});
        }
      }
    }
    return dist;
  }

  /// Interior nodes within cell/sqrt(2) of the circle |z| = r.
  std::vector<char> circle_band(double r) const {
    std::vector<char> flag(nodes_.size(), 0);
    const double tol = cfg_.cell / std::sqrt(2.0);
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
      Point p = position(static_cast<int>(id));
      if (std::abs(std::hypot(p.re, p.im) - r) <= tol) flag[id] = 1;
    }
    return flag;
  }

  double anisotropy_factor() const {
    // Worst-case path overestimate of the connectivity pattern.
    return cfg_.connectivity == Connectivity::Eight
               ? 1.0 / std::cos(std::numbers::pi / 8.0)
               : std::sqrt(2.0);
  }

 private:
  long flat(long i, long j) const { return (i - i_lo_) * height_ + (j + j_hi_); }

  const CombSpec& spec_;
  GridConfig cfg_;
  long i_lo_ = 0, i_hi_ = 0, j_hi_ = 0;
  long width_ = 0, height_ = 0;
  std::vector<int> node_id_;
  std::vector<Offset> nodes_;  // (i, j) per node id
};

double snap_error(const CombSpec& spec, Point wanted, Point got) {
  const double d = dist_to_boundary(spec, wanted);
  if (d <= 0.0) return 0.0;
  return std::hypot(wanted.re - got.re, wanted.im - got.im) / d;
}

}  // namespace

QhDistanceResult grid_delta(const CombSpec& spec, const GridConfig& cfg, Point source,
                            const GridTarget& target) {
  Grid grid(spec, cfg);

  const int src = grid.snap(source);
  if (src < 0) throw Unreachable("source has no admissible grid node nearby");

  QhDistanceResult res;
  res.method = QhMethod::GridPath;
  res.config = cfg;

  std::vector<char> flag;
  Point wanted_target{};
  if (const auto* pt = std::get_if<Point>(&target)) {
    const int tgt = grid.snap(*pt);
    if (tgt < 0) throw Unreachable("target has no admissible grid node nearby");
    flag.assign(grid.node_count(), 0);
    flag[tgt] = 1;
    wanted_target = *pt;
  } else {
    const double r = std::get<CircleTarget>(target).r;
    if (!(r > 0.0 && r < cfg.clip_radius))
      throw ConfigError("circle target radius must lie in (0, clip_radius)");
    flag = grid.circle_band(r);
    res.circle_target = true;
    res.target_radius = r;
    bool any = std::find(flag.begin(), flag.end(), 1) != flag.end();
    if (!any) throw Unreachable("circle target band contains no interior node");
  }

  int reached = -1;
  std::vector<double> dist = grid.shortest_paths(src, flag, &reached);
  if (reached < 0) throw Unreachable("target not connected to the source");

  res.value = dist[reached];
  res.attained_at = grid.position(reached);
  double err = res.value * (grid.anisotropy_factor() - 1.0);
  err += snap_error(spec, source, grid.position(src));
  if (!res.circle_target) err += snap_error(spec, wanted_target, res.attained_at);
  res.reported_error = err;
  return res;
}

HardyEstimate hardy_estimate(const CombSpec& spec, const GridConfig& cfg,
                             std::vector<double> radii) {
  if (radii.empty()) throw ConfigError("hardy_estimate needs at least one radius");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1]) throw ConfigError("radii must be increasing");
  const double r_cap = std::min(cfg.clip_radius, spec.x.back());
  if (radii.back() >= r_cap)
    throw ConfigError("largest radius must stay below min(clip, x_N)");

  Grid grid(spec, cfg);
  const int src = grid.snap({0.0, 0.0});
  if (src < 0) throw Unreachable("origin has no admissible grid node nearby");

  // One full sweep serves every radius.
  std::vector<double> dist = grid.shortest_paths(src, {});

  HardyEstimate est;
  est.radii = std::move(radii);
  for (double r : est.radii) {
    std::vector<char> band = grid.circle_band(r);
    double best = kInf;
    int best_id = -1;
    for (int id = 0; id < grid.node_count(); ++id) {
      if (band[id] && dist[id] < best) {
        best = dist[id];
        best_id = id;
      }
    }
    if (best_id < 0)
      throw Unreachable("no reachable node near |z| = " + std::to_string(r));
    est.delta.push_back(best);
    est.delta_over_logr.push_back(best / std::log(r));
    est.attained_at.push_back(grid.position(best_id));
  }

  TailWindow w = tail_window(static_cast<int>(est.radii.size()));
  const double tail = tail_min(est.delta_over_logr, w);
  est.sandwich_low = 0.5 * tail;
  est.sandwich_high = 2.0 * tail;
  return est;
}

}  // namespace combhardy
