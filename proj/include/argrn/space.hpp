#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "errors.hpp"
#include "random.hpp"

namespace argrn {

// Cell on a G x G torus. Coordinates are kept reduced to [0, G).
struct Position {
  int x = 0;
  int y = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct GridSpec {
  int side = 10;           // G
  int step = 5;            // per-axis random-walk bound
  double threshold = 1.0;  // binding happens at distance strictly below this

  void validate() const {
    if (side < 1) throw ConfigError("grid side must be >= 1");
    if (step < 0) throw ConfigError("random-walk step must be >= 0");
    if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
      throw ConfigError("binding threshold must be finite and >= 0");
    }
  }
};

constexpr int wrap_coord(long v, int side) noexcept {
  const long m = v % side;
  return static_cast<int>(m < 0 ? m + side : m);
}

constexpr Position shifted(Position p, long dx, long dy, int side) noexcept {
  return {wrap_coord(p.x + dx, side), wrap_coord(p.y + dy, side)};
}

inline double toroidal_distance(Position p, Position q, int side) noexcept {
  const int ax = std::abs(p.x - q.x);
  const int ay = std::abs(p.y - q.y);
  const double dx = std::min(ax, side - ax);
  const double dy = std::min(ay, side - ay);
  return std::sqrt(dx * dx + dy * dy);
}

// Two draws: dx then dy, each uniform on [-step, step].
inline Position random_step(Position p, const GridSpec& grid, Rng& rng) {
  const auto dx = rng.uniform_int(-grid.step, grid.step);
  const auto dy = rng.uniform_int(-grid.step, grid.step);
  return shifted(p, dx, dy, grid.side);
}

struct CellRange {
  int lo = 0;
  int hi = 0;  // inclusive
};

// Axis range of the central square: side max(1, G/2) centred on G/2.
constexpr CellRange central_range(int side) noexcept {
  const int width = std::max(1, side / 2);
  const int centre = side / 2;
  const int lo = centre - width / 2;
  return {std::max(0, lo), std::min(side - 1, lo + width - 1)};
}

inline Position central_placement(const GridSpec& grid, Rng& rng) {
  const auto r = central_range(grid.side);
  const auto x = rng.uniform_int(r.lo, r.hi);
  const auto y = rng.uniform_int(r.lo, r.hi);
  return {static_cast<int>(x), static_cast<int>(y)};
}

}  // namespace argrn
